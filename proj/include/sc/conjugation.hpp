#pragma once

#include "sc/models.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sc {

struct BlockSplit {
    Operator q00, q01, qr;
};

// Q00 = P⁰QP⁰, Q01 = P⁰QP¹ + P¹QP⁰, QR = P¹QP¹ + P²QP². Throws
// std::invalid_argument if the projectors are not a partition of unity or the
// blocks do not reassemble Q.
BlockSplit block_split(const Operator& q, const ProjectorTriple& p);

class ZeroDenominatorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// S(ω, ω′) = Q(ω, ω′) / (E(ω) − E(ω′)) for diagonal h0. Throws
// ZeroDenominatorError naming the configurations when a gap vanishes on a
// nonzero entry. `gap_unit`, when given, asserts every gap is an integer
// multiple of it.
Operator ad_inverse(const Operator& h0, const Operator& q, const std::optional<ScalarValue>& gap_unit = std::nullopt);

struct GradedOperator {
    Operator op;
    int max_degree = 0;
};

GradedOperator graded(const Operator& op, int max_degree);
GradedOperator commutator(const GradedOperator& a, const GradedOperator& b);

// Σ_n adⁿS(B)/n! truncated at max_degree. Requires S to have minimum hopping
// degree ≥ 1.
GradedOperator lie_schwinger(const GradedOperator& s, const GradedOperator& b, int max_degree);

// Method 1 on one sector of a model cluster: generators S₁ per bond, S₂ per
// ordered pair of bonds and the conjugated Hamiltonians.
class SectorConjugation {
public:
    SectorConjugation(const Model& m, BasisPtr basis);

    const Model& model() const { return *model_; }
    const BasisPtr& basis() const { return basis_; }
    int bond_count() const { return static_cast<int>(q_.size()); }

    const Operator& h0() const { return h0_; }
    const Operator& q(int bond) const { return q_.at(static_cast<std::size_t>(bond)); }
    // Built on first use; throws when B_X of the bond is not inside the cluster.
    const BlockSplit& split(int bond) const;
    const Operator& s1(int bond) const;
    Operator hamiltonian() const;
    Operator s1_total() const;

    // V_{2,(a,b)} = [S_{1a}, Q⁰⁰_b + Q^R_b + ½Q⁰¹_b], its 01 part with respect
    // to the partition of B_{a∪b}, and S_{2,(a,b)} = ad⁻¹(V⁰¹_{2,(a,b)}).
    const Operator& v2(int a, int b) const;
    const Operator& v2_01(int a, int b) const;
    const Operator& s2(int a, int b) const;
    Operator s2_total() const;

    // H⁽ⁿ⁾ for n ∈ {1, 2}, exact to hopping degree max_degree.
    Operator conjugated(int order, int max_degree) const;

    // P⁰ of the whole cluster (the low band).
    const Operator& band_projector() const { return band_p0_; }

    // P⁰_{B_Y} sandwich of an operator, Y the union of the given bonds.
    Operator band_part(const Operator& op, const std::vector<int>& bonds) const;

private:
    const Model* model_;
    BasisPtr basis_;
    Operator h0_;
    Operator band_p0_;
    std::vector<Operator> q_;
    std::optional<ScalarValue> gap_unit_;
    mutable std::map<int, BlockSplit> split_;
    mutable std::map<int, Operator> s1_;
    mutable std::map<std::pair<int, int>, Operator> v2_, v2_01_, s2_;
};

struct ResidualViolation {
    std::string row, col;
    int degree = 0;
    std::string coefficient;
};

struct ResidualCertificate {
    int order = 0;
    std::optional<int> min_degree;  // nullopt: off-diagonal block vanishes
    std::vector<ResidualViolation> violations;
    bool passed() const { return violations.empty(); }
};

// Checks that P⁰H⁽ⁿ⁾P¹ + P¹H⁽ⁿ⁾P⁰ has minimum hopping degree ≥ n+1 on every
// band sector of the model cluster, tracking degree 2n+2.
ResidualCertificate residual_grading_check(const Model& m, int order);

// Terms of the local per-support formulas, each P⁰-projected.
Operator first_order_bond(const SectorConjugation& c, int bond);               // ½P⁰[S₁X, Q⁰¹_X]P⁰
Operator second_order_bond(const SectorConjugation& c, int bond);              // ⅛P⁰ad³S₁X(Q⁰¹_X)P⁰
Operator nested_s1_sum(const SectorConjugation& c, const std::vector<std::vector<int>>& sequences,
                       const std::vector<int>& support_bonds);                 // ⅛Σ P⁰adS adS adS(Q⁰¹)P⁰
Operator s2_pair_sum(const SectorConjugation& c, const std::vector<std::vector<int>>& sequences,
                     const std::vector<int>& support_bonds);                   // ½Σ P⁰[S₂(X₄,X₃), V⁰¹₂(X₁,X₂)]P⁰

// Index families of the two-bond and plaquette formulas.
std::vector<std::vector<int>> sequences_c6(int x, int xp);
std::vector<std::vector<int>> sequences_c4(int x, int xp);
std::vector<std::vector<int>> sequences_c24(const std::vector<int>& cycle);
// The four cyclic rotations of the plaquette bond sequence.
std::vector<std::vector<int>> sequences_cyclic_c4(const std::vector<int>& cycle);
// All ordered (X₁,X₂,X₃,X₄) with X₁X₂ and X₃X₄ adjacent bond pairs at two
// different corners of the plaquette (48 sequences). These are the S₂ pair
// terms whose combined support is the whole plaquette; the four cyclic
// rotations alone miss most of them.
std::vector<std::vector<int>> sequences_plaquette_pairs(const std::vector<int>& cycle);

}  // namespace sc
