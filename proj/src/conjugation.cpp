#include "sc/conjugation.hpp"

#include <algorithm>
#include <numeric>

namespace sc {

BlockSplit block_split(const Operator& q, const ProjectorTriple& p)
{
    const BasisPtr& b = q.domain();
    if (!(p.p0 + p.p1 + p.p2 == identity<ScalarValue>(b)))
        throw std::invalid_argument("projectors do not form a partition of unity");
    BlockSplit s;
    s.q00 = p.p0 * q * p.p0;
    s.q01 = p.p0 * q * p.p1 + p.p1 * q * p.p0;
    s.qr = p.p1 * q * p.p1 + p.p2 * q * p.p2;
    if (!(s.q00 + s.q01 + s.qr == q))
        throw std::invalid_argument("operator has components between P⁰ and P² blocks");
    return s;
}

Operator ad_inverse(const Operator& h0, const Operator& q, const std::optional<ScalarValue>& gap_unit)
{
    const BasisPtr& b = q.domain();
    Operator s(b);
    q.for_each([&](int r, int c, const ScalarValue& v) {
        ScalarValue gap = h0.at(r, r) - h0.at(c, c);
        if (gap.is_zero())
            throw ZeroDenominatorError("vanishing energy denominator between " + b->describe(b->state(r)) + " and " +
                                       b->describe(b->state(c)));
        if (gap_unit) {
            ScalarValue ratio = gap / *gap_unit;
            if (!ratio.is_rational() || denominator_of(ratio.as_rational()) != 1)
                throw std::logic_error("energy denominator " + gap.str() + " is not a multiple of " + gap_unit->str());
        }
        s.add(r, c, v / gap);
    });
    return s;
}

GradedOperator graded(const Operator& op, int max_degree) { return {truncated(op, max_degree), max_degree}; }

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b)
{
    int d = std::min(a.max_degree, b.max_degree);
    return {truncated(commutator(a.op, b.op), d), d};
}

GradedOperator lie_schwinger(const GradedOperator& s, const GradedOperator& b, int max_degree)
{
    auto smin = min_hopping_degree(s.op);
    if (smin && *smin < 1) throw std::invalid_argument("generator must have minimum hopping degree ≥ 1");
    GradedOperator sum = graded(b.op, max_degree);
    if (!smin) return sum;
    GradedOperator term = sum;
    GradedOperator gs = graded(s.op, max_degree);
    for (int n = 1; n <= max_degree + 1; ++n) {
        term = commutator(gs, term);
        term.op = ScalarValue(Rational(1, n)) * term.op;
        if (term.op.is_zero()) break;
        sum.op += term.op;
    }
    return sum;
}

SectorConjugation::SectorConjugation(const Model& m, BasisPtr basis) : model_(&m), basis_(std::move(basis))
{
    h0_ = classical_hamiltonian(m, basis_);
    std::vector<int> all(static_cast<std::size_t>(m.cluster->size()));
    std::iota(all.begin(), all.end(), 0);
    band_p0_ = ground_projector(m, basis_, all);
    gap_unit_ = m.gap_unit;
    for (int i = 0; i < static_cast<int>(m.quantum.bonds.size()); ++i) q_.push_back(bond_operator(m, basis_, i));
}

const BlockSplit& SectorConjugation::split(int bond) const
{
    if (auto it = split_.find(bond); it != split_.end()) return it->second;
    return split_.emplace(bond, block_split(q(bond), projector_for(*model_, basis_, bond_sites(*model_, bond))))
        .first->second;
}

const Operator& SectorConjugation::s1(int bond) const
{
    if (auto it = s1_.find(bond); it != s1_.end()) return it->second;
    return s1_.emplace(bond, ad_inverse(h0_, split(bond).q01, gap_unit_)).first->second;
}

Operator SectorConjugation::hamiltonian() const
{
    Operator h = h0_;
    for (const auto& q : q_) h += q;
    return h;
}

Operator SectorConjugation::s1_total() const
{
    Operator s(basis_);
    for (int b = 0; b < bond_count(); ++b) s += s1(b);
    return s;
}

const Operator& SectorConjugation::v2(int a, int b) const
{
    auto key = std::pair{a, b};
    if (auto it = v2_.find(key); it != v2_.end()) return it->second;
    const BlockSplit& sb = split(b);
    Operator rhs = sb.q00 + sb.qr + ScalarValue(Rational(1, 2)) * sb.q01;
    return v2_.emplace(key, commutator(s1(a), rhs)).first->second;
}

const Operator& SectorConjugation::v2_01(int a, int b) const
{
    auto key = std::pair{a, b};
    if (auto it = v2_01_.find(key); it != v2_01_.end()) return it->second;
    const Operator& v = v2(a, b);
    Operator r(basis_);
    if (!v.is_zero()) {
        auto p = projector_for(*model_, basis_, site_union(bond_sites(*model_, a), bond_sites(*model_, b)));
        r = p.p0 * v * p.p1 + p.p1 * v * p.p0;
    }
    return v2_01_.emplace(key, r).first->second;
}

const Operator& SectorConjugation::s2(int a, int b) const
{
    auto key = std::pair{a, b};
    if (auto it = s2_.find(key); it != s2_.end()) return it->second;
    return s2_.emplace(key, ad_inverse(h0_, v2_01(a, b), gap_unit_)).first->second;
}

Operator SectorConjugation::s2_total() const
{
    Operator s(basis_);
    for (int a = 0; a < bond_count(); ++a)
        for (int b = 0; b < bond_count(); ++b) s += s2(a, b);
    return s;
}

Operator SectorConjugation::conjugated(int order, int max_degree) const
{
    if (order < 1 || order > 2) throw std::invalid_argument("order must be 1 or 2");
    GradedOperator h = lie_schwinger(graded(s1_total(), max_degree), graded(hamiltonian(), max_degree), max_degree);
    if (order == 2) h = lie_schwinger(graded(s2_total(), max_degree), h, max_degree);
    return h.op;
}

Operator SectorConjugation::band_part(const Operator& op, const std::vector<int>& bonds) const
{
    std::vector<int> y;
    for (int b : bonds) y = site_union(y, bond_sites(*model_, b));
    Operator p0 = ground_projector(*model_, basis_, model_->projectors.zone(y));
    return p0 * op * p0;
}

ResidualCertificate residual_grading_check(const Model& m, int order)
{
    ResidualCertificate cert;
    cert.order = order;
    const int max_degree = 2 * order + 2;
    for (const auto& sector : m.band_sectors()) {
        SectorConjugation c(m, sector_basis(m.cluster, sector));
        Operator h = c.conjugated(order, max_degree);
        const Operator& p0 = c.band_projector();
        Operator p1 = identity<ScalarValue>(c.basis()) - p0;
        Operator off = p0 * h * p1 + p1 * h * p0;
        off.for_each([&](int r, int col, const ScalarValue& v) {
            auto d = v.min_hopping_degree();
            if (!d) return;
            cert.min_degree = cert.min_degree ? std::min(*cert.min_degree, *d) : *d;
            if (*d < order + 1)
                cert.violations.push_back({c.basis()->describe(c.basis()->state(r)),
                                           c.basis()->describe(c.basis()->state(col)), *d,
                                           v.homogeneous_part(*d).str()});
        });
    }
    return cert;
}

Operator first_order_bond(const SectorConjugation& c, int bond)
{
    Operator t = commutator(c.s1(bond), c.split(bond).q01);
    return ScalarValue(Rational(1, 2)) * c.band_part(t, {bond});
}

Operator second_order_bond(const SectorConjugation& c, int bond)
{
    Operator t = c.split(bond).q01;
    for (int i = 0; i < 3; ++i) t = commutator(c.s1(bond), t);
    return ScalarValue(Rational(1, 8)) * c.band_part(t, {bond});
}

Operator nested_s1_sum(const SectorConjugation& c, const std::vector<std::vector<int>>& sequences,
                       const std::vector<int>& support_bonds)
{
    Operator sum(c.basis());
    for (const auto& s : sequences) {
        Operator t = c.split(s[0]).q01;
        for (std::size_t i = 1; i < 4; ++i) t = commutator(c.s1(s[i]), t);
        sum += t;
    }
    return ScalarValue(Rational(1, 8)) * c.band_part(sum, support_bonds);
}

Operator s2_pair_sum(const SectorConjugation& c, const std::vector<std::vector<int>>& sequences,
                     const std::vector<int>& support_bonds)
{
    Operator sum(c.basis());
    for (const auto& s : sequences) sum += commutator(c.s2(s[3], s[2]), c.v2_01(s[0], s[1]));
    return ScalarValue(Rational(1, 2)) * c.band_part(sum, support_bonds);
}

std::vector<std::vector<int>> sequences_c6(int x, int xp)
{
    std::vector<std::vector<int>> out;
    for (auto [a, b] : {std::pair{x, xp}, {xp, x}}) {
        out.push_back({a, a, b, b});
        out.push_back({a, b, a, b});
        out.push_back({a, b, b, a});
    }
    return out;
}

std::vector<std::vector<int>> sequences_c4(int x, int xp)
{
    std::vector<std::vector<int>> out;
    for (auto [a, b] : {std::pair{x, xp}, {xp, x}}) {
        out.push_back({a, b, a, b});
        out.push_back({a, b, b, a});
    }
    return out;
}

std::vector<std::vector<int>> sequences_c24(const std::vector<int>& cycle)
{
    std::vector<int> p = cycle;
    std::sort(p.begin(), p.end());
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::vector<int>> sequences_cyclic_c4(const std::vector<int>& cycle)
{
    std::vector<std::vector<int>> out;
    for (std::size_t r = 0; r < cycle.size(); ++r) {
        std::vector<int> s;
        for (std::size_t i = 0; i < cycle.size(); ++i) s.push_back(cycle[(r + i) % cycle.size()]);
        out.push_back(s);
    }
    return out;
}

std::vector<std::vector<int>> sequences_plaquette_pairs(const std::vector<int>& cycle)
{
    const int n = static_cast<int>(cycle.size());
    auto adjacent = [n](int i, int j) { return (i + 1) % n == j || (j + 1) % n == i; };
    std::vector<std::vector<int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (!adjacent(a, b) || !adjacent(c, d)) continue;
                    if ((a == c && b == d) || (a == d && b == c)) continue;
                    out.push_back({cycle[a], cycle[b], cycle[c], cycle[d]});
                }
    return out;
}

}  // namespace sc
