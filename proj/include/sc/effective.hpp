#pragma once

#include "sc/conjugation.hpp"
#include "sc/spin_basis.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sc {

enum class ModelChoice { one_band_symmetric, one_band_general, falicov_kimball, three_band };

ModelChoice parse_model_choice(std::string_view name);  // throws std::invalid_argument
std::string model_choice_name(ModelChoice m);

// The symbolic model on a named cluster shape.
Model make_model(ModelChoice m, const std::string& cluster_shape);

// Collects the low-band block of a per-sector operator into a spin polynomial
// on the model's band sites. f is evaluated on every band sector.
SpinPolynomial band_polynomial(const Model& m, const std::function<Operator(const SectorConjugation&)>& f);

// Coefficients of one effective term in the {1, Sᶻ, S⁺, S⁻} string basis.
struct EffectiveCoefficients {
    std::string model;
    std::string support;  // site, bond, three-site, plaquette, two-bond, ...
    std::string term;     // total, first-order, second-order, nested, pair, ...
    int order = 0;
    std::vector<std::string> sites;
    SpinPolynomial coefficients;
};

struct TermCheck {
    EffectiveCoefficients derived;
    SpinPolynomial reference;
    std::string method;  // "conjugation" (whole cluster) or "local formula"
    bool match = false;
    // Set when the comparison ignores the identity coefficient because the
    // reference table omits a constant; `note` then states the dropped value.
    bool modulo_constant = false;
    std::string note;
};

struct ScalarCheck {
    std::string name;
    ScalarValue derived;
    ScalarValue reference;
    bool match = false;
    std::string note;
};

struct Derivation {
    std::string model;
    int order = 0;
    std::vector<TermCheck> terms;
    std::vector<ScalarCheck> scalars;
    bool all_match() const;
};

// Runs the conjugation method for the model at order 1 or 2, extracts every
// per-support effective term by both routes and compares with the reference
// coefficients. `bindings` substitutes exact values for symbols before the
// comparison.
Derivation derive(ModelChoice model, int order, const std::map<int, Rational>& bindings = {});

// Reference coefficients for a (support, term) pair; throws for an unknown
// combination.
SpinPolynomial reference_term(ModelChoice model, int order, const std::string& support, const std::string& term);
std::vector<EffectiveCoefficients> reference_table(ModelChoice model, int order);

// Effective terms of the one-band models from whole-cluster conjugation,
// each with the contributions of its proper sub-supports removed: the on-site
// term, the bond (sites 0-1), the three-site chain 0-1-2 and the plaquette
// with cycle 0-1-2-3 (the last two only at order 2).
struct SupportTerms {
    SpinPolynomial site, bond, three_site, plaquette;
};
SupportTerms conjugation_terms(ModelChoice model, int order);

// Falicov-Kimball couplings after summing the per-support terms over the
// square lattice: nearest neighbour, distance 2, diagonal and the four-spin
// plaquette coefficient (configuration-independent constants are dropped).
struct LatticeCouplings {
    ScalarValue nearest, straight2, diagonal, plaquette;
};
LatticeCouplings regroup_on_square_lattice(const SpinPolynomial& bond, const SpinPolynomial& three_site,
                                           const SpinPolynomial& plaquette);
LatticeCouplings falicov_kimball_lattice_reference();
// The same couplings regrouped from conjugation_terms at order 1 or 2.
LatticeCouplings falicov_kimball_lattice_couplings(int order);

// J_eff of the three-band model as the S_x·S_z coefficient of the two-bond
// term between the copper sites x and z.
ScalarValue extract_jeff(const SpinPolynomial& two_bond_term);
ScalarValue jeff_reference();

}  // namespace sc
