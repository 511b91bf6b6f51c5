#pragma once

#include "sc/sparse_operator.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sc {

enum class ModelKind { one_band, three_band };

// Standard symbol names used by the builders.
struct OneBandSymbols {
    Symbol U, h, k, t_up, t_down;
};
struct ThreeBandSymbols {
    Symbol U_d, U_p, U_pd, delta, t_pd;
};

// Hubbard parameters: U and the chemical potentials enter through h and k
// (μ± = (k ± h)/2); the hopping amplitudes are per spin.
struct OneBandParameters {
    ScalarValue U, h, k, t_up, t_down;
};
// Three-band parameters; only Δ = ε_p − ε_d enters at fixed hole number.
struct ThreeBandParameters {
    ScalarValue U_d, U_p, U_pd, delta, t_pd;
};

// Hopping symbols: one-band-symmetric uses a single symbol t for both spins.
OneBandParameters one_band_symbolic(bool symmetric);
OneBandParameters falicov_kimball_symbolic();  // t₊ = 0, t₋ = t
ThreeBandParameters three_band_symbolic();

// A diagonal term of the classical interaction on a fixed support.
struct ClassicalTerm {
    std::string description;
    std::vector<int> support;
    std::function<ScalarValue(const SectorBasis&, Occupation)> energy;
};

struct ClassicalInteraction {
    std::vector<ClassicalTerm> terms;
    ScalarValue energy(const SectorBasis& b, Occupation w) const;
};

// Quantum bond: Q = Σ_σ t_σ (c†_{aσ} c_{bσ} + c†_{bσ} c_{aσ}).
struct QuantumBond {
    int a = 0;
    int b = 0;
    ScalarValue t_up, t_down;
};

struct QuantumInteraction {
    std::vector<QuantumBond> bonds;
};

// Local ground states and protection zones.
struct ProjectorFamily {
    std::function<bool(const SectorBasis&, Occupation, int site)> ground;
    // B_Y for a set of sites Y; throws when B_Y is not contained in the cluster.
    std::function<std::vector<int>(const std::vector<int>&)> zone;
};

struct ProjectorTriple {
    Operator p0, p1, p2;
};

class Model {
public:
    ModelKind kind;
    std::string name;
    std::shared_ptr<const Cluster> cluster;
    ClassicalInteraction classical;
    QuantumInteraction quantum;
    ProjectorFamily projectors;
    int particles = 0;                // particle (hole) number of the low band
    std::vector<int> band_sites;      // sites singly occupied in the band
    std::vector<Symbol> hopping_symbols;
    // Every energy denominator is an integer multiple of this value (U for the
    // one-band model); unset when no such structure is asserted.
    std::optional<ScalarValue> gap_unit;

    // Per-spin sectors containing band states.
    std::vector<SectorConstraint> band_sectors() const;
};

// One-band Hubbard model at half filling on a cluster.
Model one_band_model(std::shared_ptr<const Cluster> cluster, const OneBandParameters& p, std::string name = "one-band");
// Three-band CuO2 model with one hole per copper site.
Model three_band_model(std::shared_ptr<const Cluster> cluster, const ThreeBandParameters& p);

Operator classical_hamiltonian(const Model& m, const BasisPtr& b);
Operator bond_operator(const Model& m, const BasisPtr& b, int bond);
Operator quantum_hamiltonian(const Model& m, const BasisPtr& b);

// P⁰ for a set of sites: all sites in their local ground state.
Operator ground_projector(const Model& m, const BasisPtr& b, const std::vector<int>& sites);
// (P⁰_{B_Y}, P¹_{B_Y}, P²_{B_Y}) with P¹ = P⁰_{B_Y∖Y} − P⁰_{B_Y}, P² = 1 − P⁰_{B_Y∖Y}.
ProjectorTriple projector_for(const Model& m, const BasisPtr& b, const std::vector<int>& y);

std::vector<int> bond_sites(const Model& m, int bond);
std::vector<int> site_union(std::vector<int> a, const std::vector<int>& b);

}  // namespace sc
