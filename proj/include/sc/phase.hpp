#pragma once

#include "sc/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sc {

// Couplings of the Falicov-Kimball classical effective Hamiltonian
//   J₁ Σ_nn (SᶻSᶻ − ¼) + J₂ Σ_{|d|=2} SᶻSᶻ + J₃ Σ_{|d|=√2} SᶻSᶻ + K Σ_plaq SᶻSᶻSᶻSᶻ − h Σ Sᶻ
// (each pair and plaquette counted once).
struct IsingCouplings {
    Rational nearest, straight2, diagonal, plaquette;
};

// Order 2 or 4 in the hopping; the coefficients come from the conjugation
// method (regrouped on the square lattice) evaluated at t and U.
IsingCouplings falicov_kimball_couplings(int order, const Rational& t, const Rational& U);

// A periodic configuration on the square lattice. The period lattice is
// spanned by (width, 0) and (shift, height) with 0 ≤ shift < width; the
// cell holds width·height sites, row-major. Values are ±1 (spin ±½) for
// orders 2 and 4, and occupation codes 0 = empty, 1 = up, 2 = down,
// 3 = double for order 0.
struct PeriodicConfig {
    int width = 1, height = 1, shift = 0;
    std::vector<std::int8_t> values;

    int sites() const { return width * height; }
    int at(int x, int y) const;
    std::string pattern() const;  // rows of the cell, '+'/'-' or '0','u','d','2'
    std::string cell() const;     // e.g. "5x1/2"
};

// Line E(h) = intercept − h·magnetization of a configuration's energy per site.
struct EnergyLine {
    PeriodicConfig config;
    Rational intercept, magnetization;
    std::string label;
    Rational at(const Rational& h) const { return intercept - h * magnetization; }
};

struct PhaseParameters {
    Rational t, U;
    Rational k = 0;  // enters order 0 only; a constant offset otherwise
};

// Throws std::invalid_argument for order ∉ {0, 2, 4} or a mismatched value set.
EnergyLine classical_energy_density(const PeriodicConfig& c, int order, const PhaseParameters& p);

// Which period lattices to enumerate: all sheared lattices with at most
// max_width·max_height sites per cell, or only rectangular cells with width
// ≤ max_width and height ≤ max_height.
struct CellBound {
    int max_width = 4, max_height = 4;
    bool rectangular_only = false;
    int max_sites() const { return max_width * max_height; }
};
CellBound parse_cell_bound(const std::string& text);  // "4x4"; throws std::invalid_argument

struct EnvelopeInterval {
    std::optional<Rational> lo, hi;  // nullopt: open end of the window
    EnergyLine winner;
    int degenerate = 1;  // distinct configuration classes on this line
};

struct PhaseDiagram {
    int order = 0;
    PhaseParameters params;
    Rational h_lo, h_hi;
    CellBound cells;
    std::vector<Rational> crossings;
    std::vector<EnvelopeInterval> intervals;
    std::vector<EnergyLine> lines;  // one per distinct configuration class
    long long configurations = 0;   // enumerated before deduplication
    const EnergyLine& winner_at(const Rational& h) const;
};

// Exact lower envelope on [h_lo, h_hi]. Throws std::out_of_range when the
// cell bound exceeds 16 sites (exhaustive enumeration limit) and
// std::invalid_argument for an empty window.
PhaseDiagram ground_state_envelope(int order, const PhaseParameters& p, const CellBound& cells, const Rational& h_lo,
                                   const Rational& h_hi);

// Minimum over all enumerated lines at h (brute force, for checking).
Rational minimum_energy(const PhaseDiagram& d, const Rational& h);

// Boundary fields of the reference phase diagrams: ±4t²/U at order 2; at
// order 4 the four values −4t²/U + c·t⁴/U³, c ∈ {−4, 16, 48, 84}, and their
// mirrors.
std::vector<Rational> reference_crossings(int order, const Rational& t, const Rational& U);

struct CrossingComparison {
    std::vector<Rational> missing;  // reference values not realized
    std::vector<Rational> extra;    // crossings not in the reference
    bool reference_realized() const { return missing.empty(); }
};
CrossingComparison compare_crossings(const PhaseDiagram& d, const std::vector<Rational>& reference);

void write_envelope_csv(std::ostream& os, const PhaseDiagram& d);
// Whitespace-separated "h line energy" rows on a uniform grid of `samples`
// points across the window, for every line that wins an interval and for the
// envelope itself (numbered last); a comment header names the lines.
void write_plot_data(std::ostream& os, const PhaseDiagram& d, int samples = 101);

struct StabilityInput {
    Rational t, t_plus, U, h, mu0, delta, beta;
    int order = 1;  // n ∈ {1, 2}
    CellBound cells{4, 4, false};
};

struct StabilityDiagnostics {
    StabilityInput input;
    Rational kappa;  // exact minimal single-spin-flip energy
    std::vector<std::string> ground_states;
    double kappa_estimate_plus = 0, kappa_estimate_minus = 0;  // 4t²/U ± h
    double D = 0, eps_ll = 0, eps_hl = 0, eps_lh = 0, eps_hh = 0, eta = 0, epsilon = 0;
    std::string status;  // "ok" or "inside excluded band"
};

// O(·) constants are set to 1. Throws std::invalid_argument unless δ > 0,
// β > 0 and 0 < μ₀ < U.
StabilityDiagnostics stability_diagnostics(const StabilityInput& in);

}  // namespace sc
