#include "sc/phase.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace sc;

namespace {

PeriodicConfig config(int w, int h, int s, std::vector<std::int8_t> v) { return {w, h, s, std::move(v)}; }

const PhaseParameters kParams{Rational(1, 10), Rational(7), 0};

}  // namespace

TEST_CASE("energy densities of the uniform and Neel configurations")
{
    EnergyLine up = classical_energy_density(config(1, 1, 0, {1}), 2, kParams);
    CHECK(up.intercept == 0);
    CHECK(up.magnetization == Rational(1, 2));
    EnergyLine neel = classical_energy_density(config(2, 1, 1, {1, -1}), 2, kParams);
    CHECK(neel.intercept == Rational(-2) * kParams.t * kParams.t / kParams.U);
    CHECK(neel.magnetization == 0);
    // The same Neel state on a 2x2 cell has the same density.
    EnergyLine neel4 = classical_energy_density(config(2, 2, 0, {1, -1, -1, 1}), 2, kParams);
    CHECK(neel4.intercept == neel.intercept);
    CHECK_THROWS_AS(classical_energy_density(config(1, 1, 0, {1}), 3, kParams), std::invalid_argument);
    CHECK_THROWS_AS(classical_energy_density(config(1, 1, 0, {0}), 2, kParams), std::invalid_argument);
}

TEST_CASE("order-four couplings are the regrouped lattice coefficients")
{
    const Rational t = kParams.t, U = kParams.U;
    IsingCouplings c = falicov_kimball_couplings(4, t, U);
    const Rational q = t * t * t * t / (U * U * U);
    CHECK(c.nearest == 2 * t * t / U - 18 * q);
    CHECK(c.straight2 == 4 * q);
    CHECK(c.diagonal == 6 * q);
    CHECK(c.plaquette == 40 * q);
    IsingCouplings c2 = falicov_kimball_couplings(2, t, U);
    CHECK(c2.nearest == 2 * t * t / U);
    CHECK(c2.plaquette == 0);
}

TEST_CASE("the envelope winner is the brute-force minimum at random fields")
{
    PhaseDiagram d = ground_state_envelope(4, kParams, parse_cell_bound("4x2"), Rational(-2, 175), Rational(2, 175));
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long long> num(-2'000'000, 2'000'000);
    for (int i = 0; i < 1000; ++i) {
        Rational h = Rational(num(rng), 175'000'000);
        const EnergyLine& w = d.winner_at(h);
        CHECK(w.at(h) == minimum_energy(d, h));
    }
}

TEST_CASE("the order-two diagram is symmetric under field reversal")
{
    PhaseDiagram d = ground_state_envelope(2, kParams, parse_cell_bound("4x2"), Rational(-1, 50), Rational(1, 50));
    const auto& x = d.crossings;
    REQUIRE(x.size() == 2);
    CHECK(x[0] == -x[1]);
    CHECK(x[1] == Rational(1, 175));
    for (const auto& h : {Rational(1, 100), Rational(1, 1000), Rational(3, 175)}) {
        const EnergyLine& a = d.winner_at(h);
        const EnergyLine& b = d.winner_at(-h);
        CHECK(a.magnetization == -b.magnetization);
        CHECK(a.intercept == b.intercept);
    }
}

TEST_CASE("order-two crossings are exact for several parameter pairs")
{
    for (auto [t, U] : {std::pair{Rational(1, 10), Rational(7)}, {Rational(1, 3), Rational(11, 2)}, {Rational(2, 7), Rational(9)}}) {
        PhaseParameters p{t, U, 0};
        const Rational h = 4 * t * t / U;
        PhaseDiagram d = ground_state_envelope(2, p, parse_cell_bound("3x2"), -2 * h, 2 * h);
        CHECK(d.crossings == std::vector<Rational>{-h, h});
    }
}

TEST_CASE("cell bounds parse and enforce the enumeration limit")
{
    CellBound b = parse_cell_bound("4x4");
    CHECK(b.max_sites() == 16);
    CHECK_THROWS_AS(parse_cell_bound("4by4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cell_bound("0x3"), std::invalid_argument);
    CHECK_THROWS_AS(ground_state_envelope(2, kParams, parse_cell_bound("5x4"), -1, 1), std::out_of_range);
    CHECK_THROWS_AS(ground_state_envelope(2, kParams, b, 1, -1), std::invalid_argument);
}

TEST_CASE("rectangular cells miss the sheared ground state")
{
    CellBound rect = parse_cell_bound("4x4");
    rect.rectangular_only = true;
    PhaseDiagram d = ground_state_envelope(4, kParams, rect, Rational(-2, 175), Rational(2, 175));
    CrossingComparison c = compare_crossings(d, reference_crossings(4, kParams.t, kParams.U));
    CHECK_FALSE(c.reference_realized());
    CHECK(c.missing.size() == 2);
}

TEST_CASE("order-zero diagram labels the four occupation regions")
{
    PhaseParameters p{0, Rational(4), Rational(2)};
    PhaseDiagram d = ground_state_envelope(0, p, parse_cell_bound("2x2"), Rational(-8), Rational(8));
    std::vector<std::string> labels;
    for (const auto& iv : d.intervals) labels.push_back(iv.winner.label);
    CHECK(labels.front() == "down");
    CHECK(labels.back() == "up");
}

TEST_CASE("envelope CSV and plot data are deterministic")
{
    PhaseDiagram d = ground_state_envelope(2, kParams, parse_cell_bound("2x2"), Rational(-1, 50), Rational(1, 50));
    std::ostringstream a, b, p;
    write_envelope_csv(a, d);
    write_envelope_csv(b, d);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("h_lo,h_hi,", 0) == 0);
    write_plot_data(p, d, 11);
    CHECK_FALSE(p.str().empty());
}

TEST_CASE("stability diagnostics use the exact single-flip gap")
{
    StabilityInput in{Rational(1, 10), Rational(1, 100), Rational(7), Rational(0), Rational(7, 2), Rational(1, 2), Rational(1000), 1};
    StabilityDiagnostics r = stability_diagnostics(in);
    CHECK(r.kappa == Rational(1, 175));
    CHECK(r.status == "ok");
    in.h = Rational(1, 175);  // on the phase boundary
    CHECK(stability_diagnostics(in).status != "ok");
    in.delta = 0;
    CHECK_THROWS_AS(stability_diagnostics(in), std::invalid_argument);
}
