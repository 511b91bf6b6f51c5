#include "sc/ed.hpp"
#include "sc/fermion_ops.hpp"
#include "sc/models.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace sc;

namespace {

long long binomial(int n, int k)
{
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::map<int, Rational> hubbard_values(const Rational& t, const Rational& U)
{
    return {{find_symbol("t")->index, t}, {find_symbol("U")->index, U}, {find_symbol("h")->index, 0}, {find_symbol("k")->index, 0}};
}

}  // namespace

TEST_CASE("cluster shapes have the expected sites and bonds")
{
    CHECK(build_cluster("bond")->size() == 2);
    CHECK(build_cluster("bond")->adjacency().size() == 1);
    CHECK(build_cluster("chain3")->adjacency().size() == 2);
    CHECK(build_cluster("plaquette")->size() == 4);
    CHECK(build_cluster("plaquette")->adjacency().size() == 4);
    auto cu = build_cluster("cuo2_bond");
    CHECK(cu->sites_of(Sublattice::copper).size() == 2);
    CHECK(cu->sites_of(Sublattice::oxygen).size() >= 1);
    CHECK_THROWS_AS(build_cluster("hexagon"), std::invalid_argument);
    auto plaquette = build_cluster("plaquette");
    for (const auto& a : plaquette->adjacency()) CHECK(a.a < a.b);
}

TEST_CASE("the spiral order ranks lattice points")
{
    CHECK(spiral_rank(0, 0) == 0);
    CHECK(spiral_rank(1, 0) == 1);
    CHECK(spiral_rank(1, 1) == 2);
    CHECK(spiral_rank(0, 1) == 3);
    CHECK(spiral_rank(-1, 1) == 4);
}

TEST_CASE("sector bases are complete, sorted and duplicate-free")
{
    auto c = build_cluster("chain3");
    for (int up = 0; up <= 3; ++up)
        for (int down = 0; down <= 3; ++down) {
            auto b = sector_basis(c, SectorConstraint::per_spin(up, down));
            CHECK(b->size() == binomial(3, up) * binomial(3, down));
            CHECK(std::is_sorted(b->states().begin(), b->states().end()));
            CHECK(std::adjacent_find(b->states().begin(), b->states().end()) == b->states().end());
            for (int i = 0; i < b->size(); ++i) CHECK(b->find(b->state(i)) == i);
        }
    CHECK(sector_basis(c, SectorConstraint::particles(3))->size() == binomial(6, 3));
    CHECK_THROWS_AS(sector_basis(c, SectorConstraint::per_spin(4, 0)), std::invalid_argument);
}

TEST_CASE("ladder operators satisfy the canonical anticommutation relations")
{
    auto c = build_cluster("chain3");
    for (int n = 1; n < 6; ++n) {
        auto b = sector_basis(c, SectorConstraint::particles(n));
        const Operator one = identity<ScalarValue>(b);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
                for (Spin s : {Spin::up, Spin::down})
                    for (Spin r : {Spin::up, Spin::down}) {
                        Operator ac = fermion_string(b, {{x, s, false}, {y, r, true}}, b) +
                                      fermion_string(b, {{y, r, true}, {x, s, false}}, b);
                        CHECK(ac == (x == y && s == r ? one : Operator(b)));
                        Operator aa = fermion_string(b, {{x, s, true}, {y, r, false}}, b);
                        Operator bb = fermion_string(b, {{y, r, false}, {x, s, true}}, b);
                        CHECK(aa + bb == (x == y && s == r ? one : Operator(b)));
                    }
    }
}

TEST_CASE("creation is the adjoint of annihilation and hopping is Hermitian")
{
    auto c = build_cluster("plaquette");
    auto b = sector_basis(c, SectorConstraint::per_spin(2, 1));
    Operator cre = ladder_matrix(b, 2, Spin::up, true);
    Operator ann = ladder_matrix(cre.codomain(), 2, Spin::up, false);
    CHECK(same_basis(ann.codomain(), b));
    CHECK(adjoint(cre) == ann);
    CHECK(adjoint(hop(b, 0, 1, Spin::down)) == hop(b, 1, 0, Spin::down));
    CHECK(number(b, 3, Spin::up) * number(b, 3, Spin::up) == number(b, 3, Spin::up));
}

TEST_CASE("spectra are invariant under relabelling the site order")
{
    auto chain = build_cluster("chain3");
    auto reordered = std::make_shared<const Cluster>(chain->with_order({2, 0, 1}));
    Model a = one_band_model(chain, one_band_symbolic(true), "one-band-symmetric");
    Model b = one_band_model(reordered, one_band_symbolic(true), "one-band-symmetric");
    auto values = hubbard_values(Rational(3, 10), Rational(5));
    for (auto [up, down] : {std::pair{2, 1}, {1, 1}, {3, 2}}) {
        auto ba = sector_basis(a.cluster, SectorConstraint::per_spin(up, down));
        auto bb = sector_basis(b.cluster, SectorConstraint::per_spin(up, down));
        Eigen::VectorXd ea = numeric_spectrum(evaluate_dense(classical_hamiltonian(a, ba) + quantum_hamiltonian(a, ba), values));
        Eigen::VectorXd eb = numeric_spectrum(evaluate_dense(classical_hamiltonian(b, bb) + quantum_hamiltonian(b, bb), values));
        CHECK((ea - eb).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("the two-site Hubbard ground energy has its closed form")
{
    Model m = one_band_model(build_cluster("bond"), one_band_symbolic(true), "one-band-symmetric");
    auto b = sector_basis(m.cluster, SectorConstraint::per_spin(1, 1));
    for (double t : {0.4, 0.1, 0.025}) {
        const double U = 8;
        auto values = hubbard_values(parse_rational(std::to_string(t)), Rational(8));
        Eigen::VectorXd e = numeric_spectrum(evaluate_dense(classical_hamiltonian(m, b) + quantum_hamiltonian(m, b), values));
        CHECK(e(0) == doctest::Approx((U - std::sqrt(U * U + 16 * t * t)) / 2).epsilon(1e-13));
    }
    // At t = 0 the spectrum is the classical diagonal.
    Eigen::VectorXd e0 = numeric_spectrum(evaluate_dense(classical_hamiltonian(m, b) + quantum_hamiltonian(m, b), hubbard_values(0, 8)));
    CHECK(e0(0) == 0.0);
    CHECK(e0(1) == 0.0);
    CHECK(e0(2) == 8.0);
    CHECK(e0(3) == 8.0);
}
