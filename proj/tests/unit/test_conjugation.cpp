#include "sc/conjugation.hpp"
#include "sc/effective.hpp"

#include <doctest.h>

using namespace sc;

TEST_CASE("block split reassembles the bond operator")
{
    Model m = make_model(ModelChoice::one_band_general, "bond");
    for (const auto& sector : m.band_sectors()) {
        auto b = sector_basis(m.cluster, sector);
        Operator q = bond_operator(m, b, 0);
        BlockSplit s = block_split(q, projector_for(m, b, bond_sites(m, 0)));
        CHECK(s.q00 + s.q01 + s.qr == q);
        CHECK(s.q00.is_zero());  // hopping always leaves the singly-occupied band
    }
}

TEST_CASE("the first-order generator removes the off-diagonal hopping")
{
    Model m = make_model(ModelChoice::one_band_symmetric, "chain3");
    SectorConjugation c(m, sector_basis(m.cluster, SectorConstraint::per_spin(2, 1)));
    for (int bond = 0; bond < c.bond_count(); ++bond) {
        // [S₁, H₀] = −Q01 for the bond's generator.
        CHECK(commutator(c.s1(bond), classical_hamiltonian(m, c.basis())) == -c.split(bond).q01);
        CHECK(adjoint(c.s1(bond)) == -c.s1(bond));
    }
}

TEST_CASE("a vanishing energy denominator is reported with its configurations")
{
    Model m = make_model(ModelChoice::one_band_symmetric, "bond");
    auto b = sector_basis(m.cluster, SectorConstraint::per_spin(1, 1));
    Operator h0 = classical_hamiltonian(m, b);
    CHECK_THROWS_AS(ad_inverse(h0, identity<ScalarValue>(b)), ZeroDenominatorError);
}

TEST_CASE("the residual of the conjugated Hamiltonian is graded")
{
    for (const char* shape : {"bond", "chain3"})
        for (int order : {1, 2}) {
            ResidualCertificate cert = residual_grading_check(make_model(ModelChoice::one_band_general, shape), order);
            CAPTURE(shape);
            CHECK(cert.violations.empty());
            REQUIRE(cert.min_degree.has_value());
            CHECK(*cert.min_degree >= order + 1);
        }
}

TEST_CASE("the Lie-Schwinger series rejects generators of degree zero")
{
    Model m = make_model(ModelChoice::one_band_symmetric, "bond");
    auto b = sector_basis(m.cluster, SectorConstraint::per_spin(1, 1));
    Operator h0 = classical_hamiltonian(m, b);
    CHECK_THROWS_AS(lie_schwinger(graded(h0, 4), graded(h0, 4), 4), std::invalid_argument);
}
