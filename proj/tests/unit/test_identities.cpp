#include "sc/identities.hpp"
#include "sc/fermion_ops.hpp"
#include "sc/models.hpp"

#include <doctest.h>

using namespace sc;

TEST_CASE("every projector identity holds on the bond and the three-site chain")
{
    auto results = run_identity_suite({"bond", "chain3"});
    CHECK(results.size() == 2 * identity_names().size() - 1);  // the adjacent-bond identity needs two bonds
    for (const auto& r : results) {
        CAPTURE(r.cluster);
        CAPTURE(r.name);
        CHECK(r.instances > 0);
        CHECK_MESSAGE(r.holds, r.failure);
    }
}

TEST_CASE("the identities are not vacuous")
{
    // Without the ground projectors the adjacent-bond commutator survives, and
    // the number operator does not reduce on excited sites.
    Model m = one_band_model(build_cluster("chain3"), one_band_symbolic(false), "one-band-general");
    auto b = sector_basis(m.cluster, SectorConstraint::per_spin(2, 1));
    Operator p0 = ground_projector(m, b, {0});
    Operator one = identity<ScalarValue>(b);
    Operator n_up = number(b, 0, Spin::up), n_down = number(b, 0, Spin::down);
    CHECK_FALSE(n_up * (one - p0) == one - n_down);
    CHECK(n_up * p0 == (one - n_down) * p0);
    CHECK_FALSE(ground_projector(m, b, {0, 1}) == p0);
}
