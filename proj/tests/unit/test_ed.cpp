#include "sc/ed.hpp"

#include <doctest.h>

#include <cmath>

using namespace sc;

TEST_CASE("the spectrum rejects non-Hermitian input")
{
    NumericOperator h(2, 2);
    h << 1, 2, 0, 1;
    CHECK_THROWS_AS(numeric_spectrum(h), ToleranceError);
    h << 1, 2, 2, 1;
    Eigen::VectorXd e = numeric_spectrum(h);
    CHECK(e(0) == doctest::Approx(-1));
    CHECK(e(1) == doctest::Approx(3));
}

TEST_CASE("numeric conjugation is unitary and trivial for S = 0")
{
    NumericOperator h(3, 3);
    h << 2, 1, 0, 1, -1, 3, 0, 3, 4;
    NumericOperator s(3, 3);
    s << 0, 0.3, -0.1, -0.3, 0, 0.2, 0.1, -0.2, 0;
    CHECK((conjugate_numeric(h, NumericOperator::Zero(3, 3)) - h).norm() == 0.0);
    UnitarityWitness w = unitarity_witness(h, s);
    CHECK(w.passed);
    CHECK(w.relative_error < 1e-12);
    NumericOperator notanti = s;
    notanti(0, 1) = 1;
    CHECK_THROWS_AS(conjugate_numeric(h, notanti), ToleranceError);
}

TEST_CASE("the operator norm is the largest singular value")
{
    NumericOperator a(2, 2);
    a << 3, 0, 0, -4;
    CHECK(operator_norm(a) == doctest::Approx(4));
}

TEST_CASE("log-log fits recover power laws")
{
    std::vector<double> x{0.4, 0.2, 0.1, 0.05}, y;
    for (double v : x) y.push_back(7 * std::pow(v, 5));
    LogLogFit f = fit_loglog(x, y);
    CHECK(f.slope == doctest::Approx(5).epsilon(1e-12));
    CHECK(f.width < 1e-10);
    CHECK_THROWS_AS(fit_loglog({0.1}, {1.0}), std::invalid_argument);
}

TEST_CASE("scaling studies need enough samples over a decade")
{
    ScalingSetup setup;
    setup.values = {{"U", 8}, {"h", 0}, {"k", 0}};
    setup.t_values = {Rational(1, 10)};
    CHECK_THROWS_AS(band_scaling_study(setup), std::invalid_argument);
    setup.t_values = {Rational(1, 10), Rational(9, 100), Rational(8, 100), Rational(7, 100)};
    CHECK_THROWS_AS(band_scaling_study(setup), std::invalid_argument);
}

TEST_CASE("the first-order residual decays at least as t squared")
{
    ScalingSetup setup;
    setup.order = 1;
    setup.values = {{"U", 8}, {"h", 0}, {"k", 0}};
    setup.t_values = {Rational(1, 10), Rational(1, 100), Rational(1, 1000), Rational(1, 20)};
    ScalingReport r = band_scaling_study(setup);
    CHECK(r.residual_ok());
    CHECK(r.residual_fit.slope >= 1.8);
    CHECK(r.band_ok());
}
