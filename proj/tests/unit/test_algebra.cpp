#include "sc/scalar.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace sc;

namespace {

ScalarValue var(const std::string& name, SymbolKind kind) { return ScalarValue::of(symbol(name, kind)); }

}  // namespace

TEST_CASE("rationals parse exactly from fractions and decimals")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("0.025") == Rational(1, 40));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("0.400000") == Rational(2, 5));
    CHECK(parse_rational("010/0.08") == Rational(125));
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(-1, 175)) == "-1/175");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("scalar values form a field over the symbols")
{
    ScalarValue t = var("t", SymbolKind::hopping), U = var("U", SymbolKind::classical);
    ScalarValue a = ScalarValue(4) * t * t / U;
    CHECK(a * U == ScalarValue(4) * t * t);
    CHECK(a - a == ScalarValue());
    CHECK((a + a) == ScalarValue(2) * a);
    CHECK(ScalarValue(1) / U + ScalarValue(1) / U == ScalarValue(2) / U);
    // Equality survives different denominator representations.
    ScalarValue lhs = ScalarValue(1) / (U + ScalarValue(1)) - ScalarValue(1) / U;
    ScalarValue rhs = ScalarValue(-1) / (U * (U + ScalarValue(1)));
    CHECK(lhs == rhs);
}

TEST_CASE("hopping symbols never enter a denominator")
{
    ScalarValue t = var("t", SymbolKind::hopping);
    CHECK_THROWS(ScalarValue(1) / t);
}

TEST_CASE("hopping degree is carried by the numerator")
{
    ScalarValue t = var("t", SymbolKind::hopping), U = var("U", SymbolKind::classical);
    ScalarValue v = t * t / U - ScalarValue(16) * pow(t, 4) / pow(U, 3);
    CHECK(v.min_hopping_degree() == 2);
    CHECK(v.hopping_degree() == 4);
    CHECK(v.truncated(2) == t * t / U);
    CHECK(v.homogeneous_part(4) == ScalarValue(-16) * pow(t, 4) / pow(U, 3));
    CHECK(ScalarValue().min_hopping_degree() == std::nullopt);
}

TEST_CASE("substitution evaluates exactly and rejects vanishing denominators")
{
    Symbol ts = symbol("t", SymbolKind::hopping), Us = symbol("U", SymbolKind::classical);
    ScalarValue t = ScalarValue::of(ts), U = ScalarValue::of(Us);
    ScalarValue v = ScalarValue(4) * t * t / U;
    CHECK(v.evaluate({{ts.index, Rational(1, 10)}, {Us.index, Rational(7)}}) == Rational(1, 175));
    CHECK(v.substituted({{ts.index, Rational(0)}}).is_zero());
    CHECK_THROWS_AS(v.substituted({{Us.index, Rational(0)}}), std::domain_error);
}

TEST_CASE("symbols keep their kind")
{
    symbol("t", SymbolKind::hopping);
    CHECK_THROWS_AS(symbol("t", SymbolKind::classical), std::invalid_argument);
    CHECK(symbol_kind(*find_symbol("t")) == SymbolKind::hopping);
}
