#pragma once

#include "sc/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sc {

// Element of the field of fractions Q(symbols). The numerator is an expanded
// polynomial; the denominator is a product of interned primitive polynomials
// in the classical symbols only, so the hopping-degree grading of a value is
// the grading of its numerator.
class ScalarValue {
public:
    using Factors = std::vector<std::pair<int, int>>;  // (factor id, exponent), sorted by id

    ScalarValue() = default;
    ScalarValue(const Rational& c) : num_(c) {}
    ScalarValue(int c) : num_(Rational(c)) {}
    ScalarValue(Polynomial p) : num_(std::move(p)) {}
    static ScalarValue of(Symbol s, int power = 1) { return ScalarValue(Polynomial::variable(s, power)); }

    const Polynomial& numerator() const { return num_; }
    const Factors& denominator_factors() const { return den_; }
    Polynomial denominator() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return den_.empty() && num_.is_constant(); }
    Rational as_rational() const;  // throws unless is_rational()

    std::optional<int> hopping_degree() const { return num_.max_hopping_degree(); }
    std::optional<int> min_hopping_degree() const { return num_.min_hopping_degree(); }
    ScalarValue truncated(int degree) const;
    ScalarValue homogeneous_part(int degree) const;

    // Substitutes exact values for symbols (by index). Throws std::domain_error
    // when a denominator factor vanishes.
    ScalarValue substituted(const std::map<int, Rational>& values) const;
    Rational evaluate(const std::map<int, Rational>& values) const;

    ScalarValue operator-() const;
    ScalarValue& operator+=(const ScalarValue& o);
    ScalarValue& operator-=(const ScalarValue& o) { return *this += -o; }
    ScalarValue& operator*=(const ScalarValue& o);
    ScalarValue& operator/=(const ScalarValue& o);

    friend ScalarValue operator+(ScalarValue a, const ScalarValue& b) { return a += b; }
    friend ScalarValue operator-(ScalarValue a, const ScalarValue& b) { return a -= b; }
    friend ScalarValue operator*(ScalarValue a, const ScalarValue& b) { return a *= b; }
    friend ScalarValue operator/(ScalarValue a, const ScalarValue& b) { return a /= b; }
    friend bool operator==(const ScalarValue& a, const ScalarValue& b);

    std::string str() const;

private:
    void reduce();

    Polynomial num_;
    Factors den_;
};

inline bool is_zero(const ScalarValue& v) { return v.is_zero(); }

ScalarValue pow(const ScalarValue& v, int n);

// Interned denominator factors (primitive, hopping-free, non-constant).
const Polynomial& denominator_factor(int id);

}  // namespace sc
