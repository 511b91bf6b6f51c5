#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace sc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", "-p", "p", or a plain decimal such as "0.025" / "1e-3" into an
// exact rational. Throws std::invalid_argument on malformed text or q == 0.
Rational parse_rational(std::string_view text);

// Canonical "p/q" text; integers are printed without "/1".
std::string to_string(const Rational& r);

double to_double(const Rational& r);

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

}  // namespace sc
