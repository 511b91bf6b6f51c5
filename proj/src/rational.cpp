#include "sc/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sc {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer pow10(long n)
{
    Integer r = 1;
    for (long i = 0; i < n; ++i) r *= 10;
    return r;
}

Rational parse_decimal(std::string_view s)
{
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view ex = s.substr(e + 1);
        bool exp_negative = false;
        if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
            exp_negative = ex[0] == '-';
            ex.remove_prefix(1);
        }
        if (!all_digits(ex) || ex.size() > 6) throw std::invalid_argument("malformed exponent");
        exponent = std::stol(std::string(ex));
        if (exp_negative) exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string_view int_part = s, frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("empty number");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
        throw std::invalid_argument("malformed decimal");
    std::string digits = std::string(int_part) + std::string(frac_part);
    // cpp_int reads a leading zero as an octal prefix.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    Integer mantissa(digits.empty() ? std::string("0") : digits);
    exponent -= static_cast<long>(frac_part.size());
    Rational value = exponent >= 0 ? Rational(mantissa * pow10(exponent))
                                   : Rational(mantissa, pow10(-exponent));
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_decimal(text);
    Rational p = parse_decimal(text.substr(0, slash));
    Rational q = parse_decimal(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return p / q;
}

std::string to_string(const Rational& r)
{
    if (denominator_of(r) == 1) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace sc
