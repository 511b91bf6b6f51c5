#include "sc/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sc {

namespace {

struct SymbolRegistry {
    std::mutex mutex;
    std::vector<std::string> names;
    std::vector<SymbolKind> kinds;
    std::uint64_t hopping_mask = 0;  // exponent fields of hopping symbols
};

SymbolRegistry& registry()
{
    static SymbolRegistry r;
    return r;
}

constexpr std::uint64_t field_mask = static_cast<std::uint64_t>(max_exponent);

int shift_of(int var) { return (max_symbols - 1 - var) * exponent_bits; }

}  // namespace

Symbol symbol(const std::string& name, SymbolKind kind)
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    for (std::size_t i = 0; i < r.names.size(); ++i) {
        if (r.names[i] == name) {
            if (r.kinds[i] != kind)
                throw std::invalid_argument("symbol '" + name + "' redeclared with another kind");
            return Symbol{static_cast<int>(i)};
        }
    }
    if (static_cast<int>(r.names.size()) == max_symbols)
        throw std::length_error("symbol table full");
    int index = static_cast<int>(r.names.size());
    r.names.push_back(name);
    r.kinds.push_back(kind);
    if (kind == SymbolKind::hopping) r.hopping_mask |= field_mask << shift_of(index);
    return Symbol{index};
}

std::optional<Symbol> find_symbol(const std::string& name)
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    for (std::size_t i = 0; i < r.names.size(); ++i)
        if (r.names[i] == name) return Symbol{static_cast<int>(i)};
    return std::nullopt;
}

const std::string& symbol_name(Symbol s)
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    return r.names.at(static_cast<std::size_t>(s.index));
}

SymbolKind symbol_kind(Symbol s)
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    return r.kinds.at(static_cast<std::size_t>(s.index));
}

int symbol_count()
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    return static_cast<int>(r.names.size());
}

int exponent(Monomial m, int var) { return static_cast<int>((m >> shift_of(var)) & field_mask); }

Monomial monomial_of(Symbol s, int power)
{
    if (power < 0 || power > max_exponent) throw std::overflow_error("monomial exponent out of range");
    return static_cast<Monomial>(power) << shift_of(s.index);
}

Monomial monomial_multiply(Monomial a, Monomial b)
{
    for (int v = 0; v < max_symbols; ++v)
        if (exponent(a, v) + exponent(b, v) > max_exponent) throw std::overflow_error("monomial exponent overflow");
    return a + b;
}

bool monomial_divides(Monomial divisor, Monomial m)
{
    for (int v = 0; v < max_symbols; ++v)
        if (exponent(divisor, v) > exponent(m, v)) return false;
    return true;
}

Monomial monomial_quotient(Monomial m, Monomial divisor) { return m - divisor; }

int hopping_degree(Monomial m)
{
    std::uint64_t mask;
    {
        auto& r = registry();
        std::lock_guard lock(r.mutex);
        mask = r.hopping_mask;
    }
    return total_degree(m & mask);
}

int total_degree(Monomial m)
{
    int d = 0;
    for (int v = 0; v < max_symbols; ++v) d += exponent(m, v);
    return d;
}

std::string monomial_str(Monomial m)
{
    std::string out;
    for (int v = 0; v < max_symbols; ++v) {
        int e = exponent(m, v);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += symbol_name(Symbol{v});
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

Polynomial::Polynomial(const Rational& c)
{
    if (c != 0) terms_.emplace_back(0, c);
}

Polynomial Polynomial::variable(Symbol s, int power)
{
    Polynomial p;
    p.terms_.emplace_back(monomial_of(s, power), Rational(1));
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms)
{
    std::map<Monomial, Rational, std::greater<>> acc;
    for (auto& [m, c] : terms) acc[m] += c;
    Polynomial p;
    for (auto& [m, c] : acc)
        if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

Rational Polynomial::constant_term() const
{
    if (!terms_.empty() && terms_.back().first == 0) return terms_.back().second;
    return Rational(0);
}

std::optional<int> Polynomial::max_hopping_degree() const
{
    std::optional<int> d;
    for (const auto& t : terms_) d = std::max(d.value_or(0), hopping_degree(t.first));
    return d;
}

std::optional<int> Polynomial::min_hopping_degree() const
{
    std::optional<int> d;
    for (const auto& t : terms_) {
        int h = hopping_degree(t.first);
        d = d ? std::min(*d, h) : h;
    }
    return d;
}

bool Polynomial::is_hopping_free() const
{
    auto d = max_hopping_degree();
    return !d || *d == 0;
}

Polynomial Polynomial::truncated(int degree) const
{
    Polynomial p;
    for (const auto& t : terms_)
        if (hopping_degree(t.first) <= degree) p.terms_.push_back(t);
    return p;
}

Polynomial Polynomial::homogeneous_part(int degree) const
{
    Polynomial p;
    for (const auto& t : terms_)
        if (hopping_degree(t.first) == degree) p.terms_.push_back(t);
    return p;
}

Polynomial Polynomial::substituted(const std::map<int, Rational>& values) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        Monomial rest = m;
        for (const auto& [var, value] : values) {
            int e = exponent(m, var);
            if (e == 0) continue;
            Rational p = 1;
            for (int i = 0; i < e; ++i) p *= value;
            coeff *= p;
            rest -= static_cast<Monomial>(e) << shift_of(var);
        }
        if (coeff != 0) out.emplace_back(rest, coeff);
    }
    return from_terms(std::move(out));
}

std::optional<Rational> Polynomial::evaluate(const std::map<int, Rational>& values) const
{
    Polynomial p = substituted(values);
    if (!p.is_constant()) return std::nullopt;
    return p.constant_term();
}

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first > b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first > a->first) {
            merged.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (c != 0) merged.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Polynomial::Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.emplace_back(monomial_multiply(ma, mb), ca * cb);
    return Polynomial::from_terms(std::move(out));
}

bool operator<(const Polynomial& a, const Polynomial& b)
{
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
}

std::string Polynomial::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m == 0) {
            os << to_string(mag);
        } else {
            if (mag != 1) os << to_string(mag) << "*";
            os << monomial_str(m);
        }
    }
    return os.str();
}

Polynomial pow(const Polynomial& p, int n)
{
    Polynomial r(1);
    for (int i = 0; i < n; ++i) r = r * p;
    return r;
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rest = a;
    std::vector<Polynomial::Term> quotient;
    const auto& [lead_m, lead_c] = b.leading();
    while (!rest.is_zero()) {
        const auto& [m, c] = rest.leading();
        if (!monomial_divides(lead_m, m)) return std::nullopt;
        Polynomial::Term q{monomial_quotient(m, lead_m), c / lead_c};
        rest -= Polynomial::from_terms({q}) * b;
        quotient.push_back(std::move(q));
    }
    return Polynomial::from_terms(std::move(quotient));
}

PolynomialContent content_split(const Polynomial& p)
{
    if (p.is_zero()) throw std::domain_error("content of zero polynomial");
    Integer num_gcd = 0, den_lcm = 1;
    Monomial common = p.leading().first;
    for (const auto& [m, c] : p.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator_of(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator_of(c));
        Monomial g = 0;
        for (int v = 0; v < max_symbols; ++v)
            g |= static_cast<Monomial>(std::min(exponent(common, v), exponent(m, v))) << shift_of(v);
        common = g;
    }
    if (num_gcd < 0) num_gcd = -num_gcd;
    Rational constant(num_gcd, den_lcm);
    if (p.leading().second < 0) constant = -constant;
    std::vector<Polynomial::Term> prim;
    for (const auto& [m, c] : p.terms()) prim.emplace_back(monomial_quotient(m, common), c / constant);
    return {constant, common, Polynomial::from_terms(std::move(prim))};
}

}  // namespace sc
