#pragma once

#include "sc/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sc {

// Symbols are interned process-wide. A hopping symbol carries one unit of
// hopping degree; classical symbols (U, h, k, ...) carry none.
enum class SymbolKind { hopping, classical };

constexpr int max_symbols = 12;
constexpr int exponent_bits = 5;
constexpr int max_exponent = (1 << exponent_bits) - 1;

struct Symbol {
    int index = -1;
    bool operator==(const Symbol&) const = default;
};

// Returns the symbol with this name, registering it on first use. Re-declaring
// a name with a different kind throws std::invalid_argument.
Symbol symbol(const std::string& name, SymbolKind kind);
std::optional<Symbol> find_symbol(const std::string& name);
const std::string& symbol_name(Symbol s);
SymbolKind symbol_kind(Symbol s);
int symbol_count();

// A monomial packs max_symbols exponents of exponent_bits each, symbol 0 in the
// most significant field, so integer order equals lexicographic order.
using Monomial = std::uint64_t;

int exponent(Monomial m, int var);
Monomial monomial_of(Symbol s, int power = 1);
Monomial monomial_multiply(Monomial a, Monomial b);
bool monomial_divides(Monomial divisor, Monomial m);
Monomial monomial_quotient(Monomial m, Monomial divisor);
int hopping_degree(Monomial m);
int total_degree(Monomial m);

// Sparse polynomial with exact rational coefficients. Terms are sorted by
// descending monomial and carry no zero coefficients.
class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& c);
    Polynomial(int c) : Polynomial(Rational(c)) {}
    static Polynomial variable(Symbol s, int power = 1);
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    const Term& leading() const { return terms_.front(); }

    // Maximum / minimum hopping degree over the terms; nullopt for zero.
    std::optional<int> max_hopping_degree() const;
    std::optional<int> min_hopping_degree() const;
    bool is_hopping_free() const;

    Polynomial truncated(int degree) const;
    Polynomial homogeneous_part(int degree) const;
    Polynomial substituted(const std::map<int, Rational>& values) const;
    std::optional<Rational> evaluate(const std::map<int, Rational>& values) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator<(const Polynomial& a, const Polynomial& b);

    std::string str() const;

private:
    std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, int n);

// Exact quotient a / b when b divides a, nullopt otherwise.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

// Splits p = c * m * r with c rational, m a monomial and r primitive (integer
// coefficients with unit content, positive leading coefficient, no monomial
// factor). Used to canonicalize denominators.
struct PolynomialContent {
    Rational constant;
    Monomial monomial = 0;
    Polynomial primitive;
};
PolynomialContent content_split(const Polynomial& p);

std::string monomial_str(Monomial m);

}  // namespace sc
