#pragma once

#include "sc/scalar.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sc {

// Operator on the spin space of m sites; state index bit j = 1 means site j up.
struct SpinMatrix {
    int sites = 0;
    std::map<std::pair<int, int>, ScalarValue> entries;

    void add(int r, int c, const ScalarValue& v);
    bool operator==(const SpinMatrix& o) const;
};

// A spin string assigns one of '1', 'z', '+', '-' (1, Sᶻ, S⁺, S⁻) to each site.
// SpinPolynomial is a linear combination of strings; the strings are
// Hilbert-Schmidt orthogonal, so the expansion of a matrix is unique.
class SpinPolynomial {
public:
    SpinPolynomial() = default;
    explicit SpinPolynomial(int sites) : sites_(sites) {}

    static SpinPolynomial identity(int sites, const ScalarValue& c = ScalarValue(1));
    static SpinPolynomial single(int sites, int site, char op);

    int sites() const { return sites_; }
    const std::map<std::string, ScalarValue>& terms() const { return terms_; }
    ScalarValue coefficient(const std::string& s) const;
    bool is_zero() const { return terms_.empty(); }
    void add(const std::string& s, const ScalarValue& c);

    SpinPolynomial& operator+=(const SpinPolynomial& o);
    SpinPolynomial& operator-=(const SpinPolynomial& o);
    friend SpinPolynomial operator+(SpinPolynomial a, const SpinPolynomial& b) { return a += b; }
    friend SpinPolynomial operator-(SpinPolynomial a, const SpinPolynomial& b) { return a -= b; }
    friend SpinPolynomial operator*(const ScalarValue& c, const SpinPolynomial& p);
    friend SpinPolynomial operator*(const SpinPolynomial& a, const SpinPolynomial& b);
    friend bool operator==(const SpinPolynomial& a, const SpinPolynomial& b);

    SpinPolynomial map_coefficients(const std::function<ScalarValue(const ScalarValue&)>& f) const;

    // Relabels site i as positions[i] in a polynomial on `sites` sites.
    SpinPolynomial embedded(int sites, const std::vector<int>& positions) const;

    // e.g. "Sz(0) S+(1) S-(2)"; "1" for the identity.
    static std::string label(const std::string& s);

    // e.g. "(4*t^2/U) Sz(0) Sz(1) + (-k) 1"; "0" when empty.
    std::string str() const;

private:
    int sites_ = 0;
    std::map<std::string, ScalarValue> terms_;
};

SpinMatrix to_matrix(const SpinPolynomial& p);

// Exact expansion; throws std::runtime_error listing residual entries if the
// reconstruction differs from the input.
SpinPolynomial express_in_spin_basis(const SpinMatrix& m);

// Convenience builders on a polynomial ring of `n` sites.
SpinPolynomial spin_one(int n);
SpinPolynomial spin_z(int n, int x);
SpinPolynomial spin_plus(int n, int x);
SpinPolynomial spin_minus(int n, int x);
SpinPolynomial szsz(int n, int x, int y);
SpinPolynomial sperp(int n, int x, int y);  // (S⁺_xS⁻_y + S⁻_xS⁺_y)/2
SpinPolynomial sdots(int n, int x, int y);

}  // namespace sc
