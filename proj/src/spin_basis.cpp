#include "sc/spin_basis.hpp"

#include <sstream>
#include <stdexcept>

namespace sc {

void SpinMatrix::add(int r, int c, const ScalarValue& v)
{
    if (v.is_zero()) return;
    auto [it, inserted] = entries.try_emplace({r, c}, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) entries.erase(it);
    }
}

bool SpinMatrix::operator==(const SpinMatrix& o) const
{
    if (sites != o.sites) return false;
    SpinMatrix d = *this;
    for (const auto& [k, v] : o.entries) d.add(k.first, k.second, -v);
    return d.entries.empty();
}

SpinPolynomial SpinPolynomial::identity(int sites, const ScalarValue& c)
{
    SpinPolynomial p(sites);
    p.add(std::string(static_cast<std::size_t>(sites), '1'), c);
    return p;
}

SpinPolynomial SpinPolynomial::single(int sites, int site, char op)
{
    std::string s(static_cast<std::size_t>(sites), '1');
    s.at(static_cast<std::size_t>(site)) = op;
    SpinPolynomial p(sites);
    p.add(s, ScalarValue(1));
    return p;
}

ScalarValue SpinPolynomial::coefficient(const std::string& s) const
{
    auto it = terms_.find(s);
    return it == terms_.end() ? ScalarValue() : it->second;
}

void SpinPolynomial::add(const std::string& s, const ScalarValue& c)
{
    if (static_cast<int>(s.size()) != sites_) throw std::invalid_argument("spin string length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SpinPolynomial& SpinPolynomial::operator+=(const SpinPolynomial& o)
{
    if (o.sites_ != sites_ && !o.terms_.empty()) {
        if (terms_.empty())
            sites_ = o.sites_;
        else
            throw std::invalid_argument("spin polynomials on different site counts");
    }
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

SpinPolynomial& SpinPolynomial::operator-=(const SpinPolynomial& o) { return *this += ScalarValue(-1) * o; }

SpinPolynomial operator*(const ScalarValue& c, const SpinPolynomial& p)
{
    SpinPolynomial r(p.sites_);
    for (const auto& [s, v] : p.terms_) r.add(s, c * v);
    return r;
}

namespace {

// Single-site product a·b = coefficient · op.
std::pair<Rational, char> site_product(char a, char b)
{
    if (a == '1') return {1, b};
    if (b == '1') return {1, a};
    if (a == 'z' && b == 'z') return {Rational(1, 4), '1'};
    if (a == 'z' && b == '+') return {Rational(1, 2), '+'};
    if (a == '+' && b == 'z') return {Rational(-1, 2), '+'};
    if (a == 'z' && b == '-') return {Rational(-1, 2), '-'};
    if (a == '-' && b == 'z') return {Rational(1, 2), '-'};
    if (a == b) return {0, '1'};  // S⁺S⁺ = S⁻S⁻ = 0
    return {0, a == '+' ? 'P' : 'M'};  // S⁺S⁻ = ½ + Sᶻ, S⁻S⁺ = ½ − Sᶻ (expanded by caller)
}

}  // namespace

SpinPolynomial operator*(const SpinPolynomial& a, const SpinPolynomial& b)
{
    if (a.sites_ != b.sites_) throw std::invalid_argument("spin polynomials on different site counts");
    SpinPolynomial r(a.sites_);
    for (const auto& [sa, ca] : a.terms_) {
        for (const auto& [sb, cb] : b.terms_) {
            // Each site contributes one or two (coefficient, op) alternatives.
            std::vector<std::pair<std::string, Rational>> partial{{"", Rational(1)}};
            for (std::size_t i = 0; i < sa.size() && !partial.empty(); ++i) {
                std::vector<std::pair<Rational, char>> options;
                auto [c, op] = site_product(sa[i], sb[i]);
                if (op == 'P')
                    options = {{Rational(1, 2), '1'}, {1, 'z'}};
                else if (op == 'M')
                    options = {{Rational(1, 2), '1'}, {-1, 'z'}};
                else if (c != 0)
                    options = {{c, op}};
                std::vector<std::pair<std::string, Rational>> next;
                for (const auto& [s, v] : partial)
                    for (const auto& [oc, oo] : options) next.emplace_back(s + oo, v * oc);
                partial = std::move(next);
            }
            for (const auto& [s, v] : partial) r.add(s, ScalarValue(v) * ca * cb);
        }
    }
    return r;
}

bool operator==(const SpinPolynomial& a, const SpinPolynomial& b)
{
    SpinPolynomial d = a;
    d -= b;
    return d.terms_.empty();
}

SpinPolynomial SpinPolynomial::map_coefficients(const std::function<ScalarValue(const ScalarValue&)>& f) const
{
    SpinPolynomial r(sites_);
    for (const auto& [s, c] : terms_) r.add(s, f(c));
    return r;
}

SpinPolynomial SpinPolynomial::embedded(int sites, const std::vector<int>& positions) const
{
    if (static_cast<int>(positions.size()) != sites_) throw std::invalid_argument("embedding size mismatch");
    SpinPolynomial r(sites);
    for (const auto& [s, c] : terms_) {
        std::string t(static_cast<std::size_t>(sites), '1');
        for (int i = 0; i < sites_; ++i) t.at(static_cast<std::size_t>(positions[i])) = s[static_cast<std::size_t>(i)];
        r.add(t, c);
    }
    return r;
}

std::string SpinPolynomial::label(const std::string& s)
{
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') continue;
        if (any) os << " ";
        any = true;
        os << (s[i] == 'z' ? "Sz" : s[i] == '+' ? "S+" : "S-") << "(" << i << ")";
    }
    return any ? os.str() : "1";
}

SpinMatrix to_matrix(const SpinPolynomial& p)
{
    SpinMatrix m;
    m.sites = p.sites();
    const int dim = 1 << p.sites();
    for (const auto& [s, c] : p.terms()) {
        for (int col = 0; col < dim; ++col) {
            int row = col;
            Rational v = 1;
            for (int j = 0; j < p.sites() && v != 0; ++j) {
                bool up = (col >> j) & 1;
                switch (s[static_cast<std::size_t>(j)]) {
                case 'z': v *= up ? Rational(1, 2) : Rational(-1, 2); break;
                case '+': if (up) v = 0; else row |= 1 << j; break;
                case '-': if (!up) v = 0; else row &= ~(1 << j); break;
                default: break;
                }
            }
            if (v != 0) m.add(row, col, ScalarValue(v) * c);
        }
    }
    return m;
}

SpinPolynomial express_in_spin_basis(const SpinMatrix& m)
{
    SpinPolynomial p(m.sites);
    for (const auto& [rc, v] : m.entries) {
        auto [row, col] = rc;
        std::vector<std::pair<std::string, Rational>> partial{{"", Rational(1)}};
        for (int j = 0; j < m.sites; ++j) {
            bool r = (row >> j) & 1, c = (col >> j) & 1;
            std::vector<std::pair<std::string, Rational>> next;
            for (const auto& [s, w] : partial) {
                if (r == c) {
                    // <B, M> / <B, B> with Tr 1 = 2 and Tr SᶻSᶻ = ½.
                    next.emplace_back(s + '1', w * Rational(1, 2));
                    next.emplace_back(s + 'z', w * (r ? Rational(1) : Rational(-1)));
                } else {
                    next.emplace_back(s + (r ? '+' : '-'), w);
                }
            }
            partial = std::move(next);
        }
        for (const auto& [s, w] : partial) p.add(s, ScalarValue(w) * v);
    }
    SpinMatrix back = to_matrix(p);
    if (!(back == m)) {
        std::ostringstream os;
        os << "operator is not representable in the spin basis; residual entries:";
        SpinMatrix d = back;
        for (const auto& [k, v] : m.entries) d.add(k.first, k.second, -v);
        for (const auto& [k, v] : d.entries) os << " (" << k.first << "," << k.second << ")=" << v.str();
        throw std::runtime_error(os.str());
    }
    return p;
}

SpinPolynomial spin_one(int n) { return SpinPolynomial::identity(n); }
SpinPolynomial spin_z(int n, int x) { return SpinPolynomial::single(n, x, 'z'); }
SpinPolynomial spin_plus(int n, int x) { return SpinPolynomial::single(n, x, '+'); }
SpinPolynomial spin_minus(int n, int x) { return SpinPolynomial::single(n, x, '-'); }
SpinPolynomial szsz(int n, int x, int y) { return spin_z(n, x) * spin_z(n, y); }
SpinPolynomial sperp(int n, int x, int y)
{
    return ScalarValue(Rational(1, 2)) * (spin_plus(n, x) * spin_minus(n, y) + spin_minus(n, x) * spin_plus(n, y));
}
SpinPolynomial sdots(int n, int x, int y) { return szsz(n, x, y) + sperp(n, x, y); }

std::string SpinPolynomial::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ") " + label(s);
    }
    return out;
}

}  // namespace sc
