#include "sc/scalar.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sc {

namespace {

struct FactorTable {
    std::mutex mutex;
    std::vector<Polynomial> factors;
    std::map<Polynomial, int> ids;
};

FactorTable& factor_table()
{
    static FactorTable t;
    return t;
}

int intern_factor(const Polynomial& p)
{
    auto& t = factor_table();
    std::lock_guard lock(t.mutex);
    if (auto it = t.ids.find(p); it != t.ids.end()) return it->second;
    int id = static_cast<int>(t.factors.size());
    t.factors.push_back(p);
    t.ids.emplace(p, id);
    return id;
}

void add_factor(ScalarValue::Factors& f, int id, int e)
{
    auto it = std::lower_bound(f.begin(), f.end(), std::pair{id, 0},
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it != f.end() && it->first == id)
        it->second += e;
    else
        f.insert(it, {id, e});
}

Polynomial expand(const ScalarValue::Factors& f)
{
    Polynomial p(1);
    for (const auto& [id, e] : f) p = p * pow(denominator_factor(id), e);
    return p;
}

// Splits a hopping-free polynomial into a rational constant and interned factors.
std::pair<Rational, ScalarValue::Factors> factorize(const Polynomial& p)
{
    if (p.is_zero()) throw std::domain_error("division by zero");
    if (!p.is_hopping_free()) throw std::domain_error("hopping symbols in a denominator: " + p.str());
    PolynomialContent c = content_split(p);
    ScalarValue::Factors f;
    for (int v = 0; v < max_symbols; ++v) {
        int e = exponent(c.monomial, v);
        if (e > 0) add_factor(f, intern_factor(Polynomial::variable(Symbol{v})), e);
    }
    if (!c.primitive.is_constant()) add_factor(f, intern_factor(c.primitive), 1);
    return {c.constant, f};
}

}  // namespace

const Polynomial& denominator_factor(int id)
{
    auto& t = factor_table();
    std::lock_guard lock(t.mutex);
    return t.factors.at(static_cast<std::size_t>(id));
}

Polynomial ScalarValue::denominator() const { return expand(den_); }

Rational ScalarValue::as_rational() const
{
    if (!is_rational()) throw std::domain_error("scalar is not a rational constant: " + str());
    return num_.constant_term();
}

ScalarValue ScalarValue::truncated(int degree) const
{
    ScalarValue r;
    r.num_ = num_.truncated(degree);
    r.den_ = den_;
    r.reduce();
    return r;
}

ScalarValue ScalarValue::homogeneous_part(int degree) const
{
    ScalarValue r;
    r.num_ = num_.homogeneous_part(degree);
    r.den_ = den_;
    r.reduce();
    return r;
}

ScalarValue ScalarValue::substituted(const std::map<int, Rational>& values) const
{
    ScalarValue r(num_.substituted(values));
    Polynomial den(1);
    for (const auto& [id, e] : den_) {
        Polynomial f = denominator_factor(id).substituted(values);
        if (f.is_zero()) throw std::domain_error("denominator factor " + denominator_factor(id).str() + " vanishes");
        den = den * pow(f, e);
    }
    return r / ScalarValue(den);
}

Rational ScalarValue::evaluate(const std::map<int, Rational>& values) const
{
    ScalarValue r = substituted(values);
    if (!r.is_rational()) throw std::domain_error("unbound symbols in " + str());
    return r.as_rational();
}

ScalarValue ScalarValue::operator-() const
{
    ScalarValue r = *this;
    r.num_ = -r.num_;
    return r;
}

ScalarValue& ScalarValue::operator+=(const ScalarValue& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        reduce();
        return *this;
    }
    Factors lcm = den_;
    for (const auto& [id, e] : o.den_) {
        auto it = std::find_if(lcm.begin(), lcm.end(), [id = id](const auto& x) { return x.first == id; });
        if (it == lcm.end())
            add_factor(lcm, id, e);
        else
            it->second = std::max(it->second, e);
    }
    auto missing = [&lcm](const Factors& have) {
        Factors m;
        for (const auto& [id, e] : lcm) {
            auto it = std::find_if(have.begin(), have.end(), [id = id](const auto& x) { return x.first == id; });
            int have_e = it == have.end() ? 0 : it->second;
            if (e > have_e) m.emplace_back(id, e - have_e);
        }
        return m;
    };
    num_ = num_ * expand(missing(den_)) + o.num_ * expand(missing(o.den_));
    den_ = std::move(lcm);
    reduce();
    return *this;
}

ScalarValue& ScalarValue::operator*=(const ScalarValue& o)
{
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = ScalarValue();
    num_ = num_ * o.num_;
    for (const auto& [id, e] : o.den_) add_factor(den_, id, e);
    reduce();
    return *this;
}

ScalarValue& ScalarValue::operator/=(const ScalarValue& o)
{
    auto [constant, factors] = factorize(o.num_);
    if (is_zero()) return *this;
    num_ = num_ * expand(o.den_);
    num_ *= Rational(1) / constant;
    for (const auto& [id, e] : factors) add_factor(den_, id, e);
    reduce();
    return *this;
}

void ScalarValue::reduce()
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& [id, e] : den_) {
        const Polynomial& f = denominator_factor(id);
        while (e > 0) {
            auto q = exact_divide(num_, f);
            if (!q) break;
            num_ = std::move(*q);
            --e;
        }
    }
    std::erase_if(den_, [](const auto& x) { return x.second == 0; });
}

bool operator==(const ScalarValue& a, const ScalarValue& b)
{
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * expand(b.den_) == b.num_ * expand(a.den_);
}

ScalarValue pow(const ScalarValue& v, int n)
{
    ScalarValue r(1);
    for (int i = 0; i < n; ++i) r *= v;
    return r;
}

std::string ScalarValue::str() const
{
    if (den_.empty()) return num_.str();
    bool monomial_den = std::all_of(den_.begin(), den_.end(), [](const auto& x) {
        const Polynomial& f = denominator_factor(x.first);
        return f.terms().size() == 1;
    });
    if (!monomial_den) return "(" + num_.str() + ")/(" + expand(den_).str() + ")";
    Monomial den_m = 0;
    for (const auto& [id, e] : den_)
        for (int i = 0; i < e; ++i) den_m = monomial_multiply(den_m, denominator_factor(id).leading().first);
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : num_.terms()) {
        Monomial up = 0, down = 0;
        for (int v = 0; v < max_symbols; ++v) {
            int d = exponent(m, v) - exponent(den_m, v);
            if (d > 0) up = monomial_multiply(up, monomial_of(Symbol{v}, d));
            if (d < 0) down = monomial_multiply(down, monomial_of(Symbol{v}, -d));
        }
        Rational mag = c < 0 ? Rational(-c) : c;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        std::string body;
        if (up == 0)
            body = to_string(numerator_of(mag));
        else
            body = (numerator_of(mag) == 1 ? "" : numerator_of(mag).str() + "*") + monomial_str(up);
        os << body;
        Integer dq = denominator_of(mag);
        if (down != 0 || dq != 1) {
            os << "/";
            std::string d = dq == 1 ? monomial_str(down) : down == 0 ? dq.str() : dq.str() + "*" + monomial_str(down);
            bool compound = d.find('*') != std::string::npos;
            os << (compound ? "(" + d + ")" : d);
        }
    }
    return os.str();
}

}  // namespace sc
