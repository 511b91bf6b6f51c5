#pragma once

#include "sc/fock.hpp"
#include "sc/scalar.hpp"

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace sc {

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(double d) { return d == 0.0; }

// Sparse matrix from a domain sector basis to a codomain sector basis. Row i
// of the storage holds the nonzero entries (col -> value) of codomain state i.
template <class T>
class SparseOperator {
public:
    using Row = std::map<int, T>;
    using BasisPtr = std::shared_ptr<const SectorBasis>;

    SparseOperator() = default;
    SparseOperator(BasisPtr basis) : SparseOperator(basis, basis) {}
    SparseOperator(BasisPtr domain, BasisPtr codomain)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), rows_(codomain_ ? codomain_->size() : 0)
    {
    }

    const BasisPtr& domain() const { return domain_; }
    const BasisPtr& codomain() const { return codomain_; }
    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return domain_ ? domain_->size() : 0; }
    const Row& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    const std::vector<Row>& row_storage() const { return rows_; }

    T at(int r, int c) const
    {
        const auto& row = rows_[static_cast<std::size_t>(r)];
        auto it = row.find(c);
        return it == row.end() ? T() : it->second;
    }

    // Adds v to entry (r, c), removing the entry if it cancels.
    void add(int r, int c, const T& v)
    {
        if (sc::is_zero(v)) return;
        auto& row = rows_[static_cast<std::size_t>(r)];
        auto [it, inserted] = row.try_emplace(c, v);
        if (!inserted) {
            it->second += v;
            if (sc::is_zero(it->second)) row.erase(it);
        }
    }

    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }
    bool is_zero() const
    {
        for (const auto& r : rows_)
            if (!r.empty()) return false;
        return true;
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (int r = 0; r < rows(); ++r)
            for (const auto& [c, v] : rows_[static_cast<std::size_t>(r)]) f(r, c, v);
    }

private:
    BasisPtr domain_, codomain_;
    std::vector<Row> rows_;
};

using Operator = SparseOperator<ScalarValue>;

template <class T>
void require_same_shape(const SparseOperator<T>& a, const SparseOperator<T>& b)
{
    if (!same_basis(a.domain(), b.domain()) || !same_basis(a.codomain(), b.codomain()))
        throw std::invalid_argument("operator bases do not match");
}

template <class T>
SparseOperator<T> identity(const std::shared_ptr<const SectorBasis>& basis)
{
    SparseOperator<T> r(basis);
    for (int i = 0; i < basis->size(); ++i) r.add(i, i, T(1));
    return r;
}

template <class T>
SparseOperator<T> diagonal(const std::shared_ptr<const SectorBasis>& basis, const std::vector<T>& d)
{
    SparseOperator<T> r(basis);
    for (int i = 0; i < basis->size(); ++i) r.add(i, i, d[static_cast<std::size_t>(i)]);
    return r;
}

template <class T>
SparseOperator<T>& operator+=(SparseOperator<T>& a, const SparseOperator<T>& b)
{
    require_same_shape(a, b);
    b.for_each([&a](int r, int c, const T& v) { a.add(r, c, v); });
    return a;
}

template <class T>
SparseOperator<T> operator+(SparseOperator<T> a, const SparseOperator<T>& b)
{
    return a += b;
}

template <class T>
SparseOperator<T> operator-(const SparseOperator<T>& a)
{
    SparseOperator<T> r(a.domain(), a.codomain());
    a.for_each([&r](int i, int j, const T& v) { r.add(i, j, -v); });
    return r;
}

template <class T>
SparseOperator<T> operator-(SparseOperator<T> a, const SparseOperator<T>& b)
{
    require_same_shape(a, b);
    b.for_each([&a](int r, int c, const T& v) { a.add(r, c, -v); });
    return a;
}

template <class T>
SparseOperator<T> operator*(const T& s, const SparseOperator<T>& a)
{
    SparseOperator<T> r(a.domain(), a.codomain());
    if (sc::is_zero(s)) return r;
    a.for_each([&](int i, int j, const T& v) { r.add(i, j, s * v); });
    return r;
}

template <class T>
SparseOperator<T> operator*(const SparseOperator<T>& a, const SparseOperator<T>& b)
{
    if (!same_basis(a.domain(), b.codomain())) throw std::invalid_argument("operator product: bases do not chain");
    SparseOperator<T> r(b.domain(), a.codomain());
    for (int i = 0; i < a.rows(); ++i)
        for (const auto& [j, av] : a.row(i))
            for (const auto& [k, bv] : b.row(j)) r.add(i, k, av * bv);
    return r;
}

template <class T>
SparseOperator<T> adjoint(const SparseOperator<T>& a)
{
    SparseOperator<T> r(a.codomain(), a.domain());
    a.for_each([&r](int i, int j, const T& v) { r.add(j, i, v); });
    return r;
}

template <class T>
SparseOperator<T> commutator(const SparseOperator<T>& a, const SparseOperator<T>& b)
{
    return a * b - b * a;
}

template <class T>
SparseOperator<T> anticommutator(const SparseOperator<T>& a, const SparseOperator<T>& b)
{
    return a * b + b * a;
}

// Applies f to every stored entry; zero results are dropped.
template <class T, class F>
auto map_entries(const SparseOperator<T>& a, F&& f)
{
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    SparseOperator<U> r(a.domain(), a.codomain());
    a.for_each([&](int i, int j, const T& v) { r.add(i, j, f(v)); });
    return r;
}

template <class T>
bool operator==(const SparseOperator<T>& a, const SparseOperator<T>& b)
{
    if (!same_basis(a.domain(), b.domain()) || !same_basis(a.codomain(), b.codomain())) return false;
    return (a - b).is_zero();
}

// Hopping-degree truncation and grading of exact operators.
Operator truncated(const Operator& a, int degree);
Operator homogeneous_part(const Operator& a, int degree);
std::optional<int> min_hopping_degree(const Operator& a);
std::optional<int> max_hopping_degree(const Operator& a);
SparseOperator<double> evaluate(const Operator& a, const std::map<int, Rational>& values);

}  // namespace sc
