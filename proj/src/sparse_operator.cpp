#include "sc/sparse_operator.hpp"

#include <algorithm>

namespace sc {

Operator truncated(const Operator& a, int degree)
{
    return map_entries(a, [degree](const ScalarValue& v) { return v.truncated(degree); });
}

Operator homogeneous_part(const Operator& a, int degree)
{
    return map_entries(a, [degree](const ScalarValue& v) { return v.homogeneous_part(degree); });
}

std::optional<int> min_hopping_degree(const Operator& a)
{
    std::optional<int> d;
    a.for_each([&d](int, int, const ScalarValue& v) {
        auto m = v.min_hopping_degree();
        if (m) d = d ? std::min(*d, *m) : *m;
    });
    return d;
}

std::optional<int> max_hopping_degree(const Operator& a)
{
    std::optional<int> d;
    a.for_each([&d](int, int, const ScalarValue& v) {
        auto m = v.hopping_degree();
        if (m) d = std::max(d.value_or(0), *m);
    });
    return d;
}

SparseOperator<double> evaluate(const Operator& a, const std::map<int, Rational>& values)
{
    SparseOperator<double> r(a.domain(), a.codomain());
    a.for_each([&](int i, int j, const ScalarValue& v) { r.add(i, j, to_double(v.evaluate(values))); });
    return r;
}

}  // namespace sc
