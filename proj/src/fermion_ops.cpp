#include "sc/fermion_ops.hpp"

#include <stdexcept>

namespace sc {

Operator fermion_string(const BasisPtr& from, const std::vector<Ladder>& ops, BasisPtr to)
{
    for (const auto& op : ops)
        if (op.site < 0 || op.site >= from->cluster()->size()) throw std::out_of_range("site outside cluster");
    SectorConstraint target = shifted(from->constraint(), ops);
    if (!to) {
        if (target == from->constraint())
            to = from;
        else
            to = sector_basis(from->cluster(), target);
    } else if (!(to->constraint() == target)) {
        throw std::invalid_argument("codomain basis does not match the shifted sector");
    }
    Operator r(from, to);
    for (int j = 0; j < from->size(); ++j) {
        Occupation w = from->state(j);
        int sign = 1;
        bool alive = true;
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            auto next = apply_ladder(*from, w, *it);
            if (!next) {
                alive = false;
                break;
            }
            w = next->first;
            sign *= next->second;
        }
        if (!alive) continue;
        int i = to->find(w);
        if (i < 0) throw std::logic_error("configuration outside target sector");
        r.add(i, j, ScalarValue(sign));
    }
    return r;
}

Operator ladder_matrix(const BasisPtr& from, int site, Spin spin, bool create)
{
    SectorConstraint target = shifted(from->constraint(), {{site, spin, create}});
    const int n = from->cluster()->size();
    bool feasible = target.is_per_spin()
                        ? (target.up >= 0 && target.down >= 0 && target.up <= n && target.down <= n)
                        : (target.total >= 0 && target.total <= 2 * n);
    if (!feasible) throw std::invalid_argument("ladder operator leaves the feasible sectors: " + target.str());
    return fermion_string(from, {{site, spin, create}});
}

Operator hop(const BasisPtr& b, int x, int y, Spin s) { return fermion_string(b, {{x, s, true}, {y, s, false}}); }

Operator number(const BasisPtr& b, int x, Spin s) { return fermion_string(b, {{x, s, true}, {x, s, false}}); }

Operator sz(const BasisPtr& b, int x)
{
    return ScalarValue(Rational(1, 2)) * (number(b, x, Spin::up) - number(b, x, Spin::down));
}

Operator splus(const BasisPtr& b, int x) { return fermion_string(b, {{x, Spin::up, true}, {x, Spin::down, false}}); }

Operator sminus(const BasisPtr& b, int x) { return fermion_string(b, {{x, Spin::down, true}, {x, Spin::up, false}}); }

Operator sperp_pair(const BasisPtr& b, int x, int y)
{
    Operator pm = fermion_string(b, {{x, Spin::up, true}, {x, Spin::down, false}, {y, Spin::down, true}, {y, Spin::up, false}});
    Operator mp = fermion_string(b, {{x, Spin::down, true}, {x, Spin::up, false}, {y, Spin::up, true}, {y, Spin::down, false}});
    return ScalarValue(Rational(1, 2)) * (pm + mp);
}

}  // namespace sc
