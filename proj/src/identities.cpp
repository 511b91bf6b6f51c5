#include "sc/identities.hpp"

#include "sc/conjugation.hpp"
#include "sc/fermion_ops.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace sc {

namespace {

struct Identity {
    std::string name, statement;
};

const std::vector<Identity>& identities()
{
    static const std::vector<Identity> list{
        {"projector-products", "P^i_X P^j_X = delta_ij P^i_X, i,j in {0,1}, for single sites and bonds"},
        {"projector-nesting", "P0_X P0_Y = P0_Y and P1_X P1_Y = P1_X for X subset of Y"},
        {"intertwining", "c P0_x = P1_x c and c P1_x = P0_x c for c = c_xs, c+_xs"},
        {"excited-projector-product", "P1_X = 1 - prod_{x in X} P0_x"},
        {"bond-number-exchange", "P0_X n_ys (1 - n_xs) P0_X = P0_X (1 - n_y-s) n_x-s P0_X, X = {x,y}"},
        {"antiparallel-pair", "P0_X (n_x+ n_y- + n_x- n_y+) P0_X = -2 Sz_x Sz_y + P0_X / 2, X = {x,y}"},
        {"site-number-complement", "P0_x n_xs P0_x = P0_x (1 - n_x-s) P0_x"},
        {"site-single-occupancy", "P0_x (n_x+ + n_x-) P0_x = P0_x"},
        {"number-on-ground", "n_xs P0_x = (1 - n_x-s) P0_x"},
        {"number-on-excited", "n_xs P1_x = (n_x / 2) P1_x"},
        {"double-creation-on-ground", "c+_xs' c+_xs P0_x = 0"},
        {"spin-flip-on-excited", "c+_xs c_x-s P1_x = 0"},
        {"adjacent-bond-vanishing", "P0_{X u X'} [S_1sX, Q01_s'X'] P0_{X u X'} = 0 for bonds X = <xy>, X' = <yz>, x != z"},
    };
    return list;
}

class Checker {
public:
    explicit Checker(IdentityResult& r) : r_(r) {}
    void operator()(bool ok, const std::string& where)
    {
        ++r_.instances;
        if (!ok && r_.holds) {
            r_.holds = false;
            r_.failure = where;
        }
    }

private:
    IdentityResult& r_;
};

std::string where(const BasisPtr& b, const std::string& detail) { return b->constraint().str() + " " + detail; }
const char* spin_name(Spin s) { return s == Spin::up ? "+" : "-"; }

}  // namespace

std::vector<std::string> identity_names()
{
    std::vector<std::string> out;
    for (const auto& i : identities()) out.push_back(i.name);
    return out;
}

std::vector<IdentityResult> run_identity_suite(const std::vector<std::string>& clusters)
{
    std::vector<IdentityResult> out;
    for (const auto& shape : clusters) {
        auto cluster = build_cluster(shape);
        Model m = one_band_model(cluster, one_band_symbolic(false), "one-band-general");
        const int n = cluster->size();
        std::vector<BasisPtr> sectors;
        for (int up = 0; up <= n; ++up)
            for (int down = 0; down <= n; ++down) sectors.push_back(sector_basis(cluster, SectorConstraint::per_spin(up, down)));

        std::vector<IdentityResult> results;
        for (const auto& i : identities()) results.push_back({i.name, i.statement, shape, 0, true, ""});
        auto result = [&](const std::string& name) -> IdentityResult& {
            for (auto& r : results)
                if (r.name == name) return r;
            throw std::logic_error("unknown identity " + name);
        };

        std::vector<std::vector<int>> site_sets;
        for (int x = 0; x < n; ++x) site_sets.push_back({x});
        for (const auto& bond : m.quantum.bonds) site_sets.push_back(site_union({bond.a}, {bond.b}));

        for (const auto& b : sectors) {
            const Operator one = identity<ScalarValue>(b);
            auto p0 = [&](const std::vector<int>& s) { return ground_projector(m, b, s); };
            auto p1 = [&](const std::vector<int>& s) { return one - p0(s); };
            auto nf = [&](int x, Spin s) { return number(b, x, s); };

            Checker products(result("projector-products"));
            Checker nesting(result("projector-nesting"));
            Checker excited(result("excited-projector-product"));
            for (const auto& s : site_sets) {
                ProjectorTriple t = projector_for(m, b, s);
                const Operator* ps[2] = {&t.p0, &t.p1};
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        products((*ps[i]) * (*ps[j]) == (i == j ? *ps[i] : Operator(b)), where(b, "set of " + std::to_string(s.size())));
                Operator prod = one;
                for (int x : s) prod = prod * p0({x});
                excited(t.p1 == one - prod, where(b, "set of " + std::to_string(s.size())));
                for (const auto& big : site_sets) {
                    if (big.size() <= s.size() || !std::includes(big.begin(), big.end(), s.begin(), s.end())) continue;
                    nesting(p0(s) * p0(big) == p0(big) && p1(s) * p1(big) == p1(s), where(b, "nested sets"));
                }
            }

            Checker exchange(result("bond-number-exchange"));
            Checker antiparallel(result("antiparallel-pair"));
            for (const auto& bond : m.quantum.bonds) {
                const std::vector<int> xs = site_union({bond.a}, {bond.b});
                const Operator P = p0(xs);
                for (auto [x, y] : {std::pair{bond.a, bond.b}, {bond.b, bond.a}})
                    for (Spin s : {Spin::up, Spin::down}) {
                        Operator lhs = P * nf(y, s) * (one - nf(x, s)) * P;
                        Operator rhs = P * (one - nf(y, flip(s))) * nf(x, flip(s)) * P;
                        exchange(lhs == rhs, where(b, "spin " + std::string(spin_name(s))));
                    }
                const int x = bond.a, y = bond.b;
                Operator lhs = P * (nf(x, Spin::up) * nf(y, Spin::down) + nf(x, Spin::down) * nf(y, Spin::up)) * P;
                Operator rhs = ScalarValue(-2) * (sz(b, x) * sz(b, y)) + ScalarValue(Rational(1, 2)) * P;
                antiparallel(lhs == rhs, where(b, "bond"));
            }

            Checker complement(result("site-number-complement"));
            Checker single(result("site-single-occupancy"));
            Checker on_ground(result("number-on-ground"));
            Checker on_excited(result("number-on-excited"));
            Checker intertwining(result("intertwining"));
            Checker double_creation(result("double-creation-on-ground"));
            Checker spin_flip(result("spin-flip-on-excited"));
            for (int x = 0; x < n; ++x) {
                const Operator P0 = p0({x}), P1 = p1({x});
                const Operator nx = nf(x, Spin::up) + nf(x, Spin::down);
                single(P0 * nx * P0 == P0, where(b, "site " + std::to_string(x)));
                for (Spin s : {Spin::up, Spin::down}) {
                    const std::string w = where(b, "site " + std::to_string(x) + " spin " + spin_name(s));
                    complement(P0 * nf(x, s) * P0 == P0 * (one - nf(x, flip(s))) * P0, w);
                    on_ground(nf(x, s) * P0 == (one - nf(x, flip(s))) * P0, w);
                    on_excited(nf(x, s) * P1 == ScalarValue(Rational(1, 2)) * (nx * P1), w);
                    for (bool create : {false, true}) {
                        Operator c;
                        try {
                            c = ladder_matrix(b, x, s, create);
                        } catch (const std::invalid_argument&) {
                            continue;  // target sector infeasible
                        }
                        const BasisPtr& to = c.codomain();
                        Operator Q0 = ground_projector(m, to, {x});
                        Operator Q1 = identity<ScalarValue>(to) - Q0;
                        intertwining(c * P0 == Q1 * c && c * P1 == Q0 * c, w + (create ? " create" : " annihilate"));
                    }
                    for (Spin s2 : {Spin::up, Spin::down}) {
                        try {
                            Operator cc = fermion_string(b, {{x, s2, true}, {x, s, true}});
                            double_creation((cc * P0).is_zero(), w);
                        } catch (const std::invalid_argument&) {
                        }
                    }
                    try {
                        Operator f = fermion_string(b, {{x, s, true}, {x, flip(s), false}});
                        spin_flip((f * P1).is_zero(), w);
                    } catch (const std::invalid_argument&) {
                    }
                }
            }

            // Per-spin first-order generators on pairs of bonds sharing one site.
            Checker vanishing(result("adjacent-bond-vanishing"));
            const Operator h0 = classical_hamiltonian(m, b);
            auto spin_bond = [&](int bond, Spin s) {
                const auto& q = m.quantum.bonds[static_cast<std::size_t>(bond)];
                const ScalarValue& t = s == Spin::up ? q.t_up : q.t_down;
                return t * (hop(b, q.a, q.b, s) + hop(b, q.b, q.a, s));
            };
            const int nb = static_cast<int>(m.quantum.bonds.size());
            for (int xb = 0; xb < nb; ++xb)
                for (int xpb = 0; xpb < nb; ++xpb) {
                    if (xb == xpb) continue;
                    const auto sx = bond_sites(m, xb), sxp = bond_sites(m, xpb);
                    std::vector<int> shared;
                    std::set_intersection(sx.begin(), sx.end(), sxp.begin(), sxp.end(), std::back_inserter(shared));
                    if (shared.size() != 1) continue;
                    const Operator P = p0(site_union(sx, sxp));
                    for (Spin s : {Spin::up, Spin::down})
                        for (Spin s2 : {Spin::up, Spin::down}) {
                            Operator s1 = ad_inverse(h0, block_split(spin_bond(xb, s), projector_for(m, b, sx)).q01, m.gap_unit);
                            Operator q01 = block_split(spin_bond(xpb, s2), projector_for(m, b, sxp)).q01;
                            vanishing((P * commutator(s1, q01) * P).is_zero(),
                                      where(b, "bonds " + std::to_string(xb) + "," + std::to_string(xpb)));
                        }
                }
        }
        for (auto& r : results)
            if (r.instances > 0) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace sc
