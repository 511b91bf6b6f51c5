#include "sc/models.hpp"
#include "sc/fermion_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace sc {

OneBandParameters one_band_symbolic(bool symmetric)
{
    OneBandParameters p;
    p.U = ScalarValue::of(symbol("U", SymbolKind::classical));
    p.h = ScalarValue::of(symbol("h", SymbolKind::classical));
    p.k = ScalarValue::of(symbol("k", SymbolKind::classical));
    if (symmetric) {
        p.t_up = p.t_down = ScalarValue::of(symbol("t", SymbolKind::hopping));
    } else {
        p.t_up = ScalarValue::of(symbol("tp", SymbolKind::hopping));
        p.t_down = ScalarValue::of(symbol("tm", SymbolKind::hopping));
    }
    return p;
}

OneBandParameters falicov_kimball_symbolic()
{
    OneBandParameters p = one_band_symbolic(true);
    p.t_up = ScalarValue(0);
    return p;
}

ThreeBandParameters three_band_symbolic()
{
    ThreeBandParameters p;
    p.U_d = ScalarValue::of(symbol("Ud", SymbolKind::classical));
    p.U_p = ScalarValue::of(symbol("Up", SymbolKind::classical));
    p.U_pd = ScalarValue::of(symbol("Upd", SymbolKind::classical));
    p.delta = ScalarValue::of(symbol("Delta", SymbolKind::classical));
    p.t_pd = ScalarValue::of(symbol("tpd", SymbolKind::hopping));
    return p;
}

ScalarValue ClassicalInteraction::energy(const SectorBasis& b, Occupation w) const
{
    ScalarValue e;
    for (const auto& t : terms) e += t.energy(b, w);
    return e;
}

std::vector<SectorConstraint> Model::band_sectors() const
{
    std::vector<SectorConstraint> out;
    const int n = static_cast<int>(band_sites.size());
    for (int up = 0; up <= n; ++up) out.push_back(SectorConstraint::per_spin(up, particles - up));
    return out;
}

std::vector<int> site_union(std::vector<int> a, const std::vector<int>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

Model one_band_model(std::shared_ptr<const Cluster> cluster, const OneBandParameters& p, std::string name)
{
    for (const auto& s : cluster->sites())
        if (s.sublattice != Sublattice::uniform) throw std::invalid_argument("one-band model needs a uniform cluster");
    Model m;
    m.kind = ModelKind::one_band;
    m.name = std::move(name);
    m.cluster = cluster;
    const ScalarValue half(Rational(1, 2));
    const ScalarValue mu_up = half * (p.k + p.h), mu_down = half * (p.k - p.h);
    for (int x = 0; x < cluster->size(); ++x) {
        m.classical.terms.push_back({"on-site", {x}, [=](const SectorBasis& b, Occupation w) {
                                         bool u = b.occupied(w, x, Spin::up), d = b.occupied(w, x, Spin::down);
                                         ScalarValue e;
                                         if (u && d) e += p.U;
                                         if (u) e -= mu_up;
                                         if (d) e -= mu_down;
                                         return e;
                                     }});
        m.band_sites.push_back(x);
    }
    for (const auto& a : cluster->adjacency()) m.quantum.bonds.push_back({a.a, a.b, p.t_up, p.t_down});
    m.projectors.ground = [](const SectorBasis& b, Occupation w, int x) { return b.occupancy(w, x) == 1; };
    m.projectors.zone = [](const std::vector<int>& y) { return site_union(y, {}); };
    m.particles = cluster->size();
    m.gap_unit = p.U;
    for (const auto& t : {p.t_up, p.t_down})
        for (const auto& [mono, c] : t.numerator().terms())
            for (int v = 0; v < max_symbols; ++v)
                if (exponent(mono, v) > 0 && std::find(m.hopping_symbols.begin(), m.hopping_symbols.end(), Symbol{v}) ==
                                                 m.hopping_symbols.end())
                    m.hopping_symbols.push_back(Symbol{v});
    return m;
}

Model three_band_model(std::shared_ptr<const Cluster> cluster, const ThreeBandParameters& p)
{
    Model m;
    m.kind = ModelKind::three_band;
    m.name = "three-band";
    m.cluster = cluster;
    for (int x = 0; x < cluster->size(); ++x) {
        Sublattice s = cluster->site(x).sublattice;
        if (s == Sublattice::uniform) throw std::invalid_argument("three-band model needs a CuO2 cluster");
        if (s == Sublattice::copper) {
            m.classical.terms.push_back({"copper", {x}, [=](const SectorBasis& b, Occupation w) {
                                             return b.occupancy(w, x) == 2 ? p.U_d : ScalarValue();
                                         }});
            m.band_sites.push_back(x);
        } else {
            m.classical.terms.push_back({"oxygen", {x}, [=](const SectorBasis& b, Occupation w) {
                                             int n = b.occupancy(w, x);
                                             ScalarValue e = ScalarValue(n) * p.delta;
                                             if (n == 2) e += p.U_p;
                                             return e;
                                         }});
        }
    }
    for (const auto& a : cluster->adjacency()) {
        m.classical.terms.push_back({"copper-oxygen", {a.a, a.b}, [=](const SectorBasis& b, Occupation w) {
                                         return ScalarValue(b.occupancy(w, a.a) * b.occupancy(w, a.b)) * p.U_pd;
                                     }});
        int cu = cluster->site(a.a).sublattice == Sublattice::copper ? a.a : a.b;
        int o = cu == a.a ? a.b : a.a;
        m.quantum.bonds.push_back({cu, o, p.t_pd, p.t_pd});
    }
    m.projectors.ground = [](const SectorBasis& b, Occupation w, int x) {
        int n = b.occupancy(w, x);
        return b.cluster()->site(x).sublattice == Sublattice::copper ? n == 1 : n == 0;
    };
    // B_Y = Y together with all its lattice neighbours (copper-oxygen pairs).
    m.projectors.zone = [cluster](const std::vector<int>& y) {
        std::vector<int> zone = y;
        for (int s : y) {
            const Site& site = cluster->site(s);
            for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                int nx = site.x + dx, ny = site.y + dy;
                bool copper_point = nx % 2 == 0 && ny % 2 == 0;
                bool oxygen_point = (nx % 2 == 0) != (ny % 2 == 0);
                if (!copper_point && !oxygen_point) continue;
                int n = cluster->site_at(nx, ny);
                if (n < 0)
                    throw std::out_of_range("protection zone leaves the cluster at (" + std::to_string(nx) + "," +
                                            std::to_string(ny) + ")");
                zone.push_back(n);
            }
        }
        return site_union(zone, {});
    };
    m.particles = static_cast<int>(m.band_sites.size());
    for (const auto& [mono, c] : p.t_pd.numerator().terms())
        for (int v = 0; v < max_symbols; ++v)
            if (exponent(mono, v) > 0) m.hopping_symbols.push_back(Symbol{v});
    return m;
}

Operator classical_hamiltonian(const Model& m, const BasisPtr& b)
{
    Operator h(b);
    for (int i = 0; i < b->size(); ++i) h.add(i, i, m.classical.energy(*b, b->state(i)));
    return h;
}

Operator bond_operator(const Model& m, const BasisPtr& b, int bond)
{
    const auto& q = m.quantum.bonds.at(static_cast<std::size_t>(bond));
    Operator r(b);
    for (auto [s, t] : {std::pair{Spin::up, q.t_up}, {Spin::down, q.t_down}}) {
        if (t.is_zero()) continue;
        r += t * (hop(b, q.a, q.b, s) + hop(b, q.b, q.a, s));
    }
    return r;
}

Operator quantum_hamiltonian(const Model& m, const BasisPtr& b)
{
    Operator r(b);
    for (std::size_t i = 0; i < m.quantum.bonds.size(); ++i) r += bond_operator(m, b, static_cast<int>(i));
    return r;
}

Operator ground_projector(const Model& m, const BasisPtr& b, const std::vector<int>& sites)
{
    Operator p(b);
    for (int i = 0; i < b->size(); ++i) {
        bool all = std::all_of(sites.begin(), sites.end(), [&](int x) { return m.projectors.ground(*b, b->state(i), x); });
        if (all) p.add(i, i, ScalarValue(1));
    }
    return p;
}

ProjectorTriple projector_for(const Model& m, const BasisPtr& b, const std::vector<int>& y_in)
{
    const std::vector<int> y = site_union(y_in, {});
    for (int s : y)
        if (s < 0 || s >= m.cluster->size()) throw std::out_of_range("set not covered by the cluster");
    std::vector<int> zone = m.projectors.zone(y);
    std::vector<int> rim;
    std::set_difference(zone.begin(), zone.end(), y.begin(), y.end(), std::back_inserter(rim));
    Operator p0 = ground_projector(m, b, zone);
    Operator rim0 = ground_projector(m, b, rim);
    return {p0, rim0 - p0, identity<ScalarValue>(b) - rim0};
}

std::vector<int> bond_sites(const Model& m, int bond)
{
    const auto& q = m.quantum.bonds.at(static_cast<std::size_t>(bond));
    return site_union({q.a, q.b}, {});
}

}  // namespace sc
