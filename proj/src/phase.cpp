#include "sc/phase.hpp"

#include "sc/effective.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

namespace sc {

namespace {

constexpr long long kScale = 720720;  // lcm(1..16): per-site features stay integral
constexpr int kMaxSites = 16;

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int mod(int a, int b) { return ((a % b) + b) % b; }

Rational evaluate_at(const ScalarValue& v, const Rational& t, const Rational& U)
{
    std::map<int, Rational> values{{find_symbol("t")->index, t}, {find_symbol("U")->index, U}};
    return v.evaluate(values);
}

// Site index of (x, y) inside the cell of a period lattice.
int cell_index(int width, int height, int shift, int x, int y)
{
    const int q = floor_div(y, height);
    return mod(y - q * height, height) * width + mod(x - q * shift, width);
}

using Key = std::array<long long, 5>;

struct Couplings {
    Rational j1, j2, j3, k;
};

std::string spin_label(const Rational& m, bool neel)
{
    if (m == Rational(1, 2)) return "all-plus";
    if (m == Rational(-1, 2)) return "all-minus";
    if (neel) return "checkerboard";
    return "mixed(m=" + to_string(m) + ")";
}

std::string occupation_label(const Key& k)
{
    // k holds the normalized counts of empty, up, down and double sites.
    static const char* names[] = {"empty", "up", "down", "double"};
    for (int i = 0; i < 4; ++i)
        if (k[i] == kScale) return names[i];
    return "mixed";
}

struct Enumerated {
    std::vector<Key> keys;
    std::vector<PeriodicConfig> representatives;
    long long configurations = 0;
};

std::vector<std::array<int, 3>> period_lattices(const CellBound& b, int site_cap)
{
    std::vector<std::array<int, 3>> out;
    const int cap = std::min(b.max_sites(), site_cap);
    for (int n = 1; n <= cap; ++n)
        for (int w = 1; w <= n; ++w) {
            if (n % w) continue;
            const int h = n / w;
            if (b.rectangular_only) {
                if (w <= b.max_width && h <= b.max_height) out.push_back({w, h, 0});
            } else {
                for (int s = 0; s < w; ++s) out.push_back({w, h, s});
            }
        }
    return out;
}

Enumerated enumerate_spins(const CellBound& bound)
{
    Enumerated e;
    std::map<Key, std::size_t> seen;
    for (const auto& [w, h, s] : period_lattices(bound, kMaxSites)) {
        const int n = w * h;
        // Neighbour tables: +x, +y, +2x, +2y, +x+y, +x−y.
        std::array<std::vector<int>, 6> nb;
        const int d[6][2] = {{1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}, {1, -1}};
        for (int k = 0; k < 6; ++k)
            for (int i = 0; i < n; ++i) nb[k].push_back(cell_index(w, h, s, i % w + d[k][0], i / w + d[k][1]));
        const long long norm = kScale / n;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            ++e.configurations;
            long long nn = 0, st = 0, dg = 0, pq = 0;
            for (int i = 0; i < n; ++i) {
                const std::uint32_t b = (mask >> i) & 1u;
                auto prod = [&](int j) { return 1 - 2 * static_cast<long long>(b ^ ((mask >> j) & 1u)); };
                nn += prod(nb[0][i]) + prod(nb[1][i]);
                st += prod(nb[2][i]) + prod(nb[3][i]);
                dg += prod(nb[4][i]) + prod(nb[5][i]);
                const int c = nb[4][i];
                const std::uint32_t parity = b ^ ((mask >> nb[0][i]) & 1u) ^ ((mask >> c) & 1u) ^ ((mask >> nb[1][i]) & 1u);
                pq += 1 - 2 * static_cast<long long>(parity);
            }
            const long long m = 2 * std::popcount(mask) - n;
            Key key{m * norm, nn * norm, st * norm, dg * norm, pq * norm};
            if (seen.emplace(key, e.keys.size()).second) {
                PeriodicConfig c{w, h, s, {}};
                for (int i = 0; i < n; ++i) c.values.push_back(((mask >> i) & 1u) ? 1 : -1);
                e.keys.push_back(key);
                e.representatives.push_back(std::move(c));
            }
        }
    }
    return e;
}

Enumerated enumerate_occupations(const CellBound& bound)
{
    Enumerated e;
    std::map<Key, std::size_t> seen;
    // Sites do not interact at this order; cells of up to four sites suffice.
    for (const auto& [w, h, s] : period_lattices(bound, 4)) {
        const int n = w * h;
        const long long norm = kScale / n;
        const int total = 1 << (2 * n);
        for (int code = 0; code < total; ++code) {
            ++e.configurations;
            PeriodicConfig c{w, h, s, {}};
            Key key{0, 0, 0, 0, 0};
            for (int i = 0; i < n; ++i) {
                const int v = (code >> (2 * i)) & 3;
                c.values.push_back(static_cast<std::int8_t>(v));
                key[v] += norm;
            }
            if (seen.emplace(key, e.keys.size()).second) {
                e.keys.push_back(key);
                e.representatives.push_back(std::move(c));
            }
        }
    }
    return e;
}

Key spin_key(const PeriodicConfig& c)
{
    const int n = c.sites();
    long long m = 0, nn = 0, st = 0, dg = 0, pq = 0;
    for (int y = 0; y < c.height; ++y)
        for (int x = 0; x < c.width; ++x) {
            const int s = c.at(x, y);
            if (s != 1 && s != -1) throw std::invalid_argument("spin configuration values must be +1 or -1");
            m += s;
            nn += s * (c.at(x + 1, y) + c.at(x, y + 1));
            st += s * (c.at(x + 2, y) + c.at(x, y + 2));
            dg += s * (c.at(x + 1, y + 1) + c.at(x + 1, y - 1));
            pq += s * c.at(x + 1, y) * c.at(x + 1, y + 1) * c.at(x, y + 1);
        }
    const long long norm = kScale / n;
    return {m * norm, nn * norm, st * norm, dg * norm, pq * norm};
}

Key occupation_key(const PeriodicConfig& c)
{
    const long long norm = kScale / c.sites();
    Key key{0, 0, 0, 0, 0};
    for (auto v : c.values) {
        if (v < 0 || v > 3) throw std::invalid_argument("occupation codes must be 0..3");
        key[v] += norm;
    }
    return key;
}

EnergyLine line_from_key(const Key& k, const PeriodicConfig& c, int order, const Couplings& j, const PhaseParameters& p)
{
    EnergyLine l;
    l.config = c;
    const Rational scale(kScale);
    if (order == 0) {
        const Rational n1 = Rational(k[1]) / scale, n2 = Rational(k[2]) / scale, n3 = Rational(k[3]) / scale;
        l.intercept = -p.k / 2 * (n1 + n2) + (p.U - p.k) * n3;
        l.magnetization = (n1 - n2) / 2;
        l.label = occupation_label(k);
        return l;
    }
    const Rational m(k[0]), nn(k[1]), st(k[2]), dg(k[3]), pq(k[4]);
    l.intercept = (j.j1 * (nn - 2 * scale) / 4 + j.j2 * st / 4 + j.j3 * dg / 4 + j.k * pq / 16) / scale;
    l.magnetization = m / (2 * scale);
    l.label = spin_label(l.magnetization, k[0] == 0 && k[1] == -2 * kScale);
    return l;
}

Couplings couplings_for(int order, const PhaseParameters& p)
{
    if (order == 0) return {};
    if (order != 2 && order != 4) throw std::invalid_argument("order must be 0, 2 or 4");
    IsingCouplings c = falicov_kimball_couplings(order, p.t, p.U);
    return {c.nearest, c.straight2, c.diagonal, c.plaquette};
}

}  // namespace

IsingCouplings falicov_kimball_couplings(int order, const Rational& t, const Rational& U)
{
    if (order != 2 && order != 4) throw std::invalid_argument("coupling order must be 2 or 4");
    if (U <= 0) throw std::invalid_argument("U must be positive");
    LatticeCouplings c = falicov_kimball_lattice_couplings(order / 2);
    return {evaluate_at(c.nearest, t, U), evaluate_at(c.straight2, t, U), evaluate_at(c.diagonal, t, U),
            evaluate_at(c.plaquette, t, U)};
}

int PeriodicConfig::at(int x, int y) const { return values.at(static_cast<std::size_t>(cell_index(width, height, shift, x, y))); }

std::string PeriodicConfig::pattern() const
{
    static const char spin[] = {'-', '?', '+'};
    static const char occ[] = {'0', 'u', 'd', '2'};
    bool spins = std::all_of(values.begin(), values.end(), [](int v) { return v == 1 || v == -1; });
    std::string out;
    for (int y = height - 1; y >= 0; --y) {
        if (!out.empty()) out += '/';
        for (int x = 0; x < width; ++x) {
            const int v = values[static_cast<std::size_t>(y * width + x)];
            out += spins ? spin[v + 1] : occ[v];
        }
    }
    return out;
}

std::string PeriodicConfig::cell() const
{
    return std::to_string(width) + "x" + std::to_string(height) + "/" + std::to_string(shift);
}

EnergyLine classical_energy_density(const PeriodicConfig& c, int order, const PhaseParameters& p)
{
    if (c.width < 1 || c.height < 1 || c.shift < 0 || c.shift >= std::max(1, c.width) ||
        static_cast<int>(c.values.size()) != c.sites())
        throw std::invalid_argument("configuration does not tile the plane");
    if (c.sites() > kMaxSites) throw std::out_of_range("cell larger than 16 sites");
    Couplings j = couplings_for(order, p);
    return line_from_key(order == 0 ? occupation_key(c) : spin_key(c), c, order, j, p);
}

CellBound parse_cell_bound(const std::string& text)
{
    auto x = text.find('x');
    CellBound b;
    try {
        if (x == std::string::npos) throw std::invalid_argument("");
        std::size_t used = 0;
        b.max_width = std::stoi(text.substr(0, x), &used);
        if (used != x) throw std::invalid_argument("");
        const std::string rest = text.substr(x + 1);
        b.max_height = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("cell bound must look like WxH, got '" + text + "'");
    }
    if (b.max_width < 1 || b.max_height < 1) throw std::invalid_argument("cell bound must be positive");
    return b;
}

const EnergyLine& PhaseDiagram::winner_at(const Rational& h) const
{
    for (const auto& iv : intervals)
        if ((!iv.lo || *iv.lo <= h) && (!iv.hi || h <= *iv.hi)) return iv.winner;
    throw std::out_of_range("field outside the diagram window");
}

PhaseDiagram ground_state_envelope(int order, const PhaseParameters& p, const CellBound& cells, const Rational& h_lo,
                                   const Rational& h_hi)
{
    if (order != 0 && order != 2 && order != 4) throw std::invalid_argument("order must be 0, 2 or 4");
    if (!(h_lo < h_hi)) throw std::invalid_argument("empty field window");
    if (cells.max_sites() > kMaxSites) throw std::out_of_range("cell bound exceeds 16 sites per cell");
    if (p.U <= 0) throw std::invalid_argument("U must be positive");
    Couplings j = couplings_for(order, p);
    Enumerated e = order == 0 ? enumerate_occupations(cells) : enumerate_spins(cells);

    PhaseDiagram d;
    d.order = order;
    d.params = p;
    d.h_lo = h_lo;
    d.h_hi = h_hi;
    d.cells = cells;
    d.configurations = e.configurations;
    for (std::size_t i = 0; i < e.keys.size(); ++i) d.lines.push_back(line_from_key(e.keys[i], e.representatives[i], order, j, p));

    // Lower envelope of a − h·m: sort by m ascending (steepest descent last),
    // keep the lowest intercept per slope, then the usual convex-hull sweep.
    std::vector<std::size_t> idx(d.lines.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const auto& la = d.lines[a];
        const auto& lb = d.lines[b];
        if (la.magnetization != lb.magnetization) return la.magnetization < lb.magnetization;
        return la.intercept < lb.intercept;
    });
    auto cross = [&](std::size_t a, std::size_t b) -> Rational {
        return (d.lines[a].intercept - d.lines[b].intercept) / (d.lines[a].magnetization - d.lines[b].magnetization);
    };
    std::vector<std::size_t> hull;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k > 0 && d.lines[idx[k]].magnetization == d.lines[idx[k - 1]].magnetization) continue;
        const std::size_t l = idx[k];
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], l) <= cross(hull[hull.size() - 2], hull.back())) hull.pop_back();
        hull.push_back(l);
    }
    for (std::size_t k = 0; k < hull.size(); ++k) {
        Rational lo = k == 0 ? h_lo : std::max(h_lo, cross(hull[k - 1], hull[k]));
        Rational hi = k + 1 == hull.size() ? h_hi : std::min(h_hi, cross(hull[k], hull[k + 1]));
        if (!(lo < hi)) continue;
        EnvelopeInterval iv;
        iv.lo = lo;
        iv.hi = hi;
        iv.winner = d.lines[hull[k]];
        iv.degenerate = static_cast<int>(std::count_if(d.lines.begin(), d.lines.end(), [&](const EnergyLine& l) {
            return l.magnetization == iv.winner.magnetization && l.intercept == iv.winner.intercept;
        }));
        if (!d.intervals.empty()) d.crossings.push_back(lo);
        d.intervals.push_back(std::move(iv));
    }
    return d;
}

Rational minimum_energy(const PhaseDiagram& d, const Rational& h)
{
    if (d.lines.empty()) throw std::logic_error("diagram has no lines");
    Rational best = d.lines.front().at(h);
    for (const auto& l : d.lines) best = std::min(best, l.at(h));
    return best;
}

std::vector<Rational> reference_crossings(int order, const Rational& t, const Rational& U)
{
    const Rational second = 4 * t * t / U;
    const Rational fourth = t * t * t * t / (U * U * U);
    std::vector<Rational> out;
    if (order == 2) {
        out = {-second, second};
    } else if (order == 4) {
        for (int c : {-4, 16, 48, 84}) {
            out.push_back(-second + c * fourth);
            out.push_back(second - c * fourth);
        }
    } else {
        throw std::invalid_argument("reference crossings exist for orders 2 and 4");
    }
    std::sort(out.begin(), out.end());
    return out;
}

CrossingComparison compare_crossings(const PhaseDiagram& d, const std::vector<Rational>& reference)
{
    CrossingComparison c;
    for (const auto& r : reference)
        if (r > d.h_lo && r < d.h_hi && std::find(d.crossings.begin(), d.crossings.end(), r) == d.crossings.end())
            c.missing.push_back(r);
    for (const auto& x : d.crossings)
        if (std::find(reference.begin(), reference.end(), x) == reference.end()) c.extra.push_back(x);
    return c;
}

void write_envelope_csv(std::ostream& os, const PhaseDiagram& d)
{
    os << "h_lo,h_hi,h_lo_float,h_hi_float,winner,cell,magnetization,intercept,degenerate,pattern\n";
    for (const auto& iv : d.intervals) {
        os << to_string(*iv.lo) << ',' << to_string(*iv.hi) << ',' << to_double(*iv.lo) << ',' << to_double(*iv.hi) << ','
           << iv.winner.label << ',' << iv.winner.config.cell() << ',' << to_string(iv.winner.magnetization) << ','
           << to_string(iv.winner.intercept) << ',' << iv.degenerate << ',' << iv.winner.config.pattern() << '\n';
    }
}

void write_plot_data(std::ostream& os, const PhaseDiagram& d, int samples)
{
    if (samples < 2) throw std::invalid_argument("plot data needs at least two samples");
    // Lines that win somewhere, followed by the envelope itself.
    std::vector<const EnergyLine*> shown;
    for (const auto& iv : d.intervals) shown.push_back(&iv.winner);
    os << "# lines:";
    for (std::size_t i = 0; i < shown.size(); ++i) os << ' ' << i << '=' << shown[i]->label << '[' << shown[i]->config.pattern() << ']';
    os << " envelope=" << shown.size() << "\n# h line energy\n";
    const double lo = to_double(d.h_lo), hi = to_double(d.h_hi);
    for (int s = 0; s < samples; ++s) {
        const double h = lo + (hi - lo) * s / (samples - 1);
        double env = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < shown.size(); ++i) {
            const double e = to_double(shown[i]->intercept) - h * to_double(shown[i]->magnetization);
            env = std::min(env, e);
            os << h << ' ' << i << ' ' << e << '\n';
        }
        os << h << ' ' << shown.size() << ' ' << env << '\n';
    }
}

StabilityDiagnostics stability_diagnostics(const StabilityInput& in)
{
    if (in.order != 1 && in.order != 2) throw std::invalid_argument("diagnostics order must be 1 or 2");
    if (in.delta <= 0) throw std::invalid_argument("delta must be positive");
    if (in.beta <= 0) throw std::invalid_argument("beta must be positive");
    if (!(in.mu0 > 0 && in.mu0 < in.U)) throw std::invalid_argument("mu0 must lie in (0, U)");
    if (in.t < 0 || in.t_plus < 0) throw std::invalid_argument("hopping amplitudes must be nonnegative");

    StabilityDiagnostics r;
    r.input = in;
    PhaseParameters p{in.t, in.U, 0};
    const int order = 2 * in.order;
    PhaseDiagram d = ground_state_envelope(order, p, in.cells, in.h - 1, in.h + 1);
    const Rational emin = minimum_energy(d, in.h);
    Couplings j = couplings_for(order, p);
    std::optional<Rational> kappa;
    int ground_classes = 0;
    for (const auto& l : d.lines) {
        if (l.at(in.h) != emin) continue;
        ++ground_classes;
        r.ground_states.push_back(l.label + "[" + l.config.pattern() + "]");
        const auto& c = l.config;
        for (int y = 0; y < c.height; ++y)
            for (int x = 0; x < c.width; ++x) {
                // Energy change of flipping the spin at (x, y) in the infinite periodic configuration.
                auto s = [&](int dx, int dy) { return Rational(c.at(x + dx, y + dy), 2); };
                Rational field = j.j1 * (s(1, 0) + s(-1, 0) + s(0, 1) + s(0, -1)) +
                                 j.j2 * (s(2, 0) + s(-2, 0) + s(0, 2) + s(0, -2)) +
                                 j.j3 * (s(1, 1) + s(1, -1) + s(-1, 1) + s(-1, -1)) +
                                 j.k * (s(1, 0) * s(1, 1) * s(0, 1) + s(-1, 0) * s(-1, 1) * s(0, 1) +
                                        s(-1, 0) * s(-1, -1) * s(0, -1) + s(1, 0) * s(1, -1) * s(0, -1)) -
                                 in.h;
                Rational delta = -2 * s(0, 0) * field;
                if (!kappa || delta < *kappa) kappa = delta;
            }
    }
    r.kappa = *kappa;
    const double t = to_double(in.t), tp = to_double(in.t_plus), U = to_double(in.U), h = to_double(in.h);
    const double mu0 = to_double(in.mu0), delta = to_double(in.delta), beta = to_double(in.beta);
    const int n = in.order;
    r.kappa_estimate_plus = 4 * t * t / U + h;
    r.kappa_estimate_minus = 4 * t * t / U - h;
    r.D = std::max(U - mu0, mu0);
    const double ratio = t > 0 ? tp / t : 0.0;
    r.eps_ll = n == 1 ? ratio * t * t / (U * delta) : ratio * std::pow(t, 4) / (std::pow(U, 3) * std::pow(delta, 4));
    r.eps_hl = r.eps_lh = std::pow(t, n + 1) / (std::pow(r.D, n) * std::pow(delta, n + 1));
    r.eps_hh = t / delta;
    const double kappa_d = to_double(r.kappa);
    if (kappa_d <= 0 || ground_classes > 1) {
        r.status = kappa_d <= 0 ? "inside excluded band" : "coexistence";
        r.eta = r.epsilon = std::numeric_limits<double>::infinity();
        return r;
    }
    const double kd = kappa_d + r.D;
    r.eta = std::max({r.eps_ll * delta / kappa_d, delta * std::sqrt(r.eps_hl * r.eps_lh / (kappa_d * kd)),
                      r.eps_hh * delta / kd, r.eps_lh * delta / kd, r.eps_hl * delta / kd});
    r.epsilon = std::max(std::exp(-beta * kappa_d), r.eta);
    r.status = "ok";
    return r;
}

}  // namespace sc
