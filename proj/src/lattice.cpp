#include "sc/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace sc {

int spiral_rank(int x, int y)
{
    int r = std::max(std::abs(x), std::abs(y));
    if (r == 0) return 0;
    int base = (2 * r - 1) * (2 * r - 1);  // points strictly inside ring r
    // Ring r starts at (r, -r+1), climbs to (r, r), runs left to (-r, r),
    // down to (-r, -r) and right to (r, -r).
    if (x == r && y > -r) return base + (y + r - 1);
    if (y == r) return base + 2 * r - 1 + (r - x);
    if (x == -r) return base + 4 * r - 1 + (r - y);
    return base + 6 * r - 1 + (x + r);
}

Cluster::Cluster(std::string shape, std::vector<Site> sites) : shape_(std::move(shape)), sites_(std::move(sites))
{
    for (std::size_t i = 0; i < sites_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (sites_[i].x == sites_[j].x && sites_[i].y == sites_[j].y)
                throw std::invalid_argument("duplicate site in cluster");
    std::vector<int> by_rank(sites_.size());
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::sort(by_rank.begin(), by_rank.end(), [this](int a, int b) {
        return spiral_rank(sites_[a].x, sites_[a].y) < spiral_rank(sites_[b].x, sites_[b].y);
    });
    order_.assign(sites_.size(), 0);
    for (std::size_t r = 0; r < by_rank.size(); ++r) order_[by_rank[r]] = static_cast<int>(r);

    for (int a = 0; a < size(); ++a) {
        for (int b = a + 1; b < size(); ++b) {
            int dx = std::abs(sites_[a].x - sites_[b].x), dy = std::abs(sites_[a].y - sites_[b].y);
            if (dx + dy != 1) continue;
            // On the CuO2 lattice only copper-oxygen pairs are bonds.
            if (sites_[a].sublattice != Sublattice::uniform && sites_[a].sublattice == sites_[b].sublattice) continue;
            adjacency_.push_back({a, b, dx == 1 ? Direction::horizontal : Direction::vertical});
        }
    }
}

int Cluster::site_at(int x, int y) const
{
    for (int i = 0; i < size(); ++i)
        if (sites_[i].x == x && sites_[i].y == y) return i;
    return -1;
}

std::vector<int> Cluster::sites_of(Sublattice s) const
{
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (sites_[i].sublattice == s) out.push_back(i);
    return out;
}

Cluster Cluster::with_order(std::vector<int> order) const
{
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < size(); ++i)
        if (check.size() != sites_.size() || check[i] != i) throw std::invalid_argument("order is not a permutation");
    Cluster c = *this;
    c.order_ = std::move(order);
    return c;
}

namespace {

std::vector<Site> chain(int n)
{
    std::vector<Site> s;
    for (int i = 0; i < n; ++i) s.push_back({i, 0, Sublattice::uniform});
    return s;
}

// Copper sites sit on even coordinates of the CuO2 plane, oxygen sites midway.
void add_copper_with_oxygens(std::vector<Site>& s, int x, int y)
{
    auto add = [&s](int a, int b, Sublattice l) {
        for (const auto& e : s)
            if (e.x == a && e.y == b) return;
        s.push_back({a, b, l});
    };
    add(x, y, Sublattice::copper);
    add(x + 1, y, Sublattice::oxygen);
    add(x - 1, y, Sublattice::oxygen);
    add(x, y + 1, Sublattice::oxygen);
    add(x, y - 1, Sublattice::oxygen);
}

}  // namespace

std::shared_ptr<const Cluster> build_cluster(std::string_view shape)
{
    std::string name(shape);
    if (name == "bond") return std::make_shared<Cluster>(name, chain(2));
    if (name == "chain3") return std::make_shared<Cluster>(name, chain(3));
    if (name == "plaquette")
        return std::make_shared<Cluster>(name, std::vector<Site>{{0, 0, Sublattice::uniform},
                                                                 {1, 0, Sublattice::uniform},
                                                                 {1, 1, Sublattice::uniform},
                                                                 {0, 1, Sublattice::uniform}});
    if (name.rfind("chain", 0) == 0 && name.size() > 5) {
        std::string digits = name.substr(5);
        if (!digits.empty() && digits.front() == '(' && digits.back() == ')') digits = digits.substr(1, digits.size() - 2);
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
            int n = std::stoi(digits);
            if (n >= 1 && n <= 16) return std::make_shared<Cluster>(name, chain(n));
        }
    }
    if (name == "cuo2_bond") {
        // Bond between copper (0,0) and oxygen (1,0), with the far copper (2,0)
        // and the remaining oxygens of (0,0): the protection zone of the bond.
        std::vector<Site> s;
        add_copper_with_oxygens(s, 0, 0);
        s.push_back({2, 0, Sublattice::copper});
        return std::make_shared<Cluster>(name, s);
    }
    if (name == "cuo2_two_bonds") {
        std::vector<Site> s;
        add_copper_with_oxygens(s, 0, 0);
        add_copper_with_oxygens(s, 2, 0);
        return std::make_shared<Cluster>(name, s);
    }
    if (name == "cuo2_two_bonds_enlarged") {
        // The two-bond zone plus the next coppers along the bond axis.
        std::vector<Site> s;
        add_copper_with_oxygens(s, 0, 0);
        add_copper_with_oxygens(s, 2, 0);
        s.push_back({-2, 0, Sublattice::copper});
        s.push_back({4, 0, Sublattice::copper});
        return std::make_shared<Cluster>(name, s);
    }
    throw std::invalid_argument("unknown cluster shape '" + name + "'");
}

}  // namespace sc
