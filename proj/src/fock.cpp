#include "sc/fock.hpp"
#include "sc/sparse_operator.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace sc {

std::string SectorConstraint::str() const
{
    if (is_per_spin()) return "(N+=" + std::to_string(up) + ",N-=" + std::to_string(down) + ")";
    return "(N=" + std::to_string(total) + ")";
}

namespace {

void enumerate_masks(int slots, int count, const std::function<void(std::uint64_t)>& f)
{
    if (count < 0 || count > slots) return;
    if (count == 0) {
        f(0);
        return;
    }
    std::uint64_t m = (std::uint64_t{1} << count) - 1;
    const std::uint64_t limit = std::uint64_t{1} << slots;
    while (m < limit) {
        f(m);
        std::uint64_t c = m & (~m + 1);
        std::uint64_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

// Spreads the bits of a per-site mask onto the even (or odd) orbitals.
std::uint64_t spread(std::uint64_t m, int offset)
{
    std::uint64_t out = 0;
    for (int i = 0; m != 0; ++i, m >>= 1)
        if (m & 1U) out |= std::uint64_t{1} << (2 * i + offset);
    return out;
}

}  // namespace

SectorBasis::SectorBasis(std::shared_ptr<const Cluster> cluster, SectorConstraint constraint)
    : cluster_(std::move(cluster)), constraint_(constraint)
{
    const int n = cluster_->size();
    if (n > 32) throw std::invalid_argument("cluster too large for occupation masks");
    if (constraint_.is_per_spin()) {
        if (constraint_.up > n || constraint_.down > n || constraint_.down < 0)
            throw std::invalid_argument("infeasible sector " + constraint_.str());
        std::vector<std::uint64_t> ups, downs;
        enumerate_masks(n, constraint_.up, [&](std::uint64_t m) { ups.push_back(spread(m, 0)); });
        enumerate_masks(n, constraint_.down, [&](std::uint64_t m) { downs.push_back(spread(m, 1)); });
        for (auto u : ups)
            for (auto d : downs) states_.push_back(u | d);
    } else {
        if (constraint_.total < 0 || constraint_.total > 2 * n)
            throw std::invalid_argument("infeasible sector " + constraint_.str());
        enumerate_masks(2 * n, constraint_.total, [&](std::uint64_t m) { states_.push_back(m); });
    }
    std::sort(states_.begin(), states_.end());
    index_.reserve(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], static_cast<int>(i));
}

int SectorBasis::find(Occupation w) const
{
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
}

std::string SectorBasis::describe(Occupation w) const
{
    std::string s = "[";
    for (int x = 0; x < cluster_->size(); ++x) {
        if (x) s += ",";
        bool u = occupied(w, x, Spin::up), d = occupied(w, x, Spin::down);
        s += u && d ? "ud" : u ? "u" : d ? "d" : "0";
    }
    return s + "]";
}

BasisPtr sector_basis(std::shared_ptr<const Cluster> cluster, SectorConstraint constraint)
{
    return std::make_shared<const SectorBasis>(std::move(cluster), constraint);
}

bool same_basis(const BasisPtr& a, const BasisPtr& b)
{
    if (a == b) return true;
    if (!a || !b) return false;
    return a->constraint() == b->constraint() && a->cluster() == b->cluster();
}

std::vector<SectorConstraint> per_spin_sectors(const Cluster& cluster, int n)
{
    std::vector<SectorConstraint> out;
    for (int up = 0; up <= n; ++up)
        if (up <= cluster.size() && n - up <= cluster.size()) out.push_back(SectorConstraint::per_spin(up, n - up));
    return out;
}

std::optional<std::pair<Occupation, int>> apply_ladder(const SectorBasis& b, Occupation w, const Ladder& op)
{
    const int orb = b.orbital(op.site, op.spin);
    const Occupation bit = Occupation{1} << orb;
    const bool occ = (w & bit) != 0;
    if (occ == op.create) return std::nullopt;
    const int before = std::popcount(w & (bit - 1));
    return std::pair{w ^ bit, (before % 2) ? -1 : 1};
}

SectorConstraint shifted(const SectorConstraint& c, const std::vector<Ladder>& ops)
{
    SectorConstraint r = c;
    for (const auto& op : ops) {
        int d = op.create ? 1 : -1;
        if (r.is_per_spin())
            (op.spin == Spin::up ? r.up : r.down) += d;
        else
            r.total += d;
    }
    return r;
}

}  // namespace sc
