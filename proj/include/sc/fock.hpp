#pragma once

#include "sc/lattice.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sc {

enum class Spin { up = 0, down = 1 };
inline Spin flip(Spin s) { return s == Spin::up ? Spin::down : Spin::up; }

// Either a fixed total particle number or fixed numbers per spin.
struct SectorConstraint {
    int total = -1;
    int up = -1;
    int down = -1;

    static SectorConstraint particles(int n) { return {n, -1, -1}; }
    static SectorConstraint per_spin(int n_up, int n_down) { return {-1, n_up, n_down}; }
    bool is_per_spin() const { return up >= 0; }
    int particle_count() const { return is_per_spin() ? up + down : total; }
    bool operator==(const SectorConstraint&) const = default;
    std::string str() const;
};

// Occupation configurations encoded as bit masks over spin-orbitals; the
// orbital of (site, spin) is 2 * order(site) + spin, so the fermionic sign of a
// ladder operator counts occupied orbitals earlier in the global order.
using Occupation = std::uint64_t;

class SectorBasis {
public:
    SectorBasis(std::shared_ptr<const Cluster> cluster, SectorConstraint constraint);

    const std::shared_ptr<const Cluster>& cluster() const { return cluster_; }
    const SectorConstraint& constraint() const { return constraint_; }
    int size() const { return static_cast<int>(states_.size()); }
    Occupation state(int i) const { return states_[static_cast<std::size_t>(i)]; }
    const std::vector<Occupation>& states() const { return states_; }
    int find(Occupation w) const;  // -1 when absent

    int orbital(int site, Spin s) const { return 2 * cluster_->order(site) + static_cast<int>(s); }
    bool occupied(Occupation w, int site, Spin s) const { return (w >> orbital(site, s)) & 1U; }
    int occupancy(Occupation w, int site) const { return occupied(w, site, Spin::up) + occupied(w, site, Spin::down); }
    std::string describe(Occupation w) const;  // e.g. "[ud,u,0]" in site order

private:
    std::shared_ptr<const Cluster> cluster_;
    SectorConstraint constraint_;
    std::vector<Occupation> states_;
    std::unordered_map<Occupation, int> index_;
};

using BasisPtr = std::shared_ptr<const SectorBasis>;

// Throws std::invalid_argument for an infeasible constraint.
BasisPtr sector_basis(std::shared_ptr<const Cluster> cluster, SectorConstraint constraint);

bool same_basis(const BasisPtr& a, const BasisPtr& b);

// Per-spin sectors with n_up + n_down = n, in ascending n_up.
std::vector<SectorConstraint> per_spin_sectors(const Cluster& cluster, int n);

struct Ladder {
    int site = 0;
    Spin spin = Spin::up;
    bool create = false;
};

// Applies one ladder operator to a configuration: the new configuration and
// its sign, or nullopt when the result vanishes.
std::optional<std::pair<Occupation, int>> apply_ladder(const SectorBasis& b, Occupation w, const Ladder& op);

SectorConstraint shifted(const SectorConstraint& c, const std::vector<Ladder>& ops);

}  // namespace sc
