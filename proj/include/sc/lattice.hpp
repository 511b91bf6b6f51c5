#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace sc {

enum class Sublattice { uniform, copper, oxygen };
enum class Direction { horizontal, vertical };

struct Site {
    int x = 0;
    int y = 0;
    Sublattice sublattice = Sublattice::uniform;
};

struct Adjacency {
    int a = 0;  // site indices, a < b
    int b = 0;
    Direction direction = Direction::horizontal;
};

// Rank of a lattice point along the square spiral centred at the origin:
// (0,0) -> 0, (1,0) -> 1, (1,1) -> 2, (0,1) -> 3, (-1,1) -> 4, ...
int spiral_rank(int x, int y);

// Finite set of lattice sites with a total order (used for fermionic signs),
// sublattice labels and the nearest-neighbour pairs inside the set.
class Cluster {
public:
    Cluster(std::string shape, std::vector<Site> sites);

    const std::string& shape() const { return shape_; }
    int size() const { return static_cast<int>(sites_.size()); }
    const Site& site(int i) const { return sites_.at(static_cast<std::size_t>(i)); }
    const std::vector<Site>& sites() const { return sites_; }
    const std::vector<Adjacency>& adjacency() const { return adjacency_; }
    int order(int site) const { return order_.at(static_cast<std::size_t>(site)); }
    const std::vector<int>& order() const { return order_; }
    int site_at(int x, int y) const;  // -1 when absent
    std::vector<int> sites_of(Sublattice s) const;

    // Same sites and adjacency with a different (bijective) order.
    Cluster with_order(std::vector<int> order) const;

private:
    std::string shape_;
    std::vector<Site> sites_;
    std::vector<int> order_;
    std::vector<Adjacency> adjacency_;
};

// Shapes: bond, chain3, plaquette, chainN (e.g. chain5), cuo2_bond,
// cuo2_two_bonds, cuo2_two_bonds_enlarged. Throws std::invalid_argument on an
// unknown shape.
std::shared_ptr<const Cluster> build_cluster(std::string_view shape);

}  // namespace sc
