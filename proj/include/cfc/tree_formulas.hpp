#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cfc/coloring.hpp"
#include "cfc/graph.hpp"

namespace cfc {

// ---------------------------------------------------------------------------
// Score tuples
//
// A tuple (s_0..s_{r-1}) is realizable when there is a set of ordered pairs
// (i,j), i != j, over r labels, with no pair appearing together with its
// reverse, such that exactly s_i pairs start at label i. Equivalently: the
// out-degree sequence of an orientation of some subgraph of K_r.

class ScoreTuple {
public:
    explicit ScoreTuple(std::vector<int> values);

    int length() const noexcept { return static_cast<int>(values_.size()); }
    /// Entries in caller order.
    const std::vector<int>& values() const noexcept { return values_; }
    /// Entries sorted non-increasing.
    std::vector<int> sorted() const;
    /// order()[k] is the caller index of the k-th largest entry (stable).
    const std::vector<int>& order() const noexcept { return order_; }

private:
    std::vector<int> values_;
    std::vector<int> order_;
};

/// Ordered pairs over 0-based labels.
using PairSequence = std::vector<std::pair<int, int>>;

/// Prefix test on the sorted tuple: sum of the j largest <= (2r-1-j)j/2 for
/// every 1 <= j <= r.
bool s_membership(const ScoreTuple& t);

/// Realizing pair sequence, or nullopt exactly when s_membership fails.
/// Built by repeatedly removing the largest entry s: up to r-1-s of the
/// highest-scored remaining labels with positive score point at it, and it
/// points at s of the others.
std::optional<PairSequence> s_witness(const ScoreTuple& t);

/// Checks the PairSequence invariants against `scores` (caller order).
bool is_valid_witness(const PairSequence& pairs, std::span<const int> scores);

// ---------------------------------------------------------------------------
// Trees of diameter <= 4

/// Shape of a diameter-4 tree around its unique eccentricity-2 center.
struct Diam4TreeShape {
    Vertex center = -1;
    std::vector<Vertex> pendants;             // leaf neighbors of center, ascending
    std::vector<Vertex> branches;             // non-leaf neighbors, by degree desc then id
    std::vector<int> p;                       // p[i] = degree(branches[i])
    std::vector<std::vector<Vertex>> children;// children[i] = leaves hanging off branches[i]

    int k() const noexcept { return static_cast<int>(branches.size()); }
    int ell() const noexcept { return static_cast<int>(pendants.size()); }
    int center_degree() const noexcept { return k() + ell(); }
};

/// Throws UnsupportedShape unless t is a tree of diameter exactly 4.
Diam4TreeShape diam4_params(const Graph& t);

/// Auxiliary quantities of the diameter-4 formula.
struct Diam4Formula {
    Diam4TreeShape shape;
    std::vector<int> c;  // c_i = p_i - k + i (0-based i)
    int b = 0;           // max(ceil(max_j prefix_j(c)/j), 0), exact integer arithmetic
    int value = 0;       // max(k + b, d(center))
};

Diam4Formula diam4_formula(const Graph& t);

/// cfc of a tree of diameter <= 4: 0 for n=1, 1 for n=2, max degree for
/// diameters 2 and 3, the center formula for diameter 4. Throws
/// UnsupportedShape for non-trees and for diameter >= 5.
int cfc_tree(const Graph& t);

/// Optimal conflict-free coloring with exactly cfc_tree(t) colors.
EdgeColoring construct_tree_coloring(const Graph& t);

bool is_tree(const Graph& g);

}  // namespace cfc
