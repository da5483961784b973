#pragma once

#include <cstdint>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

/// Canonical relabeling by individualization-refinement: the lexicographically
/// smallest upper-triangle adjacency string over all leaves of the refinement
/// search tree. Twin vertices in a cell are individualized once. Requires
/// n <= 64.
struct CanonicalForm {
    std::vector<std::uint64_t> key;  // packed upper triangle, label order
    std::vector<int> label;          // label[v] = canonical position of v
};

CanonicalForm canonical_form(const Graph& g);

/// g relabeled canonically; isomorphic inputs give identical graphs.
Graph canonical_graph(const Graph& g);

/// All pairwise non-isomorphic connected graphs on n vertices, canonically
/// labeled and sorted by key. Canonicalization runs under OpenMP when
/// `parallel` is set; the output does not depend on it.
std::vector<Graph> connected_graphs(int n, bool parallel = true);

/// All non-isomorphic trees on n vertices.
std::vector<Graph> trees(int n, bool parallel = true);

}  // namespace cfc
