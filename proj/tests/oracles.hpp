#pragma once

// Test-only oracles. Nothing here calls into the code paths it checks.

#include <set>
#include <vector>

#include "cfc/graph.hpp"

namespace oracle {

/// g - e is disconnected.
bool is_bridge_by_deletion(const cfc::Graph& g, cfc::Edge e);

/// g - v is disconnected (n >= 2).
bool is_cut_vertex_by_deletion(const cfc::Graph& g, cfc::Vertex v);

/// Every out-degree vector (label order) of an orientation of a subgraph of
/// K_r, by enumerating all 3^(r choose 2) states.
std::set<std::vector<int>> realizable_scores(int r);

/// All simple u-v paths as vertex sequences, listed by iterating over
/// adjacency-matrix rows with an explicit stack of candidate indices.
std::vector<std::vector<int>> all_simple_paths(const cfc::Graph& g, int u, int v);

bool cf_edges_by_listing(const cfc::Graph& g, const std::vector<int>& edge_colors);
bool cf_vertices_by_listing(const cfc::Graph& g, const std::vector<int>& vertex_colors);

/// Smallest k such that one of the k^m colorings passes cf_edges_by_listing
/// (no symmetry breaking, no pruning). Only for tiny graphs.
int naive_cfc(const cfc::Graph& g);
int naive_vcfc(const cfc::Graph& g);

}  // namespace oracle
