#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

/// Color of every edge, addressed by edge index in Graph::edges().
struct EdgeColoring {
    std::vector<int> colors;
    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Color of every vertex.
struct VertexColoring {
    std::vector<int> colors;
    friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

/// Number of distinct colors used.
int color_count(std::span<const int> colors);

/// True when colors are exactly 1..C for some C (every id in range used).
bool is_dense(std::span<const int> colors);

/// Parses "u v c" lines against g's edges. Ids are looked up in `labels`
/// (identity when empty). Every edge must be colored exactly once.
EdgeColoring parse_edge_coloring(const Graph& g, std::string_view text,
                                 std::span<const long long> labels = {});
/// Parses "v c" lines; every vertex must be colored exactly once.
VertexColoring parse_vertex_coloring(const Graph& g, std::string_view text,
                                     std::span<const long long> labels = {});

std::string emit_edge_coloring(const Graph& g, const EdgeColoring& c,
                               std::span<const long long> labels = {});
std::string emit_vertex_coloring(const VertexColoring& c, std::span<const long long> labels = {});

}  // namespace cfc
