#pragma once

#include <optional>
#include <span>
#include <utility>

#include "cfc/coloring.hpp"
#include "cfc/graph.hpp"

namespace cfc {

/// Path extensions a single exists_cf_path call may perform before it gives
/// up with BudgetExceeded.
inline constexpr long long kDefaultStepBudget = 10'000'000;

/// True iff some color appears on exactly one edge of `path` (a vertex
/// sequence). Throws cfc::Error if consecutive vertices are not adjacent or
/// a vertex repeats.
bool is_conflict_free_path_edges(const Graph& g, const EdgeColoring& c, std::span<const Vertex> path);

/// Vertex analogue: some color appears on exactly one vertex of `path`,
/// endpoints included.
bool is_conflict_free_path_vertices(const Graph& g, const VertexColoring& c, std::span<const Vertex> path);

/// Backtracking search over simple u-v paths (neighbors in ascending order),
/// accepting at the first conflict-free one. Requires u != v.
bool exists_cf_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v,
                    long long step_budget = kDefaultStepBudget);
bool exists_cf_vertex_path(const Graph& g, const VertexColoring& c, Vertex u, Vertex v,
                           long long step_budget = kDefaultStepBudget);

struct CheckResult {
    bool ok = true;
    /// First pair (in lexicographic order) without a conflict-free path.
    std::optional<std::pair<Vertex, Vertex>> failing_pair;
};

/// Throws cfc::Error if the coloring is not total on g.
CheckResult check_cfc_coloring(const Graph& g, const EdgeColoring& c,
                               long long step_budget = kDefaultStepBudget);
CheckResult check_vcfc_coloring(const Graph& g, const VertexColoring& c,
                                long long step_budget = kDefaultStepBudget);

inline bool is_cfc_coloring(const Graph& g, const EdgeColoring& c) { return check_cfc_coloring(g, c).ok; }
inline bool is_vcfc_coloring(const Graph& g, const VertexColoring& c) { return check_vcfc_coloring(g, c).ok; }

}  // namespace cfc
