#pragma once

#include <chrono>

#include "cfc/coloring.hpp"
#include "cfc/graph.hpp"

namespace cfc {

/// Hard limits on the exact search. Exceeding any of them raises
/// BudgetExceeded instead of returning a degraded answer.
struct SolverBudget {
    int max_items_two_colors = 24;   // edges (or vertices) searched with k = 2
    int max_items_multi = 16;        // ... with k >= 3
    long long max_nodes = 400'000'000;  // partial colorings visited, summed over all k
    long long max_paths = 5'000'000;    // simple paths kept for pair checks
};

struct SolveOptions {
    SolverBudget budget;
    /// Split the search into colored prefixes and run them under OpenMP.
    /// Values and certificates are identical to the serial search.
    bool parallel = true;
};

template <typename Coloring>
struct SolveReport {
    /// Minimal k in [lo, hi] admitting a coloring with exactly k colors;
    /// when `found` is false every k <= hi failed and value is hi + 1.
    int value = 0;
    bool found = false;
    Coloring certificate;
    long long colorings_examined = 0;  // partial colorings visited
    std::chrono::duration<double> elapsed{};
};

using EdgeSolveReport = SolveReport<EdgeColoring>;
using VertexSolveReport = SolveReport<VertexColoring>;

/// Exact cfc by iterative deepening over k = lo, lo+1, ..., hi. Colorings
/// are restricted-growth strings over a BFS edge order (first edge color 1);
/// two bridges sharing an endpoint never share a color; a partial coloring is
/// rejected only once some vertex pair has all of its simple paths fully
/// colored and none is conflict-free. Throws DisconnectedError.
EdgeSolveReport exact_cfc(const Graph& g, int lo, int hi, const SolveOptions& options = {});

/// Exact vcfc with the vertex checker; vertex 0 is fixed to color 1.
VertexSolveReport exact_vcfc(const Graph& g, int lo, int hi, const SolveOptions& options = {});

/// Default upper bounds: m (every edge its own color) and ceil(log2(n+1)).
int default_cfc_hi(const Graph& g);
int default_vcfc_hi(const Graph& g);

/// Applies CFC_BUDGET (node budget) from the environment when set.
SolverBudget budget_from_env(SolverBudget base = {});

}  // namespace cfc
