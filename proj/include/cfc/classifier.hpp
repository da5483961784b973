#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfc/coloring.hpp"
#include "cfc/graph.hpp"
#include "cfc/solver.hpp"

namespace cfc {

enum class Method {
    Formula,
    TheoremDiam2,
    TheoremDiam3,
    TheoremDiam3Exception,
    TheoremDiam4,
    LemmaBound,
    Solver,
};

std::string_view to_string(Method m);

/// Value or interval for cfc / vcfc, with how it was obtained.
struct CfcResult {
    int lo = 0;
    int hi = 0;
    Method method = Method::Formula;
    /// Per-edge (cfc) or per-vertex (vcfc) colors, when a certificate is attached.
    std::optional<std::vector<int>> certificate;
    std::string notes;

    bool exact() const noexcept { return lo == hi; }
};

struct ClassifyOptions {
    /// Settle interval results with the exact solver on [lo, hi].
    bool resolve = false;
    SolveOptions solver;
};

/// max cfc over the components of the bridge forest; 0 when bridgeless.
/// Throws UnsupportedShape if a component has diameter >= 5.
int h_value(const Graph& g);

/// cfc from the diameter theorems. Throws DisconnectedError, and
/// UnsupportedShape when h cannot be computed and no solver is allowed.
CfcResult classify_cfc(const Graph& g, const ClassifyOptions& options = {});

/// The diameter-3 exception: the block left after end-block reduction is a
/// triangle and the bridge forest is exactly three P3's.
bool is_exception_structure(const Graph& g);

/// vcfc: 2 when 2-connected or with at most one cut vertex, else 3 (diameter
/// <= 4). For larger diameters an interval bounded by rad + 1.
CfcResult classify_vcfc(const Graph& g);

template <typename Coloring>
struct Construction {
    Coloring coloring;
    int colors = 0;
    std::string recipe;      // which construction produced the coloring
    bool fell_back = false;  // true when the solver had to supply it
};

/// A coloring with exactly the classified number of colors, following the
/// proof recipes and validated by the checker; falls back to the exact
/// solver if a recipe fails. Throws cfc::Error when classify_cfc only yields
/// an interval.
Construction<EdgeColoring> construct_cfc_coloring(const Graph& g, const SolveOptions& solver = {});

Construction<VertexColoring> construct_vcfc_coloring(const Graph& g, const SolveOptions& solver = {});

}  // namespace cfc
