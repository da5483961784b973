#include "cfc/classifier.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cfc/checker.hpp"
#include "cfc/error.hpp"
#include "cfc/tree_formulas.hpp"

namespace cfc {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::Formula: return "formula";
        case Method::TheoremDiam2: return "theorem-diam2";
        case Method::TheoremDiam3: return "theorem-diam3";
        case Method::TheoremDiam3Exception: return "theorem-diam3-exception";
        case Method::TheoremDiam4: return "theorem-diam4";
        case Method::LemmaBound: return "lemma-bound";
        case Method::Solver: return "solver";
    }
    return "unknown";
}

int h_value(const Graph& g) {
    auto cs = cut_structure(g);
    int h = 0;
    for (const auto& comp : cs.cfg_components) h = std::max(h, cfc_tree(comp.as_graph()));
    return h;
}

bool is_exception_structure(const Graph& g) {
    if (!is_connected(g) || metrics(g).diameter != 3) return false;
    auto cs = cut_structure(g);
    if (cs.cfg_components.size() != 3) return false;
    for (const auto& comp : cs.cfg_components)
        if (comp.vertices.size() != 3 || comp.edges.size() != 2) return false;
    auto reduced = end_block_reduction(g);
    return reduced.graph.order() == 3 && reduced.graph.size() == 3;
}

namespace {

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError();
}

CfcResult exact(int value, Method method, std::string notes = {}) {
    CfcResult r;
    r.lo = r.hi = value;
    r.method = method;
    r.notes = std::move(notes);
    return r;
}

CfcResult interval(int lo, int hi, std::string notes) {
    CfcResult r;
    r.lo = lo;
    r.hi = hi;
    r.method = Method::LemmaBound;
    r.notes = std::move(notes);
    return r;
}

void try_resolve(const Graph& g, CfcResult& r, const ClassifyOptions& options) {
    if (!options.resolve || r.exact()) return;
    try {
        auto report = exact_cfc(g, r.lo, r.hi, options.solver);
        if (!report.found) {
            r.notes += "; solver found no coloring within the interval";
            return;
        }
        r.notes += "; resolved from [" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "] by exact search";
        r.lo = r.hi = report.value;
        r.method = Method::Solver;
        r.certificate = report.certificate.colors;
    } catch (const BudgetExceeded& e) {
        r.lo = std::max(r.lo, e.proven_lo());
        r.notes += std::string("; solver gave up: ") + e.what();
    }
}

}  // namespace

CfcResult classify_cfc(const Graph& g, const ClassifyOptions& options) {
    require_connected(g);
    const int n = g.order();
    if (n == 1) return exact(0, Method::Formula, "trivial graph");
    if (n == 2) return exact(1, Method::Formula, "single edge");
    auto pred = connectivity_predicates(g);
    if (pred.is_complete) return exact(1, Method::Formula, "complete graph");

    const int diameter = metrics(g).diameter;
    if (is_tree(g) && diameter <= 4) return exact(cfc_tree(g), Method::Formula, "tree");

    int h = 0;
    try {
        h = h_value(g);
    } catch (const UnsupportedShape&) {
        if (!options.resolve) throw;
        CfcResult r = interval(2, default_cfc_hi(g), "bridge forest has a component of diameter >= 5");
        try_resolve(g, r, options);
        return r;
    }

    switch (diameter) {
        case 2: return exact(std::max(2, h), Method::TheoremDiam2, "h=" + std::to_string(h));
        case 3:
            if (is_exception_structure(g))
                return exact(3, Method::TheoremDiam3Exception, "triangle core with three P3 components");
            return exact(std::max(2, h), Method::TheoremDiam3, "h=" + std::to_string(h));
        case 4: {
            if (h <= 1) return exact(2, Method::TheoremDiam4, "h<=1");
            if (h >= 3) return exact(h, Method::TheoremDiam4, "h>=3");
            CfcResult r = interval(2, 3, "diameter 4 with h=2 is not settled by the theorems");
            try_resolve(g, r, options);
            return r;
        }
        default: {
            // Noncomplete graphs need two colors; h <= 1 settles at 2.
            CfcResult r = h <= 1 ? interval(2, 2, "h<=1, diameter " + std::to_string(diameter))
                                 : interval(h, h + 1, "h<=cfc<=h+1, diameter " + std::to_string(diameter));
            try_resolve(g, r, options);
            return r;
        }
    }
}

CfcResult classify_vcfc(const Graph& g) {
    require_connected(g);
    const int n = g.order();
    if (n == 1) return exact(1, Method::Formula, "trivial graph");
    if (n == 2) return exact(2, Method::Formula, "single edge");
    auto m = metrics(g);
    auto cs = cut_structure(g);
    const int cuts = static_cast<int>(cs.cut_vertices.size());
    const std::string note = std::to_string(cuts) + " cut vertices";
    if (m.diameter <= 4) {
        const int value = cuts <= 1 ? 2 : 3;
        Method method = m.diameter <= 2 ? Method::TheoremDiam2
                        : m.diameter == 3 ? Method::TheoremDiam3
                                          : Method::TheoremDiam4;
        if (m.diameter == 1) method = Method::Formula;
        return exact(value, method, note);
    }
    if (cuts <= 1) return interval(2, 2, note);
    return interval(3, std::max(3, m.radius + 1), note + ", vcfc<=rad+1");
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

struct Layout {
    CutStructure cs;
    std::vector<std::vector<int>> block_edges;  // nontrivial blocks only
    std::vector<int> nontrivial;                // indices into cs.blocks
    std::vector<char> attached;                 // vertex touches a bridge
};

Layout layout_of(const Graph& g) {
    Layout l;
    l.cs = cut_structure(g);
    l.attached.assign(g.order(), 0);
    for (auto [a, b] : l.cs.bridges) l.attached[a] = l.attached[b] = 1;
    for (std::size_t i = 0; i < l.cs.blocks.size(); ++i) {
        const auto& block = l.cs.blocks[i];
        if (block.size() < 3) continue;
        std::vector<int> edges;
        for (int e = 0; e < g.size(); ++e) {
            auto [a, b] = g.edges()[e];
            if (std::binary_search(block.begin(), block.end(), a) && std::binary_search(block.begin(), block.end(), b))
                edges.push_back(e);
        }
        l.nontrivial.push_back(static_cast<int>(i));
        l.block_edges.push_back(std::move(edges));
    }
    return l;
}

// Bridge components colored optimally, everything else color 1.
std::vector<int> base_coloring(const Graph& g, const Layout& l) {
    std::vector<int> colors(g.size(), 1);
    for (const auto& comp : l.cs.cfg_components) {
        auto local = construct_tree_coloring(comp.as_graph());
        for (std::size_t i = 0; i < comp.edges.size(); ++i)
            colors[*g.edge_index(comp.edges[i].u, comp.edges[i].v)] = local.colors[i];
    }
    return colors;
}

bool share_vertex(const Graph& g, int e, int f) {
    auto a = g.edges()[e], b = g.edges()[f];
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

using Candidate = std::pair<std::string, std::vector<int>>;

// Nontrivial blocks get one 2-edge and one 3-edge, rest 1.
std::vector<Candidate> recipes_two_special(const Graph& g, const Layout& l) {
    std::vector<Candidate> out;
    for (bool adjacent_pair : {true, false}) {
        auto colors = base_coloring(g, l);
        for (const auto& edges : l.block_edges) {
            int e = edges[0], f = -1;
            for (int a : edges) {
                for (int b : edges)
                    if (a != b && share_vertex(g, a, b) == adjacent_pair) {
                        e = a;
                        f = b;
                        break;
                    }
                if (f >= 0) break;
            }
            if (f < 0) f = edges[1];
            colors[e] = 2;
            colors[f] = 3;
        }
        out.emplace_back(adjacent_pair ? "blocks: adjacent 2/3 edges" : "blocks: disjoint 2/3 edges",
                         std::move(colors));
    }
    return out;
}

// One 2-edge per nontrivial block, preferring an edge at a vertex no bridge
// touches.
std::vector<int> one_special_edge(const Graph& g, const Layout& l, std::vector<int> colors,
                                  const std::set<int>& skip_blocks = {}) {
    for (std::size_t i = 0; i < l.block_edges.size(); ++i) {
        if (skip_blocks.count(static_cast<int>(i))) continue;
        const auto& edges = l.block_edges[i];
        int pick = edges[0];
        for (int e : edges) {
            auto [a, b] = g.edges()[e];
            if (!l.attached[a] || !l.attached[b]) {
                pick = e;
                break;
            }
        }
        colors[pick] = 2;
    }
    return colors;
}

std::vector<Candidate> recipes_two_colors(const Graph& g, const Layout& l) {
    std::vector<Candidate> out;
    out.emplace_back("blocks: one 2-edge at an unattached vertex", one_special_edge(g, l, base_coloring(g, l)));

    // Central block: the nontrivial block holding the most cut vertices.
    int central = -1;
    long best = -1;
    for (std::size_t i = 0; i < l.nontrivial.size(); ++i) {
        const auto& block = l.cs.blocks[l.nontrivial[i]];
        long cuts = std::count_if(block.begin(), block.end(), [&](Vertex v) { return l.cs.is_cut_vertex(v); });
        if (cuts > best) {
            best = cuts;
            central = static_cast<int>(i);
        }
    }
    if (central < 0) return out;
    const auto& core = l.cs.blocks[l.nontrivial[central]];

    // Hamiltonian path through a complete core colored 2.
    {
        auto colors = one_special_edge(g, l, base_coloring(g, l), {central});
        bool ok = true;
        for (std::size_t i = 1; i < core.size() && ok; ++i) {
            auto e = g.edge_index(core[i - 1], core[i]);
            if (!e) ok = false;
            else colors[*e] = 2;
        }
        if (ok) out.emplace_back("core: path colored 2", std::move(colors));
    }

    // A single-edge bridge component anchors a 2-edge of the core.
    for (const auto& comp : l.cs.cfg_components) {
        if (comp.edges.size() != 1) continue;
        Vertex anchor = -1;
        for (Vertex v : comp.vertices)
            if (std::binary_search(core.begin(), core.end(), v)) anchor = v;
        if (anchor < 0) continue;
        auto colors = one_special_edge(g, l, base_coloring(g, l), {central});
        for (int e : l.block_edges[central]) {
            auto [a, b] = g.edges()[e];
            if (a == anchor || b == anchor) {
                colors[e] = 2;
                break;
            }
        }
        out.emplace_back("core: 2-edge at a P2 anchor", std::move(colors));
        break;
    }
    return out;
}

std::vector<Candidate> recipes_exception(const Graph& g, const Layout& l) {
    auto colors = base_coloring(g, l);
    auto reduced = end_block_reduction(g);
    for (auto [a, b] : reduced.graph.edges()) colors[*g.edge_index(reduced.kept[a], reduced.kept[b])] = 3;
    return {{"core triangle colored 3", std::move(colors)}};
}

template <typename Coloring, typename Check>
std::optional<Construction<Coloring>> first_valid(const std::vector<Candidate>& candidates, int value, Check check) {
    for (const auto& [name, colors] : candidates) {
        Coloring c{colors};
        if (color_count(c.colors) == value && is_dense(c.colors) && check(c))
            return Construction<Coloring>{std::move(c), value, name, false};
    }
    return std::nullopt;
}

}  // namespace

Construction<EdgeColoring> construct_cfc_coloring(const Graph& g, const SolveOptions& solver) {
    auto result = classify_cfc(g);
    if (!result.exact())
        throw Error("cfc is only known to lie in [" + std::to_string(result.lo) + "," + std::to_string(result.hi) +
                    "]; use the exact solver");
    const int value = result.lo;
    if (g.order() <= 2 || connectivity_predicates(g).is_complete)
        return {EdgeColoring{std::vector<int>(g.size(), 1)}, value, "single color", false};
    if (result.method == Method::Formula)
        return {construct_tree_coloring(g), value, "tree formula", false};

    auto layout = layout_of(g);
    std::vector<Candidate> candidates;
    if (result.method == Method::TheoremDiam3Exception)
        candidates = recipes_exception(g, layout);
    else if (value >= 3)
        candidates = recipes_two_special(g, layout);
    else
        candidates = recipes_two_colors(g, layout);

    auto check = [&](const EdgeColoring& c) { return is_cfc_coloring(g, c); };
    if (auto built = first_valid<EdgeColoring>(candidates, value, check)) return *built;

    auto report = exact_cfc(g, value, value, solver);
    if (!report.found) throw Error("no coloring with " + std::to_string(value) + " colors exists");
    return {report.certificate, value, "exact solver (recipes failed)", true};
}

Construction<VertexColoring> construct_vcfc_coloring(const Graph& g, const SolveOptions& solver) {
    auto result = classify_vcfc(g);
    if (!result.exact())
        throw Error("vcfc is only known to lie in [" + std::to_string(result.lo) + "," + std::to_string(result.hi) +
                    "]; use the exact solver");
    const int value = result.lo;
    const int n = g.order();
    if (n == 1) return {VertexColoring{{1}}, 1, "single color", false};

    auto cs = cut_structure(g);
    std::vector<Candidate> candidates;
    if (value == 2) {
        std::vector<int> colors(n, 1);
        colors[cs.cut_vertices.empty() ? 0 : cs.cut_vertices.front()] = 2;
        candidates.emplace_back(cs.cut_vertices.empty() ? "one vertex colored 2" : "cut vertex colored 2",
                                std::move(colors));
    } else {
        auto reduced = end_block_reduction(g);
        auto inner = cut_structure(reduced.graph);
        std::vector<int> colors(n, 1);
        if (inner.cut_vertices.empty()) {
            // One block left: a cut vertex of g gets 3, the rest of the block 2.
            for (Vertex v : reduced.kept) colors[v] = 2;
            colors[cs.cut_vertices.front()] = 3;
            candidates.emplace_back("core block: 3 on a cut vertex, 2 elsewhere", std::move(colors));
        } else {
            Vertex hub = inner.cut_vertices.front();
            for (const auto& block : inner.blocks)
                if (std::binary_search(block.begin(), block.end(), hub))
                    for (Vertex v : block) colors[reduced.kept[v]] = 2;
            colors[reduced.kept[hub]] = 3;
            candidates.emplace_back("core cut vertex 3, its blocks 2", std::move(colors));
        }
    }

    auto check = [&](const VertexColoring& c) { return is_vcfc_coloring(g, c); };
    if (auto built = first_valid<VertexColoring>(candidates, value, check)) return *built;

    auto report = exact_vcfc(g, value, value, solver);
    if (!report.found) throw Error("no vertex coloring with " + std::to_string(value) + " colors exists");
    return {report.certificate, value, "exact solver (recipes failed)", true};
}

}  // namespace cfc
