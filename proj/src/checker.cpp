#include "cfc/checker.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cfc/error.hpp"

namespace cfc {

namespace {

// Maps arbitrary positive color ids onto 0..C-1.
std::vector<int> compress(std::span<const int> colors, int& palette) {
    std::map<int, int> ids;
    for (int c : colors) ids.emplace(c, 0);
    int next = 0;
    for (auto& [color, id] : ids) id = next++;
    palette = next;
    std::vector<int> out;
    out.reserve(colors.size());
    for (int c : colors) out.push_back(ids[c]);
    return out;
}

void require_total(std::span<const int> colors, std::size_t expected, const char* what) {
    if (colors.size() != expected)
        throw Error(std::string(what) + " coloring has " + std::to_string(colors.size()) + " entries, expected " +
                    std::to_string(expected));
    for (int c : colors)
        if (c < 1) throw Error(std::string(what) + " coloring uses non-positive color " + std::to_string(c));
}

void require_simple_path(const Graph& g, std::span<const Vertex> path) {
    if (path.empty()) throw Error("empty path");
    std::vector<char> seen(g.order(), 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
        Vertex v = path[i];
        if (v < 0 || v >= g.order()) throw Error("path vertex out of range");
        if (seen[v]) throw Error("path repeats vertex " + std::to_string(v));
        seen[v] = 1;
        if (i > 0 && !g.adjacent(path[i - 1], v))
            throw Error("path uses non-edge " + std::to_string(path[i - 1]) + " " + std::to_string(v));
    }
}

bool has_unique(const std::vector<int>& items) {
    std::map<int, int> count;
    for (int c : items) ++count[c];
    return std::any_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 1; });
}

// Shared DFS over simple paths. `edge_color(from, to)` gives the color added
// by stepping along an edge (edge variant) or onto a vertex (vertex variant).
class PathSearch {
public:
    PathSearch(const Graph& g, int palette, long long budget)
        : g_(g), count_(palette, 0), on_path_(g.order(), 0), budget_(budget) {}

    template <typename StepColor>
    bool run(Vertex u, Vertex v, int start_color, StepColor step_color) {
        target_ = v;
        if (start_color >= 0) add(start_color);
        on_path_[u] = 1;
        bool found = extend(u, step_color);
        on_path_[u] = 0;
        if (start_color >= 0) remove(start_color);
        return found;
    }

private:
    void add(int c) {
        if (count_[c] == 1) --unique_;
        if (++count_[c] == 1) ++unique_;
    }
    void remove(int c) {
        if (count_[c] == 1) --unique_;
        if (--count_[c] == 1) ++unique_;
    }

    template <typename StepColor>
    bool extend(Vertex at, StepColor& step_color) {
        for (Vertex w : g_.neighbors(at)) {
            if (on_path_[w]) continue;
            if (++steps_ > budget_)
                throw BudgetExceeded("conflict-free path search exceeded " + std::to_string(budget_) + " steps", 0, 0);
            int c = step_color(at, w);
            add(c);
            bool found = false;
            if (w == target_) {
                found = unique_ > 0;
            } else {
                on_path_[w] = 1;
                found = extend(w, step_color);
                on_path_[w] = 0;
            }
            remove(c);
            if (found) return true;
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> count_;
    std::vector<char> on_path_;
    Vertex target_ = -1;
    int unique_ = 0;
    long long steps_ = 0;
    long long budget_;
};

bool edge_search(const Graph& g, const std::vector<int>& colors, int palette, Vertex u, Vertex v, long long budget) {
    PathSearch search(g, palette, budget);
    return search.run(u, v, -1, [&](Vertex a, Vertex b) { return colors[*g.edge_index(a, b)]; });
}

bool vertex_search(const Graph& g, const std::vector<int>& colors, int palette, Vertex u, Vertex v, long long budget) {
    PathSearch search(g, palette, budget);
    return search.run(u, v, colors[u], [&](Vertex, Vertex b) { return colors[b]; });
}

void require_pair(const Graph& g, Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw Error("vertex out of range");
    if (u == v) throw Error("endpoints must be distinct");
}

}  // namespace

bool is_conflict_free_path_edges(const Graph& g, const EdgeColoring& c, std::span<const Vertex> path) {
    require_total(c.colors, g.size(), "edge");
    require_simple_path(g, path);
    std::vector<int> seen;
    for (std::size_t i = 1; i < path.size(); ++i) seen.push_back(c.colors[*g.edge_index(path[i - 1], path[i])]);
    return has_unique(seen);
}

bool is_conflict_free_path_vertices(const Graph& g, const VertexColoring& c, std::span<const Vertex> path) {
    require_total(c.colors, g.order(), "vertex");
    require_simple_path(g, path);
    std::vector<int> seen;
    for (Vertex v : path) seen.push_back(c.colors[v]);
    return has_unique(seen);
}

bool exists_cf_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v, long long step_budget) {
    require_total(c.colors, g.size(), "edge");
    require_pair(g, u, v);
    int palette = 0;
    auto colors = compress(c.colors, palette);
    return edge_search(g, colors, palette, u, v, step_budget);
}

bool exists_cf_vertex_path(const Graph& g, const VertexColoring& c, Vertex u, Vertex v, long long step_budget) {
    require_total(c.colors, g.order(), "vertex");
    require_pair(g, u, v);
    int palette = 0;
    auto colors = compress(c.colors, palette);
    return vertex_search(g, colors, palette, u, v, step_budget);
}

CheckResult check_cfc_coloring(const Graph& g, const EdgeColoring& c, long long step_budget) {
    require_total(c.colors, g.size(), "edge");
    int palette = 0;
    auto colors = compress(c.colors, palette);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!edge_search(g, colors, palette, u, v, step_budget)) return {false, std::pair{u, v}};
    return {};
}

CheckResult check_vcfc_coloring(const Graph& g, const VertexColoring& c, long long step_budget) {
    require_total(c.colors, g.order(), "vertex");
    int palette = 0;
    auto colors = compress(c.colors, palette);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!vertex_search(g, colors, palette, u, v, step_budget)) return {false, std::pair{u, v}};
    return {};
}

}  // namespace cfc
