#include "oracles.hpp"

#include <map>

namespace oracle {

namespace {

bool connected_without(const cfc::Graph& g, int skip_vertex, cfc::Edge skip_edge) {
    const int n = g.order();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [a, b] : g.edges()) adj[a][b] = adj[b][a] = 1;
    if (skip_edge.u >= 0) adj[skip_edge.u][skip_edge.v] = adj[skip_edge.v][skip_edge.u] = 0;
    int start = skip_vertex == 0 ? 1 : 0;
    std::vector<char> seen(n, 0);
    seen[start] = 1;
    std::vector<int> todo{start};
    while (!todo.empty()) {
        int x = todo.back();
        todo.pop_back();
        for (int y = 0; y < n; ++y)
            if (adj[x][y] && !seen[y] && y != skip_vertex) {
                seen[y] = 1;
                todo.push_back(y);
            }
    }
    for (int y = 0; y < n; ++y)
        if (y != skip_vertex && !seen[y]) return false;
    return true;
}

bool unique_color(const std::vector<int>& items) {
    std::map<int, int> count;
    for (int c : items) ++count[c];
    for (auto [c, k] : count)
        if (k == 1) return true;
    return false;
}

}  // namespace

bool is_bridge_by_deletion(const cfc::Graph& g, cfc::Edge e) { return !connected_without(g, -1, e); }

bool is_cut_vertex_by_deletion(const cfc::Graph& g, cfc::Vertex v) {
    if (g.order() < 3) return false;
    return !connected_without(g, v, {-1, -1});
}

std::set<std::vector<int>> realizable_scores(int r) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) slots.emplace_back(i, j);
    std::set<std::vector<int>> out;
    std::vector<int> state(slots.size(), 0);
    while (true) {
        std::vector<int> deg(r, 0);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (state[s] == 1) ++deg[slots[s].first];
            if (state[s] == 2) ++deg[slots[s].second];
        }
        out.insert(deg);
        std::size_t pos = 0;
        while (pos < state.size() && state[pos] == 2) state[pos++] = 0;
        if (pos == state.size()) break;
        ++state[pos];
    }
    return out;
}

std::vector<std::vector<int>> all_simple_paths(const cfc::Graph& g, int u, int v) {
    const int n = g.order();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [a, b] : g.edges()) adj[a][b] = adj[b][a] = 1;
    std::vector<std::vector<int>> out;
    std::vector<int> path{u};
    std::vector<int> next_candidate{0};
    std::vector<char> used(n, 0);
    used[u] = 1;
    while (!path.empty()) {
        int at = path.back();
        int& cand = next_candidate.back();
        if (at == v || cand >= n) {
            if (at == v) out.push_back(path);
            used[at] = 0;
            path.pop_back();
            next_candidate.pop_back();
            continue;
        }
        int y = cand++;
        if (adj[at][y] && !used[y]) {
            used[y] = 1;
            path.push_back(y);
            next_candidate.push_back(0);
        }
    }
    return out;
}

bool cf_edges_by_listing(const cfc::Graph& g, const std::vector<int>& edge_colors) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            bool ok = false;
            for (const auto& p : all_simple_paths(g, u, v)) {
                std::vector<int> cs;
                for (std::size_t i = 1; i < p.size(); ++i) cs.push_back(edge_colors[*g.edge_index(p[i - 1], p[i])]);
                if (unique_color(cs)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
    return true;
}

bool cf_vertices_by_listing(const cfc::Graph& g, const std::vector<int>& vertex_colors) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            bool ok = false;
            for (const auto& p : all_simple_paths(g, u, v)) {
                std::vector<int> cs;
                for (int x : p) cs.push_back(vertex_colors[x]);
                if (unique_color(cs)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
    return true;
}

namespace {

template <typename Check>
int naive_min(int items, Check check) {
    for (int k = 1;; ++k) {
        std::vector<int> colors(items, 1);
        while (true) {
            if (check(colors)) return k;
            int pos = 0;
            while (pos < items && colors[pos] == k) colors[pos++] = 1;
            if (pos == items) break;
            ++colors[pos];
        }
    }
}

}  // namespace

int naive_cfc(const cfc::Graph& g) {
    if (g.size() == 0) return 0;
    return naive_min(g.size(), [&](const std::vector<int>& c) { return cf_edges_by_listing(g, c); });
}

int naive_vcfc(const cfc::Graph& g) {
    return naive_min(g.order(), [&](const std::vector<int>& c) { return cf_vertices_by_listing(g, c); });
}

}  // namespace oracle
