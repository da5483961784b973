#include "cfc/families.hpp"

#include <string>
#include <vector>

#include "cfc/checker.hpp"
#include "cfc/classifier.hpp"
#include "cfc/error.hpp"

namespace cfc {

namespace {

// Every family member must land on its declared diameter and h.
void assert_shape(const Graph& g, int diameter, int h, const char* name) {
    int d = metrics(g).diameter;
    int hv = h_value(g);
    if (d != diameter || hv != h)
        throw Error(std::string(name) + ": expected diameter " + std::to_string(diameter) + " and h " +
                    std::to_string(h) + ", got " + std::to_string(d) + " and " + std::to_string(hv));
}

}  // namespace

Graph star(int n) {
    if (n < 2) throw Error("star: need n >= 2");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({0, v});
    return Graph(n, edges);
}

Graph double_star(int n1, int n2) {
    if (n2 < 1 || n1 < n2) throw Error("double_star: need n1 >= n2 >= 1");
    std::vector<Edge> edges{{0, 1}};
    int next = 2;
    for (int i = 0; i < n1; ++i) edges.push_back({0, next++});
    for (int i = 0; i < n2; ++i) edges.push_back({1, next++});
    return Graph(next, edges);
}

Graph diam4_tree(std::span<const int> p, int ell) {
    const int k = static_cast<int>(p.size());
    if (k < 2) throw Error("diam4_tree: need at least two non-pendant center neighbors");
    if (ell < 0) throw Error("diam4_tree: negative pendant count");
    for (int d : p)
        if (d < 2) throw Error("diam4_tree: every branch degree must be >= 2");
    std::vector<Edge> edges;
    int next = k + 1;
    for (int i = 0; i < k; ++i) {
        edges.push_back({0, i + 1});
        for (int c = 0; c < p[i] - 1; ++c) edges.push_back({i + 1, next++});
    }
    for (int j = 0; j < ell; ++j) edges.push_back({0, next++});
    return Graph(next, edges);
}

Graph figure1_graph() {
    std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
    for (int corner = 0; corner < 3; ++corner) {
        edges.push_back({corner, 3 + 2 * corner});
        edges.push_back({corner, 4 + 2 * corner});
    }
    Graph g(9, edges);
    assert_shape(g, 3, 2, "figure1_graph");
    return g;
}

std::pair<Graph, EdgeColoring> g_family(int l) {
    if (l < 2) throw Error("g_family: need l >= 2");
    const int u1 = 0, u2 = 1;
    auto v = [](int i) { return i + 1; };  // v_i for i = 1..l+1
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, int>> fixed;
    int next = l + 3;
    for (int i = 1; i <= l + 1; ++i) {
        edges.push_back({u1, v(i)});
        edges.push_back({u2, v(i)});
        if (i >= 3) {
            fixed.push_back({{u1, v(i)}, 1});
            fixed.push_back({{u2, v(i)}, 2});
        }
        if (i >= 2) {
            edges.push_back({v(i), next});
            fixed.push_back({{v(i), next++}, 1});
            edges.push_back({v(i), next});
            fixed.push_back({{v(i), next++}, 2});
        }
    }
    Graph g(next, edges);
    assert_shape(g, 4, 2, "g_family");

    EdgeColoring c{std::vector<int>(g.size(), 0)};
    for (auto [e, color] : fixed) c.colors[*g.edge_index(e.u, e.v)] = color;
    const int spokes[4] = {*g.edge_index(u1, v(1)), *g.edge_index(u2, v(1)), *g.edge_index(u1, v(2)),
                           *g.edge_index(u2, v(2))};
    for (int bits = 0; bits < 16; ++bits) {
        for (int s = 0; s < 4; ++s) c.colors[spokes[s]] = ((bits >> (3 - s)) & 1) + 1;
        if (is_cfc_coloring(g, c)) return {g, c};
    }
    throw Error("g_family: no two-coloring of the v1/v2 spokes makes G_" + std::to_string(l) +
                " conflict-free connected");
}

Graph h_family(int l) {
    if (l < 2) throw Error("h_family: need l >= 2");
    if (l == 2) {
        // x_i -> i-1
        Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {2, 6}, {4, 6}, {5, 6}, {6, 7}});
        assert_shape(g, 4, 2, "h_family");
        return g;
    }
    if (l == 3) {
        // H_2 with two pendant leaves added on x5
        Graph g(10, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {2, 6}, {4, 6}, {5, 6}, {6, 7}, {4, 8}, {4, 9}});
        assert_shape(g, 4, 2, "h_family");
        return g;
    }
    std::vector<Edge> edges;
    int next = l + 2;
    for (int i = 0; i < l; ++i) {
        int vi = 2 + i;
        edges.push_back({0, vi});
        edges.push_back({1, vi});
        edges.push_back({vi, next++});
        edges.push_back({vi, next++});
    }
    Graph g(next, edges);
    assert_shape(g, 4, 2, "h_family");
    return g;
}

}  // namespace cfc
