#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cfc {

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored canonically (u < v) and sorted lexicographically; the
/// position of an edge in `edges()` is its edge index, which is how edge
/// colorings address edges.
class Graph {
public:
    Graph() = default;

    /// Throws cfc::Error on a self-loop, a duplicate edge or an out-of-range
    /// endpoint.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const noexcept;

    bool adjacent(Vertex u, Vertex v) const;
    /// Index of edge {u,v} in edges(), or nullopt.
    std::optional<int> edge_index(Vertex u, Vertex v) const;

    /// Subgraph induced by `keep`; vertex i of the result is keep[i].
    Graph induced(std::span<const Vertex> keep) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Edge-list input after relabeling. labels[i] is the id vertex i carried in
/// the source text.
struct ParsedGraph {
    Graph graph;
    std::vector<long long> labels;
};

/// Parses "u v" lines with an optional "n=<count>" header. Blank lines and
/// lines starting with '#' are skipped. With a header, ids must lie in
/// [0,n) and are kept as-is (isolated vertices allowed); without one, ids
/// are relabeled densely in ascending order.
ParsedGraph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// graph6, bit-exact with the nauty format. The ">>graph6<<" header is
/// accepted and optional; trailing whitespace is ignored.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Renders g in DOT. When given, edge_colors (per edge index) and
/// vertex_colors (per vertex) become "c<k>" labels plus a color attribute.
std::string emit_dot(const Graph& g,
                     std::span<const int> edge_colors = {},
                     std::span<const int> vertex_colors = {},
                     std::span<const long long> labels = {});

struct Metrics {
    std::vector<std::vector<int>> dist;
    std::vector<int> ecc;
    int diameter = 0;
    int radius = 0;
};

bool is_connected(const Graph& g);

/// All-pairs BFS distances. Throws DisconnectedError.
Metrics metrics(const Graph& g);

/// A connected component of the bridge subgraph C(G); always a tree.
struct TreeComponent {
    std::vector<Vertex> vertices;  // sorted
    std::vector<Edge> edges;       // sorted, canonical

    /// The component as a standalone graph; vertex i is vertices[i].
    Graph as_graph() const;
};

struct CutStructure {
    std::vector<Edge> bridges;                 // sorted
    std::vector<Vertex> cut_vertices;          // sorted
    std::vector<std::vector<Vertex>> blocks;   // each sorted; list sorted
    std::vector<TreeComponent> cfg_components; // sorted by first vertex

    bool is_bridge(Edge e) const;
    bool is_cut_vertex(Vertex v) const;
    /// Blocks containing exactly one cut vertex.
    std::vector<int> end_blocks() const;
};

/// Bridges, articulation points and blocks by one low-link DFS.
/// Throws DisconnectedError.
CutStructure cut_structure(const Graph& g);

struct ConnectivityPredicates {
    bool is_connected = false;
    bool is_complete = false;
    bool is_2_connected = false;
    bool is_2_edge_connected = false;
};

ConnectivityPredicates connectivity_predicates(const Graph& g);

struct EndBlockReduction {
    Graph graph;
    std::vector<Vertex> kept;  // kept[i] = original id of vertex i
};

/// Deletes every internal (non-cut) vertex of every end block. A graph
/// without cut vertices comes back unchanged.
EndBlockReduction end_block_reduction(const Graph& g);

}  // namespace cfc
