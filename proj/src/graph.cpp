#include "cfc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "cfc/error.hpp"

namespace cfc {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adj_(n) {
    if (n < 0) throw Error("negative vertex count");
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw Error("edge endpoint out of range: " + std::to_string(a) + " " + std::to_string(b));
        if (a == b) throw Error("self-loop at vertex " + std::to_string(a));
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw Error("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    for (auto [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& row : adj_) best = std::max(best, static_cast<int>(row.size()));
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::optional<int> Graph::edge_index(Vertex u, Vertex v) const {
    Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
    std::vector<Edge> sub;
    for (auto [a, b] : edges_)
        if (index[a] >= 0 && index[b] >= 0) sub.push_back({index[a], index[b]});
    return Graph(static_cast<int>(keep.size()), sub);
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::string_view trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

long long parse_id(std::string_view tok, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
        throw ParseError("line " + std::to_string(line) + ": malformed vertex id '" +
                             std::string(tok) + "'",
                         line);
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text) {
    std::optional<long long> header;
    std::vector<std::pair<long long, long long>> raw;
    std::vector<std::size_t> raw_line;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        if (line.starts_with("n=") || line.starts_with("n =")) {
            if (header || !raw.empty())
                throw ParseError("line " + std::to_string(line_no) + ": header must come first", line_no);
            auto value = trim(line.substr(line.find('=') + 1));
            header = parse_id(value, line_no);
            continue;
        }
        auto toks = split_ws(line);
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected two vertex ids", line_no);
        long long a = parse_id(toks[0], line_no);
        long long b = parse_id(toks[1], line_no);
        if (a == b)
            throw ParseError("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(a), line_no);
        if (header && (a >= *header || b >= *header))
            throw ParseError("line " + std::to_string(line_no) + ": vertex id exceeds header n", line_no);
        raw.emplace_back(std::min(a, b), std::max(a, b));
        raw_line.push_back(line_no);
    }

    std::map<std::pair<long long, long long>, std::size_t> seen;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [it, fresh] = seen.emplace(raw[i], raw_line[i]);
        if (!fresh)
            throw ParseError("line " + std::to_string(raw_line[i]) + ": duplicate edge " +
                                 std::to_string(raw[i].first) + " " + std::to_string(raw[i].second) +
                                 " (first on line " + std::to_string(it->second) + ")",
                             raw_line[i]);
    }

    ParsedGraph out;
    std::map<long long, int> index;
    if (header) {
        if (*header > std::numeric_limits<int>::max()) throw ParseError("header n too large", 1);
        for (long long i = 0; i < *header; ++i) {
            index[i] = static_cast<int>(i);
            out.labels.push_back(i);
        }
    } else {
        for (auto [a, b] : raw) {
            index[a];
            index[b];
        }
        int next = 0;
        for (auto& [label, id] : index) {
            id = next++;
            out.labels.push_back(label);
        }
    }
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw) edges.push_back({index.at(a), index.at(b)});
    out.graph = Graph(static_cast<int>(out.labels.size()), edges);
    return out;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.order() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view kHeader = ">>graph6<<";
    std::size_t base = 0;
    if (text.starts_with(kHeader)) base = kHeader.size();
    auto body = text.substr(base);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r' || body.back() == ' '))
        body.remove_suffix(1);

    std::size_t i = 0;
    auto next = [&]() -> int {
        if (i >= body.size())
            throw ParseError("graph6: unexpected end of input at offset " + std::to_string(base + i), base + i);
        unsigned char ch = static_cast<unsigned char>(body[i]);
        if (ch < 63 || ch > 126)
            throw ParseError("graph6: byte out of range at offset " + std::to_string(base + i), base + i);
        ++i;
        return ch - 63;
    };

    long long n = 0;
    if (body.empty()) throw ParseError("graph6: empty input", base);
    if (static_cast<unsigned char>(body[0]) != 126) {
        n = next();
    } else {
        ++i;
        if (i < body.size() && static_cast<unsigned char>(body[i]) == 126) {
            ++i;
            for (int k = 0; k < 6; ++k) n = (n << 6) | next();
        } else {
            for (int k = 0; k < 3; ++k) n = (n << 6) | next();
        }
    }
    if (n > (1 << 20)) throw ParseError("graph6: vertex count too large", base);

    const long long bits = n * (n - 1) / 2;
    const long long need = (bits + 5) / 6;
    if (static_cast<long long>(body.size() - i) != need)
        throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, found " +
                             std::to_string(body.size() - i),
                         base + i);

    std::vector<Edge> edges;
    int word = 0;
    int left = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (left == 0) {
                word = next();
                left = 6;
            }
            --left;
            if ((word >> left) & 1) edges.push_back({u, v});
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    const long long n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int word = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + 63));
                word = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
    return out;
}

std::string emit_dot(const Graph& g, std::span<const int> edge_colors,
                     std::span<const int> vertex_colors, std::span<const long long> labels) {
    static constexpr const char* kPalette[] = {"black",  "red",    "blue",  "darkgreen", "orange",
                                               "purple", "brown",  "cyan4", "magenta",   "gold4"};
    auto paint = [](int c) { return kPalette[static_cast<std::size_t>(c) % std::size(kPalette)]; };
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  " << v;
        std::vector<std::string> attrs;
        if (!labels.empty()) attrs.push_back("label=\"" + std::to_string(labels[v]) + "\"");
        if (!vertex_colors.empty()) {
            attrs.push_back("xlabel=\"c" + std::to_string(vertex_colors[v]) + "\"");
            attrs.push_back(std::string("color=\"") + paint(vertex_colors[v]) + "\"");
        }
        if (!attrs.empty()) {
            os << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
            os << "]";
        }
        os << ";\n";
    }
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        auto [u, v] = g.edges()[i];
        os << "  " << u << " -- " << v;
        if (!edge_colors.empty())
            os << " [label=\"c" << edge_colors[i] << "\", color=\"" << paint(edge_colors[i]) << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Distances

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.order();
}

Metrics metrics(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError();
    const int n = g.order();
    Metrics m;
    m.dist.assign(n, std::vector<int>(n, -1));
    m.ecc.assign(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        auto& d = m.dist[s];
        std::deque<Vertex> queue{s};
        d[s] = 0;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v))
                if (d[w] < 0) {
                    d[w] = d[v] + 1;
                    queue.push_back(w);
                }
        }
        m.ecc[s] = *std::max_element(d.begin(), d.end());
    }
    m.diameter = *std::max_element(m.ecc.begin(), m.ecc.end());
    m.radius = *std::min_element(m.ecc.begin(), m.ecc.end());
    return m;
}

// ---------------------------------------------------------------------------
// Cut structure

namespace {

struct LowLink {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<Edge> edge_stack;
    std::vector<char> is_cut;
    std::vector<Edge> bridges;
    std::vector<std::vector<Vertex>> blocks;
    int clock = 0;

    explicit LowLink(const Graph& graph)
        : g(graph), disc(graph.order(), -1), low(graph.order(), 0), is_cut(graph.order(), 0) {}

    void visit(Vertex v, Vertex parent) {
        disc[v] = low[v] = clock++;
        int children = 0;
        for (Vertex w : g.neighbors(v)) {
            if (w == parent) continue;
            if (disc[w] < 0) {
                ++children;
                edge_stack.push_back({v, w});
                visit(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) bridges.push_back({std::min(v, w), std::max(v, w)});
                if (low[w] >= disc[v]) {
                    if (parent >= 0 || children > 1) is_cut[v] = 1;
                    std::vector<Vertex> block;
                    Edge top;
                    do {
                        top = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(top.u);
                        block.push_back(top.v);
                    } while (!(top.u == v && top.v == w));
                    std::sort(block.begin(), block.end());
                    block.erase(std::unique(block.begin(), block.end()), block.end());
                    blocks.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.push_back({v, w});
                low[v] = std::min(low[v], disc[w]);
            }
        }
    }
};

}  // namespace

Graph TreeComponent::as_graph() const {
    std::vector<Edge> local;
    local.reserve(edges.size());
    auto pos = [&](Vertex x) {
        return static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), x) - vertices.begin());
    };
    for (auto [a, b] : edges) local.push_back({pos(a), pos(b)});
    return Graph(static_cast<int>(vertices.size()), local);
}

bool CutStructure::is_bridge(Edge e) const {
    Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
    return std::binary_search(bridges.begin(), bridges.end(), key);
}

bool CutStructure::is_cut_vertex(Vertex v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> CutStructure::end_blocks() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto cuts = std::count_if(blocks[i].begin(), blocks[i].end(),
                                  [&](Vertex v) { return is_cut_vertex(v); });
        if (cuts == 1) out.push_back(static_cast<int>(i));
    }
    return out;
}

CutStructure cut_structure(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError();
    LowLink ll(g);
    ll.visit(0, -1);

    CutStructure cs;
    cs.bridges = std::move(ll.bridges);
    std::sort(cs.bridges.begin(), cs.bridges.end());
    for (Vertex v = 0; v < g.order(); ++v)
        if (ll.is_cut[v]) cs.cut_vertices.push_back(v);
    cs.blocks = std::move(ll.blocks);
    if (g.order() == 1) cs.blocks.push_back({0});
    std::sort(cs.blocks.begin(), cs.blocks.end());

    // Group bridges into the components of C(G) with a union-find.
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : cs.bridges) parent[find(a)] = find(b);
    std::map<int, TreeComponent> groups;
    for (auto e : cs.bridges) groups[find(e.u)].edges.push_back(e);
    for (auto& [root, comp] : groups) {
        for (auto [a, b] : comp.edges) {
            comp.vertices.push_back(a);
            comp.vertices.push_back(b);
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        comp.vertices.erase(std::unique(comp.vertices.begin(), comp.vertices.end()), comp.vertices.end());
        cs.cfg_components.push_back(std::move(comp));
    }
    std::sort(cs.cfg_components.begin(), cs.cfg_components.end(),
              [](const TreeComponent& a, const TreeComponent& b) { return a.vertices < b.vertices; });
    return cs;
}

ConnectivityPredicates connectivity_predicates(const Graph& g) {
    ConnectivityPredicates p;
    p.is_connected = is_connected(g);
    const long long n = g.order();
    p.is_complete = g.size() == n * (n - 1) / 2;
    if (!p.is_connected) return p;
    auto cs = cut_structure(g);
    p.is_2_connected = n >= 3 && cs.cut_vertices.empty();
    p.is_2_edge_connected = cs.bridges.empty();
    return p;
}

EndBlockReduction end_block_reduction(const Graph& g) {
    auto cs = cut_structure(g);
    std::vector<char> drop(g.order(), 0);
    for (int b : cs.end_blocks())
        for (Vertex v : cs.blocks[b])
            if (!cs.is_cut_vertex(v)) drop[v] = 1;
    EndBlockReduction out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!drop[v]) out.kept.push_back(v);
    out.graph = g.induced(out.kept);
    return out;
}

}  // namespace cfc
