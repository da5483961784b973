#include "cfc/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "cfc/error.hpp"

namespace cfc {

int color_count(std::span<const int> colors) {
    std::set<int> used(colors.begin(), colors.end());
    return static_cast<int>(used.size());
}

bool is_dense(std::span<const int> colors) {
    if (colors.empty()) return true;
    std::set<int> used(colors.begin(), colors.end());
    return *used.begin() == 1 && *used.rbegin() == static_cast<int>(used.size());
}

namespace {

std::vector<std::vector<long long>> numeric_lines(std::string_view text, std::size_t arity) {
    std::vector<std::vector<long long>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::vector<long long> row;
        std::string tok;
        while (fields >> tok) {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
                throw ParseError("line " + std::to_string(line_no) + ": malformed token '" + tok + "'", line_no);
            row.push_back(value);
        }
        if (row.size() != arity)
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(arity) +
                                 " integers",
                             line_no);
        if (row.back() < 1)
            throw ParseError("line " + std::to_string(line_no) + ": colors must be positive", line_no);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::map<long long, Vertex> label_index(const Graph& g, std::span<const long long> labels) {
    std::map<long long, Vertex> index;
    for (Vertex v = 0; v < g.order(); ++v) index[labels.empty() ? v : labels[v]] = v;
    return index;
}

Vertex lookup(const std::map<long long, Vertex>& index, long long id) {
    auto it = index.find(id);
    if (it == index.end()) throw Error("coloring names unknown vertex " + std::to_string(id));
    return it->second;
}

}  // namespace

EdgeColoring parse_edge_coloring(const Graph& g, std::string_view text, std::span<const long long> labels) {
    auto index = label_index(g, labels);
    EdgeColoring c{std::vector<int>(g.size(), 0)};
    for (const auto& row : numeric_lines(text, 3)) {
        auto e = g.edge_index(lookup(index, row[0]), lookup(index, row[1]));
        if (!e) throw Error("coloring names a non-edge " + std::to_string(row[0]) + " " + std::to_string(row[1]));
        if (c.colors[*e] != 0)
            throw Error("edge " + std::to_string(row[0]) + " " + std::to_string(row[1]) + " colored twice");
        c.colors[*e] = static_cast<int>(row[2]);
    }
    for (std::size_t i = 0; i < c.colors.size(); ++i)
        if (c.colors[i] == 0)
            throw Error("edge " + std::to_string(g.edges()[i].u) + " " + std::to_string(g.edges()[i].v) +
                        " has no color");
    return c;
}

VertexColoring parse_vertex_coloring(const Graph& g, std::string_view text, std::span<const long long> labels) {
    auto index = label_index(g, labels);
    VertexColoring c{std::vector<int>(g.order(), 0)};
    for (const auto& row : numeric_lines(text, 2)) {
        Vertex v = lookup(index, row[0]);
        if (c.colors[v] != 0) throw Error("vertex " + std::to_string(row[0]) + " colored twice");
        c.colors[v] = static_cast<int>(row[1]);
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (c.colors[v] == 0) throw Error("vertex " + std::to_string(v) + " has no color");
    return c;
}

std::string emit_edge_coloring(const Graph& g, const EdgeColoring& c, std::span<const long long> labels) {
    std::ostringstream os;
    auto name = [&](Vertex v) { return labels.empty() ? static_cast<long long>(v) : labels[v]; };
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        os << name(g.edges()[i].u) << ' ' << name(g.edges()[i].v) << ' ' << c.colors[i] << '\n';
    return os.str();
}

std::string emit_vertex_coloring(const VertexColoring& c, std::span<const long long> labels) {
    std::ostringstream os;
    for (std::size_t v = 0; v < c.colors.size(); ++v)
        os << (labels.empty() ? static_cast<long long>(v) : labels[v]) << ' ' << c.colors[v] << '\n';
    return os.str();
}

}  // namespace cfc
