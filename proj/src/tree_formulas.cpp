#include "cfc/tree_formulas.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "cfc/error.hpp"

namespace cfc {

ScoreTuple::ScoreTuple(std::vector<int> values) : values_(std::move(values)), order_(values_.size()) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return values_[a] > values_[b]; });
}

std::vector<int> ScoreTuple::sorted() const {
    std::vector<int> out;
    out.reserve(values_.size());
    for (int i : order_) out.push_back(values_[i]);
    return out;
}

bool s_membership(const ScoreTuple& t) {
    const long long r = t.length();
    auto s = t.sorted();
    if (!s.empty() && s.back() < 0) return false;
    long long prefix = 0;
    for (long long j = 1; j <= r; ++j) {
        prefix += s[j - 1];
        // sum_{i<=j} s_i <= (2r-1-j)j/2, compared without division
        if (2 * prefix > (2 * r - 1 - j) * j) return false;
    }
    return true;
}

std::optional<PairSequence> s_witness(const ScoreTuple& t) {
    if (!s_membership(t)) return std::nullopt;

    struct Item {
        int label;
        int score;
    };
    std::vector<Item> items;
    for (int i = 0; i < t.length(); ++i) items.push_back({i, t.values()[i]});

    PairSequence pairs;
    while (!items.empty()) {
        std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
            return a.score != b.score ? a.score > b.score : a.label < b.label;
        });
        const int r = static_cast<int>(items.size());
        const Item top = items.front();
        if (top.score > r - 1) return std::nullopt;
        std::vector<Item> rest(items.begin() + 1, items.end());

        // The q highest-scored remaining labels point at `top` (labels with
        // score 0 never need to; their pair is simply left out). When a run
        // of equal scores straddles position q, take the tail of the run so
        // the decremented tuple stays sorted.
        int positive = 0;
        while (positive < r - 1 && rest[positive].score > 0) ++positive;
        const int q = std::min(r - 1 - top.score, positive);
        std::vector<char> points_at_top(rest.size(), 0);
        if (q > 0) {
            const int tie = rest[q - 1].score;
            int above = 0;
            while (above < static_cast<int>(rest.size()) && rest[above].score > tie) ++above;
            int run_end = above;
            while (run_end < static_cast<int>(rest.size()) && rest[run_end].score == tie) ++run_end;
            for (int i = 0; i < above; ++i) points_at_top[i] = 1;
            for (int i = run_end - (q - above); i < run_end; ++i) points_at_top[i] = 1;
        }
        int outgoing = 0;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (points_at_top[i]) {
                if (--rest[i].score < 0) return std::nullopt;
                pairs.emplace_back(rest[i].label, top.label);
            } else if (outgoing < top.score) {
                pairs.emplace_back(top.label, rest[i].label);
                ++outgoing;
            }
        }
        items = std::move(rest);
    }
    return pairs;
}

bool is_valid_witness(const PairSequence& pairs, std::span<const int> scores) {
    const int r = static_cast<int>(scores.size());
    std::set<std::pair<int, int>> seen;
    std::vector<int> out(r, 0);
    for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= r || j >= r || i == j) return false;
        if (!seen.emplace(i, j).second) return false;
        if (seen.count({j, i})) return false;
        ++out[i];
    }
    return std::equal(out.begin(), out.end(), scores.begin());
}

// ---------------------------------------------------------------------------

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

namespace {

void require_tree(const Graph& t) {
    if (!is_tree(t)) throw UnsupportedShape("input is not a tree");
}

long long ceil_div(long long num, long long den) {
    // den > 0
    return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

}  // namespace

Diam4TreeShape diam4_params(const Graph& t) {
    require_tree(t);
    auto m = metrics(t);
    if (m.diameter != 4)
        throw UnsupportedShape("expected a tree of diameter 4, got diameter " + std::to_string(m.diameter));
    Diam4TreeShape s;
    for (Vertex v = 0; v < t.order(); ++v)
        if (m.ecc[v] == 2) s.center = v;
    for (Vertex w : t.neighbors(s.center)) {
        if (t.degree(w) == 1)
            s.pendants.push_back(w);
        else
            s.branches.push_back(w);
    }
    std::stable_sort(s.branches.begin(), s.branches.end(),
                     [&](Vertex a, Vertex b) { return t.degree(a) > t.degree(b); });
    for (Vertex v : s.branches) {
        s.p.push_back(t.degree(v));
        std::vector<Vertex> kids;
        for (Vertex x : t.neighbors(v))
            if (x != s.center) kids.push_back(x);
        s.children.push_back(std::move(kids));
    }
    return s;
}

Diam4Formula diam4_formula(const Graph& t) {
    Diam4Formula f;
    f.shape = diam4_params(t);
    const int k = f.shape.k();
    long long prefix = 0;
    long long best = 0;
    for (int i = 0; i < k; ++i) {
        f.c.push_back(f.shape.p[i] - k + i);
        prefix += f.c.back();
        best = std::max(best, ceil_div(prefix, i + 1));
    }
    f.b = static_cast<int>(best);
    f.value = std::max(k + f.b, f.shape.center_degree());
    return f;
}

int cfc_tree(const Graph& t) {
    require_tree(t);
    if (t.order() == 1) return 0;
    if (t.order() == 2) return 1;
    int diameter = metrics(t).diameter;
    if (diameter <= 3) return t.max_degree();
    if (diameter == 4) return diam4_formula(t).value;
    throw UnsupportedShape("no closed form for trees of diameter " + std::to_string(diameter));
}

EdgeColoring construct_tree_coloring(const Graph& t) {
    require_tree(t);
    EdgeColoring out{std::vector<int>(t.size(), 0)};
    auto set = [&](Vertex a, Vertex b, int color) { out.colors[*t.edge_index(a, b)] = color; };
    if (t.order() <= 2) {
        std::fill(out.colors.begin(), out.colors.end(), 1);
        return out;
    }
    int diameter = metrics(t).diameter;
    if (diameter <= 3) {
        // Any proper coloring with max-degree colors works for stars and double stars.
        Vertex hub = 0;
        for (Vertex v = 0; v < t.order(); ++v)
            if (t.degree(v) > t.degree(hub)) hub = v;
        int next = 1;
        for (Vertex w : t.neighbors(hub)) set(hub, w, next++);
        for (Vertex w : t.neighbors(hub)) {
            int color = 1;
            int hub_color = out.colors[*t.edge_index(hub, w)];
            for (Vertex x : t.neighbors(w)) {
                if (x == hub) continue;
                if (color == hub_color) ++color;
                set(w, x, color++);
            }
        }
        return out;
    }
    if (diameter != 4)
        throw UnsupportedShape("no closed form for trees of diameter " + std::to_string(diameter));

    auto f = diam4_formula(t);
    const auto& s = f.shape;
    const int k = s.k();
    for (int i = 0; i < k; ++i) set(s.center, s.branches[i], i + 1);
    for (int j = 0; j < s.ell(); ++j) set(s.center, s.pendants[j], k + j + 1);

    // h_i old colors are reused below branch i; the rest take colors above k.
    std::vector<int> reuse(k);
    for (int i = 0; i < k; ++i) reuse[i] = std::max(s.p[i] - 1 - f.b, 0);
    auto witness = s_witness(ScoreTuple(reuse));
    if (!witness) throw Error("internal: reuse tuple is not realizable");

    std::vector<std::size_t> next_child(k, 0);
    for (auto [i, j] : *witness) set(s.branches[i], s.children[i][next_child[i]++], j + 1);
    for (int i = 0; i < k; ++i) {
        int fresh = k + 1;
        while (next_child[i] < s.children[i].size()) set(s.branches[i], s.children[i][next_child[i]++], fresh++);
    }
    return out;
}

}  // namespace cfc
