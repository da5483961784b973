#include "cfc/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cfc/error.hpp"

namespace cfc {

namespace {

using Row = std::uint64_t;
using Cells = std::vector<std::vector<int>>;

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.order()), adj_(g.order(), 0) {
        if (n_ > 64) throw Error("canonical_form supports at most 64 vertices");
        for (auto [a, b] : g.edges()) {
            adj_[a] |= Row{1} << b;
            adj_[b] |= Row{1} << a;
        }
    }

    CanonicalForm run() {
        Cells start;
        if (n_ > 0) {
            start.emplace_back(n_);
            std::iota(start[0].begin(), start[0].end(), 0);
        }
        search(std::move(start));
        return best_;
    }

private:
    void refine(Cells& cells) const {
        std::vector<int> cell_of(n_);
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t ci = 0; ci < cells.size(); ++ci)
                for (int v : cells[ci]) cell_of[v] = static_cast<int>(ci);
            for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
                if (cells[ci].size() <= 1) continue;
                std::vector<std::pair<std::vector<int>, int>> sig;
                for (int v : cells[ci]) {
                    std::vector<int> count(cells.size(), 0);
                    for (Row rest = adj_[v]; rest; rest &= rest - 1) ++count[cell_of[std::countr_zero(rest)]];
                    sig.emplace_back(std::move(count), v);
                }
                std::sort(sig.begin(), sig.end());
                if (sig.front().first == sig.back().first) continue;
                Cells split;
                for (std::size_t i = 0; i < sig.size(); ++i) {
                    if (i == 0 || sig[i].first != sig[i - 1].first) split.emplace_back();
                    split.back().push_back(sig[i].second);
                }
                cells.erase(cells.begin() + static_cast<long>(ci));
                cells.insert(cells.begin() + static_cast<long>(ci), split.begin(), split.end());
                changed = true;
            }
        }
    }

    bool twins(int a, int b) const {
        Row ma = adj_[a] & ~(Row{1} << b);
        Row mb = adj_[b] & ~(Row{1} << a);
        return ma == mb;
    }

    void search(Cells cells) {
        refine(cells);
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) {
            leaf(cells);
            return;
        }
        const std::size_t ti = static_cast<std::size_t>(target - cells.begin());
        std::vector<int> tried;
        for (int v : cells[ti]) {
            if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, v); })) continue;
            tried.push_back(v);
            Cells next = cells;
            std::vector<int> rest;
            for (int w : cells[ti])
                if (w != v) rest.push_back(w);
            next[ti] = {v};
            next.insert(next.begin() + static_cast<long>(ti) + 1, rest);
            search(std::move(next));
        }
    }

    void leaf(const Cells& cells) {
        std::vector<int> inv(n_);
        std::vector<int> label(n_);
        for (int i = 0; i < n_; ++i) {
            inv[i] = cells[i][0];
            label[cells[i][0]] = i;
        }
        const long long bits = static_cast<long long>(n_) * (n_ - 1) / 2;
        std::vector<std::uint64_t> key(static_cast<std::size_t>((bits + 63) / 64), 0);
        long long t = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i, ++t)
                if ((adj_[inv[i]] >> inv[j]) & 1) key[t / 64] |= std::uint64_t{1} << (63 - t % 64);
        if (!have_ || key < best_.key) {
            best_.key = std::move(key);
            best_.label = std::move(label);
            have_ = true;
        }
    }

    int n_;
    std::vector<Row> adj_;
    CanonicalForm best_;
    bool have_ = false;
};

Graph relabel(const Graph& g, const std::vector<int>& label) {
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) edges.push_back({label[a], label[b]});
    return Graph(g.order(), edges);
}

// Canonicalizes every candidate and keeps one representative per class,
// sorted by canonical key.
std::vector<Graph> dedup(const std::vector<Graph>& candidates, bool parallel) {
    const long long count = static_cast<long long>(candidates.size());
    std::vector<CanonicalForm> forms(candidates.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (long long i = 0; i < count; ++i) forms[i] = canonical_form(candidates[i]);

    std::vector<long long> idx(candidates.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](long long a, long long b) {
        return forms[a].key != forms[b].key ? forms[a].key < forms[b].key : a < b;
    });
    std::vector<Graph> out;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0 && forms[idx[i]].key == forms[idx[i - 1]].key) continue;
        out.push_back(relabel(candidates[idx[i]], forms[idx[i]].label));
    }
    return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).label); }

std::vector<Graph> connected_graphs(int n, bool parallel) {
    if (n < 1) return {};
    std::vector<Graph> level{Graph(1, std::vector<Edge>{})};
    for (int m = 2; m <= n; ++m) {
        if (m > 20) throw Error("connected_graphs: n too large");
        std::vector<Graph> candidates;
        for (const auto& g : level) {
            for (std::uint32_t subset = 1; subset < (1u << (m - 1)); ++subset) {
                std::vector<Edge> edges = g.edges();
                for (int v = 0; v < m - 1; ++v)
                    if ((subset >> v) & 1) edges.push_back({v, m - 1});
                candidates.emplace_back(m, edges);
            }
        }
        level = dedup(candidates, parallel);
    }
    return level;
}

std::vector<Graph> trees(int n, bool parallel) {
    if (n < 1) return {};
    std::vector<Graph> level{Graph(1, std::vector<Edge>{})};
    for (int m = 2; m <= n; ++m) {
        std::vector<Graph> candidates;
        for (const auto& t : level)
            for (int v = 0; v < m - 1; ++v) {
                std::vector<Edge> edges = t.edges();
                edges.push_back({v, m - 1});
                candidates.emplace_back(m, edges);
            }
        level = dedup(candidates, parallel);
    }
    return level;
}

}  // namespace cfc
