#include "cfc/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "cfc/error.hpp"

namespace cfc {

namespace {

using Mask = std::uint64_t;

enum class Mode { Edges, Vertices };

// Pairs whose paths must be checked, with every simple path as a bitmask over
// search positions. A pair is "decided" at the depth where its last path
// becomes fully colored.
struct Problem {
    int items = 0;
    std::vector<int> item_of_position;            // search position -> edge/vertex id
    std::vector<std::vector<Mask>> paths;         // per pair
    std::vector<std::vector<int>> pairs_at_depth; // depth -> pair indices
    std::vector<Mask> must_differ;                // position -> earlier positions
};

std::vector<Vertex> bfs_order(const Graph& g) {
    std::vector<int> seen(g.order(), 0);
    std::vector<Vertex> order{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (Vertex w : g.neighbors(order[head]))
            if (!seen[w]) {
                seen[w] = 1;
                order.push_back(w);
            }
    return order;
}

Problem build_problem(const Graph& g, Mode mode, const SolverBudget& budget) {
    const int n = g.order();
    const int items = mode == Mode::Edges ? g.size() : n;
    if (items > 64) throw UnsupportedShape("exact search supports at most 64 " +
                                           std::string(mode == Mode::Edges ? "edges" : "vertices"));
    Problem pb;
    pb.items = items;

    auto order = bfs_order(g);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    std::vector<int> position(items);
    pb.item_of_position.resize(items);
    if (mode == Mode::Edges) {
        std::vector<int> ids(items);
        for (int i = 0; i < items; ++i) ids[i] = i;
        auto key = [&](int e) {
            auto [a, b] = g.edges()[e];
            return std::pair{std::max(rank[a], rank[b]), std::min(rank[a], rank[b])};
        };
        std::sort(ids.begin(), ids.end(), [&](int x, int y) { return key(x) < key(y); });
        for (int p = 0; p < items; ++p) {
            pb.item_of_position[p] = ids[p];
            position[ids[p]] = p;
        }
    } else {
        for (int p = 0; p < items; ++p) {
            pb.item_of_position[p] = order[p];
            position[order[p]] = p;
        }
    }

    pb.must_differ.assign(items, 0);
    if (mode == Mode::Edges) {
        auto cs = cut_structure(g);
        for (std::size_t i = 0; i < cs.bridges.size(); ++i)
            for (std::size_t j = i + 1; j < cs.bridges.size(); ++j) {
                auto e = cs.bridges[i], f = cs.bridges[j];
                if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) {
                    int pe = position[*g.edge_index(e.u, e.v)];
                    int pf = position[*g.edge_index(f.u, f.v)];
                    pb.must_differ[std::max(pe, pf)] |= Mask{1} << std::min(pe, pf);
                }
            }
    }

    // Enumerate all simple paths from each u to every v > u.
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (mode == Mode::Edges && g.adjacent(u, v)) continue;
            pair_index[u][v] = static_cast<int>(pb.paths.size());
            pb.paths.emplace_back();
        }
    long long total = 0;
    std::vector<char> on_path(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        auto walk = [&](auto&& self, Vertex at, Mask mask) -> void {
            for (Vertex w : g.neighbors(at)) {
                if (on_path[w]) continue;
                Mask next = mode == Mode::Edges ? mask | (Mask{1} << position[*g.edge_index(at, w)])
                                                : mask | (Mask{1} << position[w]);
                if (w > u && pair_index[u][w] >= 0) {
                    pb.paths[pair_index[u][w]].push_back(next);
                    if (++total > budget.max_paths)
                        throw BudgetExceeded("simple path enumeration exceeded " +
                                                 std::to_string(budget.max_paths) + " paths",
                                             0, 0);
                }
                on_path[w] = 1;
                self(self, w, next);
                on_path[w] = 0;
            }
        };
        on_path[u] = 1;
        walk(walk, u, mode == Mode::Vertices ? Mask{1} << position[u] : Mask{0});
        on_path[u] = 0;
    }

    pb.pairs_at_depth.assign(std::max(items, 1), {});
    for (std::size_t i = 0; i < pb.paths.size(); ++i) {
        auto& ps = pb.paths[i];
        std::sort(ps.begin(), ps.end(), [](Mask a, Mask b) {
            int pa = std::popcount(a), pbc = std::popcount(b);
            return pa != pbc ? pa < pbc : a < b;
        });
        int depth = 0;
        for (Mask m : ps) depth = std::max(depth, 63 - std::countl_zero(m));
        pb.pairs_at_depth[depth].push_back(static_cast<int>(i));
    }
    return pb;
}

class NodeBudget {
public:
    explicit NodeBudget(long long limit) : limit_(limit) {}
    bool charge(long long n) {
        return used_.fetch_add(n, std::memory_order_relaxed) + n <= limit_;
    }
    long long used() const { return used_.load(); }
    bool exhausted() const { return used_.load() > limit_; }

private:
    long long limit_;
    std::atomic<long long> used_{0};
};

// Depth-first search over restricted-growth colorings with exactly k colors.
class Search {
public:
    Search(const Problem& pb, int k, NodeBudget& budget, const std::atomic<bool>* stop = nullptr)
        : pb_(pb), k_(k), budget_(budget), stop_(stop), color_(pb.items, 0), masks_(k + 1, 0) {}

    ~Search() { flush(); }

    /// Assigns `prefix` (must be a valid RGS prefix); false if it already fails.
    bool seed(const std::vector<int>& prefix) {
        for (std::size_t d = 0; d < prefix.size(); ++d)
            if (!place(static_cast<int>(d), prefix[d])) return false;
        return true;
    }

    /// First (lexicographic) completion from depth `d`, or false.
    bool solve(int d) {
        if (aborted_) return false;
        if (d == pb_.items) return used_ == k_;
        if (pb_.items - d < k_ - used_) return false;
        const int top = std::min(used_ + 1, k_);
        for (int c = 1; c <= top; ++c) {
            if (!tick()) return false;
            if (place(d, c)) {
                if (solve(d + 1)) return true;
            }
            unplace(d);
        }
        return false;
    }

    /// Valid prefixes of length `depth` in lexicographic order.
    void prefixes(int d, int depth, std::vector<std::vector<int>>& out) {
        if (d == depth) {
            out.emplace_back(color_.begin(), color_.begin() + depth);
            return;
        }
        if (pb_.items - d < k_ - used_) return;
        const int top = std::min(used_ + 1, k_);
        for (int c = 1; c <= top; ++c) {
            ++local_nodes_;
            if (place(d, c)) prefixes(d + 1, depth, out);
            unplace(d);
        }
    }

    const std::vector<int>& colors() const { return color_; }
    long long nodes() const { return nodes_total_ + local_nodes_; }
    bool aborted() const { return aborted_; }

private:
    bool place(int d, int c) {
        color_[d] = c;
        if (c > used_) {
            introduced_at_.push_back(d);
            used_ = c;
        }
        masks_[c] |= Mask{1} << d;
        Mask same = masks_[c] & pb_.must_differ[d];
        if (same) return false;
        for (int pair : pb_.pairs_at_depth[d])
            if (!pair_ok(pair)) return false;
        return true;
    }

    void unplace(int d) {
        int c = color_[d];
        masks_[c] &= ~(Mask{1} << d);
        if (!introduced_at_.empty() && introduced_at_.back() == d) {
            introduced_at_.pop_back();
            --used_;
        }
        color_[d] = 0;
    }

    bool pair_ok(int pair) const {
        for (Mask path : pb_.paths[pair])
            for (int c = 1; c <= used_; ++c)
                if (std::popcount(path & masks_[c]) == 1) return true;
        return false;
    }

    bool tick() {
        ++local_nodes_;
        if ((local_nodes_ & 1023) == 0) {
            if (!flush()) aborted_ = true;
            if (stop_ && stop_->load(std::memory_order_relaxed)) aborted_ = true;
        }
        return !aborted_;
    }

    bool flush() {
        nodes_total_ += local_nodes_;
        bool ok = budget_.charge(local_nodes_);
        local_nodes_ = 0;
        return ok;
    }

    const Problem& pb_;
    int k_;
    NodeBudget& budget_;
    const std::atomic<bool>* stop_;
    std::vector<int> color_;
    std::vector<Mask> masks_;
    std::vector<int> introduced_at_;
    int used_ = 0;
    long long local_nodes_ = 0;
    long long nodes_total_ = 0;
    bool aborted_ = false;
};

struct Attempt {
    bool found = false;
    bool aborted = false;
    std::vector<int> colors;  // by search position
    long long nodes = 0;
};

Attempt attempt_serial(const Problem& pb, int k, NodeBudget& budget) {
    Attempt out;
    {
        Search s(pb, k, budget);
        out.found = s.solve(0);
        out.aborted = s.aborted();
        if (out.found) out.colors = s.colors();
        out.nodes = s.nodes();
    }
    return out;
}

Attempt attempt_parallel(const Problem& pb, int k, NodeBudget& budget) {
    // Prefix depth: enough prefixes to keep every thread busy.
    const int threads = omp_get_max_threads();
    std::vector<std::vector<int>> prefixes;
    Attempt out;
    int depth = 0;
    {
        Search probe(pb, k, budget);
        while (depth < pb.items) {
            ++depth;
            prefixes.clear();
            probe.prefixes(0, depth, prefixes);
            if (static_cast<int>(prefixes.size()) >= 8 * threads) break;
        }
        out.nodes += probe.nodes();
    }
    if (threads <= 1 || prefixes.size() <= 1) return attempt_serial(pb, k, budget);

    const long long count = static_cast<long long>(prefixes.size());
    std::atomic<long long> best{count};
    std::atomic<bool> stop{false};
    std::vector<std::vector<int>> solution(count);
    std::atomic<long long> nodes{0};
    std::atomic<bool> aborted{false};

#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
        if (i > best.load() || aborted.load()) continue;
        Search s(pb, k, budget, &stop);
        if (s.seed(prefixes[i]) && s.solve(static_cast<int>(prefixes[i].size()))) {
            solution[i] = s.colors();
            long long cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        }
        if (s.aborted()) {
            aborted = true;
            stop = true;
        }
        nodes += s.nodes();
    }
    out.nodes += nodes.load();
    out.aborted = aborted.load() || budget.exhausted();
    if (best.load() < count) {
        out.found = true;
        out.colors = solution[best.load()];
    }
    return out;
}

template <typename Coloring>
SolveReport<Coloring> run(const Graph& g, Mode mode, int lo, int hi, const SolveOptions& options) {
    auto start = std::chrono::steady_clock::now();
    if (!is_connected(g)) throw DisconnectedError();
    SolveReport<Coloring> report;

    auto pb = build_problem(g, mode, options.budget);
    if (pb.items == 0) {
        report.value = 0;
        report.found = true;
        report.elapsed = std::chrono::steady_clock::now() - start;
        return report;
    }
    NodeBudget budget(options.budget.max_nodes);
    for (int k = std::max(lo, 1); k <= hi; ++k) {
        if (k > pb.items) break;
        const int limit = k == 1 ? 64 : k == 2 ? options.budget.max_items_two_colors : options.budget.max_items_multi;
        if (pb.items > limit)
            throw BudgetExceeded("exact search with " + std::to_string(k) + " colors is limited to " +
                                     std::to_string(limit) + " items, graph has " + std::to_string(pb.items),
                                 k, hi);
        Attempt a = options.parallel ? attempt_parallel(pb, k, budget) : attempt_serial(pb, k, budget);
        report.colorings_examined += a.nodes;
        if (a.found) {
            report.value = k;
            report.found = true;
            report.certificate.colors.assign(pb.items, 0);
            for (int p = 0; p < pb.items; ++p) report.certificate.colors[pb.item_of_position[p]] = a.colors[p];
            report.elapsed = std::chrono::steady_clock::now() - start;
            return report;
        }
        if (a.aborted)
            throw BudgetExceeded("exact search exceeded " + std::to_string(options.budget.max_nodes) +
                                     " nodes while trying " + std::to_string(k) + " colors",
                                 k, hi);
    }
    report.value = hi + 1;
    report.found = false;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace

EdgeSolveReport exact_cfc(const Graph& g, int lo, int hi, const SolveOptions& options) {
    return run<EdgeColoring>(g, Mode::Edges, lo, hi, options);
}

VertexSolveReport exact_vcfc(const Graph& g, int lo, int hi, const SolveOptions& options) {
    return run<VertexColoring>(g, Mode::Vertices, lo, hi, options);
}

int default_cfc_hi(const Graph& g) { return std::max(g.size(), 1); }

int default_vcfc_hi(const Graph& g) {
    int bits = 0;
    while ((1LL << bits) < static_cast<long long>(g.order()) + 1) ++bits;
    return std::max(bits, 1);
}

SolverBudget budget_from_env(SolverBudget base) {
    if (const char* env = std::getenv("CFC_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) base.max_nodes = v;
    }
    return base;
}

}  // namespace cfc
