// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "cfc/checker.hpp"
#include "cfc/classifier.hpp"
#include "cfc/enumerate.hpp"
#include "cfc/error.hpp"
#include "cfc/families.hpp"
#include "cfc/solver.hpp"
#include "cfc/tree_formulas.hpp"

using namespace cfc;

namespace {

// Collects the first few failures of a criterion.
class Log {
public:
    void fail(const std::string& what) {
        ++failures_;
        if (failures_ <= 5) details_ << "\n    " << what;
    }
    void count() { ++checked_; }
    bool ok() const { return failures_ == 0; }
    std::string summary() const {
        std::ostringstream s;
        s << checked_ << " checks, " << failures_ << " failures" << details_.str();
        return s.str();
    }

private:
    long long checked_ = 0;
    long long failures_ = 0;
    std::ostringstream details_;
};

void expect(Log& log, bool condition, const std::string& what) {
    log.count();
    if (!condition) log.fail(what);
}

std::string describe(const Graph& g) { return emit_graph6(g); }

int cut_vertices_by_oracle(const Graph& g) {
    int count = 0;
    for (int v = 0; v < g.order(); ++v) count += oracle::is_cut_vertex_by_deletion(g, v);
    return count;
}

int ceil_log2_plus_one(int n) {
    int bits = 0;
    while ((1 << bits) < n + 1) ++bits;
    return bits;
}

// ---------------------------------------------------------------------------

void tree_formula(Log& log) {
    for (int n = 3; n <= 10; ++n)
        for (const auto& t : trees(n)) {
            if (metrics(t).diameter > 4) continue;
            auto r = exact_cfc(t, 1, default_cfc_hi(t));
            expect(log, r.found && cfc_tree(t) == r.value,
                   "tree " + describe(t) + ": formula " + std::to_string(cfc_tree(t)) + " vs search " +
                       std::to_string(r.value));
        }
}

void tuple_equivalence(Log& log) {
    for (int r = 1; r <= 6; ++r) {
        auto realizable = oracle::realizable_scores(r);
        // non-increasing tuples with entries in 0..r-1
        std::function<void(std::vector<int>&)> walk = [&](std::vector<int>& t) {
            if (static_cast<int>(t.size()) == r) {
                ScoreTuple tuple(t);
                bool brute = realizable.count(t) > 0;
                bool member = s_membership(tuple);
                std::ostringstream name;
                for (int x : t) name << x << ' ';
                expect(log, member == brute, "tuple " + name.str() + "membership disagrees with brute force");
                auto w = s_witness(tuple);
                expect(log, w.has_value() == member, "tuple " + name.str() + "witness existence");
                if (w) expect(log, is_valid_witness(*w, t), "tuple " + name.str() + "invalid witness");
                return;
            }
            int top = t.empty() ? r - 1 : t.back();
            for (int x = 0; x <= top; ++x) {
                t.push_back(x);
                walk(t);
                t.pop_back();
            }
        };
        std::vector<int> t;
        walk(t);
    }
}

void theorem_sweep(Log& log) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graphs(n)) {
            auto m = metrics(g);
            if (m.diameter > 4) continue;
            const std::string name = describe(g);
            auto exact = exact_cfc(g, 0, default_cfc_hi(g));
            auto vexact = exact_vcfc(g, 1, default_vcfc_hi(g));
            expect(log, exact.found && vexact.found, name + ": solver found no coloring");

            auto c = classify_cfc(g);
            if (c.exact())
                expect(log, c.lo == exact.value, name + ": classify_cfc " + std::to_string(c.lo) + " vs exact " +
                                                     std::to_string(exact.value));
            else
                expect(log, c.lo <= exact.value && exact.value <= c.hi,
                       name + ": interval misses exact " + std::to_string(exact.value));

            auto v = classify_vcfc(g);
            expect(log, v.exact() && v.lo == vexact.value,
                   name + ": classify_vcfc " + std::to_string(v.lo) + " vs exact " + std::to_string(vexact.value));

            const int h = h_value(g);
            if (h >= 1)
                expect(log, h <= exact.value && exact.value <= h + 1,
                       name + ": sandwich fails, h=" + std::to_string(h) + " cfc=" + std::to_string(exact.value));
            expect(log, vexact.value <= m.radius + 1, name + ": vcfc > rad+1");
            expect(log, vexact.value <= ceil_log2_plus_one(n), name + ": vcfc > ceil(log2(n+1))");
        }
}

void named_values(Log& log) {
    Graph fig = figure1_graph();
    auto f = exact_cfc(fig, 1, 4);
    expect(log, f.value == 3, "figure graph: exact cfc " + std::to_string(f.value));
    expect(log, h_value(fig) == 2, "figure graph: h " + std::to_string(h_value(fig)));
    for (int l : {2, 3, 4}) {
        auto r = exact_cfc(h_family(l), 1, 4);
        expect(log, r.value == 3, "H_" + std::to_string(l) + ": exact cfc " + std::to_string(r.value));
    }
    for (int l : {2, 3}) {
        auto [g, c] = g_family(l);
        auto r = exact_cfc(g, 1, 4);
        expect(log, r.value == 2, "G_" + std::to_string(l) + ": exact cfc " + std::to_string(r.value));
        expect(log, color_count(c.colors) == 2 && is_cfc_coloring(g, c),
               "G_" + std::to_string(l) + ": shipped coloring fails");
        expect(log, oracle::cf_edges_by_listing(g, c.colors), "G_" + std::to_string(l) + ": listing oracle rejects");
    }
}

void certify_graph(Log& log, const Graph& g, const std::string& name) {
    const int diameter = metrics(g).diameter;
    if (is_tree(g) && diameter <= 4) {
        auto t = construct_tree_coloring(g);
        expect(log, color_count(t.colors) == cfc_tree(g) && is_cfc_coloring(g, t),
               name + ": tree coloring");
    }
    if (diameter <= 4) {
        auto c = classify_cfc(g);
        if (c.exact()) {
            auto built = construct_cfc_coloring(g);
            expect(log, built.colors == c.lo && color_count(built.coloring.colors) == c.lo &&
                            is_cfc_coloring(g, built.coloring),
                   name + ": cfc construction (" + built.recipe + ")");
        }
        auto v = classify_vcfc(g);
        auto vbuilt = construct_vcfc_coloring(g);
        expect(log, vbuilt.colors == v.lo && color_count(vbuilt.coloring.colors) == v.lo &&
                        is_vcfc_coloring(g, vbuilt.coloring),
               name + ": vcfc construction (" + vbuilt.recipe + ")");
    }
    auto s = exact_cfc(g, 0, default_cfc_hi(g));
    expect(log, s.found && color_count(s.certificate.colors) == s.value && is_cfc_coloring(g, s.certificate),
           name + ": solver cfc certificate");
    auto vs = exact_vcfc(g, 1, default_vcfc_hi(g));
    expect(log, vs.found && color_count(vs.certificate.colors) == vs.value && is_vcfc_coloring(g, vs.certificate),
           name + ": solver vcfc certificate");
}

void certificates(Log& log) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graphs(n)) certify_graph(log, g, describe(g));
    for (int n = 2; n <= 8; ++n) certify_graph(log, star(n), "star " + std::to_string(n));
    certify_graph(log, double_star(3, 2), "double star 3,2");
    certify_graph(log, double_star(2, 2), "double star 2,2");
    for (auto [p, ell] : std::vector<std::pair<std::vector<int>, int>>{{{4, 2}, 1}, {{3, 3, 2}, 0}, {{5, 4, 2}, 2}})
        certify_graph(log, diam4_tree(p, ell), "diam4 tree");
    certify_graph(log, figure1_graph(), "figure graph");
    for (int l : {2, 3, 4}) certify_graph(log, h_family(l), "H_" + std::to_string(l));
    for (int l : {2, 3}) certify_graph(log, g_family(l).first, "G_" + std::to_string(l));
}

void vcfc_cut_vertex_rule(Log& log) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& g : connected_graphs(n)) {
            if (metrics(g).diameter > 4) continue;
            const int cuts = cut_vertices_by_oracle(g);
            auto v = classify_vcfc(g);
            const std::string name = describe(g);
            if (n >= 2)
                expect(log, v.exact() && (v.lo == 3) == (cuts >= 2),
                       name + ": vcfc " + std::to_string(v.lo) + " with " + std::to_string(cuts) + " cut vertices");
            if (n <= 6) {
                auto e = exact_vcfc(g, 1, default_vcfc_hi(g));
                expect(log, e.value == v.lo, name + ": exact vcfc " + std::to_string(e.value));
            }
        }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        void (*run)(Log&);
    };
    const Criterion criteria[] = {
        {"1 tree formula equals exact search (trees 3<=n<=10, diameter 2..4)", tree_formula},
        {"2 score tuples: membership equals brute force, witnesses valid (r<=6)", tuple_equivalence},
        {"3 theorem sweep over connected graphs n<=6, diameter<=4", theorem_sweep},
        {"4 named values (figure graph, H_2..H_4, G_2..G_3)", named_values},
        {"5 every certificate verifies with the claimed color count", certificates},
        {"6 vcfc=3 iff at least two cut vertices (n<=8), matching exact search (n<=6)", vcfc_cut_vertex_rule},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Log log;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(log);
        } catch (const std::exception& e) {
            log.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %s [%.1fs] %s\n", log.ok() ? "PASS" : "FAIL", c.name, secs, log.summary().c_str());
        std::fflush(stdout);
        if (!log.ok()) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
