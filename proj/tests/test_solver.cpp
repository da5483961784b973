#include "doctest.h"
#include "oracles.hpp"

#include "cfc/checker.hpp"
#include "cfc/enumerate.hpp"
#include "cfc/error.hpp"
#include "cfc/families.hpp"
#include "cfc/solver.hpp"

using namespace cfc;

namespace {

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
}

Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, i + 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph(10, e);
}

SolveOptions serial() {
    SolveOptions o;
    o.parallel = false;
    return o;
}

}  // namespace

TEST_CASE("exact cfc on small named graphs") {
    auto k4 = exact_cfc(complete(4), 1, 6);
    CHECK(k4.found);
    CHECK(k4.value == 1);
    auto c5 = exact_cfc(cycle(5), 1, 5);
    CHECK(c5.value == 2);
    CHECK(is_cfc_coloring(cycle(5), c5.certificate));
    auto p5 = exact_cfc(path(5), 1, 4);
    CHECK(p5.value == 3);
    CHECK(color_count(p5.certificate.colors) == 3);
    CHECK(is_cfc_coloring(path(5), p5.certificate));
}

TEST_CASE("exact vcfc on small named graphs") {
    CHECK(exact_vcfc(complete(4), 1, 3).value == 2);
    CHECK(exact_vcfc(path(5), 1, 3).value == 3);
    CHECK(exact_vcfc(path(2), 1, 2).value == 2);
    auto k1 = exact_vcfc(Graph(1, std::vector<Edge>{}), 1, 1);
    CHECK(k1.value == 1);
}

TEST_CASE("petersen graph needs two colors") {
    Graph g = petersen();
    auto r = exact_cfc(g, 1, 3);
    CHECK(r.value == 2);
    CHECK(is_cfc_coloring(g, r.certificate));
}

TEST_CASE("no coloring within bound reports not found") {
    auto r = exact_cfc(path(5), 1, 2);
    CHECK_FALSE(r.found);
    CHECK(r.value == 3);
}

TEST_CASE("serial and parallel searches return identical certificates") {
    for (int l : {2, 3, 4}) {
        Graph g = h_family(l);
        auto a = exact_cfc(g, 2, 3, serial());
        auto b = exact_cfc(g, 2, 3);
        CHECK(a.value == b.value);
        CHECK(a.certificate == b.certificate);
    }
    Graph f = figure1_graph();
    auto va = exact_vcfc(f, 1, 4, serial());
    auto vb = exact_vcfc(f, 1, 4);
    CHECK(va.value == vb.value);
    CHECK(va.certificate == vb.certificate);
}

TEST_CASE("solver agrees with naive search on n <= 5") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : connected_graphs(n)) {
            auto r = exact_cfc(g, 1, default_cfc_hi(g));
            CHECK(r.value == oracle::naive_cfc(g));
            CHECK(oracle::cf_edges_by_listing(g, r.certificate.colors));
            auto v = exact_vcfc(g, 1, default_vcfc_hi(g));
            CHECK(v.value == oracle::naive_vcfc(g));
            CHECK(oracle::cf_vertices_by_listing(g, v.certificate.colors));
        }
}

TEST_CASE("budgets raise instead of degrading") {
    // Ruling out two colors on H_4 takes a few thousand nodes.
    SolveOptions tiny = serial();
    tiny.budget.max_nodes = 100;
    try {
        exact_cfc(h_family(4), 2, 3, tiny);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.proven_lo() == 2);
    }
    SolveOptions few_items;
    few_items.budget.max_items_multi = 3;
    try {
        exact_cfc(path(5), 1, 4, few_items);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.proven_lo() == 3);
    }
    CHECK_THROWS_AS(exact_cfc(Graph(3, {{0, 1}}), 1, 2), DisconnectedError);
}

TEST_CASE("default upper bounds") {
    CHECK(default_cfc_hi(path(5)) == 4);
    CHECK(default_vcfc_hi(path(7)) == 3);
    CHECK(default_vcfc_hi(path(8)) == 4);
}
