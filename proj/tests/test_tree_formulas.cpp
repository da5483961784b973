#include "doctest.h"
#include "oracles.hpp"

#include "cfc/checker.hpp"
#include "cfc/enumerate.hpp"
#include "cfc/error.hpp"
#include "cfc/families.hpp"
#include "cfc/tree_formulas.hpp"

using namespace cfc;

namespace {

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph spider(int legs) {
    // center 0, legs of length 2
    std::vector<Edge> e;
    for (int i = 0; i < legs; ++i) {
        e.push_back({0, 1 + 2 * i});
        e.push_back({1 + 2 * i, 2 + 2 * i});
    }
    return Graph(1 + 2 * legs, e);
}

void check_optimal_coloring(const Graph& t) {
    auto c = construct_tree_coloring(t);
    CHECK(color_count(c.colors) == cfc_tree(t));
    CHECK(is_cfc_coloring(t, c));
    CHECK(oracle::cf_edges_by_listing(t, c.colors));
}

}  // namespace

TEST_CASE("score tuple membership examples") {
    CHECK(s_membership(ScoreTuple({2, 1, 0})));
    CHECK(s_membership(ScoreTuple({1, 1, 1})));
    CHECK_FALSE(s_membership(ScoreTuple({2, 2, 0})));
    CHECK_FALSE(s_membership(ScoreTuple({3, 0, 0})));
    CHECK(s_membership(ScoreTuple({0, 0})));
    CHECK(s_membership(ScoreTuple({0})));
    CHECK_FALSE(s_membership(ScoreTuple({1})));
    CHECK_FALSE(s_membership(ScoreTuple({1, -1})));
    CHECK(s_membership(ScoreTuple({2, 2, 1, 1})));
    CHECK_FALSE(s_membership(ScoreTuple({3, 3, 0, 0})));
}

TEST_CASE("score tuple sorting is stable") {
    ScoreTuple t({1, 3, 1, 2});
    CHECK(t.sorted() == std::vector<int>{3, 2, 1, 1});
    CHECK(t.order() == std::vector<int>{1, 3, 0, 2});
}

TEST_CASE("membership and witnesses agree with brute force for r <= 5") {
    for (int r = 1; r <= 5; ++r) {
        auto realizable = oracle::realizable_scores(r);
        std::vector<int> tuple(r, 0);
        while (true) {
            ScoreTuple t(tuple);
            bool expected = realizable.count(tuple) > 0;
            CHECK(s_membership(t) == expected);
            auto w = s_witness(t);
            CHECK(w.has_value() == expected);
            if (w) CHECK(is_valid_witness(*w, tuple));
            int pos = 0;
            while (pos < r && tuple[pos] == r - 1) tuple[pos++] = 0;
            if (pos == r) break;
            ++tuple[pos];
        }
    }
}

TEST_CASE("witness validator rejects broken sequences") {
    std::vector<int> scores{1, 1, 1};
    CHECK(is_valid_witness({{0, 1}, {1, 2}, {2, 0}}, scores));
    CHECK_FALSE(is_valid_witness({{0, 1}, {1, 0}, {2, 0}}, scores));
    CHECK_FALSE(is_valid_witness({{0, 1}, {0, 1}, {2, 0}}, scores));
    CHECK_FALSE(is_valid_witness({{0, 0}, {1, 2}, {2, 0}}, scores));
    CHECK_FALSE(is_valid_witness({{0, 1}, {1, 2}}, scores));
}

TEST_CASE("tree values") {
    CHECK(cfc_tree(Graph(1, std::vector<Edge>{})) == 0);
    CHECK(cfc_tree(path(2)) == 1);
    CHECK(cfc_tree(star(5)) == 4);
    CHECK(cfc_tree(double_star(2, 2)) == 3);
    CHECK(cfc_tree(path(4)) == 2);
    CHECK(cfc_tree(path(5)) == 3);
    CHECK(cfc_tree(spider(3)) == 3);
    std::vector<int> p{4, 2};
    CHECK(cfc_tree(diam4_tree(p, 1)) == 4);
    CHECK_THROWS_AS(cfc_tree(path(6)), UnsupportedShape);
    CHECK_THROWS_AS(cfc_tree(Graph(3, {{0, 1}, {1, 2}, {0, 2}})), UnsupportedShape);
}

TEST_CASE("diameter-4 formula quantities") {
    std::vector<int> p{4, 2};
    auto f = diam4_formula(diam4_tree(p, 1));
    CHECK(f.shape.center == 0);
    CHECK(f.shape.k() == 2);
    CHECK(f.shape.ell() == 1);
    CHECK(f.shape.p == std::vector<int>{4, 2});
    CHECK(f.c == std::vector<int>{2, 1});
    CHECK(f.b == 2);
    CHECK(f.value == 4);

    auto p5 = diam4_formula(path(5));
    CHECK(p5.shape.center == 2);
    CHECK(p5.c == std::vector<int>{0, 1});
    CHECK(p5.b == 1);
    CHECK(p5.value == 3);

    // Negative prefixes clamp b to 0: the center degree dominates.
    std::vector<int> flat{2, 2, 2, 2, 2};
    auto fl = diam4_formula(diam4_tree(flat, 0));
    CHECK(fl.b == 0);
    CHECK(fl.value == 5);

    CHECK_THROWS_AS(diam4_params(star(4)), UnsupportedShape);
}

TEST_CASE("optimal tree colorings") {
    check_optimal_coloring(Graph(1, std::vector<Edge>{}));
    check_optimal_coloring(path(2));
    check_optimal_coloring(star(5));
    check_optimal_coloring(double_star(3, 1));
    check_optimal_coloring(path(5));
    check_optimal_coloring(spider(4));
    std::vector<int> p{4, 2};
    check_optimal_coloring(diam4_tree(p, 1));
    std::vector<int> q{5, 5, 4, 2};
    check_optimal_coloring(diam4_tree(q, 2));
}

TEST_CASE("formula matches naive search on small trees") {
    for (int n = 3; n <= 7; ++n)
        for (const auto& t : trees(n)) {
            if (metrics(t).diameter > 4) continue;
            CHECK(cfc_tree(t) == oracle::naive_cfc(t));
            check_optimal_coloring(t);
        }
}
