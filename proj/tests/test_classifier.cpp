#include "doctest.h"

#include "cfc/checker.hpp"
#include "cfc/classifier.hpp"
#include "cfc/enumerate.hpp"
#include "cfc/error.hpp"
#include "cfc/families.hpp"

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

}  // namespace

TEST_CASE("trivial and complete graphs") {
    Graph k1(1, std::vector<Edge>{});
    CHECK(classify_cfc(k1).lo == 0);
    CHECK(classify_vcfc(k1).lo == 1);
    CHECK(classify_cfc(path(2)).lo == 1);
    CHECK(classify_vcfc(path(2)).lo == 2);
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto r = classify_cfc(k4);
    CHECK(r.exact());
    CHECK(r.lo == 1);
    CHECK(r.method == Method::Formula);
    CHECK(classify_vcfc(k4).lo == 2);
}

TEST_CASE("method names") {
    CHECK(to_string(Method::Formula) == "formula");
    CHECK(to_string(Method::TheoremDiam3Exception) == "theorem-diam3-exception");
    CHECK(to_string(Method::LemmaBound) == "lemma-bound");
    CHECK(to_string(Method::Solver) == "solver");
}

TEST_CASE("h value") {
    CHECK(h_value(cycle(5)) == 0);
    CHECK(h_value(figure1_graph()) == 2);
    CHECK(h_value(path(5)) == 3);
    Graph lollipop(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(h_value(lollipop) == 1);
}

TEST_CASE("diameter theorems") {
    auto c5 = classify_cfc(cycle(5));
    CHECK(c5.method == Method::TheoremDiam2);
    CHECK(c5.lo == 2);

    auto fig = classify_cfc(figure1_graph());
    CHECK(fig.method == Method::TheoremDiam3Exception);
    CHECK(fig.lo == 3);
    CHECK(fig.exact());
    CHECK(is_exception_structure(figure1_graph()));
    CHECK_FALSE(is_exception_structure(cycle(6)));

    auto c8 = classify_cfc(cycle(8));
    CHECK(c8.method == Method::TheoremDiam4);
    CHECK(c8.lo == 2);

    auto h4 = classify_cfc(h_family(4));
    CHECK(h4.method == Method::LemmaBound);
    CHECK(h4.lo == 2);
    CHECK(h4.hi == 3);
    ClassifyOptions resolve;
    resolve.resolve = true;
    auto h4r = classify_cfc(h_family(4), resolve);
    CHECK(h4r.method == Method::Solver);
    CHECK(h4r.lo == 3);
    REQUIRE(h4r.certificate.has_value());
    CHECK(is_cfc_coloring(h_family(4), EdgeColoring{*h4r.certificate}));
}

TEST_CASE("large diameter gives lemma intervals") {
    auto c10 = classify_cfc(cycle(10));
    CHECK(c10.method == Method::LemmaBound);
    CHECK(c10.lo == 2);
    CHECK(c10.hi == 2);
    CHECK_THROWS_AS(classify_cfc(path(7)), UnsupportedShape);
    ClassifyOptions resolve;
    resolve.resolve = true;
    auto p7 = classify_cfc(path(7), resolve);
    CHECK(p7.exact());
    CHECK(p7.lo == 3);
    auto v = classify_vcfc(path(7));
    CHECK(v.lo == 3);
    CHECK(v.hi == 4);
    CHECK_THROWS_AS(classify_cfc(Graph(3, {{0, 1}})), DisconnectedError);
}

TEST_CASE("vcfc by cut vertices") {
    CHECK(classify_vcfc(cycle(6)).lo == 2);
    CHECK(classify_vcfc(path(4)).lo == 3);
    CHECK(classify_vcfc(star(5)).lo == 2);
    CHECK(classify_vcfc(figure1_graph()).lo == 3);
}

TEST_CASE("constructions match the classified values on small graphs") {
    for (int n = 3; n <= 6; ++n)
        for (const auto& g : connected_graphs(n)) {
            if (metrics(g).diameter >= 5) continue;
            auto r = classify_cfc(g);
            if (r.exact()) {
                auto c = construct_cfc_coloring(g);
                CHECK(c.colors == r.lo);
                CHECK(color_count(c.coloring.colors) == r.lo);
                CHECK(is_cfc_coloring(g, c.coloring));
            } else {
                CHECK_THROWS_AS(construct_cfc_coloring(g), Error);
            }
            auto v = construct_vcfc_coloring(g);
            CHECK(color_count(v.coloring.colors) == classify_vcfc(g).lo);
            CHECK(is_vcfc_coloring(g, v.coloring));
        }
}

TEST_CASE("construction of the exception graph uses the recipe") {
    auto c = construct_cfc_coloring(figure1_graph());
    CHECK(c.colors == 3);
    CHECK_FALSE(c.fell_back);
    CHECK_THROWS_AS(construct_cfc_coloring(h_family(4)), Error);
}
