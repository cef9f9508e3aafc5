#include "doctest.h"

#include <map>
#include <set>

#include "corpus.hpp"
#include "cpw/decomposition.hpp"
#include "cpw/oracles.hpp"

using namespace cpw;

namespace {

std::map<int, int> first_bags(const PathDecomposition& d) {
    std::map<int, int> first;
    for (int i = 0; i < static_cast<int>(d.bags.size()); ++i)
        for (int v : d.bags[i]) first.emplace(v, i);
    return first;
}

}  // namespace

TEST_CASE("validate reports each axiom") {
    auto p3 = corpus::path_graph(3);
    CHECK(validate(p3, {{{0, 1}, {1, 2}}}).valid);

    auto k3 = corpus::complete_graph(3);
    auto uncovered = validate(k3, {{{0, 1}, {1, 2}}});
    CHECK_FALSE(uncovered.valid);
    REQUIRE(uncovered.violations.size() == 1);
    CHECK(uncovered.violations[0].kind == Violation::Kind::uncovered_edge);

    auto broken = validate(p3, {{{0, 1}, {2}, {1}}});
    CHECK_FALSE(broken.valid);
    bool found_interval = false;
    for (const auto& v : broken.violations)
        if (v.kind == Violation::Kind::broken_interval && v.u == 1) found_interval = true;
    CHECK(found_interval);

    auto missing = validate(p3, {{{0, 1}}});
    CHECK_FALSE(missing.valid);
    CHECK(missing.violations[0].kind == Violation::Kind::missing_vertex);

    CHECK_THROWS_AS(validate(p3, {{{0, 7}}}), precondition_error);
}

TEST_CASE("width") {
    CHECK(width({{{0, 1}, {1, 2}}}) == 1);
    CHECK(width({{{0}}}) == 0);
    CHECK(width({{{0, 1, 2, 3}}}) == 3);
    CHECK_THROWS_AS(width({}), precondition_error);
}

TEST_CASE("normalise examples") {
    auto p3 = corpus::path_graph(3);
    PathDecomposition d{{{0, 1}, {1, 2}}};
    auto norm = normalise(p3, d);
    CHECK(validate(p3, norm).valid);
    CHECK(width(norm) == 1);
    auto first = first_bags(norm);
    std::set<int> indices;
    for (auto [v, i] : first) indices.insert(i);
    CHECK(indices.size() == first.size());

    PathDecomposition single{{{0}}};
    Graph one(1);
    CHECK(normalise(one, single).bags == single.bags);

    auto k3 = corpus::complete_graph(3);
    auto norm3 = normalise(k3, {{{0, 1, 2}}});
    CHECK(norm3.bags.size() == 3);
    CHECK(width(norm3) == 2);
    CHECK(validate(k3, norm3).valid);

    CHECK_THROWS_AS(normalise(k3, {{{0, 1}}}), precondition_error);
}

TEST_CASE("normalise preserves validity and width on random inputs") {
    corpus::Rng rng(404);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + rng.below(12);
        auto g = corpus::random_graph(rng, n, 30 + rng.below(50));
        auto d = exact_pathwidth(g).decomposition;
        // merge a few adjacent bags to create first-bag collisions
        for (int round = 0; round < 3 && d.bags.size() >= 2; ++round) {
            int i = rng.below(static_cast<int>(d.bags.size()) - 1);
            std::vector<int> merged = d.bags[i];
            for (int v : d.bags[i + 1])
                if (std::find(merged.begin(), merged.end(), v) == merged.end())
                    merged.push_back(v);
            std::sort(merged.begin(), merged.end());
            d.bags[i] = merged;
            d.bags.erase(d.bags.begin() + i + 1);
        }
        REQUIRE(validate(g, d).valid);
        int w = width(d);
        auto norm = normalise(g, d);
        CHECK(validate(g, norm).valid);
        CHECK(width(norm) == w);
        auto first = first_bags(norm);
        std::set<int> indices;
        for (auto [v, i] : first) indices.insert(i);
        CHECK(indices.size() == first.size());
    }
}

TEST_CASE("forest closure decomposition examples") {
    // single root with two children
    auto f = forest_from_parents({-1, 0, 0});
    auto d = forest_closure_decomposition(f);
    CHECK(d.bags == std::vector<std::vector<int>>{{0}, {0, 1}, {0, 2}});
    CHECK(width(d) == 1);

    // path-shaped tree of height 2
    auto chain = forest_from_parents({-1, 0, 1});
    CHECK(width(forest_closure_decomposition(chain)) == 2);

    // complete binary tree of height 2: width 2, 7 bags
    auto cbt2 = forest_from_parents({-1, 0, 0, 1, 1, 2, 2});
    auto dc = forest_closure_decomposition(cbt2);
    CHECK(dc.bags.size() == 7);
    CHECK(width(dc) == 2);

    CHECK_THROWS_AS(forest_closure_decomposition(RootedForest{}), precondition_error);
}

TEST_CASE("forest closure decompositions cover the closure") {
    corpus::Rng rng(555);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 1 + rng.below(50);
        auto f = corpus::random_forest(rng, n);
        auto d = forest_closure_decomposition(f);
        CHECK(width(d) == f.forest_height());
        CHECK(validate(f.closure(), d).valid);
    }
}

TEST_CASE("constructed decompositions never beat the pathwidth oracle") {
    corpus::Rng rng(808);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + rng.below(12);
        auto g = corpus::random_graph(rng, n, 35 + rng.below(45));
        if (!g.is_connected()) continue;
        auto tree = dfs_tree(g, 0);
        auto d = forest_closure_decomposition(tree);
        REQUIRE(validate(g, d).valid);
        CHECK(width(d) >= exact_pathwidth(g).value);
    }
}
