#include "doctest.h"

#include <algorithm>

#include "corpus.hpp"
#include "cpw/bounds.hpp"
#include "cpw/oracles.hpp"

using namespace cpw;

TEST_CASE("thm1 on small graphs") {
    auto k4 = thm1_decompose(corpus::complete_graph(4));
    CHECK(k4.circumference_bound == 4);
    CHECK(k4.bound == 6);
    CHECK(k4.dfs_height == 3);
    CHECK(width(k4.decomposition) == 3);
    CHECK(validate(corpus::complete_graph(4), k4.decomposition).valid);

    auto k3 = thm1_decompose(corpus::complete_graph(3));
    CHECK(k3.bound == 2);
    CHECK(width(k3.decomposition) == 2);  // tight

    auto c6 = thm1_decompose(corpus::cycle_graph(6));
    CHECK(c6.circumference_bound == 6);
    CHECK(c6.dfs_height == 5);
    CHECK(width(c6.decomposition) == 5);
    CHECK(c6.bound == 15);
}

TEST_CASE("thm1 error paths") {
    CHECK_THROWS_AS(thm1_decompose(corpus::path_graph(5)), precondition_error);
    CHECK_THROWS_AS(thm1_decompose(corpus::complete_graph(2)), precondition_error);
    // a wrong caller-supplied circumference is detected through spans
    CHECK_THROWS_AS(thm1_decompose(corpus::cycle_graph(8), 3), verification_error);
}

TEST_CASE("thm1 width and treedepth bounds on random 2-connected graphs") {
    corpus::Rng rng(606);
    int tested = 0;
    for (int iter = 0; iter < 400 && tested < 60; ++iter) {
        int n = 3 + rng.below(10);
        auto g = corpus::random_graph(rng, n, 30 + rng.below(55));
        if (!is_connectivity_at_least(g, 2)) continue;
        ++tested;
        auto cert = thm1_decompose(g);
        CHECK(validate(g, cert.decomposition).valid);
        CHECK(width(cert.decomposition) <= cert.bound);
        CHECK(cert.dfs_height <= cert.bound);
        CHECK(exact_pathwidth(g).value <= width(cert.decomposition));
        CHECK(exact_treedepth(g).value <= cert.dfs_height + 1);
    }
    CHECK(tested == 60);
}

TEST_CASE("lemma2 base case: a single 2-connected block") {
    auto g = corpus::cycle_graph(5);
    auto bcf = block_cut_forest(g);
    REQUIRE(bcf.block_count() == 1);
    PathDecomposition forest_d{{{0}}};
    std::map<int, PathDecomposition> blocks{{0, exact_pathwidth(g).decomposition}};
    auto out = lemma2_compose(g, bcf, forest_d, blocks);
    CHECK(out.bags == blocks[0].bags);
}

TEST_CASE("lemma2 on two triangles sharing a vertex") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(2, 4);
    auto bcf = block_cut_forest(g);
    auto plan = canonical_forest_plan(bcf);
    std::map<int, PathDecomposition> blocks;
    for (int b = 0; b < bcf.block_count(); ++b) blocks[b] = PathDecomposition{{bcf.blocks[b]}};
    auto out = lemma2_compose(g, bcf, plan.decomposition, blocks);
    CHECK(validate(g, out).valid);
    // m = 2 (triangles), n = width of the forest decomposition
    long long budget = (2 + 3) * (width(plan.decomposition) + 1) - 3;
    CHECK(width(out) <= budget);
}

TEST_CASE("lemma2 fills bridge blocks canonically") {
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    auto bcf = block_cut_forest(star);
    auto plan = canonical_forest_plan(bcf);
    auto out = lemma2_compose(star, bcf, plan.decomposition, {});
    CHECK(validate(star, out).valid);
    CHECK(width(out) <= 5);
    CHECK(width(out) >= exact_pathwidth(star).value);
}

TEST_CASE("lemma2 rejects mismatched or invalid inputs") {
    auto g = corpus::cycle_graph(5);
    auto other = corpus::cycle_graph(6);
    auto bcf = block_cut_forest(other);
    CHECK_THROWS_AS(lemma2_compose(g, bcf, {{{0}}}, {}), precondition_error);

    auto own = block_cut_forest(g);
    CHECK_THROWS_AS(lemma2_compose(g, own, {{{0}}}, {}), precondition_error);  // missing block
    std::map<int, PathDecomposition> bad{{0, PathDecomposition{{{0, 1}}}}};
    CHECK_THROWS_AS(lemma2_compose(g, own, {{{0}}}, bad), precondition_error);  // invalid entry
}

TEST_CASE("lemma2 bound on random block-glued graphs") {
    corpus::Rng rng(707);
    for (int iter = 0; iter < 60; ++iter) {
        auto g = corpus::random_block_glued(rng, 6 + rng.below(30));
        auto bcf = block_cut_forest(g);
        auto plan = canonical_forest_plan(bcf);
        std::map<int, PathDecomposition> blocks;
        int m = 1;
        for (int b = 0; b < bcf.block_count(); ++b) {
            if (bcf.blocks[b].size() <= 2) continue;
            auto sub = induced_subgraph(g, bcf.blocks[b]);
            auto pw = exact_pathwidth(sub.graph);
            PathDecomposition mapped;
            for (auto bag : pw.decomposition.bags) {
                for (int& v : bag) v = sub.to_host[v];
                std::sort(bag.begin(), bag.end());
                mapped.bags.push_back(std::move(bag));
            }
            m = std::max(m, pw.value);
            blocks[b] = std::move(mapped);
        }
        auto out = lemma2_compose(g, bcf, plan.decomposition, blocks);
        CHECK(validate(g, out).valid);
        long long budget =
            static_cast<long long>(m + 3) * (width(plan.decomposition) + 1) - 3;
        CHECK(width(out) <= budget);
    }
}

TEST_CASE("canonical forest plan matches the forest") {
    corpus::Rng rng(808);
    for (int iter = 0; iter < 30; ++iter) {
        auto g = corpus::random_block_glued(rng, 5 + rng.below(25));
        auto bcf = block_cut_forest(g);
        auto plan = canonical_forest_plan(bcf);
        CHECK(validate(bcf.forest_graph(), plan.decomposition).valid);
        CHECK(width(plan.decomposition) <= plan.max_component_value);
    }
}
