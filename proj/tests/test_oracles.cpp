#include "doctest.h"

#include <numeric>

#include "corpus.hpp"
#include "cpw/gadgets.hpp"
#include "cpw/oracles.hpp"
#include "cpw/trees.hpp"

using namespace cpw;

TEST_CASE("exact pathwidth values and witnesses") {
    CHECK(exact_pathwidth(corpus::path_graph(5)).value == 1);
    CHECK(exact_pathwidth(corpus::path_graph(2)).value == 1);
    CHECK(exact_pathwidth(corpus::cycle_graph(5)).value == 2);
    CHECK(exact_pathwidth(corpus::cycle_graph(9)).value == 2);
    CHECK(exact_pathwidth(cbt(3).graph).value == 2);
    CHECK(exact_pathwidth(corpus::complete_graph(6)).value == 5);

    corpus::Rng rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + rng.below(12);
        auto g = corpus::random_graph(rng, n, rng.below(90));
        auto r = exact_pathwidth(g);
        CHECK(validate(g, r.decomposition).valid);
        CHECK(width(r.decomposition) == r.value);
    }
    CHECK_THROWS_AS(exact_pathwidth(corpus::path_graph(25), {20}), budget_error);
}

TEST_CASE("exact treedepth values and witnesses") {
    Graph single(1);
    CHECK(exact_treedepth(single).value == 1);
    CHECK(exact_treedepth(corpus::complete_graph(3)).value == 3);
    CHECK(exact_treedepth(corpus::path_graph(4)).value == 3);
    CHECK(exact_treedepth(corpus::path_graph(8)).value == 4);

    corpus::Rng rng(12);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 1 + rng.below(10);
        auto g = corpus::random_graph(rng, n, rng.below(90));
        auto r = exact_treedepth(g);
        CHECK(r.forest.forest_height() == r.value - 1);
        // clos(F) contains g
        auto closure = r.forest.closure();
        for (auto [u, v] : g.edges()) CHECK(closure.has_edge(u, v));
    }
}

TEST_CASE("circumference") {
    CHECK(circumference(corpus::path_graph(6)).length == 0);
    corpus::Rng tree_rng(9);
    CHECK(circumference(corpus::random_tree(tree_rng, 15)).length == 0);
    CHECK(circumference(corpus::cycle_graph(5)).length == 5);
    CHECK(circumference(named_gadget("petersen")).length == 9);
    CHECK(circumference(corpus::complete_graph(8)).length == 8);

    corpus::Rng rng(13);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 3 + rng.below(10);
        auto g = corpus::random_graph(rng, n, rng.below(80));
        auto r = circumference(g);
        if (r.length > 0) {
            CHECK(static_cast<int>(r.cycle.size()) == r.length);
            CyclePacking single{{r.cycle}, r.length};
            CHECK(validate_cycle_packing(g, single).valid);
        }
    }
}

TEST_CASE("longest path") {
    CHECK(longest_path_edges(corpus::path_graph(4)).edges == 3);
    CHECK(longest_path_edges(corpus::complete_graph(3)).edges == 2);
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(longest_path_edges(star).edges == 2);
    auto r = longest_path_edges(named_gadget("petersen"));
    CHECK(r.edges == 9);
    for (size_t i = 0; i + 1 < r.path.size(); ++i)
        CHECK(named_gadget("petersen").has_edge(r.path[i], r.path[i + 1]));
}

TEST_CASE("minor containment") {
    CHECK(minor_contains(corpus::cycle_graph(5), corpus::complete_graph(3)).has_value());
    CHECK_FALSE(minor_contains(corpus::cycle_graph(4), corpus::complete_graph(4)).has_value());
    CHECK_FALSE(minor_contains(outerplanar_family(2), named_gadget("K23")).has_value());
    auto model = minor_contains(named_gadget("petersen"), corpus::complete_graph(5));
    REQUIRE(model.has_value());
    CHECK(validate_minor_model(named_gadget("petersen"), *model).valid);
}

TEST_CASE("minor containment is monotone on subgraph patterns") {
    corpus::Rng rng(14);
    for (int iter = 0; iter < 15; ++iter) {
        int n = 4 + rng.below(6);
        auto host = corpus::random_graph(rng, n, 40 + rng.below(40));
        auto pattern_b = corpus::random_graph(rng, 4, 70);
        // pattern_a: drop one edge of pattern_b
        auto edges = pattern_b.edges();
        if (edges.empty()) continue;
        Graph pattern_a(4);
        for (size_t i = 1; i < edges.size(); ++i) pattern_a.add_edge(edges[i].first, edges[i].second);
        if (minor_contains(host, pattern_b).has_value())
            CHECK(minor_contains(host, pattern_a).has_value());
    }
}

TEST_CASE("transversal number") {
    CHECK(transversal_number(corpus::path_graph(6)).value == 0);
    CHECK(transversal_number(named_gadget("Q")).value == 2);
    CHECK(transversal_number(disjoint_cycles(3, 3)).value == 3);
    CHECK(transversal_number(corpus::complete_graph(5)).value == 3);

    corpus::Rng rng(15);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 1 + rng.below(8);
        auto g = corpus::random_graph(rng, n, rng.below(90));
        auto r = transversal_number(g);
        // witness removes all cycles
        std::vector<char> removed(g.n(), 0);
        for (int v : r.vertices) removed[v] = 1;
        CHECK_FALSE(find_cycle_of_length_at_least(g, 3, removed).has_value());
        // minimality by brute force
        std::vector<int> subset;
        auto exists_smaller = [&](auto&& self, int start, int want) -> bool {
            if (static_cast<int>(subset.size()) == want) {
                std::vector<char> drop(g.n(), 0);
                for (int v : subset) drop[v] = 1;
                return !find_cycle_of_length_at_least(g, 3, drop).has_value();
            }
            for (int v = start; v < g.n(); ++v) {
                subset.push_back(v);
                if (self(self, v + 1, want)) return true;
                subset.pop_back();
            }
            return false;
        };
        if (r.value > 0) CHECK_FALSE(exists_smaller(exists_smaller, 0, r.value - 1));
    }
}

TEST_CASE("maximum long cycle packings") {
    CHECK(max_long_cycle_packing(corpus::path_graph(6), 3).cycles.empty());
    CHECK(max_long_cycle_packing(disjoint_cycles(3, 2), 3).cycles.size() == 2);
    CHECK(max_long_cycle_packing(corpus::cycle_graph(5), 3).cycles.size() == 1);
    CHECK(max_long_cycle_packing(corpus::complete_graph(6), 3).cycles.size() == 2);
    CHECK(max_long_cycle_packing(corpus::complete_graph(6), 4).cycles.size() == 1);
    CHECK(max_long_cycle_packing(named_gadget("petersen"), 5).cycles.size() == 2);

    corpus::Rng rng(16);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 3 + rng.below(9);
        int t = 3 + rng.below(3);
        auto g = corpus::random_graph(rng, n, rng.below(85));
        auto packing = max_long_cycle_packing(g, t);
        CHECK(validate_cycle_packing(g, packing).valid);
        // duality: every packed cycle needs its own transversal vertex
        int packed3 = static_cast<int>(max_long_cycle_packing(g, 3).cycles.size());
        CHECK(transversal_number(g).value >= packed3);
    }
}

TEST_CASE("pathwidth is at most treedepth minus 1") {
    corpus::Rng rng(17);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + rng.below(11);
        auto g = corpus::random_graph(rng, n, rng.below(90));
        CHECK(exact_pathwidth(g).value <= exact_treedepth(g).value - 1);
    }
}

TEST_CASE("long cycles beat longest paths on 2-connected graphs") {
    corpus::Rng rng(18);
    int tested = 0;
    for (int iter = 0; iter < 300 && tested < 30; ++iter) {
        int n = 3 + rng.below(9);
        auto g = corpus::random_graph(rng, n, 35 + rng.below(50));
        if (!is_connectivity_at_least(g, 2)) continue;
        ++tested;
        long long t = circumference(g).length;
        long long p = longest_path_edges(g).edges;
        CHECK(t * t > 2 * p);
    }
    CHECK(tested == 30);
}

namespace {

// Reference minor test: every labeling host vertex -> {unused, pattern vertex}.
bool brute_minor(const Graph& host, const Graph& pattern) {
    int n = host.n(), p = pattern.n();
    std::vector<int> label(n, -1);
    auto feasible = [&]() {
        for (int x = 0; x < p; ++x) {
            std::vector<int> set;
            for (int v = 0; v < n; ++v)
                if (label[v] == x) set.push_back(v);
            if (set.empty()) return false;
            if (!induced_subgraph(host, set).graph.is_connected()) return false;
        }
        for (auto [x, y] : pattern.edges()) {
            bool joined = false;
            for (int u = 0; u < n && !joined; ++u)
                if (label[u] == x)
                    for (int w : host.neighbors(u))
                        if (label[w] == y) {
                            joined = true;
                            break;
                        }
            if (!joined) return false;
        }
        return true;
    };
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= (p + 1);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int v = 0; v < n; ++v) {
            label[v] = static_cast<int>(c % (p + 1)) - 1;
            c /= (p + 1);
        }
        if (feasible()) return true;
    }
    return false;
}

// Reference vertex separation over all orderings.
int brute_separation(const Graph& g) {
    int n = g.n();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        std::vector<char> placed(n, 0);
        int cost = 0;
        for (int i = 0; i < n; ++i) {
            placed[order[i]] = 1;
            int active = 0;
            for (int v = 0; v < n; ++v) {
                if (!placed[v]) continue;
                for (int w : g.neighbors(v))
                    if (!placed[w]) {
                        ++active;
                        break;
                    }
            }
            cost = std::max(cost, active);
        }
        best = std::min(best, cost);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace

TEST_CASE("minor oracle agrees with exhaustive labeling on tiny hosts") {
    std::vector<Graph> patterns{corpus::complete_graph(3), corpus::path_graph(3),
                                corpus::complete_graph(4), corpus::cycle_graph(4)};
    for (int n = 4; n <= 5; ++n)
        for (auto mask : corpus::all_graphs(n)) {
            auto host = corpus::mask_to_graph(n, mask);
            for (const auto& pattern : patterns)
                CHECK(minor_contains(host, pattern).has_value() == brute_minor(host, pattern));
        }
}

TEST_CASE("pathwidth oracle agrees with all-orderings search") {
    for (int n = 2; n <= 5; ++n)
        for (auto mask : corpus::all_graphs(n))
            CHECK(exact_pathwidth(corpus::mask_to_graph(n, mask)).value ==
                  brute_separation(corpus::mask_to_graph(n, mask)));
    corpus::Rng rng(99);
    for (int i = 0; i < 25; ++i) {
        auto g = corpus::random_graph(rng, 7, rng.below(100));
        CHECK(exact_pathwidth(g).value == brute_separation(g));
    }
}

TEST_CASE("oracles refuse instances over their ceilings") {
    auto big = corpus::path_graph(30);
    CHECK_THROWS_AS(exact_pathwidth(big), budget_error);
    CHECK_THROWS_AS(exact_treedepth(big), budget_error);
    CHECK_THROWS_AS(circumference(big), budget_error);
    CHECK_THROWS_AS(longest_path_edges(big), budget_error);
    CHECK_THROWS_AS(transversal_number(big), budget_error);
    CHECK_THROWS_AS(max_long_cycle_packing(big, 3), budget_error);
    CHECK_THROWS_AS(minor_contains(big, corpus::complete_graph(3)), budget_error);
    CHECK_THROWS_AS(minor_contains(corpus::path_graph(5), corpus::complete_graph(7)), budget_error);
}
