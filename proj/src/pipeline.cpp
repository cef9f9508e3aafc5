#include "cpw/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "cpw/trees.hpp"

namespace cpw {

// ---------------------------------------------------------------------------
// Budgets and parameters
// ---------------------------------------------------------------------------

long long ep_hitting_bound(int k, int t) {
    if (k < 1) throw precondition_error("ep_hitting_bound requires k >= 1");
    if (t < 3) throw precondition_error("ep_hitting_bound requires t >= 3");
    long long kk = k, tt = t;
    return 13 * tt * (kk - 1) * (kk - 2) + (2 * tt + 3) * (kk - 1);
}

long long ep_budget(int k, int t, EpBoundMode mode, std::optional<double> fh_constant) {
    if (mode == EpBoundMode::standard) return ep_hitting_bound(k, t);
    if (!fh_constant)
        throw precondition_error("fh budget mode needs an explicit constant; none is built in");
    if (k < 1) throw precondition_error("ep_budget requires k >= 1");
    if (k == 1) return 0;
    return static_cast<long long>(
        std::ceil(*fh_constant * t * k * std::log2(static_cast<double>(k))));
}

HittingSet min_hitting_set(const Graph& g, int t, const OracleBudget& budget) {
    if (g.n() > budget.max_vertices)
        throw budget_error("min_hitting_set: instance has " + std::to_string(g.n()) +
                           " vertices, ceiling is " + std::to_string(budget.max_vertices));
    if (t < 3) throw precondition_error("min_hitting_set requires t >= 3");
    return {minimum_long_cycle_hitting_set(g, t), t};
}

PipelineParams pipeline_params(int k, int t, int h_raw) {
    if (k <= 1) throw precondition_error("pipeline parameters are defined only for k >= 2");
    if (t < 3) throw precondition_error("pipeline parameters require t >= 3");
    if (h_raw < 0) throw precondition_error("negative hitting-set size");
    PipelineParams p;
    p.k = k;
    p.t = t;
    p.h = std::max(h_raw, k);
    p.h_floored = h_raw < k;
    unsigned long long x =
        static_cast<unsigned long long>(k - 1) * (2ull * p.h - 2ull * k + 1);
    p.subtree_count_log = std::bit_width(x) - 1 + 1;  // floor(log2 x) + 1
    long long y = p.h - k + 1;                        // >= 1
    if ((y & (y - 1)) == 0) {
        int log_y = std::bit_width(static_cast<unsigned long long>(y)) - 1;
        p.subtree_height = (t + 1) / 2 + log_y;
    } else {
        p.subtree_height = static_cast<int>(
            std::ceil(t / 2.0 + std::log2(static_cast<double>(y))));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Cycle rerouting through blocks
// ---------------------------------------------------------------------------

namespace {

// BFS inside one block, avoiding `blocked`, from `from` to the nearest vertex
// satisfying `accept` (smallest id within the closest BFS layer).
std::optional<std::vector<int>> block_path(const Graph& g, const std::vector<int>& block,
                                           const std::vector<char>& blocked, int from,
                                           const std::function<bool(int)>& accept) {
    auto in_block = [&](int v) {
        return std::binary_search(block.begin(), block.end(), v);
    };
    if (!in_block(from) || blocked[from]) return std::nullopt;
    std::vector<int> prev(g.n(), -2);
    std::queue<int> q;
    q.push(from);
    prev[from] = -1;
    if (accept(from)) return std::vector<int>{from};
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (prev[w] != -2 || !in_block(w) || blocked[w]) continue;
            prev[w] = v;
            if (accept(w)) {
                std::vector<int> path;
                for (int x = w; x != -1; x = prev[x]) path.push_back(x);
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(w);
        }
    }
    return std::nullopt;
}

}  // namespace

CyclePacking reroute_cycles(const Graph& g, const BlockCutForest& bcf,
                            const std::vector<TreeCycle>& tree_cycles) {
    std::vector<char> used(g.n(), 0);
    for (const auto& tc : tree_cycles) {
        if (tc.hub < 0 || tc.hub >= g.n())
            throw precondition_error("tree cycle hub out of range");
        used[tc.hub] = 1;
    }

    CyclePacking packing;
    packing.min_length = g.n() + 1;
    for (const auto& tc : tree_cycles) {
        if (tc.nodes.empty() || !bcf.is_block_node(tc.nodes.front()) ||
            !bcf.is_block_node(tc.nodes.back()))
            throw precondition_error("tree cycle must start and end at block nodes");
        std::vector<int> blocks_on_route, cuts_on_route;
        for (size_t i = 0; i < tc.nodes.size(); ++i) {
            int node = tc.nodes[i];
            bool expect_block = (i % 2 == 0);
            if (bcf.is_block_node(node) != expect_block)
                throw precondition_error("tree cycle nodes do not alternate block/cut");
            if (expect_block)
                blocks_on_route.push_back(node);
            else
                cuts_on_route.push_back(bcf.cut_vertices[node - bcf.block_count()]);
        }

        std::vector<int> cycle{tc.hub};
        std::vector<char> blocked = used;
        blocked[tc.hub] = 1;
        auto is_hub_neighbor = [&](int v) { return g.has_edge(tc.hub, v); };

        int r = static_cast<int>(blocks_on_route.size());
        if (r == 1) {
            const auto& blk = bcf.blocks[blocks_on_route[0]];
            // Entry at the smallest available hub neighbor in the block.
            int entry = -1;
            for (int v : blk)
                if (!blocked[v] && is_hub_neighbor(v)) {
                    entry = v;
                    break;
                }
            if (entry == -1)
                throw precondition_error("hub has no available neighbor in its only block");
            std::vector<char> b2 = blocked;
            b2[entry] = 1;
            auto exit_path = block_path(g, blk, blocked, entry, [&](int v) {
                return v != entry && !b2[v] && is_hub_neighbor(v);
            });
            if (!exit_path)
                throw precondition_error("no second hub neighbor reachable inside the block");
            cycle.insert(cycle.end(), exit_path->begin(), exit_path->end());
        } else {
            // Entry path: from some hub neighbor to the first cut vertex.
            {
                const auto& blk = bcf.blocks[blocks_on_route[0]];
                auto path = block_path(g, blk, blocked, cuts_on_route[0],
                                       [&](int v) { return is_hub_neighbor(v); });
                if (!path)
                    throw precondition_error(
                        "no path from a hub neighbor to the first cut vertex");
                std::reverse(path->begin(), path->end());
                cycle.insert(cycle.end(), path->begin(), path->end());
                for (int v : *path) blocked[v] = 1;
            }
            // Middle blocks: cut to cut.
            for (int i = 1; i < r - 1; ++i) {
                const auto& blk = bcf.blocks[blocks_on_route[i]];
                int from = cuts_on_route[i - 1], to = cuts_on_route[i];
                std::vector<char> local = blocked;
                local[from] = 0;  // already on the cycle as the previous endpoint
                auto path = block_path(g, blk, local, from, [&](int v) { return v == to; });
                if (!path)
                    throw precondition_error("no avoiding path across block " +
                                             std::to_string(blocks_on_route[i]));
                cycle.insert(cycle.end(), path->begin() + 1, path->end());
                for (int v : *path) blocked[v] = 1;
            }
            // Exit path: last cut vertex to another hub neighbor.
            {
                const auto& blk = bcf.blocks[blocks_on_route[r - 1]];
                int from = cuts_on_route[r - 2];
                std::vector<char> local = blocked;
                local[from] = 0;
                auto path = block_path(g, blk, local, from,
                                       [&](int v) { return v != from && is_hub_neighbor(v); });
                if (!path)
                    throw precondition_error("no exit path to a hub neighbor in the last block");
                cycle.insert(cycle.end(), path->begin() + 1, path->end());
            }
        }
        for (int v : cycle) used[v] = 1;
        packing.min_length = std::min(packing.min_length, static_cast<int>(cycle.size()));
        packing.cycles.push_back(std::move(cycle));
    }
    if (packing.cycles.empty()) packing.min_length = 3;

    auto report = validate_cycle_packing(g, packing);
    if (!report.valid)
        throw verification_error("rerouted cycles failed verification: " +
                                 report.problems.front());
    return packing;
}

// ---------------------------------------------------------------------------
// The dichotomy pipeline
// ---------------------------------------------------------------------------

namespace {

struct PackingContext {
    const Graph& g;
    const Subgraph& gh;       // g minus H
    const BlockCutForest& bcf;  // over gh-local ids
    const PipelineParams& params;

    bool hub_adjacent_to_block(int hub, int node) const {
        for (int v : bcf.blocks[node])
            if (g.has_edge(hub, gh.to_host[v])) return true;
        return false;
    }
};

std::vector<int> pattern_tree_path(int a, int b) {
    // Path between two vertices of a level-order complete binary tree.
    std::vector<int> up_a{a}, up_b{b};
    auto depth = [](int v) { return std::bit_width(static_cast<unsigned>(v + 1)) - 1; };
    int x = a, y = b;
    while (depth(x) > depth(y)) up_a.push_back(x = (x - 1) / 2);
    while (depth(y) > depth(x)) up_b.push_back(y = (y - 1) / 2);
    while (x != y) {
        up_a.push_back(x = (x - 1) / 2);
        up_b.push_back(y = (y - 1) / 2);
    }
    up_a.pop_back();  // drop the common ancestor from one side
    up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
    return up_a;
}

}  // namespace

PipelineOutcome thm2_pipeline(const Graph& g, int k, int t,
                              std::optional<std::vector<int>> h_override,
                              const OracleBudget& budget) {
    if (k < 1) throw precondition_error("thm2_pipeline requires k >= 1");
    if (t < 3) throw precondition_error("thm2_pipeline requires t >= 3");

    PipelineOutcome outcome;
    if (k == 1) {
        // The subtree-count formula degenerates at k = 1; the 2-connected
        // bound already covers this case.
        if (!is_connectivity_at_least(g, 2))
            throw precondition_error("thm2_pipeline with k = 1 requires a 2-connected graph");
        auto cert = thm1_decompose(g);
        outcome.branch = PipelineOutcome::Branch::decomposition;
        outcome.decomposition = std::move(cert.decomposition);
        outcome.width_budget = cert.bound;
        return outcome;
    }

    if (!is_connectivity_at_least(g, k + 1))
        throw precondition_error("thm2_pipeline requires a (k+1)-connected graph");

    std::vector<int> hitting;
    if (h_override) {
        hitting = *h_override;
        std::sort(hitting.begin(), hitting.end());
        hitting.erase(std::unique(hitting.begin(), hitting.end()), hitting.end());
        for (int v : hitting)
            if (v < 0 || v >= g.n())
                throw precondition_error("hitting-set override vertex out of range");
    } else {
        hitting = min_hitting_set(g, t, budget).vertices;
    }
    outcome.hitting_set = hitting;

    auto params = pipeline_params(k, t, static_cast<int>(hitting.size()));
    outcome.params = params;
    int q_target = params.subtree_count_log + params.subtree_height;  // i + j

    std::vector<int> rest;
    {
        std::vector<char> in_h(g.n(), 0);
        for (int v : hitting) in_h[v] = 1;
        for (int v = 0; v < g.n(); ++v)
            if (!in_h[v]) rest.push_back(v);
    }
    auto gh = induced_subgraph(g, rest);
    long long m_budget = std::max(static_cast<long long>((t - 1) / 2) * (t - 2), 1ll);
    long long width_budget = (m_budget + 3) * (q_target + 1) - 3 + static_cast<long long>(hitting.size());
    outcome.width_budget = width_budget;

    if (gh.graph.n() == 0) {
        PathDecomposition d;
        d.bags.push_back(hitting);
        outcome.branch = PipelineOutcome::Branch::decomposition;
        auto report = validate(g, d);
        if (!report.valid)
            throw verification_error("single-bag decomposition failed validation: " +
                                     report.violations.front().describe());
        outcome.decomposition = std::move(d);
        return outcome;
    }

    auto bcf = block_cut_forest(gh.graph);
    auto plan = canonical_forest_plan(bcf);
    outcome.forest_value = plan.max_component_value;

    if (plan.max_component_value <= q_target) {
        // Decomposition branch: blocks have circumference at most t-1 when H
        // is a real hitting set, so each 2-connected block gets the DFS-tree
        // decomposition with bound floor((t-1)/2)(t-2).
        std::map<int, PathDecomposition> block_decomps;
        for (int b = 0; b < bcf.block_count(); ++b) {
            if (bcf.blocks[b].size() <= 2) continue;
            auto sub = induced_subgraph(gh.graph, bcf.blocks[b]);
            Thm1Certificate cert;
            try {
                cert = thm1_decompose(sub.graph, t - 1);
            } catch (const precondition_error& e) {
                throw verification_error(
                    std::string("hitting set leaves a 2-connected block incompatible with "
                                "circumference t-1: ") +
                    e.what());
            }
            PathDecomposition mapped;
            for (auto bag : cert.decomposition.bags) {
                for (int& v : bag) v = sub.to_host[v];
                std::sort(bag.begin(), bag.end());
                mapped.bags.push_back(std::move(bag));
            }
            if (width(mapped) > m_budget)
                throw verification_error("block decomposition exceeds the m budget");
            block_decomps[b] = std::move(mapped);
        }
        auto composed = lemma2_compose(gh.graph, bcf, plan.decomposition, block_decomps);
        PathDecomposition final_d;
        for (auto bag : composed.bags) {
            for (int& v : bag) v = gh.to_host[v];
            for (int v : hitting) bag.push_back(v);
            std::sort(bag.begin(), bag.end());
            final_d.bags.push_back(std::move(bag));
        }
        auto report = validate(g, final_d);
        if (!report.valid)
            throw verification_error("pipeline decomposition failed validation: " +
                                     report.violations.front().describe());
        if (width(final_d) > width_budget) {
            std::ostringstream msg;
            msg << "pipeline width " << width(final_d) << " exceeds budget " << width_budget;
            throw verification_error(msg.str());
        }
        outcome.branch = PipelineOutcome::Branch::decomposition;
        outcome.decomposition = std::move(final_d);
        return outcome;
    }

    // Packing branch: extract a complete binary tree of height i+j from the
    // widest forest component, realize it as a subdivision with block leaves,
    // select k hubs by adjacency counts, and route one long cycle through
    // each of 2^i disjoint height-j subtrees.
    if (q_target > 20)
        throw budget_error("packing branch needs a cbt(i+j) pattern with i+j = " +
                           std::to_string(q_target) + "; capped at 20");
    outcome.branch = PipelineOutcome::Branch::packing;
    PackingContext ctx{g, gh, bcf, params};

    int comp_index = -1;
    for (size_t c = 0; c < plan.components.size(); ++c)
        if (plan.component_values[c] == plan.max_component_value) {
            comp_index = static_cast<int>(c);
            break;
        }
    auto forest = bcf.forest_graph();
    auto comp_sub = induced_subgraph(forest, plan.components[comp_index]);
    int local_root = comp_sub.to_local(plan.component_roots[comp_index]);

    auto model = extract_cbt_minor(comp_sub.graph, local_root, q_target);
    auto subdivision = minor_to_subdivision(comp_sub.graph, model);

    const int i_log = params.subtree_count_log;
    const int j_height = params.subtree_height;
    const int pattern_leaves = 1 << q_target;
    const int first_leaf = (1 << q_target) - 1;

    // Subdivision degree and leaf checks.
    {
        std::vector<int> degree(comp_sub.graph.n(), 0);
        for (const auto& [edge, path] : subdivision.edge_paths) {
            degree[path.front()] += 1;
            degree[path.back()] += 1;
            for (size_t idx = 1; idx + 1 < path.size(); ++idx) degree[path[idx]] += 2;
        }
        for (int v = 0; v < comp_sub.graph.n(); ++v)
            if (degree[v] > 3)
                throw verification_error("subdivision vertex of degree above 3");
    }
    std::vector<int> leaf_nodes(pattern_leaves);  // forest node id per pattern leaf position
    for (int pos = 0; pos < pattern_leaves; ++pos) {
        int node = comp_sub.to_host[subdivision.branch_vertex[first_leaf + pos]];
        if (!bcf.is_block_node(node))
            throw verification_error("subdivision leaf is not a block node");
        leaf_nodes[pos] = node;
    }

    // Adjacency counts d(v) over pattern leaves.
    std::vector<std::pair<long long, int>> by_count;  // (-d, v) for stable sort
    std::vector<std::vector<char>> adjacent(hitting.size(),
                                            std::vector<char>(pattern_leaves, 0));
    for (size_t hi = 0; hi < hitting.size(); ++hi) {
        long long d = 0;
        for (int pos = 0; pos < pattern_leaves; ++pos)
            if (ctx.hub_adjacent_to_block(hitting[hi], leaf_nodes[pos])) {
                adjacent[hi][pos] = 1;
                ++d;
            }
        by_count.push_back({-d, static_cast<int>(hi)});
    }
    for (int pos = 0; pos < pattern_leaves; ++pos) {
        int with_neighbors = 0;
        for (size_t hi = 0; hi < hitting.size(); ++hi)
            if (adjacent[hi][pos]) ++with_neighbors;
        if (with_neighbors < k)
            throw verification_error("a leaf of the subdivision has fewer than k neighbors in H");
    }
    std::sort(by_count.begin(), by_count.end());
    if (static_cast<int>(hitting.size()) < k)
        throw verification_error("hitting set smaller than k in the packing branch");
    std::vector<int> selected(by_count.size() ? k : 0);
    for (int idx = 0; idx < k; ++idx) selected[idx] = by_count[idx].second;
    {
        long long dk = -by_count[k - 1].first;
        long long denom = params.h - k + 1;
        if (dk * denom < (1ll << q_target))
            throw verification_error("selected hub adjacency below 2^(i+j)/(h-k+1)");
    }

    // Good pairs: hub adjacent to at least 2^(j-1)/(h-k+1) leaves of a subtree.
    const int subtree_count = 1 << i_log;
    const int leaves_per_subtree = 1 << j_height;
    long long denom = params.h - k + 1;
    long long goodness_threshold = 1ll << (j_height - 1);
    std::vector<std::vector<int>> good(selected.size());
    for (size_t si = 0; si < selected.size(); ++si) {
        for (int m = 0; m < subtree_count; ++m) {
            long long count = 0;
            for (int pos = m * leaves_per_subtree; pos < (m + 1) * leaves_per_subtree; ++pos)
                if (adjacent[selected[si]][pos]) ++count;
            if (count * denom >= goodness_threshold) good[si].push_back(m);
        }
        if (static_cast<int>(good[si].size()) < k)
            throw verification_error("hub " + std::to_string(hitting[selected[si]]) +
                                     " is in fewer than k good pairs");
    }

    // Greedy matching, scarcest hub first.
    std::vector<int> order(selected.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (good[a].size() != good[b].size()) return good[a].size() < good[b].size();
        return hitting[selected[a]] < hitting[selected[b]];
    });
    std::vector<char> subtree_taken(subtree_count, 0);
    std::vector<std::pair<int, int>> assignment;  // (hub, subtree)
    for (int si : order) {
        int pick = -1;
        for (int m : good[si])
            if (!subtree_taken[m]) {
                pick = m;
                break;
            }
        if (pick == -1)
            throw verification_error("greedy good-pair matching failed despite k good pairs each");
        subtree_taken[pick] = 1;
        assignment.push_back({hitting[selected[si]], pick});
    }
    std::sort(assignment.begin(), assignment.end());
    outcome.good_pair_assignment = assignment;

    // Host-id copy of the block-cut forest for rerouting (same node order).
    BlockCutForest host_bcf = bcf;
    for (auto& blk : host_bcf.blocks) {
        for (int& v : blk) v = gh.to_host[v];
        std::sort(blk.begin(), blk.end());
    }
    for (auto& e : host_bcf.block_edges)
        for (auto& [u, v] : e) {
            u = gh.to_host[u];
            v = gh.to_host[v];
        }
    for (int& v : host_bcf.cut_vertices) v = gh.to_host[v];

    std::vector<TreeCycle> tree_cycles;
    for (auto [hub, m] : assignment) {
        int hi = -1;
        for (size_t idx = 0; idx < hitting.size(); ++idx)
            if (hitting[idx] == hub) hi = static_cast<int>(idx);
        int lo = -1, hi_label = -1;
        for (int local = 0; local < leaves_per_subtree; ++local) {
            int pos = m * leaves_per_subtree + local;
            if (adjacent[hi][pos]) {
                if (lo == -1) lo = local;
                hi_label = local;
            }
        }
        if (lo == -1 || (static_cast<long long>(hi_label - lo + 1)) * denom < goodness_threshold)
            throw verification_error("adjacent leaf label spread below the required bound");
        int leaf_a = first_leaf + m * leaves_per_subtree + lo;
        int leaf_b = first_leaf + m * leaves_per_subtree + hi_label;

        // Concatenate subdivision paths along the pattern path leaf_a..leaf_b.
        auto pattern_path = pattern_tree_path(leaf_a, leaf_b);
        std::vector<int> node_path{subdivision.branch_vertex[pattern_path[0]]};
        for (size_t pi = 0; pi + 1 < pattern_path.size(); ++pi) {
            int x = pattern_path[pi], y = pattern_path[pi + 1];
            auto it = subdivision.edge_paths.find({std::min(x, y), std::max(x, y)});
            auto seg = it->second;
            if (seg.front() != node_path.back()) std::reverse(seg.begin(), seg.end());
            node_path.insert(node_path.end(), seg.begin() + 1, seg.end());
        }
        TreeCycle tc;
        tc.hub = hub;
        for (int local_node : node_path) tc.nodes.push_back(comp_sub.to_host[local_node]);
        tree_cycles.push_back(std::move(tc));
    }

    auto packing = reroute_cycles(g, host_bcf, tree_cycles);
    for (const auto& cycle : packing.cycles)
        if (static_cast<int>(cycle.size()) < t) {
            std::ostringstream msg;
            msg << "rerouted cycle of length " << cycle.size() << " is below t = " << t;
            throw verification_error(msg.str());
        }
    packing.min_length = t;
    auto report = validate_cycle_packing(g, packing);
    if (!report.valid)
        throw verification_error("final cycle packing failed verification: " +
                                 report.problems.front());
    if (static_cast<int>(packing.cycles.size()) != k)
        throw verification_error("packing branch produced the wrong number of cycles");
    outcome.packing = std::move(packing);
    return outcome;
}

}  // namespace cpw
