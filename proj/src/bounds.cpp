#include "cpw/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "cpw/trees.hpp"

namespace cpw {

// ---------------------------------------------------------------------------
// Theorem 1: DFS trees of 2-connected bounded-circumference graphs
// ---------------------------------------------------------------------------

Thm1Certificate thm1_decompose(const Graph& g, std::optional<int> t,
                               const OracleBudget& oracle_budget) {
    if (g.n() < 3) throw precondition_error("thm1_decompose needs at least 3 vertices");
    if (!is_connectivity_at_least(g, 2))
        throw precondition_error("thm1_decompose requires a 2-connected graph");
    int circ = t ? *t : circumference(g, oracle_budget).length;
    if (circ < 3) throw precondition_error("circumference bound below 3 on a 2-connected graph");

    auto tree = dfs_tree(g, 0);
    for (auto [u, v] : g.edges()) {
        if (tree.parent[u] == v || tree.parent[v] == u) continue;  // tree edge
        int span = edge_span(tree, u, v);
        if (span > circ - 1) {
            std::ostringstream msg;
            msg << "non-tree edge " << u << "-" << v << " has span " << span
                << " > t-1 = " << circ - 1 << "; the supplied circumference bound is wrong";
            throw verification_error(msg.str());
        }
    }
    long long bound = static_cast<long long>(circ / 2) * (circ - 1);
    int height = tree.forest_height();
    if (height > bound) {
        std::ostringstream msg;
        msg << "DFS height " << height << " exceeds floor(t/2)(t-1) = " << bound;
        throw verification_error(msg.str());
    }

    Thm1Certificate cert;
    cert.decomposition = forest_closure_decomposition(tree);
    cert.circumference_bound = circ;
    cert.dfs_height = height;
    cert.bound = bound;
    auto report = validate(g, cert.decomposition);
    if (!report.valid)
        throw verification_error("thm1 decomposition failed validation: " +
                                 report.violations.front().describe());
    if (width(cert.decomposition) > bound)
        throw verification_error("thm1 decomposition width exceeds its bound");
    return cert;
}

// ---------------------------------------------------------------------------
// Lemma 2: composing block decompositions along the block-cut forest
// ---------------------------------------------------------------------------

namespace {

struct Composer {
    const BlockCutForest& bcf;
    const std::map<int, PathDecomposition>& block_decomps;

    // Nodes use block-cut forest ids: blocks 0..B-1, cuts B..B+C-1.
    int cut_node_of_host(int host) const { return bcf.cut_node(bcf.cut_index_of(host)); }
    int host_of_cut_node(int node) const { return bcf.cut_vertices[node - bcf.block_count()]; }

    const PathDecomposition& decomp_of_block(int b) const {
        auto it = block_decomps.find(b);
        if (it == block_decomps.end())
            throw precondition_error("missing decomposition for block " + std::to_string(b));
        return it->second;
    }

    // Active cut nodes of a block list: host vertices lying in >= 2 of them.
    std::vector<int> active_cuts(const std::vector<int>& blocks_active) const {
        std::map<int, int> count;
        for (int b : blocks_active)
            for (int v : bcf.blocks[b])
                if (bcf.cut_index_of(v) != -1) ++count[v];
        std::vector<int> cuts;
        for (auto [v, c] : count)
            if (c >= 2) cuts.push_back(cut_node_of_host(v));
        return cuts;
    }

    std::vector<std::vector<int>> restrict_bags(const std::vector<std::vector<int>>& bags,
                                                const std::set<int>& keep) const {
        std::vector<std::vector<int>> out;
        for (const auto& bag : bags) {
            std::vector<int> nb;
            for (int x : bag)
                if (keep.count(x)) nb.push_back(x);
            if (!nb.empty()) out.push_back(std::move(nb));
        }
        return out;
    }

    // One component: a set of blocks whose union is connected, plus a path
    // decomposition of the component's block-cut forest (over node ids).
    std::vector<std::vector<int>> compose(const std::vector<int>& blocks_active,
                                          std::vector<std::vector<int>> bags) const {
        if (blocks_active.size() == 1) return decomp_of_block(blocks_active[0]).bags;

        auto cuts = active_cuts(blocks_active);
        std::set<int> node_set(blocks_active.begin(), blocks_active.end());
        node_set.insert(cuts.begin(), cuts.end());
        bags = restrict_bags(bags, node_set);
        if (bags.empty())
            throw precondition_error("forest decomposition does not cover a component");

        // Adjacency inside the active forest.
        auto forest_neighbors = [&](int node) {
            std::vector<int> out;
            if (bcf.is_block_node(node)) {
                for (int v : bcf.blocks[node]) {
                    int ci = bcf.cut_index_of(v);
                    if (ci != -1 && node_set.count(bcf.cut_node(ci))) out.push_back(bcf.cut_node(ci));
                }
            } else {
                int host = host_of_cut_node(node);
                for (int b : blocks_active)
                    if (std::binary_search(bcf.blocks[b].begin(), bcf.blocks[b].end(), host))
                        out.push_back(b);
            }
            return out;
        };

        // x from the first bag, y from the last, minimum ids.
        int x = *std::min_element(bags.front().begin(), bags.front().end());
        int y = *std::min_element(bags.back().begin(), bags.back().end());

        // Path from x to y in the forest, then extend both ends maximally
        // toward minimum-id leaves.
        std::vector<int> path;
        {
            std::map<int, int> prev;
            std::queue<int> q;
            q.push(x);
            prev[x] = -1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                if (v == y) break;
                for (int w : forest_neighbors(v))
                    if (!prev.count(w)) {
                        prev[w] = v;
                        q.push(w);
                    }
            }
            if (!prev.count(y))
                throw precondition_error("block-cut component is not connected in the forest");
            for (int v = y; v != -1; v = prev[v]) path.push_back(v);
            std::reverse(path.begin(), path.end());
        }
        std::set<int> on_path(path.begin(), path.end());
        auto extend = [&](bool front) {
            while (true) {
                int end = front ? path.front() : path.back();
                int next = -1;
                for (int w : forest_neighbors(end))
                    if (!on_path.count(w)) {
                        next = w;
                        break;
                    }
                if (next == -1) break;
                on_path.insert(next);
                if (front)
                    path.insert(path.begin(), next);
                else
                    path.push_back(next);
            }
        };
        extend(true);
        extend(false);
        if (!bcf.is_block_node(path.front()) || !bcf.is_block_node(path.back()))
            throw verification_error("maximal forest path does not end at blocks");

        // Path blocks and the cut vertices between them (host ids).
        std::vector<int> path_blocks, path_cuts;
        for (int node : path) {
            if (bcf.is_block_node(node))
                path_blocks.push_back(node);
            else
                path_cuts.push_back(host_of_cut_node(node));
        }

        // Blocks hanging off each path cut vertex.
        std::set<int> core_blocks(path_blocks.begin(), path_blocks.end());
        std::vector<std::vector<int>> hanging(path_cuts.size());
        for (size_t i = 0; i < path_cuts.size(); ++i) {
            for (int b : blocks_active)
                if (!core_blocks.count(b) &&
                    std::binary_search(bcf.blocks[b].begin(), bcf.blocks[b].end(), path_cuts[i]))
                    hanging[i].push_back(b);
        }
        std::set<int> used_blocks = core_blocks;
        for (const auto& list : hanging) used_blocks.insert(list.begin(), list.end());

        // Decomposition of the core: block bags with neighbors' cut vertices
        // injected, hanging blocks spliced after their cut vertex.
        std::vector<std::vector<int>> core_bags;
        auto append_with = [&](const PathDecomposition& d, std::vector<int> extra) {
            for (auto bag : d.bags) {
                for (int v : extra)
                    if (std::find(bag.begin(), bag.end(), v) == bag.end()) bag.push_back(v);
                std::sort(bag.begin(), bag.end());
                core_bags.push_back(std::move(bag));
            }
        };
        int p = static_cast<int>(path_blocks.size());
        for (int i = 0; i < p; ++i) {
            std::vector<int> extra;
            if (i > 0) extra.push_back(path_cuts[i - 1]);
            if (i < p - 1) extra.push_back(path_cuts[i]);
            append_with(decomp_of_block(path_blocks[i]), extra);
            if (i < p - 1)
                for (int b : hanging[i]) append_with(decomp_of_block(b), {path_cuts[i]});
        }
        core_bags = normalise_bags(std::move(core_bags));

        // Host vertices of the core.
        std::set<int> core_vertices;
        for (int b : used_blocks) core_vertices.insert(bcf.blocks[b].begin(), bcf.blocks[b].end());

        // Remaining blocks split into components of the residual graph: two
        // blocks are together when they share a host vertex.
        std::vector<int> rest;
        for (int b : blocks_active)
            if (!used_blocks.count(b)) rest.push_back(b);
        std::vector<int> uf(rest.size());
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](auto&& self, int a) -> int { return uf[a] == a ? a : uf[a] = self(self, uf[a]); };
        std::map<int, std::vector<int>> by_vertex;
        for (size_t i = 0; i < rest.size(); ++i)
            for (int v : bcf.blocks[rest[i]]) by_vertex[v].push_back(static_cast<int>(i));
        for (auto& [v, list] : by_vertex)
            for (size_t i = 1; i < list.size(); ++i)
                uf[find(find, list[i])] = find(find, list[0]);

        std::map<int, std::vector<int>> comps;  // representative -> blocks
        for (size_t i = 0; i < rest.size(); ++i) comps[find(find, static_cast<int>(i))].push_back(rest[i]);

        // Recurse per residual component and splice at the first core bag of
        // its unique attachment vertex.
        std::map<int, std::vector<std::vector<int>>> splice_at;  // bag index -> sub bags
        for (auto& [rep, comp_blocks] : comps) {
            std::set<int> comp_vertices;
            for (int b : comp_blocks)
                comp_vertices.insert(bcf.blocks[b].begin(), bcf.blocks[b].end());
            std::vector<int> shared;
            for (int v : comp_vertices)
                if (core_vertices.count(v)) shared.push_back(v);
            if (shared.size() != 1)
                throw verification_error("residual component attaches at " +
                                         std::to_string(shared.size()) + " vertices, expected 1");
            int w = shared.front();
            auto sub = compose(comp_blocks, bags);
            int first = -1;
            for (int i = 0; i < static_cast<int>(core_bags.size()) && first == -1; ++i)
                if (std::find(core_bags[i].begin(), core_bags[i].end(), w) != core_bags[i].end())
                    first = i;
            if (first == -1)
                throw verification_error("attachment vertex missing from the core decomposition");
            if (splice_at.count(first))
                throw verification_error("two residual components splice into one bag");
            splice_at[first] = std::move(sub);
        }

        std::vector<std::vector<int>> out;
        for (int i = 0; i < static_cast<int>(core_bags.size()); ++i) {
            auto it = splice_at.find(i);
            if (it == splice_at.end()) {
                out.push_back(core_bags[i]);
                continue;
            }
            for (const auto& sub_bag : it->second) {
                std::vector<int> merged = core_bags[i];
                for (int v : sub_bag)
                    if (std::find(merged.begin(), merged.end(), v) == merged.end())
                        merged.push_back(v);
                std::sort(merged.begin(), merged.end());
                out.push_back(std::move(merged));
            }
        }
        return out;
    }
};

PathDecomposition canonical_small_block_decomposition(const BlockCutForest& bcf, int b) {
    PathDecomposition d;
    d.bags.push_back(bcf.blocks[b]);
    return d;
}

}  // namespace

PathDecomposition lemma2_compose(const Graph& g, const BlockCutForest& bcf,
                                 const PathDecomposition& forest_decomp,
                                 const std::map<int, PathDecomposition>& block_decomps) {
    // The supplied forest must describe g.
    auto recomputed = block_cut_forest(g);
    if (recomputed.blocks != bcf.blocks || recomputed.cut_vertices != bcf.cut_vertices)
        throw precondition_error("block-cut forest does not match the graph");

    auto forest = bcf.forest_graph();
    auto forest_report = validate(forest, forest_decomp);
    if (!forest_report.valid)
        throw precondition_error("forest decomposition invalid: " +
                                 forest_report.violations.front().describe());

    // Complete the block decompositions with canonical bags for bridges and
    // isolated vertices, and validate every entry against its block.
    std::map<int, PathDecomposition> decomps = block_decomps;
    int m = 0;
    for (int b = 0; b < bcf.block_count(); ++b) {
        if (!decomps.count(b)) {
            if (bcf.blocks[b].size() <= 2)
                decomps[b] = canonical_small_block_decomposition(bcf, b);
            else
                throw precondition_error("no decomposition supplied for 2-connected block " +
                                         std::to_string(b));
        }
        auto sub = induced_subgraph(g, bcf.blocks[b]);
        PathDecomposition local;
        for (const auto& bag : decomps[b].bags) {
            std::vector<int> lb;
            for (int v : bag) {
                int lv = sub.to_local(v);
                if (lv == -1)
                    throw precondition_error("block decomposition for block " + std::to_string(b) +
                                             " mentions a vertex outside the block");
                lb.push_back(lv);
            }
            std::sort(lb.begin(), lb.end());
            local.bags.push_back(std::move(lb));
        }
        auto rep = validate(sub.graph, local);
        if (!rep.valid)
            throw precondition_error("block decomposition for block " + std::to_string(b) +
                                     " invalid: " + rep.violations.front().describe());
        m = std::max(m, width(decomps[b]));
    }
    int n_forest = width(forest_decomp);

    Composer composer{bcf, decomps};
    // Components of g correspond to components of the forest; group blocks.
    std::vector<std::vector<int>> block_groups;
    {
        std::vector<int> uf(bcf.block_count());
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](auto&& self, int a) -> int { return uf[a] == a ? a : uf[a] = self(self, uf[a]); };
        std::map<int, std::vector<int>> by_vertex;
        for (int b = 0; b < bcf.block_count(); ++b)
            for (int v : bcf.blocks[b]) by_vertex[v].push_back(b);
        for (auto& [v, list] : by_vertex)
            for (size_t i = 1; i < list.size(); ++i) uf[find(find, list[i])] = find(find, list[0]);
        std::map<int, std::vector<int>> groups;
        for (int b = 0; b < bcf.block_count(); ++b) groups[find(find, b)].push_back(b);
        for (auto& [rep, list] : groups) block_groups.push_back(list);
    }

    PathDecomposition out;
    for (const auto& group : block_groups) {
        auto bags = composer.compose(group, forest_decomp.bags);
        for (auto& bag : bags) out.bags.push_back(std::move(bag));
    }
    out = strip_empty_bags(std::move(out));

    auto report = validate(g, out);
    if (!report.valid)
        throw verification_error("composed decomposition failed validation: " +
                                 report.violations.front().describe());
    long long budget = static_cast<long long>(m + 3) * (n_forest + 1) - 3;
    if (width(out) > budget) {
        std::ostringstream msg;
        msg << "composed width " << width(out) << " exceeds (m+3)(n+1)-3 = " << budget
            << " with m = " << m << ", n = " << n_forest;
        throw verification_error(msg.str());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical forest plan (rooted decompositions per component)
// ---------------------------------------------------------------------------

ForestPlan canonical_forest_plan(const BlockCutForest& bcf) {
    ForestPlan plan;
    auto forest = bcf.forest_graph();
    for (const auto& comp : forest.components()) {
        auto sub = induced_subgraph(forest, comp);
        int best_root = -1, best_value = -1;
        for (int r = 0; r < sub.graph.n(); ++r) {
            int value = rooted_pw_map(sub.graph, r).root_value();
            if (best_root == -1 || value < best_value) {
                best_root = r;
                best_value = value;
            }
        }
        plan.component_roots.push_back(sub.to_host[best_root]);
        plan.components.push_back(comp);
        plan.component_values.push_back(best_value);
        plan.max_component_value = std::max(plan.max_component_value, best_value);
        auto local = rooted_decomposition(sub.graph, best_root);
        for (auto& bag : local.bags) {
            for (int& v : bag) v = sub.to_host[v];
            std::sort(bag.begin(), bag.end());
            plan.decomposition.bags.push_back(std::move(bag));
        }
    }
    return plan;
}

}  // namespace cpw
