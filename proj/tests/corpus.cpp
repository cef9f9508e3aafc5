#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace corpus {

using cpw::Graph;

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

Graph mask_to_graph(int n, EdgeMask mask) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_index(i, j)) & 1) g.add_edge(i, j);
    return g;
}

EdgeMask graph_to_mask(const Graph& g) {
    EdgeMask mask = 0;
    for (auto [u, v] : g.edges()) mask |= EdgeMask(1) << pair_index(u, v);
    return mask;
}

namespace {

// Iterated degree refinement; returns a color per vertex. Isomorphic graphs
// get the same color multiset, so restricting orderings to color-sorted ones
// keeps the canonical form well-defined.
std::vector<int> refine_colors(int n, EdgeMask mask) {
    std::vector<std::vector<int>> adj(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_index(i, j)) & 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = static_cast<int>(adj[v].size());
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> key{color[v]};
            for (int w : adj[v]) key.push_back(color[w]);
            std::sort(key.begin() + 1, key.end());
            keys[v] = {std::move(key), v};
        }
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int rank = 0;
        for (int idx = 0; idx < n; ++idx) {
            if (idx > 0 && sorted[idx].first != sorted[idx - 1].first) ++rank;
            next[sorted[idx].second] = rank;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

}  // namespace

EdgeMask canonical_form(int n, EdgeMask mask) {
    auto color = refine_colors(n, mask);
    // Cells of equal color, ordered by color value.
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);

    std::vector<std::vector<int>> cell_list;
    for (auto& [c, verts] : cells) cell_list.push_back(verts);

    EdgeMask best = ~EdgeMask(0);
    std::vector<int> ordering;
    ordering.reserve(n);
    auto encode = [&]() {
        std::vector<int> pos(n);
        for (int p = 0; p < n; ++p) pos[ordering[p]] = p;
        EdgeMask code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if ((mask >> pair_index(i, j)) & 1) {
                    int a = pos[i], b = pos[j];
                    if (a > b) std::swap(a, b);
                    code |= EdgeMask(1) << pair_index(a, b);
                }
        best = std::min(best, code);
    };
    auto recurse = [&](auto&& self, size_t cell_idx) -> void {
        if (cell_idx == cell_list.size()) {
            encode();
            return;
        }
        auto perm = cell_list[cell_idx];
        std::sort(perm.begin(), perm.end());
        do {
            size_t base = ordering.size();
            ordering.insert(ordering.end(), perm.begin(), perm.end());
            self(self, cell_idx + 1);
            ordering.resize(base);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    recurse(recurse, 0);
    return best;
}

const std::vector<EdgeMask>& all_graphs(int n) {
    if (n < 1 || n > 8) throw cpw::budget_error("all_graphs supports 1..8 vertices");
    static std::array<std::vector<EdgeMask>, 9> cache;
    if (!cache[n].empty()) return cache[n];
    if (n == 1) {
        cache[1] = {0};
        return cache[1];
    }
    const auto& parents = all_graphs(n - 1);
    std::set<EdgeMask> out;
    for (EdgeMask parent : parents) {
        for (EdgeMask nbr = 0; nbr < (EdgeMask(1) << (n - 1)); ++nbr) {
            EdgeMask mask = parent;
            for (int i = 0; i < n - 1; ++i)
                if ((nbr >> i) & 1) mask |= EdgeMask(1) << pair_index(i, n - 1);
            out.insert(canonical_form(n, mask));
        }
    }
    cache[n].assign(out.begin(), out.end());
    return cache[n];
}

std::vector<Graph> all_two_connected_upto(int max_n) {
    std::vector<Graph> out;
    for (int n = 3; n <= max_n; ++n)
        for (EdgeMask mask : all_graphs(n)) {
            Graph g = mask_to_graph(n, mask);
            if (cpw::is_connectivity_at_least(g, 2)) out.push_back(std::move(g));
        }
    return out;
}

std::vector<Graph> all_with_connectivity(int n, int k) {
    std::vector<Graph> out;
    for (EdgeMask mask : all_graphs(n)) {
        Graph g = mask_to_graph(n, mask);
        if (cpw::is_connectivity_at_least(g, k)) out.push_back(std::move(g));
    }
    return out;
}

Graph random_graph(Rng& rng, int n, int edge_percent) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(edge_percent)) g.add_edge(i, j);
    return g;
}

Graph random_with_connectivity_at_least(Rng& rng, int n, int k) {
    for (int attempt = 0;; ++attempt) {
        int percent = 35 + std::min(50, attempt / 5) + rng.below(25);
        Graph g = random_graph(rng, n, std::min(percent, 95));
        if (cpw::is_connectivity_at_least(g, k)) return g;
    }
}

Graph random_tree(Rng& rng, int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, rng.below(v));
    return g;
}

cpw::RootedForest random_forest(Rng& rng, int n) {
    std::vector<int> parent(n, -1);
    for (int v = 1; v < n; ++v)
        if (!rng.chance(15)) parent[v] = rng.below(v);
    return cpw::forest_from_parents(std::move(parent));
}

Graph random_block_glued(Rng& rng, int target_n) {
    Graph g(1);
    while (g.n() < target_n) {
        int attach = rng.below(g.n());
        if (rng.chance(35)) {
            Graph next(g.n() + 1);
            for (auto [u, v] : g.edges()) next.add_edge(u, v);
            next.add_edge(attach, g.n());
            g = std::move(next);
            continue;
        }
        int bn = 3 + rng.below(5);
        Graph block(bn);
        bool made = false;
        for (int tries = 0; tries < 15 && !made; ++tries) {
            Graph cand = random_graph(rng, bn, 55);
            if (cpw::is_connectivity_at_least(cand, 2)) {
                block = std::move(cand);
                made = true;
            }
        }
        if (!made) {
            block = cycle_graph(bn);
        }
        Graph next(g.n() + bn - 1);
        for (auto [u, v] : g.edges()) next.add_edge(u, v);
        auto map_vertex = [&](int v) { return v == 0 ? attach : g.n() + v - 1; };
        for (auto [u, v] : block.edges()) next.add_edge(map_vertex(u), map_vertex(v));
        g = std::move(next);
    }
    return g;
}

Graph packing_gadget(int shape_height, int hubs, std::vector<int>* hub_ids) {
    int shape_n = (1 << (shape_height + 1)) - 1;
    auto level = [](int v) {
        int l = -1;
        for (int x = v + 1; x; x >>= 1) ++l;
        return l;
    };
    auto is_block = [&](int v) { return ((shape_height - level(v)) % 2) == 0; };
    std::vector<int> host_of_cut(shape_n, -1);
    int n = 0;
    for (int v = 0; v < shape_n; ++v)
        if (!is_block(v)) host_of_cut[v] = n++;
    std::vector<std::array<int, 3>> triangles;
    for (int v = 0; v < shape_n; ++v) {
        if (!is_block(v)) continue;
        std::vector<int> verts;
        if (v != 0) verts.push_back(host_of_cut[(v - 1) / 2]);
        if (2 * v + 1 < shape_n) {
            verts.push_back(host_of_cut[2 * v + 1]);
            verts.push_back(host_of_cut[2 * v + 2]);
        }
        while (verts.size() < 3) verts.push_back(n++);
        triangles.push_back({verts[0], verts[1], verts[2]});
    }
    Graph g(n + hubs);
    for (const auto& tri : triangles) {
        g.add_edge(tri[0], tri[1]);
        g.add_edge(tri[1], tri[2]);
        g.add_edge(tri[0], tri[2]);
    }
    for (int h = 0; h < hubs; ++h) {
        int hub = n + h;
        if (hub_ids) hub_ids->push_back(hub);
        for (int v = 0; v < hub; ++v) g.add_edge(v, hub);
    }
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace corpus
