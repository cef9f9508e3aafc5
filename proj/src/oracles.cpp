#include "cpw/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <string>

namespace cpw {

namespace {

void require_budget(const Graph& g, const OracleBudget& budget, const char* what) {
    if (g.n() > budget.max_vertices)
        throw budget_error(std::string(what) + ": instance has " + std::to_string(g.n()) +
                           " vertices, ceiling is " + std::to_string(budget.max_vertices));
}

struct Deadline {
    std::chrono::steady_clock::time_point end;
    bool armed = false;
    explicit Deadline(double seconds) {
        if (seconds > 0) {
            end = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(seconds));
            armed = true;
        }
    }
    void check(const char* what) const {
        if (armed && std::chrono::steady_clock::now() > end)
            throw budget_error(std::string(what) + ": time limit exceeded");
    }
};

std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> mask(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        mask[u] |= 1u << v;
        mask[v] |= 1u << u;
    }
    return mask;
}

}  // namespace

// ---------------------------------------------------------------------------
// Pathwidth = vertex separation number
// ---------------------------------------------------------------------------

PathwidthResult exact_pathwidth(const Graph& g, const OracleBudget& budget) {
    require_budget(g, budget, "exact_pathwidth");
    int n = g.n();
    if (n == 0) throw precondition_error("exact_pathwidth of empty graph");
    if (n > 26) throw budget_error("exact_pathwidth: subset DP capped at 26 vertices");
    auto adj = adjacency_masks(g);
    const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);

    auto boundary = [&](uint32_t placed) {
        int c = 0;
        for (uint32_t s = placed; s;) {
            int v = std::countr_zero(s);
            s &= s - 1;
            if (adj[v] & ~placed) ++c;
        }
        return c;
    };

    std::vector<uint8_t> f(size_t(1) << n, 0);
    Deadline deadline(budget.time_limit_seconds);
    for (uint32_t s = 1; s <= full; ++s) {
        if ((s & 0xFFFF) == 0) deadline.check("exact_pathwidth");
        int cost = boundary(s);
        int best = 255;
        for (uint32_t t = s; t;) {
            int v = std::countr_zero(t);
            t &= t - 1;
            best = std::min(best, static_cast<int>(f[s & ~(1u << v)]));
        }
        f[s] = static_cast<uint8_t>(std::max(cost, best));
    }

    // Reconstruct an optimal ordering: v may be placed last in S whenever
    // f[S \ v] <= f[S] (the boundary cost of S itself is <= f[S] already).
    std::vector<int> ordering(n);
    uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        int pick = -1;
        for (uint32_t t = s; t;) {
            int v = std::countr_zero(t);
            t &= t - 1;
            if (f[s & ~(1u << v)] <= f[s]) {
                pick = v;
                break;
            }
        }
        ordering[i] = pick;
        s &= ~(1u << pick);
    }

    PathwidthResult result;
    result.value = f[full];
    result.ordering = ordering;
    // Bags: the i-th bag holds ordering[i] plus every earlier vertex that
    // still has a neighbor at position >= i.
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[ordering[i]] = i;
    for (int i = 0; i < n; ++i) {
        std::vector<int> bag{ordering[i]};
        for (int j = 0; j < i; ++j) {
            int u = ordering[j];
            for (int w : g.neighbors(u))
                if (pos[w] >= i) {
                    bag.push_back(u);
                    break;
                }
        }
        std::sort(bag.begin(), bag.end());
        result.decomposition.bags.push_back(std::move(bag));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Treedepth
// ---------------------------------------------------------------------------

namespace {

struct TreedepthSolver {
    const std::vector<uint32_t>& adj;
    std::vector<uint8_t> memo;  // 0 = unknown, for connected masks only

    explicit TreedepthSolver(const std::vector<uint32_t>& adj, int n)
        : adj(adj), memo(size_t(1) << n, 0) {}

    std::vector<uint32_t> split(uint32_t mask) const {
        std::vector<uint32_t> comps;
        uint32_t rest = mask;
        while (rest) {
            uint32_t comp = 0, frontier = rest & (-rest);
            while (frontier) {
                comp |= frontier;
                uint32_t grow = 0;
                for (uint32_t s = frontier; s;) {
                    int v = std::countr_zero(s);
                    s &= s - 1;
                    grow |= adj[v] & rest & ~comp;
                }
                frontier = grow;
            }
            comps.push_back(comp);
            rest &= ~comp;
        }
        return comps;
    }

    int forest(uint32_t mask) {
        int best = 0;
        for (uint32_t comp : split(mask)) best = std::max(best, connected(comp));
        return best;
    }

    int connected(uint32_t mask) {
        if (std::popcount(mask) == 1) return 1;
        if (memo[mask]) return memo[mask];
        int best = 255;
        for (uint32_t t = mask; t;) {
            int v = std::countr_zero(t);
            t &= t - 1;
            best = std::min(best, forest(mask & ~(1u << v)));
        }
        memo[mask] = static_cast<uint8_t>(1 + best);
        return 1 + best;
    }

    // Rebuilds an elimination forest matching the memoised optimum.
    void witness(uint32_t mask, int parent_vertex, std::vector<int>& parent) {
        for (uint32_t comp : split(mask)) {
            int target = connected(comp);
            if (std::popcount(comp) == 1) {
                parent[std::countr_zero(comp)] = parent_vertex;
                continue;
            }
            for (uint32_t t = comp; t;) {
                int v = std::countr_zero(t);
                t &= t - 1;
                if (1 + forest(comp & ~(1u << v)) == target) {
                    parent[v] = parent_vertex;
                    witness(comp & ~(1u << v), v, parent);
                    break;
                }
            }
        }
    }
};

}  // namespace

TreedepthResult exact_treedepth(const Graph& g, const OracleBudget& budget) {
    require_budget(g, budget, "exact_treedepth");
    int n = g.n();
    if (n == 0) throw precondition_error("exact_treedepth of empty graph");
    if (n > 24) throw budget_error("exact_treedepth: subset memo capped at 24 vertices");
    auto adj = adjacency_masks(g);
    TreedepthSolver solver(adj, n);
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    TreedepthResult result;
    result.value = solver.forest(full);
    std::vector<int> parent(n, -1);
    solver.witness(full, -1, parent);
    result.forest = forest_from_parents(std::move(parent));
    return result;
}

// ---------------------------------------------------------------------------
// Longest cycle / long-cycle search / longest path
// ---------------------------------------------------------------------------

namespace {

struct CycleSearch {
    const std::vector<uint32_t>& adj;
    int n;
    int start = 0;
    int best = 0;
    std::vector<int> best_cycle;
    std::vector<int> path;
    int early_exit_length = -1;  // stop as soon as a cycle this long is found
    bool done = false;
    const Deadline* deadline = nullptr;

    CycleSearch(const std::vector<uint32_t>& adj, int n) : adj(adj), n(n) {}

    // Vertices reachable from v inside `avail` (avail need not contain v).
    uint32_t reachable(int v, uint32_t avail) const {
        uint32_t seen = 0, frontier = adj[v] & avail;
        while (frontier) {
            seen |= frontier;
            uint32_t grow = 0;
            for (uint32_t s = frontier; s;) {
                int u = std::countr_zero(s);
                s &= s - 1;
                grow |= adj[u] & avail & ~seen;
            }
            frontier = grow;
        }
        return seen;
    }

    void extend(int v, uint32_t used) {
        if (done) return;
        if (deadline) deadline->check("cycle search");
        int len = static_cast<int>(path.size());
        if ((adj[v] >> start) & 1) {
            if (len >= 3 && len > best) {
                best = len;
                best_cycle = path;
                if (early_exit_length >= 0 && best >= early_exit_length) {
                    done = true;
                    return;
                }
            }
        }
        uint32_t full = (1u << n) - 1;
        uint32_t avail = ~used & full;
        // The cycle can only close through vertices still reachable from the
        // head alongside the start vertex.
        uint32_t reach = reachable(v, avail | (1u << start));
        if (!((reach >> start) & 1)) return;
        int bound = len + std::popcount(reach & avail);
        int target = (early_exit_length >= 0) ? early_exit_length : best + 1;
        if (bound < target) return;
        for (uint32_t s = adj[v] & avail; s && !done;) {
            int w = std::countr_zero(s);
            s &= s - 1;
            if (w <= start) continue;  // canonical: start is the cycle minimum
            path.push_back(w);
            extend(w, used | (1u << w));
            path.pop_back();
        }
    }
};

}  // namespace

CycleResult circumference(const Graph& g, const OracleBudget& budget) {
    require_budget(g, budget, "circumference");
    if (g.n() > 30) throw budget_error("circumference: mask search capped at 30 vertices");
    auto adj = adjacency_masks(g);
    Deadline deadline(budget.time_limit_seconds);
    CycleResult result{0, {}};
    CycleSearch search(adj, g.n());
    search.deadline = &deadline;
    for (int s = 0; s < g.n(); ++s) {
        if (result.length == g.n()) break;  // Hamiltonian, cannot improve
        search.start = s;
        search.best = result.length;
        search.best_cycle = result.cycle;
        search.path = {s};
        search.extend(s, 1u << s);
        result.length = search.best;
        result.cycle = search.best_cycle;
    }
    return result;
}

std::optional<std::vector<int>> find_cycle_of_length_at_least(const Graph& g, int min_length,
                                                              const std::vector<char>& removed) {
    if (g.n() > 30) throw budget_error("find_cycle: mask search capped at 30 vertices");
    if (std::max(min_length, 3) > g.n()) return std::nullopt;
    auto adj = adjacency_masks(g);
    uint32_t removed_mask = 0;
    for (int v = 0; v < static_cast<int>(removed.size()) && v < g.n(); ++v)
        if (removed[v]) removed_mask |= 1u << v;
    for (int v = 0; v < g.n(); ++v) adj[v] &= ~removed_mask;
    if (removed_mask)
        for (int v = 0; v < g.n(); ++v)
            if ((removed_mask >> v) & 1) adj[v] = 0;
    CycleSearch search(adj, g.n());
    search.early_exit_length = std::max(min_length, 3);
    for (int s = 0; s < g.n(); ++s) {
        if ((removed_mask >> s) & 1) continue;
        search.start = s;
        search.best = 0;
        search.best_cycle.clear();
        search.path = {s};
        search.done = false;
        search.extend(s, (1u << s) | removed_mask);
        if (search.best >= search.early_exit_length) return search.best_cycle;
    }
    return std::nullopt;
}

namespace {

struct PathSearch {
    const std::vector<uint32_t>& adj;
    int n;
    int best = 0;
    std::vector<int> best_path;
    std::vector<int> path;
    const Deadline* deadline = nullptr;

    PathSearch(const std::vector<uint32_t>& adj, int n) : adj(adj), n(n) {}

    uint32_t reachable_including(int v, uint32_t avail) const {
        uint32_t seen = 0, frontier = adj[v] & avail;
        while (frontier) {
            seen |= frontier;
            uint32_t grow = 0;
            for (uint32_t s = frontier; s;) {
                int u = std::countr_zero(s);
                s &= s - 1;
                grow |= adj[u] & avail & ~seen;
            }
            frontier = grow;
        }
        return seen;
    }

    void extend(int v, uint32_t used) {
        if (deadline) deadline->check("longest path search");
        int len = static_cast<int>(path.size()) - 1;
        if (len > best) {
            best = len;
            best_path = path;
        }
        uint32_t avail = ~used;
        if (len + std::popcount(reachable_including(v, avail)) <= best) return;
        for (uint32_t s = adj[v] & avail; s;) {
            int w = std::countr_zero(s);
            s &= s - 1;
            path.push_back(w);
            extend(w, used | (1u << w));
            path.pop_back();
        }
    }
};

}  // namespace

PathResult longest_path_edges(const Graph& g, const OracleBudget& budget) {
    require_budget(g, budget, "longest_path_edges");
    if (g.n() > 30) throw budget_error("longest_path_edges: mask search capped at 30 vertices");
    if (g.n() == 0) return {0, {}};
    auto adj = adjacency_masks(g);
    Deadline deadline(budget.time_limit_seconds);
    PathSearch search(adj, g.n());
    search.deadline = &deadline;
    search.best_path = {0};
    for (int s = 0; s < g.n(); ++s) {
        if (search.best == g.n() - 1) break;
        search.path = {s};
        search.extend(s, 1u << s);
    }
    return {search.best, search.best_path};
}

// ---------------------------------------------------------------------------
// Minor containment
// ---------------------------------------------------------------------------

MinorModelReport validate_minor_model(const Graph& host, const MinorModel& model) {
    MinorModelReport report;
    auto fail = [&](std::string msg) {
        report.valid = false;
        report.problems.push_back(std::move(msg));
    };
    int p = model.pattern.n();
    if (static_cast<int>(model.branch_sets.size()) != p) {
        fail("branch set count differs from pattern order");
        return report;
    }
    std::vector<int> owner(host.n(), -1);
    for (int x = 0; x < p; ++x) {
        if (model.branch_sets[x].empty()) fail("branch set " + std::to_string(x) + " is empty");
        for (int v : model.branch_sets[x]) {
            if (v < 0 || v >= host.n()) {
                fail("branch set " + std::to_string(x) + " contains out-of-range vertex");
                return report;
            }
            if (owner[v] != -1)
                fail("vertex " + std::to_string(v) + " lies in branch sets " +
                     std::to_string(owner[v]) + " and " + std::to_string(x));
            owner[v] = x;
        }
    }
    for (int x = 0; x < p; ++x) {
        if (model.branch_sets[x].empty()) continue;
        auto sub = induced_subgraph(host, model.branch_sets[x]);
        if (!sub.graph.is_connected())
            fail("branch set " + std::to_string(x) + " is not connected");
    }
    for (auto [x, y] : model.pattern.edges()) {
        bool joined = false;
        for (int u : model.branch_sets[x]) {
            for (int w : host.neighbors(u))
                if (w < static_cast<int>(owner.size()) && owner[w] == y) {
                    joined = true;
                    break;
                }
            if (joined) break;
        }
        if (!joined)
            fail("pattern edge " + std::to_string(x) + "-" + std::to_string(y) +
                 " is realized by no host edge");
    }
    if (model.root_anchor) {
        auto [px, hv] = *model.root_anchor;
        if (px < 0 || px >= p || hv < 0 || hv >= host.n() ||
            std::find(model.branch_sets[px].begin(), model.branch_sets[px].end(), hv) ==
                model.branch_sets[px].end())
            fail("root anchor vertex is not inside the anchored branch set");
    }
    return report;
}

namespace {

struct MinorSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<uint32_t> host_adj;
    std::vector<uint32_t> sets;  // branch set masks by pattern vertex
    std::vector<int> order;      // pattern vertices, descending degree
    uint32_t used = 0;
    bool found = false;

    MinorSearch(const Graph& host, const Graph& pattern)
        : host(host), pattern(pattern), host_adj(adjacency_masks(host)),
          sets(pattern.n(), 0) {
        order.resize(pattern.n());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (pattern.degree(a) != pattern.degree(b))
                return pattern.degree(a) > pattern.degree(b);
            return a < b;
        });
    }

    uint32_t mask_neighbors(uint32_t mask) const {
        uint32_t nb = 0;
        for (uint32_t s = mask; s;) {
            int v = std::countr_zero(s);
            s &= s - 1;
            nb |= host_adj[v];
        }
        return nb & ~mask;
    }

    bool edges_ok(int idx) const {
        // Pattern edges into already-finalized branch sets must be realized.
        int x = order[idx];
        for (int j = 0; j < idx; ++j) {
            int y = order[j];
            if (!pattern.has_edge(x, y)) continue;
            if (!(mask_neighbors(sets[x]) & sets[y])) return false;
        }
        return true;
    }

    // Earlier pattern neighbors are finalized; if one of them can no longer
    // be reached by any future growth of sets[x], the branch is dead.
    bool still_completable(int idx, uint32_t excluded) const {
        int x = order[idx];
        uint32_t growable = sets[x] | (~used & ~excluded);
        for (int j = 0; j < idx; ++j) {
            int y = order[j];
            if (!pattern.has_edge(x, y)) continue;
            if (!(mask_neighbors(sets[y]) & growable)) return false;
        }
        return true;
    }

    // Enumerate every connected superset of the current sets[x] exactly once:
    // a frontier vertex tried and backtracked is excluded from the rest of
    // this branch.
    void grow(int idx, uint32_t excluded) {
        if (found) return;
        if (edges_ok(idx)) next_vertex(idx + 1);
        if (found) return;
        if (!still_completable(idx, excluded)) return;
        int x = order[idx];
        if (host.n() - std::popcount(used) < pattern.n() - idx - 1) return;
        uint32_t frontier = mask_neighbors(sets[x]) & ~used & ~excluded;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            sets[x] |= 1u << v;
            used |= 1u << v;
            grow(idx, excluded);
            if (found) return;  // keep the witness state intact
            used &= ~(1u << v);
            sets[x] &= ~(1u << v);
            excluded |= 1u << v;
        }
    }

    void next_vertex(int idx) {
        if (found) return;
        if (idx == pattern.n()) {
            found = true;
            return;
        }
        int x = order[idx];
        if (host.n() - std::popcount(used) < pattern.n() - idx) return;
        for (int v = 0; v < host.n(); ++v) {
            if ((used >> v) & 1) continue;
            sets[x] = 1u << v;
            used |= 1u << v;
            // Seed at the minimum vertex of the future set: smaller unused
            // vertices are excluded so each set is enumerated once.
            grow(idx, (1u << v) - 1);
            if (found) return;
            used &= ~(1u << v);
            sets[x] = 0;
        }
    }
};

}  // namespace

std::optional<MinorModel> minor_contains(const Graph& g, const Graph& pattern,
                                         const OracleBudget& budget) {
    require_budget(g, budget, "minor_contains host");
    if (pattern.n() > 6)
        throw budget_error("minor_contains: pattern capped at 6 vertices");
    if (pattern.n() == 0) throw precondition_error("minor_contains: empty pattern");
    if (g.n() > 30) throw budget_error("minor_contains: host mask search capped at 30 vertices");
    if (pattern.n() > g.n()) return std::nullopt;
    MinorSearch search(g, pattern);
    search.next_vertex(0);
    if (!search.found) return std::nullopt;
    MinorModel model;
    model.pattern = pattern;
    model.branch_sets.resize(pattern.n());
    for (int x = 0; x < pattern.n(); ++x)
        for (int v = 0; v < g.n(); ++v)
            if ((search.sets[x] >> v) & 1) model.branch_sets[x].push_back(v);
    auto report = validate_minor_model(g, model);
    if (!report.valid)
        throw verification_error("minor_contains produced an invalid model: " +
                                 report.problems.front());
    return model;
}

// ---------------------------------------------------------------------------
// Transversal number (minimum feedback vertex set)
// ---------------------------------------------------------------------------

namespace {

// Branch-and-bound: minimum vertex set whose removal leaves no cycle of
// length >= min_length. Branches over the vertices of a found long cycle.
struct HittingSearch {
    const Graph& g;
    int min_length;
    int best_size;
    std::vector<char> removed;
    std::vector<int> chosen;

    HittingSearch(const Graph& g, int min_length)
        : g(g), min_length(min_length), best_size(g.n() + 1), removed(g.n(), 0) {}

    void search() {
        auto cyc = find_cycle_of_length_at_least(g, min_length, removed);
        if (!cyc) {
            best_size = std::min(best_size, static_cast<int>(chosen.size()));
            return;
        }
        // Greedy disjoint long cycles: each needs a distinct hit.
        std::vector<char> blocked = removed;
        int lb = 0;
        auto extra = cyc;
        while (extra) {
            ++lb;
            for (int v : *extra) blocked[v] = 1;
            extra = find_cycle_of_length_at_least(g, min_length, blocked);
        }
        if (static_cast<int>(chosen.size()) + lb >= best_size) return;
        for (int v : *cyc) {
            removed[v] = 1;
            chosen.push_back(v);
            search();
            chosen.pop_back();
            removed[v] = 0;
        }
    }
};

}  // namespace

// Phase 1 finds the minimum size; phase 2 rescans subsets of that size in
// lexicographic order so ties resolve deterministically.
std::vector<int> minimum_long_cycle_hitting_set(const Graph& g, int min_length) {
    HittingSearch search(g, min_length);
    search.search();
    int k = search.best_size;
    if (k == 0) return {};
    // Lexicographically smallest k-subset that is a valid hitting set.
    std::vector<int> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    auto valid = [&](const std::vector<int>& sel) {
        std::vector<char> removed(g.n(), 0);
        for (int v : sel) removed[v] = 1;
        return !find_cycle_of_length_at_least(g, min_length, removed).has_value();
    };
    while (true) {
        if (valid(combo)) return combo;
        // next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && combo[i] == g.n() - k + i) --i;
        if (i < 0) break;
        ++combo[i];
        for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
    throw verification_error("hitting-set search lost its own optimum");
}

TransversalResult transversal_number(const Graph& g, const OracleBudget& budget) {
    require_budget(g, budget, "transversal_number");
    auto set = minimum_long_cycle_hitting_set(g, 3);
    return {static_cast<int>(set.size()), std::move(set)};
}

// ---------------------------------------------------------------------------
// Maximum packing of disjoint long cycles
// ---------------------------------------------------------------------------

CyclePackingReport validate_cycle_packing(const Graph& g, const CyclePacking& packing) {
    CyclePackingReport report;
    auto fail = [&](std::string msg) {
        report.valid = false;
        report.problems.push_back(std::move(msg));
    };
    std::vector<char> used(g.n(), 0);
    for (size_t ci = 0; ci < packing.cycles.size(); ++ci) {
        const auto& cycle = packing.cycles[ci];
        std::string tag = "cycle " + std::to_string(ci);
        if (static_cast<int>(cycle.size()) < std::max(packing.min_length, 3)) {
            fail(tag + " is shorter than the required minimum length");
        }
        std::vector<char> local(g.n(), 0);
        bool ok = true;
        for (int v : cycle) {
            if (v < 0 || v >= g.n()) {
                fail(tag + " contains an out-of-range vertex");
                ok = false;
                break;
            }
            if (local[v]) {
                fail(tag + " repeats vertex " + std::to_string(v));
                ok = false;
                break;
            }
            local[v] = 1;
        }
        if (!ok) continue;
        for (size_t i = 0; i < cycle.size(); ++i) {
            int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
            if (!g.has_edge(u, v)) {
                fail(tag + " uses a non-edge " + std::to_string(u) + "-" + std::to_string(v));
                break;
            }
        }
        for (int v : cycle) {
            if (used[v]) fail(tag + " shares vertex " + std::to_string(v) + " with another cycle");
            used[v] = 1;
        }
    }
    return report;
}

CyclePacking max_long_cycle_packing(const Graph& g, int min_length, const OracleBudget& budget) {
    require_budget(g, budget, "max_long_cycle_packing");
    int n = g.n();
    int need = std::max(min_length, 3);
    if (n > 16) throw budget_error("max_long_cycle_packing: subset DP capped at 16 vertices");
    CyclePacking packing;
    packing.min_length = min_length;
    if (n == 0) return packing;
    auto adj = adjacency_masks(g);
    uint32_t full = (1u << n) - 1;

    // ends[mask]: endpoints w of paths that start at min(mask), visit exactly
    // mask, and end at w.
    std::vector<uint32_t> ends(size_t(1) << n, 0);
    std::vector<char> has_cycle(size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) ends[1u << v] = 1u << v;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < 2) continue;
        int root = std::countr_zero(mask);
        uint32_t e = 0;
        for (uint32_t s = mask & ~(1u << root); s;) {
            int w = std::countr_zero(s);
            s &= s - 1;
            uint32_t prev = mask & ~(1u << w);
            if (std::countr_zero(prev) != root) continue;
            if (ends[prev] & adj[w]) e |= 1u << w;
        }
        ends[mask] = e;
        if (std::popcount(mask) >= need && (e & adj[root])) has_cycle[mask] = 1;
    }

    std::vector<int8_t> value(size_t(1) << n, -1);
    value[0] = 0;
    // value[avail]: maximum number of disjoint qualifying cycles inside avail.
    auto solve = [&](auto&& self, uint32_t avail) -> int {
        if (value[avail] >= 0) return value[avail];
        int v = std::countr_zero(avail);
        int best = self(self, avail & ~(1u << v));
        // cycles through v: submasks of avail containing v
        uint32_t rest = avail & ~(1u << v);
        for (uint32_t sub = rest;; sub = (sub - 1) & rest) {
            uint32_t cand = sub | (1u << v);
            if (has_cycle[cand]) best = std::max(best, 1 + self(self, avail & ~cand));
            if (sub == 0) break;
        }
        value[avail] = static_cast<int8_t>(best);
        return best;
    };
    int total = solve(solve, full);

    // Witness: re-walk the DP choices and recover cycle orders from `ends`.
    auto recover_cycle = [&](uint32_t mask) {
        int root = std::countr_zero(mask);
        std::vector<int> cycle;
        uint32_t cur_mask = mask;
        uint32_t cands = ends[mask] & adj[root];
        int w = std::countr_zero(cands);
        while (true) {
            cycle.push_back(w);
            uint32_t prev = cur_mask & ~(1u << w);
            if (prev == (1u << root)) break;
            uint32_t prev_ends = ends[prev] & adj[w];
            w = std::countr_zero(prev_ends);
            cur_mask = prev;
        }
        cycle.push_back(root);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
    };
    uint32_t avail = full;
    while (total > 0) {
        int v = std::countr_zero(avail);
        if (solve(solve, avail & ~(1u << v)) == total) {
            avail &= ~(1u << v);
            continue;
        }
        uint32_t rest = avail & ~(1u << v);
        bool advanced = false;
        for (uint32_t sub = rest;; sub = (sub - 1) & rest) {
            uint32_t cand = sub | (1u << v);
            if (has_cycle[cand] && 1 + solve(solve, avail & ~cand) == total) {
                packing.cycles.push_back(recover_cycle(cand));
                avail &= ~cand;
                --total;
                advanced = true;
                break;
            }
            if (sub == 0) break;
        }
        if (!advanced) throw verification_error("packing witness reconstruction failed");
    }
    std::sort(packing.cycles.begin(), packing.cycles.end());
    auto report = validate_cycle_packing(g, packing);
    if (!report.valid)
        throw verification_error("max_long_cycle_packing produced an invalid packing: " +
                                 report.problems.front());
    return packing;
}

}  // namespace cpw
