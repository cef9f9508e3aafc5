#include "cpw/trees.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

namespace cpw {

namespace {

void require_tree(const Graph& t, const char* what) {
    if (t.n() == 0) throw precondition_error(std::string(what) + ": empty graph");
    if (t.m() != t.n() - 1 || !t.is_connected())
        throw precondition_error(std::string(what) + ": input is not a tree");
}

std::vector<int> bfs_path(const Graph& g, int from, int to) {
    std::vector<int> prev(g.n(), -2);
    std::queue<int> q;
    q.push(from);
    prev[from] = -1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == to) break;
        for (int w : g.neighbors(v))
            if (prev[w] == -2) {
                prev[w] = v;
                q.push(w);
            }
    }
    if (prev[to] == -2) throw precondition_error("bfs_path: endpoints not connected");
    std::vector<int> path;
    for (int v = to; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

// ---------------------------------------------------------------------------
// Complete binary trees with labeled leaves
// ---------------------------------------------------------------------------

int LabeledCBT::leaf(int label) const {
    if (label < 1 || label > leaf_count())
        throw precondition_error("leaf label " + std::to_string(label) + " out of range 1.." +
                                 std::to_string(leaf_count()));
    return leaf_by_label[label];
}

LabeledCBT cbt(int height) {
    if (height < 0) throw precondition_error("cbt height must be nonnegative");
    if (height > 20) throw budget_error("cbt height capped at 20");
    LabeledCBT t;
    t.height = height;
    int n = (1 << (height + 1)) - 1;
    t.graph = Graph(n);
    for (int v = 0; v < n; ++v) {
        if (2 * v + 1 < n) t.graph.add_edge(v, 2 * v + 1);
        if (2 * v + 2 < n) t.graph.add_edge(v, 2 * v + 2);
    }
    int first_leaf = (1 << height) - 1;
    t.leaf_by_label.assign(1, -1);
    for (int l = 1; l <= (1 << height); ++l) t.leaf_by_label.push_back(first_leaf + l - 1);
    return t;
}

int leaf_distance(const LabeledCBT& t, int a, int b) {
    if (a > b) throw precondition_error("leaf_distance requires a <= b");
    int va = t.leaf(a), vb = t.leaf(b);
    int dist = static_cast<int>(bfs_path(t.graph, va, vb).size()) - 1;
    double bound = 2.0 * std::log2(static_cast<double>(b - a + 1));
    if (static_cast<double>(dist) < bound - 1e-9) {
        std::ostringstream msg;
        msg << "leaf_distance(" << a << ", " << b << ") = " << dist
            << " violates the 2*log2(b-a+1) = " << bound << " lower bound";
        throw verification_error(msg.str());
    }
    return dist;
}

// ---------------------------------------------------------------------------
// Rooted recursion value R and its constructive decomposition
// ---------------------------------------------------------------------------

namespace {

RootedForest root_tree(const Graph& t, int root) {
    if (root < 0 || root >= t.n()) throw precondition_error("root out of range");
    std::vector<int> parent(t.n(), -1);
    std::vector<char> seen(t.n(), 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : t.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                stack.push_back(w);
            }
    }
    return forest_from_parents(std::move(parent));
}

// Children of each vertex ordered by (R value descending, id ascending).
std::vector<std::vector<int>> children_by_value(const RootedForest& tree,
                                                const std::vector<int>& value) {
    auto ch = tree.children();
    for (auto& list : ch)
        std::sort(list.begin(), list.end(), [&](int a, int b) {
            if (value[a] != value[b]) return value[a] > value[b];
            return a < b;
        });
    return ch;
}

std::vector<int> compute_values(const RootedForest& tree, int root) {
    auto ch = tree.children();
    std::vector<int> value(tree.size(), 0);
    // Postorder via stack.
    std::vector<std::pair<int, int>> stack{{root, 0}};
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < static_cast<int>(ch[v].size())) {
            stack.push_back({ch[v][idx++], 0});
            continue;
        }
        stack.pop_back();
        if (ch[v].empty()) {
            value[v] = 0;
            continue;
        }
        std::vector<int> rs;
        for (int w : ch[v]) rs.push_back(value[w]);
        std::sort(rs.rbegin(), rs.rend());
        int r = std::max(rs[0], 1);
        if (rs.size() >= 2) r = std::max(r, rs[1] + 1);
        value[v] = r;
    }
    return value;
}

}  // namespace

RootedPwMap rooted_pw_map(const Graph& t, int root) {
    require_tree(t, "rooted_pw_map");
    RootedPwMap map;
    map.tree = root_tree(t, root);
    map.root = root;
    map.value = compute_values(map.tree, root);
    return map;
}

PathDecomposition rooted_decomposition(const Graph& t, int root) {
    auto map = rooted_pw_map(t, root);
    auto ch = children_by_value(map.tree, map.value);

    // Recursive concatenation; returns bags with `v` in the last one.
    auto build = [&](auto&& self, int v) -> std::vector<std::vector<int>> {
        if (ch[v].empty()) return {{v}};
        if (ch[v].size() == 1 && ch[ch[v][0]].empty()) {
            // two-vertex subtree: a single bag suffices
            std::vector<int> bag{ch[v][0], v};
            std::sort(bag.begin(), bag.end());
            return {bag};
        }
        int w1 = ch[v][0];
        auto bags = self(self, w1);
        std::vector<int> hinge{w1, v};
        std::sort(hinge.begin(), hinge.end());
        bags.push_back(std::move(hinge));
        for (size_t i = 1; i < ch[v].size(); ++i) {
            auto sub = self(self, ch[v][i]);
            for (auto& bag : sub) {
                bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
                bags.push_back(std::move(bag));
            }
        }
        return bags;
    };
    PathDecomposition d;
    d.bags = build(build, root);
    return d;
}

// ---------------------------------------------------------------------------
// Complete-binary-tree minor extraction
// ---------------------------------------------------------------------------

namespace {

// Level-order id of a cbt(q-1) vertex re-rooted as the left or right subtree
// of a cbt(q) root.
int shift_level_order(int p, bool right) {
    int level = std::bit_width(static_cast<unsigned>(p + 1)) - 1;
    int offset = p + 1 - (1 << level);
    return (1 << (level + 1)) - 1 + (right ? (1 << level) : 0) + offset;
}

}  // namespace

MinorModel extract_cbt_minor(const Graph& t, int root, int target_height) {
    if (target_height < 0) throw precondition_error("target height must be nonnegative");
    auto map = rooted_pw_map(t, root);
    if (map.root_value() < target_height + 1)
        throw precondition_error("extract_cbt_minor requires R(root) >= target+1, have R = " +
                                 std::to_string(map.root_value()) + ", target = " +
                                 std::to_string(target_height));
    auto ch = children_by_value(map.tree, map.value);

    // Branch sets of cbt(q) in the subtree at v; needs value[v] >= q + 1.
    auto extract = [&](auto&& self, int v, int q) -> std::vector<std::vector<int>> {
        if (q == 0) return {{v}};
        int w1 = ch[v][0];
        if (map.value[w1] >= q + 1) {
            auto sets = self(self, w1, q);
            sets[0].push_back(v);
            std::sort(sets[0].begin(), sets[0].end());
            return sets;
        }
        // Here value[w1] = value[w2] = q: split into the two best children.
        if (ch[v].size() < 2 || map.value[ch[v][1]] < q)
            throw verification_error("extract_cbt_minor recursion invariant broken at vertex " +
                                     std::to_string(v));
        auto left = self(self, ch[v][0], q - 1);
        auto right = self(self, ch[v][1], q - 1);
        std::vector<std::vector<int>> sets(size_t((1 << (q + 1)) - 1));
        sets[0] = {v};
        for (int p = 0; p < static_cast<int>(left.size()); ++p)
            sets[shift_level_order(p, false)] = std::move(left[p]);
        for (int p = 0; p < static_cast<int>(right.size()); ++p)
            sets[shift_level_order(p, true)] = std::move(right[p]);
        return sets;
    };

    MinorModel model;
    model.pattern = cbt(target_height).graph;
    model.branch_sets = extract(extract, root, target_height);
    model.root_anchor = std::make_pair(0, root);
    auto report = validate_minor_model(t, model);
    if (!report.valid)
        throw verification_error("extract_cbt_minor produced an invalid model: " +
                                 report.problems.front());
    return model;
}

// ---------------------------------------------------------------------------
// Subdivision realization
// ---------------------------------------------------------------------------

Subdivision minor_to_subdivision(const Graph& t, const MinorModel& model) {
    require_tree(t, "minor_to_subdivision");
    const Graph& pattern = model.pattern;
    for (int x = 0; x < pattern.n(); ++x)
        if (pattern.degree(x) > 3)
            throw precondition_error("minor_to_subdivision: pattern vertex " + std::to_string(x) +
                                     " has degree above 3");
    auto report = validate_minor_model(t, model);
    if (!report.valid)
        throw precondition_error("minor_to_subdivision: invalid model: " +
                                 report.problems.front());

    std::vector<int> owner(t.n(), -1);
    for (int x = 0; x < pattern.n(); ++x)
        for (int v : model.branch_sets[x]) owner[v] = x;

    // Lexicographically smallest host edge realizing each pattern edge.
    std::map<std::pair<int, int>, std::pair<int, int>> attachment;  // pattern edge -> host edge
    for (auto [x, y] : pattern.edges()) {
        std::pair<int, int> best{-1, -1};
        for (int u : model.branch_sets[x]) {
            for (int w : t.neighbors(u)) {
                if (owner[w] != y) continue;
                if (best.first == -1 || std::make_pair(u, w) < best) best = {u, w};
            }
        }
        attachment[{x, y}] = best;  // validated model: always found
    }

    // Attachment points inside x's branch set, ordered by pattern neighbor.
    auto points_of = [&](int x) {
        std::vector<std::pair<int, int>> pts;  // (pattern neighbor, host point)
        for (int y : pattern.neighbors(x)) {
            auto e = attachment[{std::min(x, y), std::max(x, y)}];
            pts.emplace_back(y, x < y ? e.first : e.second);
        }
        return pts;
    };

    auto distance = [&](int a, int b) {
        return static_cast<int>(bfs_path(t, a, b).size()) - 1;
    };

    Subdivision s;
    s.pattern = pattern;
    s.branch_vertex.assign(pattern.n(), -1);

    // Walk toward a leaf of t through unclaimed territory, smallest id first.
    auto extend_to_leaf = [&](int from, int banned, int self_owner) {
        int prev = banned, cur = from;
        while (t.degree(cur) > 1) {
            int next = -1;
            for (int w : t.neighbors(cur)) {
                if (w == prev) continue;
                if (owner[w] != -1 && owner[w] != self_owner) continue;
                next = w;
                break;
            }
            if (next == -1)
                throw verification_error("leaf extension stuck at vertex " + std::to_string(cur));
            prev = cur;
            cur = next;
        }
        return cur;
    };

    for (int x = 0; x < pattern.n(); ++x) {
        auto pts = points_of(x);
        int deg = static_cast<int>(pts.size());
        if (deg == 0) {
            s.branch_vertex[x] = extend_to_leaf(model.branch_sets[x].front(), -1, x);
        } else if (deg == 1) {
            auto [y, a] = pts[0];
            auto e = attachment[{std::min(x, y), std::max(x, y)}];
            int external = (x < y) ? e.second : e.first;
            s.branch_vertex[x] = extend_to_leaf(a, external, x);
        } else if (deg == 2) {
            s.branch_vertex[x] = pts[0].second;
        } else {
            // Median of the three attachment points: the unique vertex of the
            // a-b path closest to c.
            int a = pts[0].second, b = pts[1].second, c = pts[2].second;
            auto ab = bfs_path(t, a, b);
            int best = ab.front(), best_d = distance(ab.front(), c);
            for (int v : ab) {
                int d = distance(v, c);
                if (d < best_d) {
                    best = v;
                    best_d = d;
                }
            }
            s.branch_vertex[x] = best;
        }
    }

    for (auto [x, y] : pattern.edges()) {
        auto e = attachment[{x, y}];
        auto left = bfs_path(t, s.branch_vertex[x], e.first);
        auto right = bfs_path(t, e.second, s.branch_vertex[y]);
        left.insert(left.end(), right.begin(), right.end());
        s.edge_paths[{x, y}] = std::move(left);
    }

    auto check = validate_subdivision(t, s);
    if (!check.valid)
        throw verification_error("minor_to_subdivision produced an invalid embedding: " +
                                 check.problems.front());
    return s;
}

SubdivisionReport validate_subdivision(const Graph& t, const Subdivision& s) {
    SubdivisionReport report;
    auto fail = [&](std::string msg) {
        report.valid = false;
        report.problems.push_back(std::move(msg));
    };
    const Graph& pattern = s.pattern;
    if (static_cast<int>(s.branch_vertex.size()) != pattern.n()) {
        fail("branch vertex count differs from pattern order");
        return report;
    }
    std::vector<int> seen_branch(t.n(), -1);
    for (int x = 0; x < pattern.n(); ++x) {
        int v = s.branch_vertex[x];
        if (v < 0 || v >= t.n()) {
            fail("branch vertex of " + std::to_string(x) + " out of range");
            return report;
        }
        if (seen_branch[v] != -1) fail("two pattern vertices share host vertex " + std::to_string(v));
        seen_branch[v] = x;
        if (pattern.degree(x) <= 1 && t.degree(v) > 1)
            fail("pattern leaf " + std::to_string(x) + " does not land on a host leaf");
    }
    std::vector<int> interior_use(t.n(), 0);
    for (auto [x, y] : pattern.edges()) {
        auto it = s.edge_paths.find({x, y});
        if (it == s.edge_paths.end()) {
            fail("missing path for pattern edge " + std::to_string(x) + "-" + std::to_string(y));
            continue;
        }
        const auto& path = it->second;
        if (path.size() < 2 || path.front() != s.branch_vertex[x] ||
            path.back() != s.branch_vertex[y]) {
            fail("path endpoints do not match branch vertices for edge " + std::to_string(x) +
                 "-" + std::to_string(y));
            continue;
        }
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (!t.has_edge(path[i], path[i + 1])) {
                fail("path for edge " + std::to_string(x) + "-" + std::to_string(y) +
                     " uses a non-edge");
                break;
            }
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            int v = path[i];
            if (seen_branch[v] != -1)
                fail("path interior passes through branch vertex " + std::to_string(v));
            if (++interior_use[v] > 1)
                fail("host vertex " + std::to_string(v) + " is interior to two paths");
        }
    }
    return report;
}

}  // namespace cpw
