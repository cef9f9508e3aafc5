#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cpw/decomposition.hpp"
#include "cpw/graph.hpp"
#include "cpw/oracles.hpp"

namespace cpw {

/// Complete binary tree in level order (children of v are 2v+1, 2v+2) with
/// leaves labeled 1..2^h left to right.
struct LabeledCBT {
    Graph graph;
    int root = 0;
    int height = 0;
    std::vector<int> leaf_by_label;  // index 0 unused; label l -> vertex id

    int leaf_count() const { return static_cast<int>(leaf_by_label.size()) - 1; }
    int leaf(int label) const;
};

LabeledCBT cbt(int height);

/// Exact tree distance between the leaves labeled a and b (a <= b). The
/// distance is checked against the lower bound 2*log2(b-a+1) before return.
int leaf_distance(const LabeledCBT& t, int a, int b);

/// Bottom-up recursion value R over a tree: R(leaf) = 0 and, with children
/// values sorted descending r1 >= r2 >= ..., R(v) = max{r1, r2+1, 1} (the
/// r2 term absent for a single child). R(v) upper-bounds the width of the
/// rooted decomposition built at v and lower-bounds nothing we rely on
/// beyond pathwidth.
struct RootedPwMap {
    RootedForest tree;       // rooted at the requested vertex
    std::vector<int> value;  // R per vertex
    int root = 0;
    int root_value() const { return value[root]; }
};

RootedPwMap rooted_pw_map(const Graph& t, int root);

/// Path decomposition of the tree with the root in the last bag and width at
/// most R(root): per-subtree decompositions concatenated around {w1, v} with
/// the root injected into the later runs.
PathDecomposition rooted_decomposition(const Graph& t, int root);

/// Minor model of cbt(target_height) in the tree, with `root` inside the
/// branch set of the pattern root. Requires R(root) >= target_height + 1.
MinorModel extract_cbt_minor(const Graph& t, int root, int target_height);

/// Topological embedding of a max-degree-3 pattern given a minor model in a
/// tree: one branch vertex per pattern vertex plus internally disjoint paths
/// per pattern edge. Pattern leaves land on leaves of the tree.
struct Subdivision {
    Graph pattern;
    std::vector<int> branch_vertex;                            // pattern -> host
    std::map<std::pair<int, int>, std::vector<int>> edge_paths;  // (x,y) x<y -> host path
};

Subdivision minor_to_subdivision(const Graph& t, const MinorModel& model);

struct SubdivisionReport {
    bool valid = true;
    std::vector<std::string> problems;
};

SubdivisionReport validate_subdivision(const Graph& t, const Subdivision& s);

}  // namespace cpw
