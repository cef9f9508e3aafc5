#pragma once

#include <map>
#include <optional>

#include "cpw/decomposition.hpp"
#include "cpw/graph.hpp"
#include "cpw/oracles.hpp"

namespace cpw {

/// Certified decomposition of a 2-connected graph: width and DFS height are
/// both at most floor(t/2)*(t-1) where t bounds the circumference.
struct Thm1Certificate {
    PathDecomposition decomposition;
    int circumference_bound = 0;  // t
    int dfs_height = 0;
    long long bound = 0;  // floor(t/2)*(t-1)
};

/// DFS tree rooted at vertex 0, turned into a path decomposition via root
/// paths. Every non-tree edge must have span <= t-1 and the tree height must
/// stay within the bound; violations raise verification_error (a wrong
/// caller-supplied t). When t is omitted it comes from the circumference
/// oracle.
Thm1Certificate thm1_decompose(const Graph& g, std::optional<int> t = std::nullopt,
                               const OracleBudget& oracle_budget = {20});

/// Glue per-block path decompositions along the block-cut forest. With every
/// block decomposition of width <= m and the forest decomposition of width n,
/// the result is a valid decomposition of g with width <= (m+3)(n+1)-3.
/// Bridge and isolated-vertex blocks may be omitted from blockDecomps; they
/// get canonical single-bag decompositions.
PathDecomposition lemma2_compose(const Graph& g, const BlockCutForest& bcf,
                                 const PathDecomposition& forest_decomp,
                                 const std::map<int, PathDecomposition>& block_decomps);

/// Forest decomposition used by the pipeline and CLI: per component of the
/// block-cut forest, a rooted decomposition at the component's canonical
/// root (the node minimising the rooted recursion value R, ties to the
/// smallest node id), components concatenated.
struct ForestPlan {
    PathDecomposition decomposition;   // over forest node ids
    int max_component_value = 0;       // n* = max over components of R(root)
    std::vector<int> component_roots;  // canonical root per component
    std::vector<std::vector<int>> components;  // forest node ids per component
    std::vector<int> component_values;         // R(root) per component
};

ForestPlan canonical_forest_plan(const BlockCutForest& bcf);

}  // namespace cpw
