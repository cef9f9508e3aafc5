#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpw/bounds.hpp"
#include "cpw/graph.hpp"
#include "cpw/oracles.hpp"

namespace cpw {

/// Vertex set whose removal leaves circumference at most threshold-1,
/// minimum-cardinality by construction.
struct HittingSet {
    std::vector<int> vertices;
    int threshold = 3;  // t
};

/// Erdos-Posa budget f(k) = 13t(k-1)(k-2) + (2t+3)(k-1) for hitting all
/// cycles of length >= t.
long long ep_hitting_bound(int k, int t);

/// Alternative budget shape c * t * k * log2(k); the constant always comes
/// from the caller (CLI flag --ep-bound fh with --ep-constant).
enum class EpBoundMode { standard, fh };
long long ep_budget(int k, int t, EpBoundMode mode, std::optional<double> fh_constant = {});

HittingSet min_hitting_set(const Graph& g, int t, const OracleBudget& budget = {18});

/// Derived pipeline parameters. With h = max(|H|, k):
///   i = floor(log2((k-1)(2h-2k+1))) + 1   (2^i disjoint subtrees)
///   j = ceil(t/2 + log2(h-k+1))           (height of each subtree)
struct PipelineParams {
    int k = 0;
    int t = 0;
    int h = 0;
    int subtree_count_log = 0;  // i
    int subtree_height = 0;     // j
    bool h_floored = false;     // h was raised to k
};

PipelineParams pipeline_params(int k, int t, int h_raw);

/// One cycle routed through the block-cut forest: a hub vertex plus an
/// alternating block/cut node path (forest node ids, blocks at both ends).
struct TreeCycle {
    int hub = -1;
    std::vector<int> nodes;
};

/// Turn forest-level cycles into host cycles: enter the first block at a hub
/// neighbor, cross each block between its cut vertices avoiding at most one
/// forbidden vertex, leave the last block at another hub neighbor.
CyclePacking reroute_cycles(const Graph& g, const BlockCutForest& bcf,
                            const std::vector<TreeCycle>& tree_cycles);

struct PipelineOutcome {
    enum class Branch { decomposition, packing };
    Branch branch = Branch::decomposition;
    std::optional<PathDecomposition> decomposition;
    long long width_budget = -1;  // (m+3)(i+j+1)-3+|H| for the decomposition branch
    std::optional<CyclePacking> packing;
    // trace
    std::vector<int> hitting_set;
    std::optional<PipelineParams> params;  // absent for the k = 1 delegation
    int forest_value = 0;                  // n*: max component R at canonical roots
    std::vector<std::pair<int, int>> good_pair_assignment;  // (hub, subtree index)
};

/// Dichotomy driver: either a validated path decomposition of g within the
/// explicit width budget, or k vertex-disjoint cycles of length >= t.
/// Requires g (k+1)-connected; k = 1 delegates to thm1_decompose. An
/// hOverride substitutes for the computed minimum hitting set (the only way
/// to drive the packing branch on purpose); inconsistent overrides surface
/// as verification errors, never as silently wrong certificates.
PipelineOutcome thm2_pipeline(const Graph& g, int k, int t,
                              std::optional<std::vector<int>> h_override = {},
                              const OracleBudget& budget = {18});

}  // namespace cpw
