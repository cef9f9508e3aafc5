#pragma once

#include <optional>
#include <vector>

#include "cpw/decomposition.hpp"
#include "cpw/graph.hpp"

namespace cpw {

/// Hard per-call resource ceiling. Oracles refuse instances above the ceiling
/// instead of degrading; results below it are always exact.
struct OracleBudget {
    int max_vertices;
    double time_limit_seconds = 0.0;  // 0 = unlimited
};

struct PathwidthResult {
    int value;
    std::vector<int> ordering;        // optimal vertex separation ordering
    PathDecomposition decomposition;  // witness of width `value`
};

struct TreedepthResult {
    int value;
    RootedForest forest;  // witness: clos(forest) contains g, height = value - 1
};

struct CycleResult {
    int length;              // 0 if acyclic
    std::vector<int> cycle;  // vertex sequence, empty if acyclic
};

struct PathResult {
    int edges;
    std::vector<int> path;
};

struct TransversalResult {
    int value;
    std::vector<int> vertices;  // minimum set whose removal leaves a forest
};

/// Branch sets certifying that `pattern` is a minor of the host graph.
struct MinorModel {
    Graph pattern;
    std::vector<std::vector<int>> branch_sets;          // pattern vertex -> sorted host ids
    std::optional<std::pair<int, int>> root_anchor;     // (pattern vertex, host vertex)
};

struct MinorModelReport {
    bool valid = true;
    std::vector<std::string> problems;
};

MinorModelReport validate_minor_model(const Graph& host, const MinorModel& model);

/// Pairwise vertex-disjoint cycles, each of length >= min_length.
struct CyclePacking {
    std::vector<std::vector<int>> cycles;
    int min_length = 3;
};

struct CyclePackingReport {
    bool valid = true;
    std::vector<std::string> problems;
};

CyclePackingReport validate_cycle_packing(const Graph& g, const CyclePacking& packing);

/// Pathwidth via the vertex separation number: subset DP over placement
/// prefixes, minimising the maximum count of placed vertices that still have
/// unplaced neighbors.
PathwidthResult exact_pathwidth(const Graph& g, const OracleBudget& budget = {20});

/// Treedepth: 1 for a single vertex, max over components when disconnected,
/// else 1 + min over deleted vertices; memoised over vertex subsets.
TreedepthResult exact_treedepth(const Graph& g, const OracleBudget& budget = {16});

/// Length of a longest cycle (0 if acyclic), by pruned backtracking.
CycleResult circumference(const Graph& g, const OracleBudget& budget = {20});

/// Any cycle of length >= min_length restricted to `allowed` vertices
/// (empty = all), or nullopt. Early exit; used by hitting-set search.
std::optional<std::vector<int>> find_cycle_of_length_at_least(
    const Graph& g, int min_length, const std::vector<char>& removed = {});

/// Edge count of a longest path, by pruned backtracking.
PathResult longest_path_edges(const Graph& g, const OracleBudget& budget = {20});

/// Exhaustive branch-set search for a minor model of `pattern` in g.
std::optional<MinorModel> minor_contains(const Graph& g, const Graph& pattern,
                                         const OracleBudget& budget = {16});

/// Minimum vertex set whose removal leaves the graph acyclic.
TransversalResult transversal_number(const Graph& g, const OracleBudget& budget = {18});

/// Minimum vertex set whose removal leaves no cycle of length >= min_length:
/// branch-and-bound over found long cycles, ties resolved to the
/// lexicographically smallest set. Shared by transversal_number and the
/// hitting-set front end.
std::vector<int> minimum_long_cycle_hitting_set(const Graph& g, int min_length);

/// Maximum-cardinality set of pairwise vertex-disjoint cycles of length >=
/// min_length, via a Hamiltonicity table over subsets plus a packing DP.
CyclePacking max_long_cycle_packing(const Graph& g, int min_length,
                                    const OracleBudget& budget = {14});

}  // namespace cpw
