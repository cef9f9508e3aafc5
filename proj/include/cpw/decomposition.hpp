#pragma once

#include <string>
#include <vector>

#include "cpw/graph.hpp"

namespace cpw {

/// Ordered sequence of vertex bags. A valid path decomposition of a graph
/// covers every vertex, covers both ends of every edge in some bag, and the
/// bags containing any fixed vertex form a contiguous interval.
struct PathDecomposition {
    std::vector<std::vector<int>> bags;  // each sorted ascending
};

struct Violation {
    enum class Kind { missing_vertex, uncovered_edge, broken_interval };
    Kind kind;
    int u = -1;
    int v = -1;        // second endpoint for uncovered_edge
    int bag_a = -1;    // witness bag indices for broken_interval
    int bag_b = -1;
    std::string describe() const;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
};

ValidationReport validate(const Graph& g, const PathDecomposition& d);

/// max bag size - 1; requires at least one bag.
int width(const PathDecomposition& d);

/// Drop empty bags (intermediate construction artifacts).
PathDecomposition strip_empty_bags(PathDecomposition d);

/// Split bags until every vertex's first bag is distinct from every other
/// vertex's first bag: the earliest shared first-bag B is replaced by
/// (B minus v, B) for the smallest offending vertex v, repeated to fixpoint.
/// Preserves validity and width.
PathDecomposition normalise(const Graph& g, const PathDecomposition& d);

/// Normalisation core on raw bags; validity of the input is the caller's
/// responsibility.
std::vector<std::vector<int>> normalise_bags(std::vector<std::vector<int>> bags);

/// One bag per vertex v holding the root-to-v path, emitted in depth-first
/// preorder (ascending children), trees concatenated. Valid for clos(f) and
/// hence any subgraph of it; width equals the forest height.
PathDecomposition forest_closure_decomposition(const RootedForest& f);

}  // namespace cpw
