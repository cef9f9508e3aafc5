#pragma once

#include <string>
#include <vector>

#include "cpw/graph.hpp"
#include "cpw/oracles.hpp"

namespace cpw {

/// Complete binary tree of the given height plus `dominants` vertices
/// adjacent to everything (including each other).
Graph cbt_plus_dominants(int height, int dominants);

/// Iterated outerplanar family: K3, then one new degree-2 vertex per outer
/// edge at every step. 3 * 2^i vertices; refuses i > 6.
Graph outerplanar_family(int i);

/// k disjoint cycles of length t.
Graph disjoint_cycles(int t, int k);

/// Named fixed graphs: Q (octahedron minus a triangle), K4, K23, K3uK3,
/// petersen, plus cbt-h shortcuts are not included here (see cbt()).
Graph named_gadget(const std::string& name);
std::vector<std::string> gadget_names();

/// Lower-bound certificate: for a pattern with transversal number tau >= 1,
/// the graph cbt(height) + (tau-1) dominants is tau-connected, has
/// transversal number tau-1, and excludes the pattern as a minor. All three
/// facts are oracle-checked before return.
struct MinorExclusionCertificate {
    Graph graph;
    int pattern_transversal = 0;  // tau
    int graph_transversal = 0;    // tau - 1
    int connectivity_checked = 0;  // >= tau established
    bool pattern_minor_absent = false;
};

MinorExclusionCertificate proposition1_certificate(const Graph& pattern, int height);

}  // namespace cpw
