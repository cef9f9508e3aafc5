#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cpw/errors.hpp"

namespace cpw {

/// Simple undirected graph over dense vertex ids 0..n-1.
/// Adjacency lists are kept sorted ascending; no loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;

    /// All edges as (u, v) with u < v, lexicographically ascending.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;
    std::vector<std::vector<int>> components() const;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// Induced subgraph on `vertices` (sorted ascending). Local id i corresponds
/// to host vertex vertices[i].
struct Subgraph {
    Graph graph;
    std::vector<int> to_host;
    int to_local(int host) const;  // -1 if absent
};

Subgraph induced_subgraph(const Graph& g, std::vector<int> vertices);

enum class GraphFormat { edgelist, graph6 };

/// Edge-list text: header "n m", then m lines "u v" (0-based).
/// graph6 per the standard public format description.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::string& text, GraphFormat format);

std::string write_edge_list(const Graph& g);
std::string write_graph6(const Graph& g);
std::string write_dot(const Graph& g);

/// Rooted forest: parent links (-1 at roots) and per-vertex height in edges.
struct RootedForest {
    std::vector<int> parent;
    std::vector<int> height;
    std::vector<int> roots;

    int size() const { return static_cast<int>(parent.size()); }
    int forest_height() const;
    bool is_ancestor(int anc, int v) const;
    std::vector<std::vector<int>> children() const;  // ascending per vertex
    Graph tree_graph() const;                        // parent-child edges only
    Graph closure() const;                           // ancestor-descendant edges
};

RootedForest forest_from_parents(std::vector<int> parent);

/// Depth-first spanning tree visiting neighbors in ascending id order.
/// Requires g connected; every non-tree edge then joins an
/// ancestor-descendant pair.
RootedForest dfs_tree(const Graph& g, int root);

/// |height(u) - height(v)| for an edge of g relative to a DFS tree.
int edge_span(const RootedForest& forest, int u, int v);

/// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).
int disjoint_paths(const Graph& g, int s, int t, int stop_at = -1);

/// Vertex connectivity: n-1 for complete graphs, else the minimum over
/// non-adjacent pairs of the internally-disjoint-path count.
int vertex_connectivity(const Graph& g);
bool is_connectivity_at_least(const Graph& g, int k);

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and cut
/// vertices, with their incidence forest. Forest node ids: blocks first
/// (0..B-1), then cut vertices (B..B+C-1) in ascending host-id order.
struct BlockCutForest {
    std::vector<std::vector<int>> blocks;                    // sorted host ids
    std::vector<std::vector<std::pair<int, int>>> block_edges;  // per block, u < v
    std::vector<int> cut_vertices;                           // sorted host ids

    int block_count() const { return static_cast<int>(blocks.size()); }
    int cut_count() const { return static_cast<int>(cut_vertices.size()); }
    int node_count() const { return block_count() + cut_count(); }
    int cut_node(int cut_index) const { return block_count() + cut_index; }
    bool is_block_node(int node) const { return node < block_count(); }
    int cut_index_of(int host_vertex) const;  // -1 if not a cut vertex

    Graph forest_graph() const;  // bipartite block/cut incidence
};

BlockCutForest block_cut_forest(const Graph& g);

}  // namespace cpw
