#include "cpw/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <queue>
#include <sstream>

namespace cpw {

Graph::Graph(int n) {
    if (n < 0) throw precondition_error("vertex count must be nonnegative");
    adj_.resize(n);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n())
        throw precondition_error("vertex id " + std::to_string(v) + " out of range [0, " +
                                 std::to_string(n()) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw precondition_error("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw precondition_error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n(), 0);
    for (int s = 0; s < n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected() const {
    if (n() == 0) return true;
    return static_cast<int>(components().front().size()) == n();
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Subgraph::to_local(int host) const {
    auto it = std::lower_bound(to_host.begin(), to_host.end(), host);
    if (it == to_host.end() || *it != host) return -1;
    return static_cast<int>(it - to_host.begin());
}

Subgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    Subgraph sub;
    sub.to_host = vertices;
    sub.graph = Graph(static_cast<int>(vertices.size()));
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        for (int w : g.neighbors(vertices[i])) {
            int j = sub.to_local(w);
            if (j > i) sub.graph.add_edge(i, j);
        }
    }
    return sub;
}

// ---------------------------------------------------------------------------
// Parsing and serialization
// ---------------------------------------------------------------------------

namespace {

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            // Skip blank lines only at the very end; inside the body they are errors.
            return true;
        }
        if (required) throw parse_error("unexpected end of input", lineno);
        return false;
    };

    if (!next_line(false)) throw parse_error("empty input", 0);
    long long n = 0, m = 0;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> m)) throw parse_error("expected header \"n m\"", lineno);
        std::string rest;
        if (hs >> rest) throw parse_error("trailing tokens after header", lineno);
        if (n < 0 || m < 0) throw parse_error("negative count in header", lineno);
    }
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        next_line(true);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v)) throw parse_error("expected edge \"u v\"", lineno);
        std::string rest;
        if (ls >> rest) throw parse_error("trailing tokens after edge", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("vertex id out of range", lineno);
        if (u == v) throw parse_error("self-loop", lineno);
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw parse_error("duplicate edge", lineno);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
            throw parse_error("trailing content after last edge", lineno);
    }
    return g;
}

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

Graph parse_graph6_line(const std::string& raw) {
    std::string s = raw;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (s.empty()) throw parse_error("empty graph6 string", 1);

    size_t pos = 0;
    auto byte = [&]() -> int {
        if (pos >= s.size()) throw parse_error("truncated graph6 string", 1);
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < kG6Lo || c > kG6Hi)
            throw parse_error("invalid graph6 byte at offset " + std::to_string(pos - 1), 1);
        return c - kG6Lo;
    };

    long long n;
    int first = byte();
    if (first < 63) {
        n = first;
    } else {
        // first == 63 (0x7e marker)
        int a = byte();
        if (a == 63) {
            long long v = 0;
            for (int i = 0; i < 6; ++i) v = (v << 6) | byte();
            n = v;
        } else {
            long long v = a;
            v = (v << 6) | byte();
            v = (v << 6) | byte();
            n = v;
        }
    }
    if (n > 100000) throw parse_error("graph6 vertex count too large", 1);

    Graph g(static_cast<int>(n));
    long long bits_needed = n * (n - 1) / 2;
    int buf = 0, buf_bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (buf_bits == 0) {
                buf = byte();
                buf_bits = 6;
            }
            --buf_bits;
            if ((buf >> buf_bits) & 1) g.add_edge(i, j);
        }
    }
    if (bits_needed % 6 != 0 && buf_bits > 0 && (buf & ((1 << buf_bits) - 1)) != 0)
        throw parse_error("nonzero padding bits in graph6 string", 1);
    if (pos != s.size()) throw parse_error("trailing bytes after graph6 data", 1);
    return g;
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
    if (format == GraphFormat::edgelist) return parse_edge_list(in);
    std::string line;
    if (!std::getline(in, line)) throw parse_error("empty input", 0);
    Graph g = parse_graph6_line(line);
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw parse_error("trailing content after graph6 line", 2);
    return g;
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    std::istringstream in(text);
    return parse_graph(in, format);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string write_graph6(const Graph& g) {
    std::string s;
    long long n = g.n();
    if (n <= 62) {
        s.push_back(static_cast<char>(n + kG6Lo));
    } else if (n <= 258047) {
        s.push_back(static_cast<char>(126));
        s.push_back(static_cast<char>(((n >> 12) & 63) + kG6Lo));
        s.push_back(static_cast<char>(((n >> 6) & 63) + kG6Lo));
        s.push_back(static_cast<char>((n & 63) + kG6Lo));
    } else {
        throw budget_error("graph6 writer supports at most 258047 vertices");
    }
    int buf = 0, buf_bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            buf = (buf << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++buf_bits == 6) {
                s.push_back(static_cast<char>(buf + kG6Lo));
                buf = 0;
                buf_bits = 0;
            }
        }
    }
    if (buf_bits > 0) s.push_back(static_cast<char>((buf << (6 - buf_bits)) + kG6Lo));
    return s;
}

std::string write_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Rooted forests and DFS trees
// ---------------------------------------------------------------------------

int RootedForest::forest_height() const {
    int h = 0;
    for (int x : height) h = std::max(h, x);
    return h;
}

bool RootedForest::is_ancestor(int anc, int v) const {
    while (v != -1) {
        if (v == anc) return true;
        v = parent[v];
    }
    return false;
}

std::vector<std::vector<int>> RootedForest::children() const {
    std::vector<std::vector<int>> ch(size());
    for (int v = 0; v < size(); ++v)
        if (parent[v] != -1) ch[parent[v]].push_back(v);
    return ch;  // ascending since v iterates ascending
}

Graph RootedForest::tree_graph() const {
    Graph g(size());
    for (int v = 0; v < size(); ++v)
        if (parent[v] != -1) g.add_edge(parent[v], v);
    return g;
}

Graph RootedForest::closure() const {
    Graph g(size());
    for (int v = 0; v < size(); ++v)
        for (int a = parent[v]; a != -1; a = parent[a]) g.add_edge(a, v);
    return g;
}

RootedForest forest_from_parents(std::vector<int> parent) {
    int n = static_cast<int>(parent.size());
    RootedForest f;
    f.parent = std::move(parent);
    f.height.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (f.parent[v] == -1) f.roots.push_back(v);
        if (f.parent[v] < -1 || f.parent[v] >= n)
            throw precondition_error("parent id out of range");
    }
    // Heights by walking up; also detects cycles.
    for (int v = 0; v < n; ++v) {
        int steps = 0, u = v;
        while (u != -1 && f.height[u] == -1) {
            ++steps;
            u = f.parent[u];
            if (steps > n) throw precondition_error("parent links contain a cycle");
        }
        int base = (u == -1) ? -1 : f.height[u];
        u = v;
        std::vector<int> chain;
        while (u != -1 && f.height[u] == -1) {
            chain.push_back(u);
            u = f.parent[u];
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) f.height[*it] = ++base;
    }
    return f;
}

RootedForest dfs_tree(const Graph& g, int root) {
    if (root < 0 || root >= g.n()) throw precondition_error("dfs root out of range");
    if (!g.is_connected()) throw precondition_error("dfs_tree requires a connected graph");
    std::vector<int> parent(g.n(), -1), next(g.n(), 0);
    std::vector<char> visited(g.n(), 0);
    std::vector<int> stack{root};
    visited[root] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        const auto& nb = g.neighbors(v);
        if (next[v] == static_cast<int>(nb.size())) {
            stack.pop_back();
            continue;
        }
        int w = nb[next[v]++];
        if (!visited[w]) {
            visited[w] = 1;
            parent[w] = v;
            stack.push_back(w);
        }
    }
    return forest_from_parents(std::move(parent));
}

int edge_span(const RootedForest& forest, int u, int v) {
    return std::abs(forest.height[u] - forest.height[v]);
}

// ---------------------------------------------------------------------------
// Connectivity via internally disjoint paths (unit vertex capacities)
// ---------------------------------------------------------------------------

namespace {

// Max-flow with vertex splitting: node 2v = in, 2v+1 = out.
struct SplitFlow {
    int n;
    std::vector<std::vector<int>> to;       // adjacency: edge indices
    std::vector<int> head;
    std::vector<int> cap;

    explicit SplitFlow(const Graph& g) : n(g.n()) {
        to.resize(2 * n);
        for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, 1);
        for (auto [u, v] : g.edges()) {
            add(2 * u + 1, 2 * v, n);
            add(2 * v + 1, 2 * u, n);
        }
    }
    void add(int a, int b, int c) {
        to[a].push_back(static_cast<int>(head.size()));
        head.push_back(b);
        cap.push_back(c);
        to[b].push_back(static_cast<int>(head.size()));
        head.push_back(a);
        cap.push_back(0);
    }
    int max_flow(int s, int t, int stop_at) {
        int flow = 0;
        std::vector<int> pre(2 * n);
        while (stop_at < 0 || flow < stop_at) {
            std::fill(pre.begin(), pre.end(), -1);
            std::queue<int> q;
            q.push(s);
            pre[s] = -2;
            while (!q.empty() && pre[t] == -1) {
                int v = q.front();
                q.pop();
                for (int e : to[v]) {
                    if (cap[e] > 0 && pre[head[e]] == -1) {
                        pre[head[e]] = e;
                        q.push(head[e]);
                    }
                }
            }
            if (pre[t] == -1) break;
            for (int v = t; v != s;) {
                int e = pre[v];
                --cap[e];
                ++cap[e ^ 1];
                v = head[e ^ 1];
            }
            ++flow;
        }
        return flow;
    }
};

}  // namespace

int disjoint_paths(const Graph& g, int s, int t, int stop_at) {
    SplitFlow f(g);
    return f.max_flow(2 * s + 1, 2 * t, stop_at);
}

int vertex_connectivity(const Graph& g) {
    int n = g.n();
    if (n <= 1) return 0;
    if (g.m() == n * (n - 1) / 2) return n - 1;  // complete
    int best = n;
    for (int s = 0; s < n && best > 0; ++s)
        for (int t = s + 1; t < n && best > 0; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, disjoint_paths(g, s, t, best + 1));
    return best;
}

bool is_connectivity_at_least(const Graph& g, int k) {
    if (k <= 0) return true;
    int n = g.n();
    if (n < k + 1) return false;
    if (g.m() == n * (n - 1) / 2) return true;  // complete, connectivity n-1 >= k
    // A vertex cut smaller than k misses at least one of the vertices
    // 0..k-1, so scanning those against all their non-neighbors finds a
    // deficient pair whenever one exists.
    for (int s = 0; s < k; ++s)
        for (int t = 0; t < n; ++t)
            if (t != s && !g.has_edge(s, t) && disjoint_paths(g, s, t, k) < k) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Blocks and cut vertices
// ---------------------------------------------------------------------------

BlockCutForest block_cut_forest(const Graph& g) {
    int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0), next(n, 0), parent(n, -1);
    std::vector<char> articulation(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> raw_blocks;
    int timer = 0;

    for (int start = 0; start < n; ++start) {
        if (disc[start] != -1) continue;
        if (g.degree(start) == 0) {
            disc[start] = timer++;
            continue;  // isolated vertex, singleton block added below
        }
        std::vector<int> stack{start};
        disc[start] = low[start] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            int v = stack.back();
            const auto& nb = g.neighbors(v);
            if (next[v] < static_cast<int>(nb.size())) {
                int w = nb[next[v]++];
                if (disc[w] == -1) {
                    edge_stack.emplace_back(v, w);
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    if (v == start) ++root_children;
                    stack.push_back(w);
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[v];
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        // pop the block containing edge (p, v)
                        std::vector<std::pair<int, int>> blk;
                        while (!edge_stack.empty()) {
                            auto e = edge_stack.back();
                            edge_stack.pop_back();
                            blk.push_back(e);
                            if (e.first == p && e.second == v) break;
                        }
                        raw_blocks.push_back(std::move(blk));
                        if (p != start) articulation[p] = 1;
                    }
                }
            }
        }
        if (root_children >= 2) articulation[start] = 1;
    }

    BlockCutForest bcf;
    for (auto& blk : raw_blocks) {
        std::vector<int> verts;
        for (auto [u, v] : blk) {
            verts.push_back(u);
            verts.push_back(v);
            if (u > v) std::swap(u, v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (auto& e : blk)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(blk.begin(), blk.end());
        bcf.blocks.push_back(std::move(verts));
        bcf.block_edges.push_back(std::move(blk));
    }
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) {
            bcf.blocks.push_back({v});
            bcf.block_edges.push_back({});
        }

    // Canonical order: sort blocks lexicographically by vertex set.
    std::vector<int> order(bcf.blocks.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return bcf.blocks[a] < bcf.blocks[b]; });
    BlockCutForest out;
    for (int i : order) {
        out.blocks.push_back(std::move(bcf.blocks[i]));
        out.block_edges.push_back(std::move(bcf.block_edges[i]));
    }
    for (int v = 0; v < n; ++v)
        if (articulation[v]) out.cut_vertices.push_back(v);
    return out;
}

int BlockCutForest::cut_index_of(int host_vertex) const {
    auto it = std::lower_bound(cut_vertices.begin(), cut_vertices.end(), host_vertex);
    if (it == cut_vertices.end() || *it != host_vertex) return -1;
    return static_cast<int>(it - cut_vertices.begin());
}

Graph BlockCutForest::forest_graph() const {
    Graph g(node_count());
    for (int b = 0; b < block_count(); ++b)
        for (int v : blocks[b]) {
            int ci = cut_index_of(v);
            if (ci != -1) g.add_edge(b, cut_node(ci));
        }
    return g;
}

}  // namespace cpw
