#include "cpw/gadgets.hpp"

#include <algorithm>

#include "cpw/trees.hpp"

namespace cpw {

Graph cbt_plus_dominants(int height, int dominants) {
    if (height < 0 || dominants < 0)
        throw precondition_error("cbt_plus_dominants needs nonnegative parameters");
    auto base = cbt(height).graph;
    int tree_n = base.n();
    Graph g(tree_n + dominants);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    for (int d = 0; d < dominants; ++d)
        for (int v = 0; v < tree_n + d; ++v) g.add_edge(v, tree_n + d);
    return g;
}

Graph outerplanar_family(int i) {
    if (i < 0) throw precondition_error("outerplanar_family needs i >= 0");
    if (i > 6) throw budget_error("outerplanar_family size doubles per step; i capped at 6");
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    std::vector<int> outer{0, 1, 2};
    for (int step = 0; step < i; ++step) {
        int old_n = g.n();
        int cycle_len = static_cast<int>(outer.size());
        Graph next(old_n + cycle_len);
        for (auto [u, v] : g.edges()) next.add_edge(u, v);
        std::vector<int> new_outer;
        for (int e = 0; e < cycle_len; ++e) {
            int v = outer[e], w = outer[(e + 1) % cycle_len];
            int fresh = old_n + e;
            next.add_edge(v, fresh);
            next.add_edge(w, fresh);
            new_outer.push_back(v);
            new_outer.push_back(fresh);
        }
        g = std::move(next);
        outer = std::move(new_outer);
    }
    return g;
}

Graph disjoint_cycles(int t, int k) {
    if (t < 3) throw precondition_error("disjoint_cycles needs cycle length t >= 3");
    if (k < 1) throw precondition_error("disjoint_cycles needs k >= 1");
    Graph g(t * k);
    for (int c = 0; c < k; ++c)
        for (int idx = 0; idx < t; ++idx)
            g.add_edge(c * t + idx, c * t + (idx + 1) % t);
    return g;
}

std::vector<std::string> gadget_names() { return {"Q", "K4", "K23", "K3uK3", "petersen"}; }

Graph named_gadget(const std::string& name) {
    if (name == "K4") {
        Graph g(4);
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
        return g;
    }
    if (name == "K23") {
        Graph g(5);
        for (int a = 0; a < 2; ++a)
            for (int b = 2; b < 5; ++b) g.add_edge(a, b);
        return g;
    }
    if (name == "K3uK3") return disjoint_cycles(3, 2);
    if (name == "Q") {
        // K_{2,2,2} on parts {0,1}, {2,3}, {4,5} minus the triangle 0-2-4.
        Graph g(6);
        int part[6] = {0, 0, 1, 1, 2, 2};
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (part[u] != part[v]) g.add_edge(u, v);
        Graph q(6);
        for (auto [u, v] : g.edges()) {
            bool removed = (u == 0 && v == 2) || (u == 2 && v == 4) || (u == 0 && v == 4);
            if (!removed) q.add_edge(u, v);
        }
        return q;
    }
    if (name == "petersen") {
        Graph g(10);
        for (int idx = 0; idx < 5; ++idx) {
            g.add_edge(idx, (idx + 1) % 5);
            g.add_edge(idx, idx + 5);
            g.add_edge(5 + idx, 5 + (idx + 2) % 5);
        }
        return g;
    }
    throw precondition_error("unknown gadget name: " + name);
}

MinorExclusionCertificate proposition1_certificate(const Graph& pattern, int height) {
    auto tau = transversal_number(pattern);
    if (tau.value < 1)
        throw precondition_error("proposition1_certificate needs an acyclic-free pattern (tau >= 1)");
    MinorExclusionCertificate cert;
    cert.pattern_transversal = tau.value;
    cert.graph = cbt_plus_dominants(height, tau.value - 1);

    if (!is_connectivity_at_least(cert.graph, tau.value))
        throw verification_error("certificate graph is not tau-connected");
    cert.connectivity_checked = tau.value;

    auto gt = transversal_number(cert.graph);
    if (gt.value != tau.value - 1)
        throw verification_error("certificate graph transversal number is not tau - 1");
    cert.graph_transversal = gt.value;

    if (minor_contains(cert.graph, pattern, {cert.graph.n()}))
        throw verification_error("certificate graph unexpectedly contains the pattern as a minor");
    cert.pattern_minor_absent = true;
    return cert;
}

}  // namespace cpw
