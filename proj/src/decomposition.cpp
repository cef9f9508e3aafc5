#include "cpw/decomposition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cpw {

std::string Violation::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::missing_vertex:
            out << "vertex " << u << " appears in no bag";
            break;
        case Kind::uncovered_edge:
            out << "edge " << u << "-" << v << " is covered by no bag";
            break;
        case Kind::broken_interval:
            out << "vertex " << u << " appears in bags " << bag_a << " and " << bag_b
                << " but not in between";
            break;
    }
    return out.str();
}

ValidationReport validate(const Graph& g, const PathDecomposition& d) {
    std::vector<std::vector<int>> occurrences(g.n());
    for (int i = 0; i < static_cast<int>(d.bags.size()); ++i) {
        for (int v : d.bags[i]) {
            if (v < 0 || v >= g.n())
                throw precondition_error("bag " + std::to_string(i) + " contains vertex " +
                                         std::to_string(v) + " outside the host graph");
            if (occurrences[v].empty() || occurrences[v].back() != i) occurrences[v].push_back(i);
        }
    }
    ValidationReport report;
    auto add = [&](Violation viol) {
        report.valid = false;
        report.violations.push_back(viol);
    };
    for (int v = 0; v < g.n(); ++v) {
        const auto& occ = occurrences[v];
        if (occ.empty()) {
            add({Violation::Kind::missing_vertex, v});
            continue;
        }
        for (size_t i = 1; i < occ.size(); ++i)
            if (occ[i] > occ[i - 1] + 1) {
                add({Violation::Kind::broken_interval, v, -1, occ[i - 1], occ[i]});
                break;
            }
    }
    for (auto [u, v] : g.edges()) {
        // Covered iff the (sorted) occurrence lists share a bag index.
        const auto& a = occurrences[u];
        const auto& b = occurrences[v];
        size_t i = 0, j = 0;
        bool covered = false;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) {
                covered = true;
                break;
            }
            (a[i] < b[j]) ? ++i : ++j;
        }
        if (!covered) add({Violation::Kind::uncovered_edge, u, v});
    }
    return report;
}

int width(const PathDecomposition& d) {
    if (d.bags.empty()) throw precondition_error("width of an empty decomposition");
    size_t mx = 0;
    for (const auto& bag : d.bags) mx = std::max(mx, bag.size());
    return static_cast<int>(mx) - 1;
}

PathDecomposition strip_empty_bags(PathDecomposition d) {
    d.bags.erase(std::remove_if(d.bags.begin(), d.bags.end(),
                                [](const std::vector<int>& b) { return b.empty(); }),
                 d.bags.end());
    return d;
}

std::vector<std::vector<int>> normalise_bags(std::vector<std::vector<int>> bags) {
    bags = strip_empty_bags({std::move(bags)}).bags;
    for (auto& bag : bags) std::sort(bag.begin(), bag.end());
    while (true) {
        std::map<int, int> first;  // vertex -> first bag index
        for (int i = 0; i < static_cast<int>(bags.size()); ++i)
            for (int v : bags[i]) first.emplace(v, i);
        // Earliest bag that is the first bag of two or more vertices; split off
        // the smallest such vertex.
        std::vector<int> count(bags.size(), 0);
        std::vector<int> min_vertex(bags.size(), -1);
        for (auto [v, i] : first) {
            ++count[i];
            if (min_vertex[i] == -1 || v < min_vertex[i]) min_vertex[i] = v;
        }
        int split_bag = -1, split_vertex = -1;
        for (int i = 0; i < static_cast<int>(bags.size()); ++i) {
            if (count[i] >= 2) {
                split_bag = i;
                split_vertex = min_vertex[i];
                break;
            }
        }
        if (split_bag == -1) break;
        std::vector<int> reduced = bags[split_bag];
        reduced.erase(std::remove(reduced.begin(), reduced.end(), split_vertex), reduced.end());
        bags.insert(bags.begin() + split_bag, std::move(reduced));
    }
    return bags;
}

PathDecomposition normalise(const Graph& g, const PathDecomposition& d) {
    auto report = validate(g, d);
    if (!report.valid)
        throw precondition_error("normalise requires a valid decomposition: " +
                                 report.violations.front().describe());
    PathDecomposition out;
    out.bags = normalise_bags(d.bags);
    return out;
}

PathDecomposition forest_closure_decomposition(const RootedForest& f) {
    if (f.size() == 0) throw precondition_error("forest_closure_decomposition of empty forest");
    auto children = f.children();
    PathDecomposition d;
    std::vector<int> path;
    for (int root : f.roots) {
        // Depth-first preorder with explicit stack; children ascending.
        std::vector<std::pair<int, int>> stack{{root, 0}};
        path.clear();
        path.push_back(root);
        d.bags.push_back(path);
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx == static_cast<int>(children[v].size())) {
                stack.pop_back();
                path.pop_back();
                continue;
            }
            int w = children[v][idx++];
            path.push_back(w);
            auto bag = path;
            std::sort(bag.begin(), bag.end());
            d.bags.push_back(std::move(bag));
            stack.push_back({w, 0});
        }
    }
    return d;
}

}  // namespace cpw
