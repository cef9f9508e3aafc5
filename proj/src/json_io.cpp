#include "cpw/json_io.hpp"

#include <algorithm>

#include "json.hpp"

namespace cpw {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON");
    return j;
}

json decomposition_json(const PathDecomposition& d) {
    json j;
    j["width"] = width(d);
    j["bags"] = d.bags;
    return j;
}

}  // namespace

std::string decomposition_to_json(const PathDecomposition& d) {
    return dump(decomposition_json(d));
}

PathDecomposition decomposition_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("bags") || !j["bags"].is_array())
        throw parse_error("decomposition JSON needs a \"bags\" array");
    PathDecomposition d;
    for (const auto& bag : j["bags"]) {
        if (!bag.is_array()) throw parse_error("each bag must be an array of vertex ids");
        std::vector<int> b;
        for (const auto& v : bag) {
            if (!v.is_number_integer()) throw parse_error("bag entries must be integers");
            b.push_back(v.get<int>());
        }
        std::sort(b.begin(), b.end());
        d.bags.push_back(std::move(b));
    }
    if (j.contains("width")) {
        if (!j["width"].is_number_integer()) throw parse_error("\"width\" must be an integer");
        if (!d.bags.empty() && j["width"].get<int>() != width(d))
            throw verification_error("stored width does not match the bags");
    }
    return d;
}

std::string thm1_to_json(const Thm1Certificate& cert) {
    json j = decomposition_json(cert.decomposition);
    j["meta"] = {{"t", cert.circumference_bound},
                 {"bound", cert.bound},
                 {"dfsHeight", cert.dfs_height}};
    return dump(j);
}

std::string lemma2_to_json(const PathDecomposition& d, int m, int n, long long bound) {
    json j = decomposition_json(d);
    j["meta"] = {{"m", m}, {"n", n}, {"bound", bound}};
    return dump(j);
}

std::string minor_model_to_json(const MinorModel& model) {
    json j;
    j["pattern"] = model.pattern.edges();
    j["pattern_n"] = model.pattern.n();
    json sets = json::object();
    for (int x = 0; x < static_cast<int>(model.branch_sets.size()); ++x)
        sets[std::to_string(x)] = model.branch_sets[x];
    j["branch_sets"] = sets;
    if (model.root_anchor)
        j["root_anchor"] = {model.root_anchor->first, model.root_anchor->second};
    return dump(j);
}

MinorModel minor_model_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("branch_sets") || !j["branch_sets"].is_object())
        throw parse_error("minor model JSON needs a \"branch_sets\" object");
    auto key_index = [](const std::string& key) {
        try {
            size_t used = 0;
            int idx = std::stoi(key, &used);
            if (used != key.size() || idx < 0 || idx > 4096)
                throw parse_error("bad branch set key: " + key);
            return idx;
        } catch (const std::logic_error&) {
            throw parse_error("bad branch set key: " + key);
        }
    };
    MinorModel model;
    int pattern_n = 0;
    for (auto& [key, val] : j["branch_sets"].items())
        pattern_n = std::max(pattern_n, key_index(key) + 1);
    if (j.contains("pattern_n") && j["pattern_n"].is_number_integer())
        pattern_n = std::max(pattern_n, j["pattern_n"].get<int>());
    model.branch_sets.resize(pattern_n);
    for (auto& [key, val] : j["branch_sets"].items()) {
        if (!val.is_array()) throw parse_error("branch sets must be arrays");
        std::vector<int> set;
        for (const auto& v : val) {
            if (!v.is_number_integer()) throw parse_error("branch set entries must be integers");
            set.push_back(v.get<int>());
        }
        std::sort(set.begin(), set.end());
        model.branch_sets[key_index(key)] = std::move(set);
    }
    model.pattern = Graph(pattern_n);
    if (j.contains("pattern")) {
        if (!j["pattern"].is_array()) throw parse_error("\"pattern\" must be an edge array");
        for (const auto& e : j["pattern"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw parse_error("pattern edges must be [u, v] pairs");
            model.pattern.add_edge(e[0].get<int>(), e[1].get<int>());
        }
    }
    if (j.contains("root_anchor")) {
        const auto& anchor = j["root_anchor"];
        if (!anchor.is_array() || anchor.size() != 2 || !anchor[0].is_number_integer() ||
            !anchor[1].is_number_integer())
            throw parse_error("\"root_anchor\" must be a [pattern, host] pair");
        model.root_anchor = std::make_pair(anchor[0].get<int>(), anchor[1].get<int>());
    }
    return model;
}

std::string cycle_packing_to_json(const CyclePacking& packing) {
    json j;
    j["cycles"] = packing.cycles;
    j["min_length"] = packing.min_length;
    return dump(j);
}

CyclePacking cycle_packing_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("cycles") || !j["cycles"].is_array())
        throw parse_error("cycle packing JSON needs a \"cycles\" array");
    CyclePacking packing;
    for (const auto& cycle : j["cycles"]) {
        if (!cycle.is_array()) throw parse_error("each cycle must be an array of vertex ids");
        std::vector<int> c;
        for (const auto& v : cycle) {
            if (!v.is_number_integer()) throw parse_error("cycle entries must be integers");
            c.push_back(v.get<int>());
        }
        packing.cycles.push_back(std::move(c));
    }
    if (j.contains("min_length")) {
        if (!j["min_length"].is_number_integer())
            throw parse_error("\"min_length\" must be an integer");
        packing.min_length = j["min_length"].get<int>();
    }
    return packing;
}

std::string pipeline_outcome_to_json(const PipelineOutcome& outcome) {
    json j;
    j["branch"] =
        outcome.branch == PipelineOutcome::Branch::decomposition ? "decomposition" : "packing";
    j["H"] = outcome.hitting_set;
    if (outcome.params) {
        j["params"] = {{"h", outcome.params->h},
                       {"i", outcome.params->subtree_count_log},
                       {"j", outcome.params->subtree_height}};
    } else {
        j["params"] = nullptr;
    }
    if (outcome.decomposition)
        j["certificate"] = decomposition_json(*outcome.decomposition);
    else if (outcome.packing)
        j["certificate"] = outcome.packing->cycles;
    j["budget"] = outcome.width_budget;
    json trace;
    trace["forest_r"] = outcome.forest_value;
    trace["good_pairs"] = outcome.good_pair_assignment;
    trace["h_floored"] = outcome.params ? outcome.params->h_floored : false;
    j["trace"] = trace;
    return dump(j);
}

std::string hitting_set_to_json(const HittingSet& hs) {
    json j;
    j["vertices"] = hs.vertices;
    j["t"] = hs.threshold;
    return dump(j);
}

std::string forest_to_json(const RootedForest& f) {
    json j;
    j["parent"] = f.parent;
    j["height"] = f.forest_height();
    return dump(j);
}

std::string params_to_json(const PipelineParams& params, long long budget) {
    json j;
    j["h"] = params.h;
    j["i"] = params.subtree_count_log;
    j["j"] = params.subtree_height;
    j["budget"] = budget;
    j["h_floored"] = params.h_floored;
    return dump(j);
}

std::string pathwidth_result_to_json(const PathwidthResult& r) {
    json j;
    j["value"] = r.value;
    j["witness"] = decomposition_json(r.decomposition);
    j["ordering"] = r.ordering;
    return dump(j);
}

std::string treedepth_result_to_json(const TreedepthResult& r) {
    json j;
    j["value"] = r.value;
    j["witness"] = {{"parent", r.forest.parent}, {"height", r.forest.forest_height()}};
    return dump(j);
}

std::string cycle_result_to_json(const CycleResult& r) {
    json j;
    j["value"] = r.length;
    j["witness"] = r.cycle;
    return dump(j);
}

std::string path_result_to_json(const PathResult& r) {
    json j;
    j["value"] = r.edges;
    j["witness"] = r.path;
    return dump(j);
}

std::string transversal_result_to_json(const TransversalResult& r) {
    json j;
    j["value"] = r.value;
    j["witness"] = r.vertices;
    return dump(j);
}

}  // namespace cpw
