#include "cpw/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cpw/gadgets.hpp"
#include "cpw/json_io.hpp"
#include "cpw/pipeline.hpp"
#include "cpw/trees.hpp"

namespace cpw::cli {

namespace {

struct Common {
    std::string input;
    std::string format = "edgelist";
    std::string out_mode = "json";
    int budget = 0;     // 0 = per-oracle default
    long long seed = 0;  // accepted for compatibility; all subcommands are deterministic
};

void add_common(CLI::App* cmd, Common& c, bool with_input = true) {
    cmd->add_option("--format", c.format, "input graph format")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    cmd->add_option("--out", c.out_mode, "output mode")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    cmd->add_option("--budget", c.budget, "oracle vertex ceiling override");
    cmd->add_option("--seed", c.seed, "reserved; outputs are deterministic");
    if (with_input) cmd->add_option("input", c.input, "graph file or - for stdin")->required();
}

Graph load_graph(const Common& c) {
    GraphFormat fmt = c.format == "graph6" ? GraphFormat::graph6 : GraphFormat::edgelist;
    if (c.input == "-") return parse_graph(std::cin, fmt);
    std::ifstream file(c.input);
    if (!file) throw parse_error("cannot open input file: " + c.input);
    return parse_graph(file, fmt);
}

std::string read_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

OracleBudget budget_or(const Common& c, int fallback) {
    return {c.budget > 0 ? c.budget : fallback};
}

std::string decomposition_text(const PathDecomposition& d) {
    std::ostringstream out;
    out << "width " << width(d) << "\n";
    for (const auto& bag : d.bags) {
        out << "bag";
        for (int v : bag) out << ' ' << v;
        out << "\n";
    }
    return out.str();
}

std::string decomposition_dot(const PathDecomposition& d) {
    std::ostringstream out;
    out << "graph decomposition {\n  node [shape=box];\n";
    for (size_t i = 0; i < d.bags.size(); ++i) {
        out << "  b" << i << " [label=\"";
        for (size_t j = 0; j < d.bags[i].size(); ++j)
            out << (j ? " " : "") << d.bags[i][j];
        out << "\"];\n";
    }
    for (size_t i = 0; i + 1 < d.bags.size(); ++i)
        out << "  b" << i << " -- b" << i + 1 << ";\n";
    out << "}\n";
    return out.str();
}

void emit_decomposition(const Common& c, const PathDecomposition& d, const std::string& json_text,
                        std::ostream& out) {
    if (c.out_mode == "json")
        out << json_text;
    else if (c.out_mode == "dot")
        out << decomposition_dot(d);
    else
        out << decomposition_text(d);
}

int cmd_decompose_thm1(const Common& c, std::optional<int> t, std::ostream& out) {
    Graph g = load_graph(c);
    auto cert = thm1_decompose(g, t, budget_or(c, 20));
    auto report = validate(g, cert.decomposition);
    if (!report.valid || width(cert.decomposition) > cert.bound)
        throw verification_error("emitted certificate failed re-validation");
    emit_decomposition(c, cert.decomposition, thm1_to_json(cert), out);
    return 0;
}

int cmd_compose_lemma2(const Common& c, std::ostream& out) {
    Graph g = load_graph(c);
    if (g.n() == 0) throw precondition_error("empty graph");
    auto bcf = block_cut_forest(g);
    auto plan = canonical_forest_plan(bcf);
    std::map<int, PathDecomposition> blocks;
    int m = 1;
    for (int b = 0; b < bcf.block_count(); ++b) {
        if (bcf.blocks[b].size() <= 2) continue;
        auto sub = induced_subgraph(g, bcf.blocks[b]);
        auto cert = thm1_decompose(sub.graph, std::nullopt, budget_or(c, 20));
        PathDecomposition mapped;
        for (auto bag : cert.decomposition.bags) {
            for (int& v : bag) v = sub.to_host[v];
            std::sort(bag.begin(), bag.end());
            mapped.bags.push_back(std::move(bag));
        }
        m = std::max(m, width(mapped));
        blocks[b] = std::move(mapped);
    }
    auto composed = lemma2_compose(g, bcf, plan.decomposition, blocks);
    auto report = validate(g, composed);
    if (!report.valid) throw verification_error("emitted certificate failed re-validation");
    int n_forest = width(plan.decomposition);
    long long bound = static_cast<long long>(m + 3) * (n_forest + 1) - 3;
    emit_decomposition(c, composed, lemma2_to_json(composed, m, n_forest, bound), out);
    return 0;
}

int cmd_pipeline(const Common& c, int k, int t, const std::string& hitting_csv,
                 std::ostream& out) {
    Graph g = load_graph(c);
    std::optional<std::vector<int>> h_override;
    if (!hitting_csv.empty()) {
        std::vector<int> hs;
        std::stringstream ss(hitting_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                hs.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw parse_error("bad vertex id in --hitting-set: " + tok);
            }
        }
        h_override = std::move(hs);
    }
    auto outcome = thm2_pipeline(g, k, t, h_override, budget_or(c, 18));
    if (outcome.decomposition) {
        auto report = validate(g, *outcome.decomposition);
        if (!report.valid || width(*outcome.decomposition) > outcome.width_budget)
            throw verification_error("emitted certificate failed re-validation");
    } else if (outcome.packing) {
        auto report = validate_cycle_packing(g, *outcome.packing);
        if (!report.valid || static_cast<int>(outcome.packing->cycles.size()) != k)
            throw verification_error("emitted certificate failed re-validation");
    } else {
        throw verification_error("pipeline produced no certificate");
    }
    if (c.out_mode == "json") {
        out << pipeline_outcome_to_json(outcome);
    } else if (outcome.decomposition) {
        out << "branch decomposition, budget " << outcome.width_budget << "\n"
            << decomposition_text(*outcome.decomposition);
    } else {
        out << "branch packing, " << outcome.packing->cycles.size() << " cycles\n";
        for (const auto& cyc : outcome.packing->cycles) {
            out << "cycle";
            for (int v : cyc) out << ' ' << v;
            out << "\n";
        }
    }
    return 0;
}

int cmd_extract_cbt(const Common& c, std::optional<int> target, int root, std::ostream& out) {
    Graph g = load_graph(c);
    auto map = rooted_pw_map(g, root);
    int q = target ? *target : map.root_value() - 1;
    if (q < 0) throw precondition_error("tree admits no binary-tree minor at this root");
    auto model = extract_cbt_minor(g, root, q);
    auto report = validate_minor_model(g, model);
    if (!report.valid) throw verification_error("emitted model failed re-validation");
    if (c.out_mode == "text") {
        out << "height " << q << "\n";
        for (int x = 0; x < static_cast<int>(model.branch_sets.size()); ++x) {
            out << x << ":";
            for (int v : model.branch_sets[x]) out << ' ' << v;
            out << "\n";
        }
    } else {
        out << minor_model_to_json(model);
    }
    return 0;
}

int cmd_verify(const Common& c, const std::string& decomposition_file,
               const std::string& packing_file, std::optional<int> t, std::ostream& out) {
    Graph g = load_graph(c);
    if (!decomposition_file.empty()) {
        auto d = decomposition_from_json(read_file(decomposition_file));
        auto report = validate(g, d);
        if (c.out_mode == "text") {
            out << (report.valid ? "valid" : "invalid") << "\n";
            for (const auto& v : report.violations) out << v.describe() << "\n";
        } else {
            std::ostringstream j;
            j << "{\n  \"valid\": " << (report.valid ? "true" : "false") << ",\n  \"violations\": [";
            for (size_t i = 0; i < report.violations.size(); ++i)
                j << (i ? ", " : "") << '"' << report.violations[i].describe() << '"';
            j << "]\n}\n";
            out << j.str();
        }
        return report.valid ? 0 : 1;
    }
    if (!packing_file.empty()) {
        auto packing = cycle_packing_from_json(read_file(packing_file));
        if (t) packing.min_length = std::max(packing.min_length, *t);
        auto report = validate_cycle_packing(g, packing);
        if (c.out_mode == "text") {
            out << (report.valid ? "valid" : "invalid") << "\n";
            for (const auto& p : report.problems) out << p << "\n";
        } else {
            std::ostringstream j;
            j << "{\n  \"valid\": " << (report.valid ? "true" : "false") << ",\n  \"problems\": [";
            for (size_t i = 0; i < report.problems.size(); ++i)
                j << (i ? ", " : "") << '"' << report.problems[i] << '"';
            j << "]\n}\n";
            out << j.str();
        }
        return report.valid ? 0 : 1;
    }
    throw precondition_error("verify needs --decomposition or --packing");
}

int cmd_oracle(const Common& c, const std::string& which, std::optional<int> t,
               const std::string& pattern_file, std::ostream& out) {
    Graph g = load_graph(c);
    bool json = c.out_mode == "json";
    if (which == "pathwidth") {
        auto r = exact_pathwidth(g, budget_or(c, 20));
        out << (json ? pathwidth_result_to_json(r) : std::to_string(r.value) + "\n");
        return 0;
    }
    if (which == "treedepth") {
        auto r = exact_treedepth(g, budget_or(c, 16));
        out << (json ? treedepth_result_to_json(r) : std::to_string(r.value) + "\n");
        return 0;
    }
    if (which == "circumference") {
        auto r = circumference(g, budget_or(c, 20));
        out << (json ? cycle_result_to_json(r) : std::to_string(r.length) + "\n");
        return 0;
    }
    if (which == "longest-path") {
        auto r = longest_path_edges(g, budget_or(c, 20));
        out << (json ? path_result_to_json(r) : std::to_string(r.edges) + "\n");
        return 0;
    }
    if (which == "transversal") {
        auto r = transversal_number(g, budget_or(c, 18));
        out << (json ? transversal_result_to_json(r) : std::to_string(r.value) + "\n");
        return 0;
    }
    if (which == "connectivity") {
        out << vertex_connectivity(g) << "\n";
        return 0;
    }
    if (which == "packing") {
        if (!t) throw precondition_error("oracle packing needs --t");
        auto r = max_long_cycle_packing(g, *t, budget_or(c, 14));
        if (json)
            out << cycle_packing_to_json(r);
        else
            out << r.cycles.size() << "\n";
        return 0;
    }
    if (which == "hitting-set") {
        if (!t) throw precondition_error("oracle hitting-set needs --t");
        auto r = min_hitting_set(g, *t, budget_or(c, 18));
        if (json)
            out << hitting_set_to_json(r);
        else
            out << r.vertices.size() << "\n";
        return 0;
    }
    if (which == "minor") {
        if (pattern_file.empty()) throw precondition_error("oracle minor needs --pattern");
        Common pc = c;
        pc.input = pattern_file;
        Graph pattern = load_graph(pc);
        auto r = minor_contains(g, pattern, budget_or(c, 16));
        if (json)
            out << (r ? minor_model_to_json(*r) : "null\n");
        else
            out << (r ? "present" : "absent") << "\n";
        return 0;
    }
    throw precondition_error("unknown oracle: " + which);
}

int cmd_gadget(const Common& c, const std::string& name, const std::vector<int>& params,
               std::ostream& out) {
    auto need = [&](size_t count) {
        if (params.size() != count)
            throw precondition_error("gadget " + name + " needs " + std::to_string(count) +
                                     " integer parameter(s)");
    };
    Graph g;
    if (name == "cbt_dominants") {
        need(2);
        g = cbt_plus_dominants(params[0], params[1]);
    } else if (name == "outerplanar_family") {
        need(1);
        g = outerplanar_family(params[0]);
    } else if (name == "disjoint_cycles") {
        need(2);
        g = disjoint_cycles(params[0], params[1]);
    } else if (name == "cbt") {
        need(1);
        g = cbt(params[0]).graph;
    } else {
        need(0);
        g = named_gadget(name);
    }
    if (c.out_mode == "dot")
        out << write_dot(g);
    else if (c.format == "graph6")
        out << write_graph6(g) << "\n";
    else
        out << write_edge_list(g);
    return 0;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"certified path decompositions from circumference and connectivity bounds"};
    app.require_subcommand(1);

    Common c_thm1;
    int thm1_t = -1;
    auto* s_thm1 = app.add_subcommand("decompose-thm1",
                                      "path decomposition of a 2-connected graph via its "
                                      "depth-first tree");
    add_common(s_thm1, c_thm1);
    s_thm1->add_option("--t", thm1_t, "circumference bound (computed exactly when omitted)");

    Common c_lem2;
    auto* s_lem2 = app.add_subcommand("compose-lemma2",
                                      "glue per-block decompositions along the block-cut forest");
    add_common(s_lem2, c_lem2);

    Common c_pipe;
    int pipe_k = 0, pipe_t = 0;
    std::string pipe_hs;
    auto* s_pipe = app.add_subcommand("pipeline-thm2",
                                      "decomposition within an explicit width budget or k "
                                      "disjoint cycles of length at least t");
    add_common(s_pipe, c_pipe);
    s_pipe->add_option("--k", pipe_k, "number of disjoint cycles")->required();
    s_pipe->add_option("--t", pipe_t, "cycle length threshold")->required();
    s_pipe->add_option("--hitting-set", pipe_hs, "comma-separated override hitting set");

    Common c_ext;
    int ext_t = -1, ext_root = 0;
    auto* s_ext = app.add_subcommand("extract-cbt",
                                     "complete-binary-tree minor of a tree, anchored at a root");
    add_common(s_ext, c_ext);
    s_ext->add_option("--t", ext_t, "target height (default: largest extractable)");
    s_ext->add_option("--root", ext_root, "anchor vertex (default 0)");

    Common c_ver;
    std::string ver_decomp, ver_pack;
    int ver_t = -1;
    auto* s_ver = app.add_subcommand("verify", "re-check a certificate against its graph");
    add_common(s_ver, c_ver);
    s_ver->add_option("--decomposition", ver_decomp, "decomposition JSON file");
    s_ver->add_option("--packing", ver_pack, "cycle packing JSON file");
    s_ver->add_option("--t", ver_t, "required minimum cycle length");

    Common c_ora;
    c_ora.out_mode = "text";  // bare invocations print the number
    std::string ora_which, ora_pattern;
    int ora_t = -1;
    auto* s_ora = app.add_subcommand("oracle", "exact exponential-time reference solvers");
    s_ora->add_option("which", ora_which, "pathwidth|treedepth|circumference|longest-path|"
                                          "transversal|connectivity|packing|hitting-set|minor")
        ->required();
    add_common(s_ora, c_ora);
    s_ora->add_option("--t", ora_t, "cycle length threshold where applicable");
    s_ora->add_option("--pattern", ora_pattern, "pattern graph file for the minor oracle");

    Common c_gad;
    std::string gad_name;
    std::vector<int> gad_params;
    auto* s_gad = app.add_subcommand("gadget", "deterministic example-family generators");
    s_gad->add_option("name", gad_name,
                      "cbt|cbt_dominants|outerplanar_family|disjoint_cycles|Q|K4|K23|K3uK3|petersen")
        ->required();
    s_gad->add_option("params", gad_params, "integer parameters");
    add_common(s_gad, c_gad, false);

    Common c_par;
    int par_k = 0, par_t = 0, par_h = 0;
    std::string par_mode = "standard";
    double par_const = 0.0;
    auto* s_par = app.add_subcommand("params", "pipeline parameters and hitting budget");
    s_par->set_help_flag("--help", "print help");  // frees -h for the --h option
    s_par->add_option("--k", par_k)->required();
    s_par->add_option("--t", par_t)->required();
    s_par->add_option("--h", par_h)->required();
    s_par->add_option("--ep-bound", par_mode, "budget shape")
        ->check(CLI::IsMember({"standard", "fh"}));
    s_par->add_option("--ep-constant", par_const, "constant for the fh budget shape");
    add_common(s_par, c_par, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (s_thm1->parsed())
        return cmd_decompose_thm1(c_thm1, thm1_t >= 0 ? std::optional<int>(thm1_t) : std::nullopt,
                                  out);
    if (s_lem2->parsed()) return cmd_compose_lemma2(c_lem2, out);
    if (s_pipe->parsed()) return cmd_pipeline(c_pipe, pipe_k, pipe_t, pipe_hs, out);
    if (s_ext->parsed())
        return cmd_extract_cbt(c_ext, ext_t >= 0 ? std::optional<int>(ext_t) : std::nullopt,
                               ext_root, out);
    if (s_ver->parsed())
        return cmd_verify(c_ver, ver_decomp, ver_pack,
                          ver_t >= 0 ? std::optional<int>(ver_t) : std::nullopt, out);
    if (s_ora->parsed())
        return cmd_oracle(c_ora, ora_which, ora_t >= 0 ? std::optional<int>(ora_t) : std::nullopt,
                          ora_pattern, out);
    if (s_gad->parsed()) return cmd_gadget(c_gad, gad_name, gad_params, out);
    if (s_par->parsed()) {
        auto p = pipeline_params(par_k, par_t, par_h);
        auto mode = par_mode == "fh" ? EpBoundMode::fh : EpBoundMode::standard;
        long long budget = ep_budget(par_k, par_t, mode,
                                     par_const > 0 ? std::optional<double>(par_const)
                                                   : std::nullopt);
        if (c_par.out_mode == "text")
            out << "h " << p.h << "\ni " << p.subtree_count_log << "\nj " << p.subtree_height
                << "\nbudget " << budget << "\n";
        else
            out << params_to_json(p, budget);
        return 0;
    }
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const parse_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const budget_error& e) {
        err << e.what() << "\n";
        return 4;
    } catch (const verification_error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cpw::cli
