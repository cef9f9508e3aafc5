#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "cpw/cli.hpp"
#include "cpw/graph.hpp"
#include "cpw/gadgets.hpp"
#include "cpw/json_io.hpp"
#include "cpw/pipeline.hpp"
#include "cpw/trees.hpp"

#include "json.hpp"

using namespace cpw;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) {
        path = std::string("cli_test_") + name;
        std::ofstream file(path);
        file << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("decompose-thm1 happy path and exit codes") {
    TempFile k4("k4.el", write_edge_list(corpus::complete_graph(4)));
    auto r = run_cli({"decompose-thm1", "--out", "json", k4.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"bound\": 6") != std::string::npos);
    auto d = decomposition_from_json(r.out);
    CHECK(validate(corpus::complete_graph(4), d).valid);

    TempFile p3("p3.el", write_edge_list(corpus::path_graph(3)));
    CHECK(run_cli({"decompose-thm1", p3.path}).code == 3);

    TempFile bad("bad.el", "garbage\n");
    CHECK(run_cli({"decompose-thm1", bad.path}).code == 2);

    CHECK(run_cli({"decompose-thm1"}).code == 2);       // missing input
    CHECK(run_cli({"no-such-command"}).code == 2);
}

TEST_CASE("identical invocations are byte-identical") {
    TempFile c6("c6.el", write_edge_list(corpus::cycle_graph(6)));
    auto a = run_cli({"pipeline-thm2", "--k", "2", "--t", "4", c6.path});
    auto b = run_cli({"pipeline-thm2", "--k", "2", "--t", "4", c6.path});
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    auto c = run_cli({"decompose-thm1", c6.path});
    auto d = run_cli({"decompose-thm1", c6.path});
    CHECK(c.out == d.out);
}

TEST_CASE("verify round-trips emitted certificates") {
    auto k4 = corpus::complete_graph(4);
    TempFile graph("k4v.el", write_edge_list(k4));
    auto emitted = run_cli({"decompose-thm1", graph.path});
    REQUIRE(emitted.code == 0);
    TempFile cert("k4.json", emitted.out);
    auto verdict = run_cli({"verify", "--decomposition", cert.path, graph.path});
    CHECK(verdict.code == 0);

    // corrupt the certificate: drop a bag
    auto d = decomposition_from_json(emitted.out);
    d.bags.pop_back();
    TempFile broken("broken.json", decomposition_to_json(d));
    auto failed = run_cli({"verify", "--decomposition", broken.path, graph.path});
    CHECK(failed.code == 1);
}

TEST_CASE("verify checks cycle packings") {
    auto g = corpus::complete_graph(6);
    TempFile graph("k6.el", write_edge_list(g));
    CyclePacking packing{{{0, 1, 2}, {3, 4, 5}}, 3};
    TempFile cert("packing.json", cycle_packing_to_json(packing));
    CHECK(run_cli({"verify", "--packing", cert.path, graph.path}).code == 0);
    CHECK(run_cli({"verify", "--packing", cert.path, "--t", "4", graph.path}).code == 1);

    CyclePacking overlap{{{0, 1, 2}, {2, 3, 4}}, 3};
    TempFile bad("overlap.json", cycle_packing_to_json(overlap));
    CHECK(run_cli({"verify", "--packing", bad.path, graph.path}).code == 1);
}

TEST_CASE("malformed certificate JSON exits with a parse error") {
    TempFile graph("k3m.el", write_edge_list(corpus::complete_graph(3)));
    TempFile bad_bags("badbags.json", "{\"bags\": [\"zap\"]}\n");
    CHECK(run_cli({"verify", "--decomposition", bad_bags.path, graph.path}).code == 2);
    TempFile bad_cycles("badcyc.json", "{\"cycles\": [{\"a\": 1}]}\n");
    CHECK(run_cli({"verify", "--packing", bad_cycles.path, graph.path}).code == 2);
    TempFile not_json("notjson.json", "][\n");
    CHECK(run_cli({"verify", "--decomposition", not_json.path, graph.path}).code == 2);
    TempFile wrong_width("ww.json", "{\"bags\": [[0,1],[1,2],[0,2]], \"width\": 5}\n");
    CHECK(run_cli({"verify", "--decomposition", wrong_width.path, graph.path}).code == 1);
}

TEST_CASE("oracle subcommand") {
    TempFile p5("p5.el", write_edge_list(corpus::path_graph(5)));
    auto r = run_cli({"oracle", "pathwidth", p5.path});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    TempFile pet("pet.el", write_edge_list(named_gadget("petersen")));
    auto circ = run_cli({"oracle", "circumference", pet.path});
    CHECK(circ.code == 0);
    CHECK(circ.out == "9\n");

    TempFile big("big.el", write_edge_list(corpus::path_graph(25)));
    CHECK(run_cli({"oracle", "pathwidth", big.path}).code == 4);
    CHECK(run_cli({"oracle", "pathwidth", "--budget", "26", big.path}).code == 0);

    // minor oracle needs a pattern
    TempFile k3("k3.el", write_edge_list(corpus::complete_graph(3)));
    TempFile c5("c5.el", write_edge_list(corpus::cycle_graph(5)));
    auto minor = run_cli({"oracle", "minor", "--pattern", k3.path, c5.path});
    CHECK(minor.code == 0);
    CHECK(minor.out == "present\n");
    CHECK(run_cli({"oracle", "minor", c5.path}).code == 3);
}

TEST_CASE("gadget and params subcommands") {
    auto q = run_cli({"gadget", "Q"});
    CHECK(q.code == 0);
    auto parsed = parse_graph(q.out, GraphFormat::edgelist);
    CHECK(parsed.n() == 6);
    CHECK(parsed.m() == 9);

    auto g6 = run_cli({"gadget", "disjoint_cycles", "3", "2", "--format", "graph6"});
    CHECK(g6.code == 0);
    CHECK(parse_graph(g6.out, GraphFormat::graph6).n() == 6);

    CHECK(run_cli({"gadget", "cbt_dominants", "2"}).code == 3);  // wrong arity
    CHECK(run_cli({"gadget", "mystery"}).code == 3);
    CHECK(run_cli({"gadget", "outerplanar_family", "9"}).code == 4);

    auto params = run_cli({"params", "--k", "2", "--t", "3", "--h", "9"});
    CHECK(params.code == 0);
    CHECK(params.out.find("\"i\": 4") != std::string::npos);
    CHECK(params.out.find("\"j\": 5") != std::string::npos);
    CHECK(params.out.find("\"budget\": 9") != std::string::npos);

    auto fh = run_cli({"params", "--k", "2", "--t", "3", "--h", "9", "--ep-bound", "fh"});
    CHECK(fh.code == 3);  // constant must be supplied
    auto fh_ok = run_cli({"params", "--k", "2", "--t", "3", "--h", "9", "--ep-bound", "fh",
                          "--ep-constant", "4.0"});
    CHECK(fh_ok.code == 0);
    CHECK(fh_ok.out.find("\"budget\": 24") != std::string::npos);
}

TEST_CASE("pipeline subcommand with hitting-set override") {
    std::vector<int> hubs;
    auto params = pipeline_params(2, 3, 2);
    auto g = corpus::packing_gadget(params.subtree_count_log + params.subtree_height + 2, 2, &hubs);
    TempFile graph("gadget.el", write_edge_list(g));
    std::string hub_csv = std::to_string(hubs[0]) + "," + std::to_string(hubs[1]);
    auto r = run_cli({"pipeline-thm2", "--k", "2", "--t", "3", "--hitting-set", hub_csv,
                      graph.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"branch\": \"packing\"") != std::string::npos);

    auto cert = run_cli({"pipeline-thm2", "--k", "2", "--t", "3", "--hitting-set", hub_csv,
                         "--out", "text", graph.path});
    CHECK(cert.code == 0);
    CHECK(cert.out.find("branch packing") == 0);
}

TEST_CASE("pipeline JSON certificates re-validate") {
    auto g = corpus::complete_graph(5);
    TempFile graph("k5.el", write_edge_list(g));
    auto r = run_cli({"pipeline-thm2", "--k", "2", "--t", "3", graph.path});
    REQUIRE(r.code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["branch"] == "decomposition");
    auto cert = decomposition_from_json(parsed["certificate"].dump());
    CHECK(validate(g, cert).valid);
    CHECK(width(cert) <= parsed["budget"].get<long long>());
}

TEST_CASE("extract-cbt subcommand") {
    auto tree = cbt(3).graph;
    TempFile file("tree.el", write_edge_list(tree));
    auto r = run_cli({"extract-cbt", "--t", "2", file.path});
    CHECK(r.code == 0);
    auto model = minor_model_from_json(r.out);
    CHECK(validate_minor_model(tree, model).valid);

    auto deep = run_cli({"extract-cbt", file.path});  // defaults to R(root)-1
    CHECK(deep.code == 0);

    TempFile cyc("cyc.el", write_edge_list(corpus::cycle_graph(5)));
    CHECK(run_cli({"extract-cbt", cyc.path}).code == 3);
}
