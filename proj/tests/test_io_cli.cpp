#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kempe/cli.hpp"
#include "kempe/constructions.hpp"
#include "kempe/errors.hpp"
#include "kempe/io.hpp"
#include "kempe/reconfig.hpp"

using namespace kempe;

namespace {

struct CliRun {
    int exit_code;
    std::string out, err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    file << text;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("parse_graph accepts the minimal partitioned document") {
    GraphDocument doc =
        parse_graph(R"({"n":2,"base_edges":[[0,1]],"partite":{"S":[0],"T":[1]}})");
    CHECK(doc.n == 2);
    REQUIRE(doc.is_partitioned());
    PartitionedGraph pg = doc.to_partitioned();
    CHECK(pg.ell() == 0);
    CHECK(pg.base_edges().size() == 1);
}

TEST_CASE("parse_graph errors name the offending structure") {
    CHECK_THROWS_WITH_AS(
        parse_graph(R"({"n":2,"partite":{"S":[0],"T":[1]},"added_edges":[[0,1]]})"),
        doctest::Contains("added edge (0,1) crosses S-T"), input_error);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"n":2,"base_edges":[[0,1],[1,0]]})"),
                         doctest::Contains("duplicate edge"), input_error);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"n":2,"base_edges":[[0,5]]})"),
                         doctest::Contains("out of range"), input_error);
    CHECK_THROWS_WITH_AS(parse_graph("{"), doctest::Contains("malformed JSON"), input_error);
    CHECK_THROWS_AS(parse_graph(R"({"base_edges":[]})"), input_error); // missing n
}

TEST_CASE("GraphDocument round-trips losslessly") {
    CertifiedPair pair = prop3_graph(3);
    GraphDocument doc = GraphDocument::from_partitioned(pair.pg);
    doc.k = 3;
    doc.colorings["c1"] = pair.c1.colors();
    doc.colorings["c2"] = pair.c2.colors();
    CHECK(parse_graph(serialize_graph(doc)) == doc);

    GraphDocument plain = GraphDocument::from_graph(Graph(3, {{0, 1}, {1, 2}}));
    CHECK(parse_graph(serialize_graph(plain)) == plain);
}

TEST_CASE("export_dot") {
    Graph edge(2, {{0, 1}});
    Coloring c(2, {1, 2});
    std::string dot = export_dot(edge, &c);
    CHECK(contains(dot, "graph G {"));
    CHECK(contains(dot, "0 -- 1"));
    CHECK(contains(dot, "style=filled"));

    std::string plain = export_dot(edge);
    CHECK_FALSE(contains(plain, "fillcolor"));

    CertifiedPair pair = prop3_graph(3);
    std::string bold = export_dot(pair.pg, &pair.c1);
    CHECK(contains(bold, "style=bold"));

    Coloring wide(13, {1, 2});
    std::string fallback = export_dot(edge, &wide);
    CHECK(contains(fallback, "warning"));
    CHECK_FALSE(contains(fallback, "fillcolor"));
}

TEST_CASE("cli count matches the documented wording") {
    std::string path = temp_path("k3.json");
    write_text(path, R"({"n":3,"base_edges":[[0,1],[1,2],[0,2]]})");
    auto run = cli({"count", path, "--k", "3"});
    CHECK(run.exit_code == kExitOk);
    CHECK(run.out == "6 colorings, 1 class\n");

    // identical invocations produce byte-identical stdout
    auto again = cli({"count", path, "--k", "3"});
    CHECK(again.out == run.out);

    auto capped = cli({"count", path, "--k", "3", "--cap", "4"});
    CHECK(capped.exit_code == kExitCapacity);
    CHECK(contains(capped.out, "4 colorings"));
    CHECK(contains(capped.err, "partial"));
    std::remove(path.c_str());
}

TEST_CASE("cli equiv") {
    std::string path = temp_path("c4.json");
    write_text(path, R"({"n":4,"base_edges":[[0,1],[1,2],[2,3],[0,3]],"k":2,
        "colorings":{"a":[1,2,1,2],"b":[2,1,2,1]}})");
    auto run = cli({"equiv", path, "--c1", "a", "--c2", "b"});
    CHECK(run.exit_code == kExitOk);
    CHECK(run.out == "equivalent, witness length 1\n");

    auto same = cli({"equiv", path, "--c1", "a", "--c2", "a"});
    CHECK(same.out == "equivalent, witness length 0\n");
    std::remove(path.c_str());
}

TEST_CASE("cli equiv separates the prop3 pair") {
    std::string path = temp_path("prop3.json");
    auto made = cli({"construct", "prop3", "--k", "3", "--out", path});
    REQUIRE(made.exit_code == kExitOk);
    auto run = cli({"equiv", path, "--c1", "c1", "--c2", "c2"});
    CHECK(run.exit_code == kExitOk);
    CHECK(run.out == "not equivalent\n");

    auto undecided = cli({"equiv", path, "--c1", "c1", "--c2", "c2", "--cap", "3"});
    CHECK(undecided.exit_code == kExitCapacity);
    CHECK(contains(undecided.out, "undecided"));
    std::remove(path.c_str());
}

TEST_CASE("cli construct writes parseable documents and DOT") {
    auto run = cli({"construct", "prop3", "--k", "3"});
    CHECK(run.exit_code == kExitOk);
    GraphDocument doc = parse_graph(run.out);
    CHECK(doc.n == 9);
    CHECK(doc.colorings.count("c1") == 1);
    CHECK(doc.colorings.count("c2") == 1);

    std::string dot_path = temp_path("prop3.dot");
    auto with_dot = cli({"construct", "prop3", "--k", "3", "--out", temp_path("p3.json"),
                         "--dot", dot_path});
    CHECK(with_dot.exit_code == kExitOk);
    std::ifstream dot_in(dot_path);
    std::stringstream dot;
    dot << dot_in.rdbuf();
    CHECK(contains(dot.str(), "style=bold"));
    std::remove(dot_path.c_str());
    std::remove(temp_path("p3.json").c_str());

    // gss needs a base file
    std::string base = temp_path("base.json");
    write_text(base, R"({"n":2,"base_edges":[[0,1]]})");
    auto gss = cli({"construct", "gss", "--base", base});
    CHECK(gss.exit_code == kExitOk);
    GraphDocument gadget = parse_graph(gss.out);
    CHECK(gadget.n == 6);
    CHECK(gadget.is_partitioned());
    std::remove(base.c_str());
}

TEST_CASE("cli verify") {
    auto run = cli({"verify", "bipar", "--trials", "10", "--seed", "9", "--max-n", "6"});
    CHECK(run.exit_code == kExitOk);
    CHECK(contains(run.out, "claim: bipar"));
    CHECK(contains(run.out, "tried: 10"));
    CHECK(contains(run.out, "failures: 0"));

    // byte-identical stdout under the same seed
    auto again = cli({"verify", "bipar", "--trials", "10", "--seed", "9", "--max-n", "6"});
    CHECK(again.out == run.out);

    // randomized claims demand a seed
    auto missing = cli({"verify", "bm5", "--trials", "3"});
    CHECK(missing.exit_code == kExitUsage);
    CHECK(contains(missing.err, "--seed"));

    // deterministic claims run without one
    auto prop = cli({"verify", "prop4ii"});
    CHECK(prop.exit_code == kExitOk);
    CHECK(contains(prop.out, "passed: 1"));
}

TEST_CASE("cli usage errors exit 2") {
    CHECK(cli({"bogus"}).exit_code == kExitUsage);
    CHECK(cli({"count"}).exit_code == kExitUsage);
    CHECK(cli({"count", "missing_file.json", "--k", "3"}).exit_code == kExitUsage);
    CHECK(cli({"construct", "prop3"}).exit_code == kExitUsage); // no --k
    CHECK(cli({}).exit_code == kExitUsage);
    CHECK(cli({"--help"}).exit_code == kExitOk);
}

TEST_CASE("cli search determinism") {
    auto a = cli({"search", "--k", "4", "--trials", "5", "--seed", "123"});
    auto b = cli({"search", "--k", "4", "--trials", "5", "--seed", "123"});
    CHECK(a.exit_code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "claim: conjecture_search"));

    CHECK(cli({"search", "--k", "4", "--trials", "5"}).exit_code == kExitUsage);
}

TEST_CASE("KEMPE_DEFAULT_CAP overrides the default cap") {
    std::string path = temp_path("env.json");
    write_text(path, R"({"n":3,"base_edges":[[0,1],[1,2],[0,2]]})");
    setenv("KEMPE_DEFAULT_CAP", "4", 1);
    auto run = cli({"count", path, "--k", "3"});
    unsetenv("KEMPE_DEFAULT_CAP");
    CHECK(run.exit_code == kExitCapacity);

    setenv("KEMPE_DEFAULT_CAP", "banana", 1);
    auto bad = cli({"count", path, "--k", "3"});
    unsetenv("KEMPE_DEFAULT_CAP");
    CHECK(bad.exit_code == kExitUsage);
    std::remove(path.c_str());
}
