#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "monoquiv/algebra_model.hpp"
#include "monoquiv/arrow_split.hpp"
#include "monoquiv/cli.hpp"
#include "monoquiv/ufn_graph.hpp"

using namespace monoquiv;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MONOQUIV_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "monoquiv_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write(const std::string& name, const std::string& text) {
  fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check") {
  Run r = run({"check", data("xy_weighted.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "class: CMA (also MA)\n");
  CHECK(run({"check", write("bad.json", "{\"kind\": ").string()}).code == 2);
  Run deg = run({"check", write("deg0.json", R"({"kind":"monomial","generators":[{"name":"x","degree":0}]})").string()});
  CHECK(deg.code == 3);
  CHECK(deg.err.find("degree must be ≥ 1") != std::string::npos);
  CHECK(run({"check", scratch("missing.json").string()}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", data("free_123.json"), "--suite", "nope"}).code == 2);
  CHECK(run({"pipeline", data("free_123.json"), "--to", "XYZ"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("ufgraph emits a re-parseable quiver and DOT") {
  Run r = run({"ufgraph", data("xyz_y4.json"), "--json"});
  REQUIRE(r.code == 0);
  CHECK(parse_input(std::string_view(r.out)) == AlgebraInput(UfnGraph(testing::xyz_y4()).quiver()));
  Run dot = run({"ufgraph", data("xyz_y4.json"), "--dot"});
  CHECK(dot.out.rfind("digraph", 0) == 0);
  Run text = run({"ufgraph", data("xyz_y4.json")});
  CHECK(text.out.find("ell: 3") != std::string::npos);
  CHECK(run({"ufgraph", data("free_123.json")}).code == 3);
}

TEST_CASE("normalize and trace files") {
  fs::path trace = scratch("trace.json");
  Run r = run({"normalize", data("free_123.json"), "--json", "--trace", trace.string()});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  WeightedQuiver q = std::get<WeightedQuiver>(parse_input(doc["quiver"]));
  CHECK(q == normalize_to_degree_one(testing::loops_123()).quiver);
  std::ifstream in(trace);
  CHECK(replay_trace(testing::loops_123(), nlohmann::json::parse(in)).size() == 3);
}

TEST_CASE("connectify round trip") {
  Run r = run({"connectify", data("free_123.json"), "--json"});
  REQUIRE(r.code == 0);
  auto in = parse_input(std::string_view(r.out));
  CHECK(in == AlgebraInput(connectify(testing::loops_123())));
  CHECK(run({"connectify", data("xy_weighted.json")}).code == 3);
}

TEST_CASE("hilbert tables") {
  Run r = run({"hilbert", data("xy_weighted.json"), "--max-degree", "6", "--json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.dump().find("[1,1,2,1,2,1,2]") != std::string::npos);
  CHECK(run({"hilbert", data("free_123.json")}).code == 0);
}

TEST_CASE("pipeline") {
  Run pa1 = run({"pipeline", data("xy_weighted.json"), "--to", "PA1", "--json"});
  REQUIRE(pa1.code == 0);
  auto doc = nlohmann::json::parse(pa1.out);
  REQUIRE(doc["steps"].size() == 2);
  CHECK(doc["steps"][0]["op"] == "ufgraph");
  CHECK(doc["steps"][1]["op"] == "normalize");
  CHECK(doc["output"]["vertices"].size() == 4);
  for (const auto& s : doc["steps"]) CHECK_NOTHROW(parse_input(s["artifact"]));

  Run cma1 = run({"pipeline", data("xy_weighted.json"), "--to", "CMA1", "--json"});
  auto d1 = nlohmann::json::parse(cma1.out);
  CHECK(d1["steps"].size() == 3);
  CHECK(d1["output"]["generators"].size() == 4);
  CHECK(d1["output"]["forbidden"].size() == 12);

  fs::path pa1_file = write("pa1.json", nlohmann::json(doc["output"]).dump());
  Run id = run({"pipeline", pa1_file.string(), "--to", "PA1", "--json"});
  CHECK(nlohmann::json::parse(id.out)["steps"].empty());
}

TEST_CASE("verify suites") {
  CHECK(run({"verify", data("xyz_y4.json"), "--suite", "ufgraph"}).code == 0);
  CHECK(run({"verify", data("free_123.json"), "--suite", "adjunction", "--trials", "20"}).code == 0);
  CHECK(run({"verify", data("free_123.json"), "--suite", "split"}).code == 0);
  CHECK(run({"verify", data("xy_weighted.json"), "--suite", "hilbert"}).code == 0);
  CHECK(run({"verify", data("xy_weighted.json"), "--suite", "split"}).code == 3);
}

TEST_CASE("split suite against a corrupted golden file") {
  WeightedQuiver good = normalize_to_degree_one(testing::loops_123()).quiver;
  fs::path ok = write("golden_ok.json", to_json(good).dump());
  CHECK(run({"verify", data("free_123.json"), "--suite", "split", "--golden", ok.string()}).code == 0);
  std::vector<Arrow> arrows = good.arrows();
  arrows[2].target = 2;
  fs::path bad = write("golden_bad.json", to_json(WeightedQuiver(good.vertices(), arrows)).dump());
  Run r = run({"verify", data("free_123.json"), "--suite", "split", "--golden", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("witness: path") != std::string::npos);
}

TEST_CASE("outputs are deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", data("free_123.json"), "--suite", "adjunction", "--trials", "10",
                                 "--seed", "7", "--json"},
        std::vector<std::string>{"verify", data("xyz_y4.json"), "--suite", "ufgraph", "--seed", "3"},
        std::vector<std::string>{"pipeline", data("xyz_y4.json"), "--to", "CMA1", "--json"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("--out writes the file") {
  fs::path out = scratch("out.dot");
  Run r = run({"ufgraph", data("xy_weighted.json"), "--dot", "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("digraph", 0) == 0);
}

}  // TEST_SUITE
