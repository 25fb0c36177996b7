#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bullchrome/cli.hpp"
#include "bullchrome/extremal.hpp"
#include "bullchrome/graph_io.hpp"
#include "bullchrome/modular.hpp"

using namespace bullchrome;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

json report(const Run& r) {
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bullchrome_test_" + name);
}

}  // namespace

TEST_CASE("analyze") {
  const json c5 = report(run({"analyze"}, emit_graph6(cycle_graph(5)) + "\n"));
  REQUIRE(c5["results"].size() == 1);
  const json& r = c5["results"][0];
  CHECK(r["properties"]["bull_free"]["holds"] == true);
  CHECK(r["properties"]["prime"]["holds"] == true);
  CHECK(r["properties"]["perfect"]["holds"] == false);
  CHECK(r["omega"] == 2);
  CHECK(r["chi"] == 3);
  CHECK(r["t"] == 3);
  CHECK(r["fractional_chi"] == "5/2");
  CHECK(r["bound"]["pass"] == true);
  CHECK(r["modular_tree"]["root"] == "prime");
  CHECK(c5["command"]["name"] == "analyze");
  CHECK(c5["version"] == kVersion);
  CHECK(c5["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);

  const json bull = report(run({"analyze", "--format", "edgelist"}, emit_edgelist(bull_graph())));
  const json& b = bull["results"][0]["properties"]["bull_free"];
  CHECK(b["holds"] == false);
  CHECK(b["witness"].size() == 5);
  CHECK(bull["results"][0]["bound"].is_null());

  CHECK(run({"analyze"}, "").code == kExitInputError);
  CHECK(run({"analyze"}, "D?@\n").code == kExitInputError);
  CHECK(run({"analyze", "/nonexistent/graph.g6"}).code == kExitInputError);
  CHECK(run({"analyze", "--max-n", "4"}, "D??\n").code == kExitCapExceeded);
}

TEST_CASE("analyze reports are reproducible and sorted by canonical key") {
  const std::string input = emit_graph6(petersen_graph()) + "\n" + emit_graph6(cycle_graph(5)) + "\n" +
                            emit_graph6(path_graph(4)) + "\n";
  json first = report(run({"analyze", "--jobs", "2"}, input));
  json second = report(run({"analyze", "--jobs", "2"}, input));
  first.erase("timing");
  second.erase("timing");
  CHECK(first == second);
  const json& results = first["results"];
  REQUIRE(results.size() == 3);
  for (std::size_t i = 1; i < results.size(); ++i)
    CHECK(results[i - 1]["key"].get<std::string>() <= results[i]["key"].get<std::string>());
  CHECK(results[0]["skipped"].is_array());
}

TEST_CASE("large inputs report skipped work instead of truncating") {
  const json r = report(run({"analyze", "--chi-cap", "5", "--t-cap", "5", "--lp-cap", "5"},
                            emit_graph6(petersen_graph()) + "\n"));
  const json& p = r["results"][0];
  CHECK(p["chi"].is_null());
  CHECK(p["t"].is_null());
  CHECK(p["fractional_chi"].is_null());
  CHECK(p["skipped"].size() == 3);
}

TEST_CASE("BULLCHROME_MAXN overrides the default cap") {
  ::setenv("BULLCHROME_MAXN", "4", 1);
  CHECK(run({"analyze"}, "D??\n").code == kExitCapExceeded);
  CHECK(run({"analyze", "--max-n", "6"}, "D??\n").code == kExitOk);
  ::setenv("BULLCHROME_MAXN", "many", 1);
  CHECK(run({"analyze"}, "D??\n").code == kExitInputError);
  ::unsetenv("BULLCHROME_MAXN");
  CHECK(run({"analyze"}, "D??\n").code == kExitOk);
}

TEST_CASE("color") {
  const json c5 = report(run({"color", "--mode", "exact"}, emit_graph6(cycle_graph(5)) + "\n"));
  CHECK(c5["results"][0]["colors"] == 3);
  CHECK(c5["results"][0]["proper"] == true);

  const json k4 = report(run({"color", "--mode", "layered", "--t", "2"}, emit_graph6(complete_graph(4)) + "\n"));
  CHECK(k4["results"][0]["colors"] == 4);

  const json m3 = report(run({"color", "--mode", "layered", "--t", "4"}, emit_graph6(mycielski_graph(3)) + "\n"));
  CHECK(m3["results"][0]["within_budget"] == true);
  CHECK(m3["results"][0]["account"]["budget"]["limit"] == "512");

  const json composed = report(run({"color"}, emit_graph6(substitute(cycle_graph(5), 0, complete_graph(2))) + "\n"));
  CHECK(composed["results"][0]["mode"] == "compose");
  CHECK(composed["results"][0]["colors"] == 4);
  CHECK(composed["results"][0]["t"] == 3);

  const Run bull = run({"color", "--t", "3"}, emit_graph6(bull_graph()) + "\n");
  CHECK(bull.code == kExitInputError);
  CHECK(bull.err.find("witness") != std::string::npos);
  CHECK(run({"color", "--mode", "layered", "--t", "2"}, emit_graph6(cycle_graph(5)) + "\n").code == kExitInputError);
  CHECK(run({"color", "--mode", "fancy"}, "D??\n").code == kExitInputError);
}

TEST_CASE("emitted colorings re-validate through analyze") {
  const std::string g6 = emit_graph6(mycielski_graph(3)) + "\n";
  const json colored = report(run({"color", "--mode", "layered", "--t", "4"}, g6));
  const auto path = temp_file("coloring.json");
  std::ofstream(path) << colored["results"][0]["coloring"].dump();
  const json checked = report(run({"analyze", "--check-coloring", path.string()}, g6));
  CHECK(checked["results"][0]["coloring_check"]["proper"] == true);

  std::ofstream(path) << json(std::vector<int>(11, 0)).dump();
  CHECK(run({"analyze", "--check-coloring", path.string()}, g6).code == kExitVerificationFailed);
  std::filesystem::remove(path);
}

TEST_CASE("dot and out files") {
  const auto dot = temp_file("c5.dot");
  const auto out = temp_file("c5.json");
  const Run r = run({"color", "--mode", "exact", "--dot", dot.string(), "--out", out.string()},
                    emit_graph6(cycle_graph(5)) + "\n");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream d(dot), o(out);
  const std::string dot_text((std::istreambuf_iterator<char>(d)), std::istreambuf_iterator<char>());
  CHECK(dot_text.find("fillcolor") != std::string::npos);
  CHECK(json::parse(o)["results"][0]["colors"] == 3);
  std::filesystem::remove(dot);
  std::filesystem::remove(out);
}

TEST_CASE("verify") {
  const json phi = report(run({"verify", "--suite", "phi", "--max-n", "200"}));
  CHECK(phi["results"][0]["pass"] == true);
  const json thm = report(run({"verify", "--suite", "thm21", "--max-n", "6", "--jobs", "2"}));
  CHECK(thm["results"][0]["suite"] == "thm21");
  CHECK(thm["results"][0]["counterexamples"].empty());
  CHECK(run({"verify", "--suite", "thm21", "--max-n", "12"}).code == kExitCapExceeded);
  CHECK(run({"verify"}).code == kExitInputError);
  CHECK(run({"verify", "--suite", "cstar", "--samples", "20", "--t", "2", "--budget", "25"}).code == kExitOk);
}

TEST_CASE("gen") {
  const Run m = run({"gen", "--kind", "mycielski", "-n", "3"});
  CHECK(m.code == 0);
  CHECK(parse_graph6(m.out.substr(0, m.out.size() - 1)) == mycielski_graph(3));

  const Run e = run({"gen", "--kind", "enum", "-n", "4"});
  CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 11);
  CHECK(run({"gen", "--kind", "enum", "-n", "10"}).code == kExitCapExceeded);

  const Run a = run({"gen", "--kind", "cstar", "--t", "3", "--seed", "7"});
  const Run b = run({"gen", "--kind", "cstar", "--t", "3", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
  const json recipe = json::parse(a.err);
  CHECK(evaluate(recipe_from_json(recipe["recipe"])) == parse_graph6(a.out.substr(0, a.out.size() - 1)));

  const auto path = temp_file("recipes.json");
  const Run many = run({"gen", "--kind", "cstar", "--t", "2", "--count", "5", "--recipe", path.string()});
  CHECK(std::count(many.out.begin(), many.out.end(), '\n') == 5);
  std::ifstream f(path);
  CHECK(json::parse(f).size() == 5);
  std::filesystem::remove(path);

  CHECK(run({"gen", "--kind", "mycielski", "-n", "0"}).code == kExitInputError);
  CHECK(run({"gen", "--kind", "cstar", "--budget", "0"}).code == kExitCapExceeded);
  CHECK(run({"bogus"}).code == kExitInputError);
}
