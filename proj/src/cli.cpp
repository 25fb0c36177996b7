#include "bullchrome/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bullchrome/canonical.hpp"
#include "bullchrome/coloring.hpp"
#include "bullchrome/enumerate.hpp"
#include "bullchrome/errors.hpp"
#include "bullchrome/extremal.hpp"
#include "bullchrome/graph_io.hpp"
#include "bullchrome/layered.hpp"
#include "bullchrome/modular.hpp"
#include "bullchrome/parallel.hpp"
#include "bullchrome/recognition.hpp"
#include "bullchrome/serialize.hpp"
#include "bullchrome/verify.hpp"

namespace bullchrome {

using nlohmann::json;

namespace {

struct Common {
  std::string input = "-";
  std::string format = "auto";
  std::string out;
  std::string dot;
  int jobs = 1;
  int max_n = kMaxVertices;
};

struct AnalyzeArgs {
  int chi_cap = kDefaultExactChromaticCap;
  int t_cap = kDefaultTParameterCap;
  int lp_cap = kDefaultFractionalCap;
  std::string check_coloring;
};

struct ColorArgs {
  std::optional<int> t;
  std::string mode = "compose";
  int chi_cap = kDefaultExactChromaticCap;
};

struct VerifyArgs {
  std::string suite;
  std::optional<int> max_n;
  std::optional<int> t;
  int jobs = 1;
  std::uint64_t seed = 0;
  int samples = 1000;
  int budget = 60;
  int lp_cap = SuiteOptions{}.lp_cap;
  std::string out;
};

struct GenArgs {
  std::string kind;
  int n = 0;
  int t = 3;
  std::uint64_t seed = 0;
  int budget = 60;
  int count = 1;
  bool bull_free = false;
  int max_n = 9;
  std::string recipe;
  std::string out;
};

std::optional<int> env_max_n() {
  const char* raw = std::getenv("BULLCHROME_MAXN");
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(raw, &used);
    if (used != std::string(raw).size() || v < 0) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("BULLCHROME_MAXN is not a non-negative integer: ") + raw);
  }
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot write '" + path + "'");
  file << text;
}

std::string graph_key(const Graph& g) {
  if (g.vertex_count() <= kCanonicalMaxVertices) return canonical_key(g);
  return "raw:" + emit_graph6(g);
}

std::vector<Graph> load_graphs(const Common& c, std::istream& in, std::string& digest) {
  const std::string text = read_input(c.input, in);
  digest = fnv1a64(text);
  std::vector<Graph> graphs = parse_graphs(text, parse_format_name(c.format));
  for (const Graph& g : graphs)
    if (g.vertex_count() > c.max_n)
      throw CapExceeded("input graph has " + std::to_string(g.vertex_count()) + " vertices, above --max-n " +
                        std::to_string(c.max_n));
  return graphs;
}

json make_report(const std::string& command, const std::vector<std::string>& args, const std::string& digest,
                 json results, std::chrono::steady_clock::time_point start) {
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return json{{"command", {{"name", command}, {"args", args}}},
              {"input_digest", "fnv1a64:" + digest},
              {"results", std::move(results)},
              {"timing", {{"seconds", seconds}}},
              {"version", kVersion}};
}

// Results keyed by canonical graph key; equal keys keep input order.
json sorted_results(std::vector<std::pair<std::string, json>> keyed) {
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  json out = json::array();
  for (auto& [key, j] : keyed) out.push_back(std::move(j));
  return out;
}

json analyze_graph(const Graph& g, const AnalyzeArgs& a, const std::optional<Coloring>& check) {
  const int n = g.vertex_count();
  json r{{"graph6", emit_graph6(g)}, {"n", n}, {"m", g.edge_count()}};
  json skipped = json::array();
  const PropertyReport bull = is_bull_free(g);
  json props{{"bull_free", to_json(bull)},
             {"triangle_free", to_json(is_triangle_free(g))},
             {"perfect", to_json(is_perfect(g))},
             {"n_perfect", to_json(is_n_perfect(g))}};
  const auto homogeneous = find_homogeneous_set(g);
  props["prime"] = {{"holds", !homogeneous.has_value()}};
  if (homogeneous) props["prime"]["homogeneous_set"] = to_json(*homogeneous);
  r["properties"] = std::move(props);

  const CliqueResult omega = clique_number(g);
  r["omega"] = omega.size;
  r["max_clique"] = to_json(omega.clique);

  std::optional<int> chi;
  if (n <= a.chi_cap) {
    chi = chromatic_number(g, a.chi_cap).chi;
    r["chi"] = *chi;
  } else {
    r["chi"] = nullptr;
    skipped.push_back("chi: " + std::to_string(n) + " vertices above --chi-cap " + std::to_string(a.chi_cap));
  }
  std::optional<int> t;
  if (n <= a.t_cap) {
    t = t_parameter(g, a.t_cap);
    r["t"] = *t;
  } else {
    r["t"] = nullptr;
    skipped.push_back("t: " + std::to_string(n) + " vertices above --t-cap " + std::to_string(a.t_cap));
  }
  if (n <= a.lp_cap) {
    r["fractional_chi"] = to_string(fractional_chromatic(g, a.lp_cap).value);
  } else {
    r["fractional_chi"] = nullptr;
    skipped.push_back("fractional_chi: " + std::to_string(n) + " vertices above --lp-cap " + std::to_string(a.lp_cap));
  }
  if (bull.holds && chi && t) {
    const Budget b = Budget::power(omega.size, *t, 4, 13);
    r["bound"] = {{"formula", b.formula}, {"limit", to_decimal(b.limit)}, {"pass", b.admits(*chi)}};
  } else {
    r["bound"] = nullptr;
  }
  const ModularTree tree = modular_decomposition(g);
  r["modular_tree"] = {{"root", to_string(tree.kind)}, {"depth", tree.depth()}, {"tree", to_json(tree)}};
  if (check) {
    r["coloring_check"] = {{"proper", check->is_proper_for(g)}, {"colors", check->count()}};
  }
  r["skipped"] = std::move(skipped);
  return r;
}

int cmd_analyze(const Common& c, const AnalyzeArgs& a, const std::vector<std::string>& args, std::istream& in,
                std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  std::string digest;
  const std::vector<Graph> graphs = load_graphs(c, in, digest);
  std::optional<Coloring> check;
  if (!a.check_coloring.empty()) {
    if (graphs.size() != 1) throw InvalidArgument("--check-coloring needs exactly one input graph");
    std::ifstream file(a.check_coloring);
    if (!file) throw InvalidArgument("cannot read '" + a.check_coloring + "'");
    try {
      check = Coloring(json::parse(file).get<std::vector<int>>());
    } catch (const json::exception& e) {
      throw InvalidArgument(std::string("--check-coloring expects a JSON array of colors: ") + e.what());
    }
  }
  std::vector<std::pair<std::string, json>> keyed(graphs.size());
  parallel_for(graphs.size(), c.jobs, [&](std::size_t i) {
    keyed[i] = {graph_key(graphs[i]), analyze_graph(graphs[i], a, check)};
    keyed[i].second["key"] = keyed[i].first;
  });
  bool proper = true;
  for (const auto& [key, r] : keyed)
    if (r.contains("coloring_check") && !r["coloring_check"]["proper"].get<bool>()) proper = false;
  if (!c.dot.empty()) {
    std::string dot;
    for (const Graph& g : graphs) dot += emit_dot(g);
    write_text(c.dot, dot, out);
  }
  write_text(c.out, make_report("analyze", args, digest, sorted_results(std::move(keyed)), start).dump(2) + "\n", out);
  return proper ? kExitOk : kExitVerificationFailed;
}

int resolve_t(const Graph& g, const std::optional<int>& t) {
  if (t) {
    if (*t < 1) throw InvalidArgument("--t must be at least 1");
    return *t;
  }
  if (g.vertex_count() > kDefaultTParameterCap)
    throw InvalidArgument("--t is required for graphs above " + std::to_string(kDefaultTParameterCap) + " vertices");
  return t_parameter(g);
}

json color_graph(const Graph& g, const ColorArgs& a) {
  json r{{"graph6", emit_graph6(g)}, {"n", g.vertex_count()}, {"mode", a.mode}};
  const int omega = clique_number(g).size;
  r["omega"] = omega;
  Coloring coloring;
  if (a.mode == "exact") {
    coloring = chromatic_number(g, a.chi_cap).coloring;
    r["chi"] = coloring.count();
  } else {
    const int t = resolve_t(g, a.t);
    r["t"] = t;
    NPerfectOptions options;
    options.exact_cap = a.chi_cap;
    StagedColoring staged = a.mode == "layered" ? color_nperfect(g, t, options) : color_bull_free(g, t, options);
    r["account"] = to_json(staged.account);
    r["within_budget"] = staged.account.within_budget();
    coloring = std::move(staged.coloring);
  }
  if (!coloring.is_proper_for(g)) throw CertificationError("coloring failed re-validation");
  r["coloring"] = to_json(coloring);
  r["colors"] = coloring.count();
  r["proper"] = true;
  return r;
}

int cmd_color(const Common& c, const ColorArgs& a, const std::vector<std::string>& args, std::istream& in,
              std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  std::string digest;
  const std::vector<Graph> graphs = load_graphs(c, in, digest);
  std::vector<std::pair<std::string, json>> keyed(graphs.size());
  parallel_for(graphs.size(), c.jobs, [&](std::size_t i) {
    keyed[i] = {graph_key(graphs[i]), color_graph(graphs[i], a)};
    keyed[i].second["key"] = keyed[i].first;
  });
  bool within = true;
  std::string dot;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const json& r = keyed[i].second;
    if (r.contains("within_budget") && !r["within_budget"].get<bool>()) within = false;
    if (!c.dot.empty()) dot += emit_dot(graphs[i], r["coloring"].get<std::vector<int>>());
  }
  if (!c.dot.empty()) write_text(c.dot, dot, out);
  write_text(c.out, make_report("color", args, digest, sorted_results(std::move(keyed)), start).dump(2) + "\n", out);
  return within ? kExitOk : kExitVerificationFailed;
}

std::string args_digest(const std::vector<std::string>& args) {
  std::string joined;
  for (const auto& a : args) joined += a + '\0';
  return fnv1a64(joined);
}

int cmd_verify(const VerifyArgs& v, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  SuiteOptions options;
  options.max_n = v.max_n;
  options.t = v.t;
  options.jobs = v.jobs;
  options.seed = v.seed;
  options.samples = v.samples;
  options.budget = v.budget;
  options.lp_cap = v.lp_cap;
  std::vector<std::string> suites;
  if (v.suite == "all") suites = suite_names();
  else suites = {v.suite};
  json results = json::array();
  bool pass = true;
  for (const auto& name : suites) {
    const SuiteResult r = run_suite(name, options);
    pass = pass && r.pass;
    if (!r.pass) err << "suite " << name << " FAILED; counterexamples in the report\n";
    results.push_back(to_json(r));
  }
  write_text(v.out, make_report("verify", args, args_digest(args), std::move(results), start).dump(2) + "\n", out);
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_gen(const GenArgs& g, std::ostream& out, std::ostream& err) {
  std::string lines;
  if (g.kind == "mycielski") {
    lines = emit_graph6(mycielski_graph(g.n)) + "\n";
  } else if (g.kind == "enum") {
    if (g.n < 0) throw InvalidArgument("-n must be non-negative");
    EnumerationOptions eo;
    eo.cap = g.max_n;
    eo.hereditary = g.bull_free;
    GraphPredicate keep;
    if (g.bull_free) keep = [](const Graph& x) { return !find_bull(x).has_value(); };
    for_each_graph(g.n, keep, [&](const Graph& x) { lines += emit_graph6(x) + "\n"; }, eo);
  } else if (g.kind == "cstar") {
    if (g.count < 0) throw InvalidArgument("--count must be non-negative");
    json recipes = json::array();
    for (int i = 0; i < g.count; ++i) {
      const std::uint64_t seed = g.seed + static_cast<std::uint64_t>(i);
      const CStarSample s = sample_cstar(g.t, seed, g.budget);
      const std::string g6 = emit_graph6(s.graph);
      lines += g6 + "\n";
      json m{{"bull_free", s.membership.bull_free}, {"method", s.membership.method}, {"in_class", s.membership.in_class}};
      if (s.membership.method == "exact") m["t_parameter"] = s.membership.t_parameter;
      recipes.push_back({{"seed", seed}, {"t", g.t}, {"budget", g.budget}, {"graph6", g6},
                         {"recipe", recipe_to_json(s.recipe)}, {"membership", std::move(m)}});
    }
    if (g.recipe.empty()) {
      for (const auto& r : recipes) err << r.dump() << "\n";
    } else {
      write_text(g.recipe, recipes.dump(2) + "\n", out);
    }
  } else {
    throw InvalidArgument("unknown --kind '" + g.kind + "'");
  }
  write_text(g.out, lines, out);
  return kExitOk;
}

void add_common(CLI::App& sub, Common& c, bool with_dot) {
  sub.add_option("input", c.input, "Graph file, or - for stdin")->capture_default_str();
  sub.add_option("--format", c.format, "auto, graph6 or edgelist")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}))
      ->capture_default_str();
  sub.add_option("--out", c.out, "Write the JSON report here instead of stdout");
  if (with_dot) sub.add_option("--dot", c.dot, "Also write Graphviz DOT here");
  sub.add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sub.add_option("--max-n", c.max_n, "Largest accepted input graph (env BULLCHROME_MAXN)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bull-free graph coloring, recognition and verification", "bullchrome"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common common;
  AnalyzeArgs analyze;
  ColorArgs color;
  VerifyArgs verify;
  GenArgs gen;

  try {
    if (auto env = env_max_n()) {
      common.max_n = *env;
      gen.max_n = *env;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  auto* a = app.add_subcommand("analyze", "Properties, omega, chi, t and the modular decomposition");
  add_common(*a, common, true);
  a->add_option("--chi-cap", analyze.chi_cap, "Largest graph for exact chi")->capture_default_str();
  a->add_option("--t-cap", analyze.t_cap, "Largest graph for exact t")->capture_default_str();
  a->add_option("--lp-cap", analyze.lp_cap, "Largest graph for the fractional chromatic number")->capture_default_str();
  a->add_option("--check-coloring", analyze.check_coloring, "JSON color array to validate against the input");

  auto* c = app.add_subcommand("color", "Color the input graphs");
  add_common(*c, common, true);
  c->add_option("--t", color.t, "Bound on chi of triangle-free induced subgraphs (computed when small)");
  c->add_option("--mode", color.mode, "exact, layered (N-perfect input) or compose (any bull-free input)")
      ->check(CLI::IsMember({"exact", "layered", "compose"}))
      ->capture_default_str();
  c->add_option("--chi-cap", color.chi_cap, "Largest graph for exact chi")->capture_default_str();

  auto* v = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  v->add_option("--suite", verify.suite, "Suite name or all")->required()->check(CLI::IsMember(suite_choices));
  v->add_option("--max-n", verify.max_n, "Largest order or index (suite default when omitted)");
  v->add_option("--t", verify.t, "cstar: only this t");
  v->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  v->add_option("--seed", verify.seed, "cstar: first seed")->capture_default_str();
  v->add_option("--samples", verify.samples, "cstar: number of samples")->capture_default_str();
  v->add_option("--budget", verify.budget, "cstar: vertex budget per sample")->capture_default_str();
  v->add_option("--lp-cap", verify.lp_cap, "mycielski: largest M_n for the fractional check")->capture_default_str();
  v->add_option("--out", verify.out, "Write the JSON report here instead of stdout");

  auto* g = app.add_subcommand("gen", "Generate graphs as graph6 lines");
  g->add_option("--kind", gen.kind, "mycielski, cstar or enum")
      ->required()
      ->check(CLI::IsMember({"mycielski", "cstar", "enum"}));
  g->add_option("-n", gen.n, "mycielski: index; enum: order");
  g->add_option("--t", gen.t, "cstar: class parameter")->capture_default_str();
  g->add_option("--seed", gen.seed, "cstar: first seed")->capture_default_str();
  g->add_option("--budget", gen.budget, "cstar: vertex budget")->capture_default_str();
  g->add_option("--count", gen.count, "cstar: number of samples")->capture_default_str();
  g->add_option("--recipe", gen.recipe, "cstar: write recipes here (default: stderr, one JSON per line)");
  g->add_flag("--bull-free", gen.bull_free, "enum: only bull-free graphs");
  g->add_option("--max-n", gen.max_n, "enum: largest order (env BULLCHROME_MAXN)")->capture_default_str();
  g->add_option("--out", gen.out, "Write graph6 lines here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (a->parsed()) return cmd_analyze(common, analyze, args, in, out);
    if (c->parsed()) return cmd_color(common, color, args, in, out);
    if (v->parsed()) return cmd_verify(verify, args, out, err);
    return cmd_gen(gen, out, err);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what();
    if (!e.witness().empty()) err << " witness " << json(e.witness()).dump();
    err << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CertificationError& e) {
    err << "certification failed: " << e.what();
    if (!e.witness().empty()) err << " witness " << json(e.witness()).dump();
    err << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace bullchrome
