#include "bullchrome/verify.hpp"

#include <algorithm>
#include <functional>

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

namespace bullchrome {

using nlohmann::json;

namespace {

constexpr int kEnumerationCeiling = 11;
// Exact chi of the Mycielski graphs is attempted up to M_4.
constexpr int kMycielskiChiCap = 23;

void record(SuiteResult& result, json counterexample, const SuiteOptions& options) {
  result.pass = false;
  if (static_cast<int>(result.counterexamples.size()) < options.max_counterexamples)
    result.counterexamples.push_back(std::move(counterexample));
}

int order_limit(const SuiteOptions& options, int fallback) {
  const int n = options.max_n.value_or(fallback);
  if (n < 0) throw InvalidArgument("max-n must be non-negative");
  if (n > kEnumerationCeiling)
    throw CapExceeded("exhaustive suites enumerate at most " + std::to_string(kEnumerationCeiling) + " vertices");
  return n;
}

std::vector<Graph> bull_free_graphs(int n, const SuiteOptions& options) {
  EnumerationOptions eo;
  eo.cap = kEnumerationCeiling;
  eo.hereditary = true;
  eo.jobs = options.jobs;
  return enumerate_graphs(n, [](const Graph& g) { return !find_bull(g).has_value(); }, eo);
}

// Runs `check` over every bull-free graph of order 1..max_n. `check` returns
// the counterexamples found on one graph and adds to its own counter.
template <typename Check>
void sweep_bull_free(SuiteResult& result, int max_n, const SuiteOptions& options, Check&& check) {
  json per_order = json::array();
  for (int n = 1; n <= max_n; ++n) {
    const std::vector<Graph> graphs = bull_free_graphs(n, options);
    std::vector<std::vector<json>> found(graphs.size());
    std::vector<std::int64_t> counted(graphs.size(), 0);
    parallel_for(graphs.size(), options.jobs, [&](std::size_t i) { found[i] = check(graphs[i], counted[i]); });
    std::int64_t checked = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      checked += counted[i];
      for (auto& c : found[i]) record(result, std::move(c), options);
    }
    result.checked += checked;
    per_order.push_back({{"n", n}, {"bull_free_graphs", graphs.size()}, {"checked", checked}});
  }
  result.details["orders"] = std::move(per_order);
}

SuiteResult thm21(const SuiteOptions& options) {
  SuiteResult result;
  result.suite = "thm21";
  sweep_bull_free(result, order_limit(options, 9), options, [](const Graph& g, std::int64_t& counted) {
    std::vector<json> out;
    if (!is_prime(g)) return out;
    ++counted;
    const PropertyReport np = is_n_perfect(g);
    if (!np.holds) out.push_back({{"graph6", emit_graph6(g)}, {"report", to_json(np)}});
    return out;
  });
  result.details["statement"] = "every prime bull-free graph is N-perfect";
  return result;
}

SuiteResult layerlemma(const SuiteOptions& options) {
  SuiteResult result;
  result.suite = "layerlemma";
  sweep_bull_free(result, order_limit(options, 8), options, [](const Graph& g, std::int64_t& counted) {
    std::vector<json> out;
    if (!is_connected(g)) return out;
    for (int v = 0; v < g.vertex_count(); ++v) {
      ++counted;
      for (const auto& bad : check_layer_lemma(g, v, g.vertex_count()))
        out.push_back({{"graph6", emit_graph6(g)}, {"root", v}, {"layer", bad.layer}, {"subgraph", bad.subgraph}, {"x", bad.x}});
    }
    return out;
  });
  result.details["statement"] = "for x in L_{r-1} and prime H in L_r, N_H(x) = V(H) or N_H(x) is stable";
  result.details["unit"] = "(graph, root) pairs";
  return result;
}

SuiteResult bound(const SuiteOptions& options) {
  SuiteResult result;
  result.suite = "bound";
  sweep_bull_free(result, order_limit(options, 8), options, [](const Graph& g, std::int64_t& counted) {
    std::vector<json> out;
    ++counted;
    const BoundReport r = verify_bound(g);
    if (!r.pass)
      out.push_back({{"graph6", emit_graph6(g)}, {"chi", r.chi}, {"omega", r.omega}, {"t", r.t},
                     {"bound", to_decimal(r.bound.limit)}});
    return out;
  });
  result.details["statement"] = "chi <= omega^(4 log t + 13)";
  return result;
}

SuiteResult mycielski(const SuiteOptions& options) {
  SuiteResult result;
  result.suite = "mycielski";
  const int max_n = options.max_n.value_or(4);
  if (max_n < 1) throw InvalidArgument("mycielski suite needs max-n >= 1");
  if (max_n > 8) throw CapExceeded("M_n beyond n = 8 exceeds the vertex limit");
  json rows = json::array();
  json skipped = json::array();
  for (int n = 1; n <= max_n; ++n) {
    const Graph m = mycielski_graph(n);
    json row{{"n", n}, {"vertices", m.vertex_count()}, {"edges", m.edge_count()}};
    const int omega = clique_number(m).size;
    row["omega"] = omega;
    ++result.checked;
    if (omega != 2) record(result, {{"n", n}, {"omega", omega}}, options);
    if (m.vertex_count() <= kMycielskiChiCap) {
      const int chi = chromatic_number(m, m.vertex_count()).chi;
      row["chi"] = chi;
      ++result.checked;
      if (chi != n + 1) record(result, {{"n", n}, {"chi", chi}}, options);
    } else {
      ++result.skipped;
      skipped.push_back("chi(M_" + std::to_string(n) + "): " + std::to_string(m.vertex_count()) + " vertices");
    }
    if (n <= kPhiExactCap && m.vertex_count() <= options.lp_cap) {
      const Rational frac = fractional_chromatic(m, options.lp_cap).value;
      const Rational phi = phi_recursion(n);
      row["fractional"] = to_string(frac);
      row["phi"] = to_string(phi);
      ++result.checked;
      if (frac != phi) record(result, {{"n", n}, {"fractional", to_string(frac)}, {"phi", to_string(phi)}}, options);
    } else {
      ++result.skipped;
      skipped.push_back("fractional(M_" + std::to_string(n) + "): " + std::to_string(m.vertex_count()) +
                        " vertices exceed the LP cap " + std::to_string(options.lp_cap));
    }
    if (n == 2) {
      const bool c5 = canonical_key(m) == canonical_key(cycle_graph(5));
      row["isomorphic_to_C5"] = c5;
      ++result.checked;
      if (!c5) record(result, {{"n", 2}, {"graph6", emit_graph6(m)}, {"expected", "C5"}}, options);
    }
    rows.push_back(std::move(row));
  }
  result.details["graphs"] = std::move(rows);
  if (!skipped.empty()) result.details["skipped"] = std::move(skipped);
  return result;
}

SuiteResult phi(const SuiteOptions& options) {
  SuiteResult result;
  result.suite = "phi";
  const int max_n = options.max_n.value_or(10000);
  if (max_n < 1) throw InvalidArgument("phi suite needs max-n >= 1");
  const std::vector<std::string> expected{"2", "5/2", "29/10"};
  json values = json::array();
  for (int n = 1; n <= std::min<int>(max_n, 3); ++n) {
    const std::string got = to_string(phi_recursion(n));
    values.push_back(got);
    ++result.checked;
    if (got != expected[static_cast<std::size_t>(n - 1)])
      record(result, {{"n", n}, {"phi", got}, {"expected", expected[static_cast<std::size_t>(n - 1)]}}, options);
  }
  result.checked += max_n;
  if (auto bad = phi_lower_bound_first_failure(max_n)) record(result, {{"n", *bad}, {"claim", "phi_n^2 >= 2(n+1)"}}, options);
  result.details["values"] = std::move(values);
  result.details["lower_bound_range"] = {1, max_n};
  result.details["method"] = "exact rationals up to n = " + std::to_string(kPhiExactCap) +
                             ", then lower bounds rounded down to multiples of 2^-256";
  return result;
}

SuiteResult cstar(const SuiteOptions& options) {
  SuiteResult result;
  result.suite = "cstar";
  if (options.samples < 0) throw InvalidArgument("sample count must be non-negative");
  if (options.t && *options.t < 1) throw InvalidArgument("t must be at least 1");
  struct Outcome {
    std::vector<json> bad;
    int n = 0;
    int t = 0;
    bool exact_membership = false;
    bool exact_chi = false;
    bool all_stages = false;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(options.samples));
  parallel_for(outcomes.size(), options.jobs, [&](std::size_t i) {
    Outcome& o = outcomes[i];
    o.t = options.t.value_or(2 + static_cast<int>(i % 3));
    const std::uint64_t seed = options.seed + i;
    auto fail = [&](const std::string& why, const Graph* g) {
      json c{{"seed", seed}, {"t", o.t}, {"reason", why}};
      if (g) c["graph6"] = emit_graph6(*g);
      o.bad.push_back(std::move(c));
    };
    CStarSample sample;
    try {
      sample = sample_cstar(o.t, seed, options.budget);
    } catch (const CertificationError& e) {
      fail(std::string("sample: ") + e.what(), nullptr);
      return;
    }
    const Graph& g = sample.graph;
    o.n = g.vertex_count();
    o.exact_membership = sample.membership.method == "exact";
    if (!sample.membership.bull_free || !sample.membership.in_class) fail("membership certificate missing", &g);
    try {
      const StagedColoring colored = color_bull_free(g, o.t);
      if (!colored.coloring.is_proper_for(g)) fail("improper coloring", &g);
      if (colored.coloring.count() != colored.account.colors_used) fail("account disagrees with the coloring", &g);
      if (!colored.account.within_budget())
        fail("used " + std::to_string(colored.coloring.count()) + " colors, budget " + colored.account.budget->formula, &g);
      o.all_stages = colored.account.all_within_budget();
      if (o.n <= options.exact_chi_cap) {
        o.exact_chi = true;
        const int chi = chromatic_number(g, options.exact_chi_cap).chi;
        if (colored.coloring.count() < chi) fail("fewer colors than the exact chi", &g);
      }
    } catch (const Error& e) {
      fail(e.what(), &g);
    }
  });
  json per_t = json::object();
  int max_vertices = 0;
  std::int64_t exact_membership = 0, exact_chi = 0, all_stages = 0;
  for (auto& o : outcomes) {
    ++result.checked;
    for (auto& c : o.bad) record(result, std::move(c), options);
    max_vertices = std::max(max_vertices, o.n);
    exact_membership += o.exact_membership;
    exact_chi += o.exact_chi;
    all_stages += o.all_stages;
    per_t[std::to_string(o.t)] = per_t.value(std::to_string(o.t), 0) + 1;
  }
  result.details["samples_per_t"] = std::move(per_t);
  result.details["max_vertices"] = max_vertices;
  result.details["budget"] = options.budget;
  result.details["exact_membership_checked"] = exact_membership;
  result.details["exact_chi_compared"] = exact_chi;
  result.details["every_stage_within_budget"] = all_stages;
  return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm21", "layerlemma", "bound", "mycielski", "phi", "cstar"};
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "thm21") return thm21(options);
  if (name == "layerlemma") return layerlemma(options);
  if (name == "bound") return bound(options);
  if (name == "mycielski") return mycielski(options);
  if (name == "phi") return phi(options);
  if (name == "cstar") return cstar(options);
  throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

json to_json(const SuiteResult& result) {
  json j{{"suite", result.suite},
         {"pass", result.pass},
         {"checked", result.checked},
         {"skipped", result.skipped},
         {"counterexamples", result.counterexamples},
         {"details", result.details}};
  return j;
}

}  // namespace bullchrome
