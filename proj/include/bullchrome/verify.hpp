#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace bullchrome {

struct SuiteOptions {
  /// Largest order (or index, for mycielski and phi); each suite has a default.
  std::optional<int> max_n;
  /// cstar: restrict to this t instead of cycling through 2, 3, 4.
  std::optional<int> t;
  int jobs = 1;
  std::uint64_t seed = 0;
  int samples = 1000;
  int budget = 60;
  /// Largest sample whose color count is compared with the exact chi.
  int exact_chi_cap = 18;
  /// mycielski: fractional chromatic numbers of larger M_n are skipped.
  int lp_cap = 23;  // M_4
  int max_counterexamples = 10;
};

struct SuiteResult {
  std::string suite;
  bool pass = true;
  std::int64_t checked = 0;
  /// Items not checked, with the reason in details["skipped"].
  std::int64_t skipped = 0;
  std::vector<nlohmann::json> counterexamples;
  nlohmann::json details = nlohmann::json::object();
};

/// thm21: every prime bull-free graph is N-perfect (default n <= 9).
/// layerlemma: for x in L_{r-1} and a prime H inside L_r, N_H(x) is all of H
///   or stable, on every connected bull-free graph and root
///   (default n <= 8).
/// bound: chi <= omega^(4 log t + 13) with exact chi, omega, t (default n <= 8).
/// mycielski: omega(M_n) = 2, chi(M_n) = n + 1, M_2 = C_5, and the fractional
///   chromatic number against the recursion (default n <= 4).
/// phi: phi_n^2 >= 2(n+1) and the first recursion values (default n <= 10^4).
/// cstar: seeded closure samples colored by the bull-free pipeline and
///   checked against the budget and, when small, the exact chi.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite and CapExceeded when max_n is
/// beyond what the suite can enumerate.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options = {});

nlohmann::json to_json(const SuiteResult& result);

}  // namespace bullchrome
