#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bullchrome {

using BigInt = boost::multiprecision::cpp_int;

/// floor(base^(log_coeff * log2(t) + constant)), exact. Integer cases (t or
/// base a power of two, base <= 1) use integer arithmetic; the rest go
/// through 100-digit binary floating point, which separates the value from
/// every integer by far more than its rounding error at desk-scale inputs.
/// Throws CertificationError if that separation ever fails.
BigInt power_bound_floor(int base, int t, int log_coeff, int constant);

/// A color budget: the largest color count that satisfies it, plus a
/// human-readable formula.
struct Budget {
  std::string formula;
  BigInt limit;

  bool admits(int colors) const { return BigInt(colors) <= limit; }

  /// base^(log_coeff log t + constant)
  static Budget power(int base, int t, int log_coeff, int constant);
  /// (base-1)^(log_coeff log t + constant) + base
  static Budget peeled(int base, int t, int log_coeff, int constant);
  static Budget exactly(int colors, const std::string& formula);
};

/// One stage of a constructive coloring: how many colors it used and, when
/// the stage is one step of the recursive bound, the budget that step
/// allows.
struct ColorAccount {
  std::string stage;
  int vertices = 0;
  int colors_used = 0;
  std::optional<Budget> budget;
  std::vector<ColorAccount> children;

  bool within_budget() const { return !budget || budget->admits(colors_used); }
  /// Every stage in the subtree that carries a budget respects it.
  bool all_within_budget() const;
  /// Pre-order visit of every stage.
  template <typename Fn>
  void visit(Fn&& fn) const {
    fn(*this);
    for (const auto& c : children) c.visit(fn);
  }
};

}  // namespace bullchrome
