#include "bullchrome/account.hpp"

#include <bit>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "bullchrome/errors.hpp"

namespace bullchrome {

namespace {

using Float = boost::multiprecision::cpp_bin_float_100;

bool power_of_two(int x) { return x > 0 && std::has_single_bit(static_cast<unsigned>(x)); }
int log2_exact(int x) { return std::countr_zero(static_cast<unsigned>(x)); }

std::string exponent_text(int log_coeff, int constant) {
  std::string s;
  if (log_coeff != 0) s = (log_coeff == 1 ? std::string() : std::to_string(log_coeff)) + "log t";
  if (constant != 0 || s.empty()) s += (s.empty() ? "" : "+") + std::to_string(constant);
  return s;
}

}  // namespace

BigInt power_bound_floor(int base, int t, int log_coeff, int constant) {
  if (base < 0 || t < 1 || log_coeff < 0 || constant < 0)
    throw InvalidArgument("power bound needs base >= 0, t >= 1 and non-negative exponent terms");
  if (base <= 1) {
    // 0^0 never arises with constant > 0; treat it as 1 otherwise
    if (base == 0 && (constant > 0 || (log_coeff > 0 && t > 1))) return 0;
    return 1;
  }
  if (power_of_two(t)) {
    const unsigned e = static_cast<unsigned>(log_coeff * log2_exact(t) + constant);
    return boost::multiprecision::pow(BigInt(base), e);
  }
  if (power_of_two(base)) {
    // base^(c log t + k) = t^(c q) * 2^(k q) where base = 2^q
    const int q = log2_exact(base);
    return boost::multiprecision::pow(BigInt(t), static_cast<unsigned>(log_coeff * q)) << (constant * q);
  }
  const Float exponent = Float(log_coeff) * boost::multiprecision::log2(Float(t)) + Float(constant);
  const Float value = boost::multiprecision::pow(Float(base), exponent);
  const Float floor_value = boost::multiprecision::floor(value);
  const Float gap = value - floor_value;
  if (gap < Float("1e-60") * value || (1 - gap) < Float("1e-60") * value)
    throw CertificationError("power bound too close to an integer to decide in 100-digit arithmetic");
  return floor_value.convert_to<BigInt>();
}

Budget Budget::power(int base, int t, int log_coeff, int constant) {
  return {std::to_string(base) + "^(" + exponent_text(log_coeff, constant) + ")",
          power_bound_floor(base, t, log_coeff, constant)};
}

Budget Budget::peeled(int base, int t, int log_coeff, int constant) {
  return {std::to_string(base - 1) + "^(" + exponent_text(log_coeff, constant) + ")+" + std::to_string(base),
          power_bound_floor(base - 1, t, log_coeff, constant) + base};
}

Budget Budget::exactly(int colors, const std::string& formula) { return {formula, BigInt(colors)}; }

bool ColorAccount::all_within_budget() const {
  bool ok = true;
  visit([&](const ColorAccount& a) { ok = ok && a.within_budget(); });
  return ok;
}

}  // namespace bullchrome
