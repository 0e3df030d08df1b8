#include "p3t/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace p3t {

namespace bmp = boost::multiprecision;

namespace {

constexpr int kDoubleCountMinN = 238;

BigInt pow_big(long long base, long long exp) {
  return bmp::pow(BigInt(base), static_cast<unsigned>(exp));
}

std::string long_double_str(long double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

bool family_size_exceeds_simple_bound(const FamilySpec& spec) {
  const BigInt size = family_size(spec);
  return bmp::pow(size, 11) >= pow_big(7, 2LL * spec.n - 8);
}

bool exact_upper_within_theorem(int n, const BigInt& exact_upper) {
  // (21n+552)^11 * 4^(n+37) = (21n+552)^11 * 2^(2n+74)
  const BigInt rhs = pow_big(21LL * n + 552, 11) << (2 * n + 74);
  return bmp::pow(exact_upper, 11) <= rhs;
}

BoundsReport bounds_report(int n) {
  const FamilySpec spec = family_parameters(n);
  BoundsReport r;
  r.n = n;
  r.F1 = spec.F1;
  r.F2 = spec.F2;
  r.family_size = family_size(spec);
  r.class_lower = BigRational(r.family_size, 6);
  r.simple_lower = std::pow(7.0L, (2.0L * n - 8) / 11) / 6;
  r.partition_classes = 6 * (77 * BigInt(spec.F1) + 15 * spec.F2 + 4);
  r.exact_upper = r.partition_classes << (spec.F1 + spec.F2);
  r.theorem_upper = (21.0L * n + 552) * std::pow(4.0L, (n + 37.0L) / 11);
  if ((n + 37) % 11 == 0) {
    r.theorem_upper_exact = BigInt(21LL * n + 552) << (2 * ((n + 37) / 11));
  }
  r.upper_chain_holds = exact_upper_within_theorem(n, r.exact_upper);
  r.lower_chain_holds = family_size_exceeds_simple_bound(spec);
  r.fans_unequal = !(spec.k1 == spec.k2 && spec.k2 == spec.k3);
  return r;
}

long double corollary_lhs(long double c) {
  return std::log(c) + (c - 1) * std::log(c / (c - 1));
}

long double corollary_rhs() { return 2.0L / 11.0L * std::log(7.0L / 2.0L); }

CorollaryResult corollary_ratio(double tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  // lhs is increasing on (1, 2] with lhs(1+) = 0 < rhs < lhs(2) = 2 log 2.
  long double lo = 1, hi = 2;
  const long double target = corollary_rhs();
  CorollaryResult out;
  for (out.iterations = 1; out.iterations <= 200; ++out.iterations) {
    const long double mid = (lo + hi) / 2;
    const long double g = corollary_lhs(mid) - target;
    out.ratio = mid;
    out.residual = std::fabs(g);
    if (hi - lo <= tolerance && out.residual <= tolerance) break;
    (g < 0 ? lo : hi) = mid;
  }
  return out;
}

long double log_binomial(long long m, long long n) {
  if (n < 0 || m < n) throw std::invalid_argument("log_binomial needs 0 <= n <= m");
  const long long k = std::min(n, m - n);
  long double s = 0;
  for (long long i = 1; i <= k; ++i) {
    s += std::log(static_cast<long double>(m - k + i)) - std::log(static_cast<long double>(i));
  }
  return s;
}

bool double_count_check(long long n, long long m) {
  if (n < kDoubleCountMinN || m < n) {
    throw std::invalid_argument("double_count_check needs m >= n >= 238");
  }
  const long double lhs = log_binomial(m, n) + std::log(21.0L * n + 552) +
                          (n + 37.0L) / 11 * std::log(4.0L);
  const long double rhs = (2.0L * n - 8) / 11 * std::log(7.0L) - std::log(6.0L);
  return lhs >= rhs;
}

long long double_count_threshold(long long n) {
  long long hi = n;
  while (!double_count_check(n, hi)) hi *= 2;
  long long lo = std::max(n, hi / 2);
  if (double_count_check(n, lo)) return lo;
  // invariant: check(lo) false, check(hi) true
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    (double_count_check(n, mid) ? hi : lo) = mid;
  }
  return hi;
}

std::string bounds_json(const BoundsReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["F1"] = r.F1;
  j["F2"] = r.F2;
  j["family_size"] = r.family_size.str();
  j["class_lower"] = r.class_lower.str();
  j["simple_lower"] = long_double_str(r.simple_lower);
  j["partition_classes"] = r.partition_classes.str();
  j["exact_upper"] = r.exact_upper.str();
  j["theorem_upper"] = long_double_str(r.theorem_upper);
  j["theorem_upper_exact"] = r.theorem_upper_exact ? nlohmann::ordered_json(r.theorem_upper_exact->str())
                                                   : nlohmann::ordered_json(nullptr);
  j["upper_chain_holds"] = r.upper_chain_holds;
  j["lower_chain_holds"] = r.lower_chain_holds;
  j["note"] = r.fans_unequal
                  ? "k1, k2, k3 not all equal: for n >= 238 isomorphism classes hold at most "
                    "2 graphs; class_lower keeps the factor 1/6"
                  : "k1 = k2 = k3";
  return j.dump();
}

std::string bounds_csv_header() {
  return "n,F1,F2,family_size,partition_classes,exact_upper,theorem_upper,upper_chain_holds,"
         "lower_chain_holds\n";
}

std::string bounds_csv_row(const BoundsReport& r) {
  std::ostringstream out;
  out << r.n << ',' << r.F1 << ',' << r.F2 << ',' << r.family_size.str() << ','
      << r.partition_classes.str() << ',' << r.exact_upper.str() << ','
      << long_double_str(r.theorem_upper) << ',' << (r.upper_chain_holds ? 1 : 0) << ','
      << (r.lower_chain_holds ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace p3t
