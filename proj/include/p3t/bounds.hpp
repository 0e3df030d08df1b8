#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "p3t/family.hpp"

namespace p3t {

using BigRational = boost::multiprecision::cpp_rational;

struct BoundsReport {
  int n = 0;
  int F1 = 0;
  int F2 = 0;
  BigInt family_size;
  BigRational class_lower;           // family_size / 6
  long double simple_lower = 0;      // 7^((2n-8)/11) / 6
  BigInt partition_classes;          // 6 (77 F1 + 15 F2 + 4)
  BigInt exact_upper;                // partition_classes * 2^(F1+F2)
  long double theorem_upper = 0;     // (21n + 552) * 4^((n+37)/11)
  std::optional<BigInt> theorem_upper_exact;  // when (n+37)/11 is integral
  bool upper_chain_holds = false;    // exact_upper <= theorem_upper, decided exactly
  bool lower_chain_holds = false;    // class_lower >= simple_lower, decided exactly
  bool fans_unequal = false;         // k1, k2, k3 not all equal: classes hold at most 2 graphs
};

/// Throws FamilyError for n < 22.
BoundsReport bounds_report(int n);

/// family_size >= 7^((2n-8)/11), compared exactly via 11th powers.
bool family_size_exceeds_simple_bound(const FamilySpec& spec);

/// exact_upper <= (21n + 552) 4^((n+37)/11), compared exactly via 11th powers.
bool exact_upper_within_theorem(int n, const BigInt& exact_upper);

struct CorollaryResult {
  long double ratio = 0;
  long double residual = 0;  // |lhs(ratio) - rhs|
  int iterations = 0;
};

/// log c + (c - 1) log(c / (c - 1)) for c > 1.
long double corollary_lhs(long double c);
/// (2/11) log(7/2)
long double corollary_rhs();

/// Bisection on (1, 2] until the bracket and the residual are both below
/// `tolerance`. Throws std::invalid_argument for tolerance <= 0.
CorollaryResult corollary_ratio(double tolerance);

/// log C(m, n) summed term by term.
long double log_binomial(long long m, long long n);

/// binom(m,n) (21n+552) 4^((n+37)/11) >= 7^((2n-8)/11) / 6, in log space.
/// Requires m >= n >= 238.
bool double_count_check(long long n, long long m);

/// Smallest m >= n for which double_count_check holds.
long long double_count_threshold(long long n);

std::string bounds_json(const BoundsReport& r);
std::string bounds_csv_header();
std::string bounds_csv_row(const BoundsReport& r);

}  // namespace p3t
