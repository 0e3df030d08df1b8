#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "p3t/bounds.hpp"
#include "p3t/conflict.hpp"
#include "p3t/embed.hpp"
#include "p3t/family.hpp"
#include "p3t/iso.hpp"
#include "p3t/verify.hpp"

using namespace p3t;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

const GadgetCatalog& catalog() {
  static const GadgetCatalog c = load_catalog(default_catalog_path());
  return c;
}

std::optional<std::string> env(const char* name) {
  if (const char* v = std::getenv(name)) return std::string(v);
  return std::nullopt;
}

Outcome parameters() {
  const auto t0 = Clock::now();
  int bad = 0;
  for (int n = 22; n <= 1000; ++n) {
    const FamilySpec s = family_parameters(n);
    const bool ok = s.F2 == (7 * n + 5) % 11 && 11 * s.k_sum() == n - 4 + 3 * s.F2 &&
                    s.F == 2 * s.k_sum() + 4 && s.F1 + s.F2 == s.F - 4 && s.F1 >= 0 &&
                    s.k1 <= s.k2 && s.k2 <= s.k3 && s.k3 <= s.k1 + 1 &&
                    n == 11 * s.k_sum() + 4 - 3 * s.F2 &&
                    static_cast<int>(s.f_order.size()) == s.F - 4 &&
                    static_cast<int>(s.f2_set.size()) == s.F2;
    bad += !ok;
  }
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << "979 values of n, " << bad << " failures, " << t << " s";
  return {bad == 0 && t < 1.0, d.str()};
}

Outcome enumeration() {
  const auto t0 = Clock::now();
  const FamilySpec s = family_parameters(22);
  FamilyEnumerator e(s, catalog());
  long count = 0, bad = 0;
  while (auto item = e.next()) {
    ++count;
    const TriTree& g = item->second;
    bool ok = g.size() == 22 && g.faces().size() == 40;
    try {
      ok = ok && recognize(g.adjacency(), g.outer()).tree.size() == 22;
    } catch (const TriTreeError&) {
      ok = false;
    }
    bad += !ok;
  }
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << count << " graphs, " << bad << " malformed, " << t << " s";
  return {count == 1701 && bad == 0 && t < 10.0, d.str()};
}

Outcome apex() {
  VerifyOptions o;
  o.trials = 10000;
  o.max_interior = 50;
  o.seed = 3;
  const VerifyReport r = verify_apex(o);
  std::ostringstream d;
  d << r.trials << " instances, " << r.violations << " with a non-unique match";
  return {r.trials == 10000 && r.ok(), d.str()};
}

Outcome embedder() {
  const auto t0 = Clock::now();
  VerifyOptions o;
  o.max_size = 6;
  o.sets = 50;
  o.seed = 2;
  const VerifyReport r = verify_embedder(o);
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << r.details["comparisons"].get<long>() << " comparisons, agreement "
    << r.details["agreement"].get<double>() * 100 << "%, " << t << " s";
  return {r.ok() && t < 120.0, d.str()};
}

Outcome lemma(GadgetFamily family, long trials, const char* otypes_env) {
  VerifyOptions o;
  o.trials = trials;
  o.seed = 1;
  o.otypes = env(otypes_env);
  const VerifyReport r = verify_gadget_lemma(catalog(), family, o);
  std::ostringstream d;
  d << trials << " random sets";
  if (o.otypes) d << " + " << r.details["records_processed"].get<long>() << " records";
  else d << " (no order-type file in " << otypes_env << ")";
  d << ", " << r.skipped << " skipped, max embeddable " << r.max_embeddable << ", "
    << r.violations << " violations";
  return {r.ok(), d.str()};
}

Outcome bounds() {
  int bad = 0;
  for (int n = 238; n <= 2000; ++n) bad += !bounds_report(n).upper_chain_holds;
  const BoundsReport r = bounds_report(238);
  namespace bmp = boost::multiprecision;
  const bool exact = r.theorem_upper_exact && *r.theorem_upper_exact == (BigInt(5550) << 50) &&
                     r.family_size == bmp::pow(BigInt(7), 38) * bmp::pow(BigInt(3), 10);
  std::ostringstream d;
  d << bad << " failures over [238, 2000]; n=238 exact values " << (exact ? "match" : "differ");
  return {bad == 0 && exact, d.str()};
}

Outcome corollary() {
  const auto t0 = Clock::now();
  const CorollaryResult c = corollary_ratio(1e-9);
  const double t = seconds_since(t0);
  const double ratio = static_cast<double>(c.ratio);
  const bool ok = ratio >= 1.0585 && ratio <= 1.0600 && std::round(ratio * 1000) / 1000 == 1.059 &&
                  c.residual < 1e-9L && t < 1e-3;
  std::ostringstream d;
  d.precision(10);
  d << "ratio " << ratio << ", residual " << static_cast<double>(c.residual) << ", " << t * 1e3 << " ms";
  return {ok, d.str()};
}

Outcome iso_classes() {
  const auto t0 = Clock::now();
  FamilyEnumerator e(family_parameters(22), catalog());
  IsoHistogram h;
  while (auto m = e.next()) h.add_graph(m->second.adjacency());
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << h.classes() << " classes of " << h.total() << " graphs, histogram (size:classes)";
  for (const auto& [size, k] : h.size_distribution()) d << " " << size << ":" << k;
  d << ", " << t << " s";
  return {h.total() == 1701 && h.classes() >= 284 && t < 60.0, d.str()};
}

Outcome degrees() {
  VerifyOptions o;
  o.n = 238;
  o.trials = 100;
  o.seed = 4;
  const VerifyReport r = verify_degrees(catalog(), o);
  std::ostringstream d;
  d << r.trials << " members, min outer degree " << r.details["min_outer_degree"].get<int>()
    << ", max other skeleton degree " << r.details["max_skeleton_other_degree"].get<int>()
    << ", max gadget degree " << r.details["max_gadget_internal_degree"].get<int>();
  return {r.trials == 100 && r.ok(), d.str()};
}

Outcome conflict() {
  ConflictConfig c;
  c.n = 22;
  c.trials = 200;
  c.seed = 7;
  const ConflictReport r = conflict_search(c, catalog());
  bool within = true;
  for (std::size_t v : r.per_trial) within = within && BigInt(v) <= r.partition_bound;
  std::ostringstream d;
  d << r.per_trial.size() << " sets, " << r.skipped << " skipped, max " << r.max_embeddable
    << " <= " << r.partition_bound.str();
  if (r.argmax_trial) {
    d << " at trial " << *r.argmax_trial << " points";
    for (const Point& p : r.argmax_points) d << " " << to_string(p);
  }
  return {within && r.violations == 0 && r.per_trial.size() == 200, d.str()};
}

Outcome lower_bound() {
  int bad = 0;
  for (int n = 22; n <= 500; ++n) bad += !family_size_exceeds_simple_bound(family_parameters(n));
  return {bad == 0, std::to_string(bad) + " failures over [22, 500]"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"parameter round-trip", parameters},
      {"family enumeration n=22", enumeration},
      {"apex uniqueness", apex},
      {"embedder vs brute force", embedder},
      {"small gadget lemma", [] { return lemma(GadgetFamily::three, 10000, "P3T_OTYPES5"); }},
      {"large gadget lemma", [] { return lemma(GadgetFamily::seven, 1000, "P3T_OTYPES8"); }},
      {"bounds arithmetic", bounds},
      {"corollary solver", corollary},
      {"isomorphism classes n=22", iso_classes},
      {"degree separation n=238", degrees},
      {"conflict evidence n=22", conflict},
      {"lower-bound inequality", lower_bound},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
