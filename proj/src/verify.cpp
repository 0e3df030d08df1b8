#include "p3t/verify.hpp"

#include <algorithm>
#include <random>

#include "p3t/embed.hpp"
#include "p3t/family.hpp"
#include "p3t/iso.hpp"

namespace p3t {

using ojson = nlohmann::ordered_json;

namespace {

ojson points_json(std::span<const Point> pts) {
  auto a = ojson::array();
  for (const Point& p : pts) a.push_back({p.x, p.y});
  return a;
}

const char* family_token(GadgetFamily f) { return f == GadgetFamily::seven ? "T" : "T~"; }

struct LemmaTally {
  VerifyReport& report;
  const std::vector<Gadget>& gadgets;
  std::vector<TriTree> trees;
  std::map<int, long> histogram;

  void run(const PointSet& X, ojson origin) {
    const auto hull = hull_triangle(X.points());
    if (!hull) {
      ++report.skipped;
      return;
    }
    const auto mappings = hull_mappings(*hull);
    for (std::size_t m = 0; m < mappings.size(); ++m) {
      const LemmaCheck c = gadget_lemma_check(trees, X, mappings[m]);
      ++histogram[c.count];
      report.max_embeddable = std::max<long>(report.max_embeddable, c.count);
      if (c.count <= kLemmaMaxEmbeddable) continue;
      ++report.violations;
      ojson f = origin;
      f["mapping"] = m;
      f["points"] = points_json(X.points());
      auto names = ojson::array();
      for (std::size_t g = 0; g < gadgets.size(); ++g) {
        if (c.embeddable[g]) names.push_back(gadgets[g].name);
      }
      f["embeddable"] = names;
      report.failures.push_back(f);
    }
  }
};

}  // namespace

std::string VerifyReport::to_json() const {
  ojson j;
  j["check"] = check;
  j["n"] = n;
  j["trials"] = trials;
  j["skipped"] = skipped;
  j["violations"] = violations;
  j["max_embeddable"] = max_embeddable;
  j["seed"] = seed;
  j["invalid_records"] = invalid_records;
  for (const auto& [k, v] : details.items()) j[k] = v;
  j["failures"] = failures;
  return j.dump();
}

VerifyReport verify_gadget_lemma(const GadgetCatalog& catalog, GadgetFamily family,
                                 const VerifyOptions& options) {
  const std::vector<Gadget>& gadgets = catalog.family(family);
  const int n = family == GadgetFamily::seven ? kSevenVertices : kThreeVertices;
  VerifyReport r;
  r.check = family == GadgetFamily::seven ? "lemma8" : "lemma7";
  r.n = n;
  r.seed = options.seed;
  LemmaTally tally{r, gadgets, catalog.trees(family), {}};

  for (long t = 0; t < options.trials; ++t) {
    const std::uint64_t s = derive_seed(options.seed, static_cast<std::uint64_t>(t));
    const PointSet X = sample({n, options.extent, s, HullMode::triangular});
    tally.run(X, ojson{{"source", "random"}, {"trial", t}, {"trial_seed", s}});
  }
  r.trials = options.trials;

  long records = 0;
  if (options.otypes) {
    OrderTypeReader reader(*options.otypes, n, options.otypes_width, options.otypes_endian);
    while (auto rec = reader.next()) {
      ++records;
      ojson origin{{"source", "otypes"}, {"record", rec->index}};
      std::optional<PointSet> X;
      try {
        X.emplace(rec->points);
      } catch (const std::exception& e) {
        ++r.invalid_records;
        origin["error"] = e.what();
        origin["points"] = points_json(rec->points);
        r.failures.push_back(origin);
        continue;
      }
      if (!X->is_general_position()) {
        ++r.invalid_records;
        origin["error"] = "not in general position";
        origin["points"] = points_json(rec->points);
        r.failures.push_back(origin);
        continue;
      }
      tally.run(*X, origin);
    }
    r.trials += records;
  }

  r.details["family"] = family_token(family);
  r.details["gadgets"] = gadgets.size();
  r.details["extent"] = options.extent;
  r.details["random_trials"] = options.trials;
  r.details["records_processed"] = records;
  if (options.otypes) r.details["otypes"] = *options.otypes;
  auto hist = ojson::object();
  for (const auto& [count, k] : tally.histogram) hist[std::to_string(count)] = k;
  r.details["histogram"] = hist;
  return r;
}

VerifyReport verify_embedder(const VerifyOptions& options) {
  if (options.max_size < 3 || options.max_size > 9) {
    throw std::invalid_argument("max-size must lie in [3, 9]");
  }
  VerifyReport r;
  r.check = "embedder";
  r.n = options.max_size;
  r.seed = options.seed;
  long comparisons = 0, agreements = 0, embeddable = 0, witness_failures = 0;
  std::uint64_t stream = 0;

  auto disagree = [&](const TriTree& g, const PointSet& X, const char* what, ojson extra) {
    ++r.violations;
    extra["kind"] = what;
    extra["program"] = to_stacking_text(g);
    extra["points"] = points_json(X.points());
    r.failures.push_back(extra);
  };

  for (int size = 3; size <= options.max_size; ++size) {
    for (const TriTree& g : all_stacking_programs(size)) {
      for (int s = 0; s < options.sets; ++s) {
        const std::uint64_t seed = derive_seed(options.seed, stream++);
        const HullMode mode = s % 2 == 0 ? HullMode::triangular : HullMode::unconstrained;
        const PointSet X = sample({size, options.extent, seed, mode});
        ++r.trials;
        const ojson origin{{"trial_seed", seed}};

        const auto hull = hull_triangle(X.points());
        const auto free = hull ? decide_embed_free(g, X) : std::nullopt;
        const bool truth = brute_embed(g, X);
        ++comparisons;
        if (free.has_value() == truth) ++agreements;
        else disagree(g, X, "free", origin);
        if (free) {
          ++embeddable;
          if (!is_plane_drawing(g, free->witness)) {
            ++witness_failures;
            disagree(g, X, "free witness", origin);
          }
        }

        if (!hull) {
          ++r.skipped;
          continue;
        }
        const auto mappings = hull_mappings(*hull);
        for (std::size_t m = 0; m < mappings.size(); ++m) {
          const auto fixed = decide_embed_fixed(g, X, mappings[m]);
          const bool fixed_truth = brute_embed_fixed(g, X, mappings[m]);
          ++comparisons;
          ojson o = origin;
          o["mapping"] = m;
          if (fixed.has_value() == fixed_truth) ++agreements;
          else disagree(g, X, "fixed", o);
          if (fixed && !is_plane_drawing(g, *fixed)) {
            ++witness_failures;
            disagree(g, X, "fixed witness", o);
          }
        }
      }
    }
  }
  r.max_embeddable = embeddable;
  r.details["sets_per_program"] = options.sets;
  r.details["extent"] = options.extent;
  r.details["comparisons"] = comparisons;
  r.details["agreements"] = agreements;
  r.details["agreement"] = comparisons == 0 ? 1.0 : static_cast<double>(agreements) / comparisons;
  r.details["witness_failures"] = witness_failures;
  return r;
}

VerifyReport verify_apex(const VerifyOptions& options) {
  if (options.max_interior < 1) throw std::invalid_argument("max interior must be positive");
  VerifyReport r;
  r.check = "apex";
  r.n = options.max_interior;
  r.seed = options.seed;
  long random_count_matches = 0;
  for (long t = 0; t < options.trials; ++t) {
    const std::uint64_t seed = derive_seed(options.seed, static_cast<std::uint64_t>(t));
    std::mt19937_64 rng(seed);
    const int m = std::uniform_int_distribution<int>(1, options.max_interior)(rng);
    const PointSet X = sample({m + 3, options.extent, seed, HullMode::triangular});
    const Triangle tri{X[0], X[1], X[2]};
    const std::span<const Point> interior(X.points().data() + 3, m);

    // counts of a true candidate
    const Point p = interior[std::uniform_int_distribution<int>(0, m - 1)(rng)];
    SplitCounts counts{};
    for (const Point& q : interior) {
      if (q == p) continue;
      for (int i = 0; i < 3; ++i) {
        Triangle sub = tri;
        sub[i] = p;
        if (strictly_inside(q, sub)) ++counts[i];
      }
    }
    const auto found = matching_apexes(interior, tri, counts);

    // an arbitrary split of the remaining m - 1 points
    std::uniform_int_distribution<int> cut(0, m - 1);
    int u = cut(rng), v = cut(rng);
    if (u > v) std::swap(u, v);
    const SplitCounts any{u, v - u, m - 1 - v};
    const auto others = matching_apexes(interior, tri, any);
    random_count_matches += static_cast<long>(others.size());

    ++r.trials;
    r.max_embeddable = std::max<long>(r.max_embeddable, static_cast<long>(found.size()));
    r.max_embeddable = std::max<long>(r.max_embeddable, static_cast<long>(others.size()));
    const bool ok = found.size() == 1 && found[0] == p && others.size() <= 1;
    if (!ok) {
      ++r.violations;
      r.failures.push_back({{"trial", t},
                            {"trial_seed", seed},
                            {"counts", counts},
                            {"random_counts", any},
                            {"matches", found.size()},
                            {"random_matches", others.size()},
                            {"points", points_json(X.points())}});
    }
  }
  r.details["max_interior"] = options.max_interior;
  r.details["extent"] = options.extent;
  r.details["random_count_matches"] = random_count_matches;
  return r;
}

VerifyReport verify_degrees(const GadgetCatalog& catalog, const VerifyOptions& options) {
  const FamilySpec spec = family_parameters(options.n);
  const Skeleton skeleton = build_skeleton(spec.k1, spec.k2, spec.k3);
  VerifyReport r;
  r.check = "degrees";
  r.n = options.n;
  r.seed = options.seed;
  int min_outer = 1 << 30, max_other = 0, max_internal = 0;
  for (long t = 0; t < options.trials; ++t) {
    const std::uint64_t seed = derive_seed(options.seed, static_cast<std::uint64_t>(t));
    std::mt19937_64 rng(seed);
    Assignment a;
    a.digits.resize(spec.f_order.size());
    for (std::size_t i = 0; i < a.digits.size(); ++i) {
      const int base = static_cast<int>(i) < spec.F2 ? 3 : 7;
      a.digits[i] = std::uniform_int_distribution<int>(0, base - 1)(rng);
    }
    const TriTree g = plant(skeleton, spec, catalog, a);
    const DegreeReport d = degree_report(g, spec);
    ++r.trials;
    const int outer = *std::min_element(d.outer.begin(), d.outer.end());
    min_outer = std::min(min_outer, outer);
    max_other = std::max(max_other, d.max_skeleton_other);
    max_internal = std::max(max_internal, d.max_gadget_internal);
    if (outer <= kSkeletonDegreeCap || d.max_skeleton_other > kSkeletonDegreeCap ||
        d.max_gadget_internal > kMaxInternalDegree) {
      ++r.violations;
      r.failures.push_back({{"trial", t},
                            {"trial_seed", seed},
                            {"index", encode_index(spec, a).str()},
                            {"outer", d.outer},
                            {"max_skeleton_other", d.max_skeleton_other},
                            {"max_gadget_internal", d.max_gadget_internal}});
    }
  }
  r.details["k"] = {spec.k1, spec.k2, spec.k3};
  r.details["min_outer_degree"] = r.trials ? min_outer : 0;
  r.details["max_skeleton_other_degree"] = max_other;
  r.details["max_gadget_internal_degree"] = max_internal;
  r.details["skeleton_cap"] = kSkeletonDegreeCap;
  r.details["gadget_cap"] = kMaxInternalDegree;
  return r;
}

VerifyReport verify_catalog(const GadgetCatalog& catalog) {
  VerifyReport r;
  r.check = "catalog";
  auto gadgets = ojson::array();
  auto fail = [&](const std::string& gadget, const std::string& what) {
    ++r.violations;
    r.failures.push_back({{"gadget", gadget}, {"error", what}});
  };
  for (GadgetFamily f : {GadgetFamily::seven, GadgetFamily::three}) {
    const auto& family = catalog.family(f);
    const auto& flips = f == GadgetFamily::seven ? catalog.flip_seven : catalog.flip_three;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const Gadget& g = family[i];
      ++r.trials;
      try {
        validate_gadget(g);
      } catch (const CatalogError& e) {
        fail(g.name, e.what());
      }
      // every face is a valid root
      const Adjacency adj = g.tree.adjacency();
      int rootings = 0;
      for (const Face& face : g.tree.faces()) {
        try {
          recognize(adj, face);
          ++rootings;
        } catch (const TriTreeError& e) {
          fail(g.name, std::string("re-rooting failed: ") + e.what());
        }
      }
      const Gadget flipped = flip(g);
      const bool flip_ok =
          i < flips.size() &&
          canonical_form_rooted(flipped.tree.adjacency(), flipped.tree.outer()) ==
              canonical_form_rooted(family[flips[i]].tree.adjacency(), family[flips[i]].tree.outer());
      if (!flip_ok) fail(g.name, "flip image mismatch");
      gadgets.push_back({{"name", g.name},
                         {"family", family_token(f)},
                         {"vertices", g.tree.size()},
                         {"faces", g.tree.faces().size()},
                         {"rootings", rootings},
                         {"flip", i < flips.size() ? family[flips[i]].name : ""}});
    }
  }
  r.n = static_cast<int>(r.trials);
  r.details["gadgets"] = gadgets;
  return r;
}

}  // namespace p3t
