#include "p3t/conflict.hpp"

#include <json.hpp>

namespace p3t {

ConflictReport conflict_search(const ConflictConfig& config, const GadgetCatalog& catalog) {
  if (config.trials < 0) throw std::invalid_argument("trials must be nonnegative");
  const FamilySpec spec = family_parameters(config.n);
  FamilyEnumerator members(spec, catalog, config.cap);

  ConflictReport r;
  r.config = config;
  r.family_size = members.size();
  r.partition_bound = (6 * (77 * BigInt(spec.F1) + 15 * spec.F2 + 4)) << (spec.F1 + spec.F2);
  if (config.trials == 0) return r;

  std::vector<PreparedGraph> prepared;
  prepared.reserve(members.size());
  while (auto item = members.next()) prepared.emplace_back(item->second);

  for (int t = 0; t < config.trials; ++t) {
    const PointSet X =
        sample({config.n, config.extent, derive_seed(config.seed, static_cast<std::uint64_t>(t)),
                config.mode});
    if (!hull_triangle(X.points())) {
      ++r.skipped;
      r.per_trial.push_back(0);
      continue;
    }
    const SimultaneousResult s = simultaneous_count(prepared, X);
    r.per_trial.push_back(s.count);
    ++r.histogram[s.count];
    if (BigInt(s.count) > r.partition_bound) ++r.violations;
    if (!r.argmax_trial || s.count > r.max_embeddable) {
      r.max_embeddable = s.count;
      r.argmax_trial = t;
      r.argmax_points = X.points();
      r.argmax_members = s.embeddable;
    }
  }
  return r;
}

std::string conflict_json(const ConflictReport& r) {
  nlohmann::ordered_json j;
  j["check"] = "conflict";
  j["n"] = r.config.n;
  j["trials"] = r.config.trials;
  j["skipped"] = r.skipped;
  j["violations"] = r.violations;
  j["max_embeddable"] = r.max_embeddable;
  j["seed"] = r.config.seed;
  j["extent"] = r.config.extent;
  j["family_size"] = r.family_size;
  j["partition_bound"] = r.partition_bound.str();
  if (r.argmax_trial) {
    j["argmax_trial"] = *r.argmax_trial;
    auto pts = nlohmann::ordered_json::array();
    for (const Point& p : r.argmax_points) pts.push_back({p.x, p.y});
    j["argmax_points"] = pts;
    j["argmax_members"] = r.argmax_members;
  } else {
    j["argmax_trial"] = nullptr;
  }
  auto hist = nlohmann::ordered_json::object();
  for (const auto& [count, trials] : r.histogram) hist[std::to_string(count)] = trials;
  j["histogram"] = hist;
  return j.dump();
}

}  // namespace p3t
