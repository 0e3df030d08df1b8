#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "p3t/embed.hpp"
#include "p3t/family.hpp"
#include "p3t/pointsets.hpp"

namespace p3t {

struct ConflictConfig {
  int n = 22;
  int trials = 200;
  std::uint64_t seed = 0;
  std::int64_t extent = 1000;
  HullMode mode = HullMode::triangular;
  std::uint64_t cap = FamilyEnumerator::kDefaultCap;
};

struct ConflictReport {
  ConflictConfig config;
  std::uint64_t family_size = 0;
  BigInt partition_bound;            // 6 (77 F1 + 15 F2 + 4) 2^(F1+F2)
  int skipped = 0;                   // point sets without a triangular hull
  int violations = 0;                // trials above partition_bound
  std::size_t max_embeddable = 0;
  std::optional<int> argmax_trial;
  std::vector<Point> argmax_points;
  std::vector<std::size_t> argmax_members;
  std::vector<std::size_t> per_trial;
  std::map<std::size_t, int> histogram;  // embeddable count -> trials
};

/// Family members are prepared once; trial t uses sample(derive_seed(seed, t)).
ConflictReport conflict_search(const ConflictConfig& config, const GadgetCatalog& catalog);

std::string conflict_json(const ConflictReport& r);

}  // namespace p3t
