#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "p3t/gadgets.hpp"
#include "p3t/pointsets.hpp"

namespace p3t {

struct VerifyOptions {
  long trials = 1000;
  std::uint64_t seed = 1;
  std::int64_t extent = 1000;
  std::optional<std::string> otypes;  // binary order-type file
  int otypes_width = 8;
  Endian otypes_endian = Endian::little;
  int max_size = 6;                   // embedder: largest program size
  int sets = 50;                      // embedder: point sets per program
  int n = 238;                        // degrees: family size parameter
  int max_interior = 50;              // apex: largest candidate count
};

/// Common report; `to_json` emits check, n, trials, skipped, violations,
/// max_embeddable and seed first, then check-specific fields.
struct VerifyReport {
  std::string check;
  int n = 0;
  long trials = 0;
  long skipped = 0;
  long violations = 0;
  long invalid_records = 0;
  long max_embeddable = 0;
  std::uint64_t seed = 0;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();

  bool ok() const { return violations == 0 && invalid_records == 0; }
  std::string to_json() const;
};

inline constexpr int kLemmaMaxEmbeddable = 2;
inline constexpr int kSkeletonDegreeCap = 30;

/// No more than two gadgets of one family embed with a fixed outer mapping,
/// over random triangular-hull point sets and, if given, an order-type file.
VerifyReport verify_gadget_lemma(const GadgetCatalog& catalog, GadgetFamily family,
                                 const VerifyOptions& options);

/// decide_embed_free / decide_embed_fixed against brute force on every
/// stacking program with at most options.max_size vertices.
VerifyReport verify_embedder(const VerifyOptions& options);

/// Random apex instances scanned over all candidates; more than one match is
/// a violation.
VerifyReport verify_apex(const VerifyOptions& options);

/// Degree separation on random members of the family at options.n.
VerifyReport verify_degrees(const GadgetCatalog& catalog, const VerifyOptions& options);

/// Catalog invariants, flip permutations and re-rooting at every face.
VerifyReport verify_catalog(const GadgetCatalog& catalog);

}  // namespace p3t
