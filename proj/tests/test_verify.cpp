#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "p3t/conflict.hpp"
#include "p3t/verify.hpp"

using namespace p3t;

namespace {

const GadgetCatalog& catalog() {
  static const GadgetCatalog c = load_catalog(default_catalog_path());
  return c;
}

}  // namespace

TEST_CASE("lemma suites report the common schema") {
  VerifyOptions o;
  o.trials = 50;
  const VerifyReport r = verify_gadget_lemma(catalog(), GadgetFamily::three, o);
  CHECK(r.ok());
  CHECK(r.max_embeddable <= 2);
  const std::string j = r.to_json();
  CHECK(j.rfind("{\"check\":\"lemma7\",\"n\":5,\"trials\":50,\"skipped\":0,\"violations\":0,", 0) == 0);
}

TEST_CASE("order-type records: convex position is skipped, degenerate is invalid") {
  const auto path = (std::filesystem::temp_directory_path() / "p3t_lemma7.bin").string();
  {
    std::ofstream out(path, std::ios::binary);
    const unsigned char recs[] = {
        0, 0, 20, 0, 0, 20, 5, 5, 3, 9,         // triangular hull
        0, 0, 20, 0, 25, 15, 10, 25, 0, 12,     // convex pentagon
        0, 0, 20, 0, 0, 20, 5, 5, 10, 10};      // collinear triple
    out.write(reinterpret_cast<const char*>(recs), sizeof recs);
  }
  VerifyOptions o;
  o.trials = 0;
  o.otypes = path;
  const VerifyReport r = verify_gadget_lemma(catalog(), GadgetFamily::three, o);
  CHECK(r.trials == 3);
  CHECK(r.skipped == 1);
  CHECK(r.violations == 0);
  CHECK(r.invalid_records == 1);
  CHECK_FALSE(r.ok());
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0]["record"] == 2);
}

TEST_CASE("embedder suite agrees with brute force") {
  VerifyOptions o;
  o.max_size = 5;
  o.sets = 10;
  const VerifyReport r = verify_embedder(o);
  CHECK(r.ok());
  CHECK(r.details["agreement"].get<double>() == 1.0);
}

TEST_CASE("apex and degree suites") {
  VerifyOptions o;
  o.trials = 200;
  o.max_interior = 20;
  CHECK(verify_apex(o).ok());
  o.trials = 5;
  CHECK(verify_degrees(catalog(), o).ok());
  CHECK(verify_catalog(catalog()).ok());
}

TEST_CASE("conflict search is deterministic and bounded") {
  ConflictConfig c;
  c.trials = 3;
  c.seed = 7;
  const ConflictReport a = conflict_search(c, catalog());
  const ConflictReport b = conflict_search(c, catalog());
  CHECK(conflict_json(a) == conflict_json(b));
  CHECK(a.partition_bound == 59904);
  CHECK(a.max_embeddable <= 59904);
  c.trials = 0;
  const ConflictReport empty = conflict_search(c, catalog());
  CHECK(empty.per_trial.empty());
  CHECK_FALSE(empty.argmax_trial);
}
