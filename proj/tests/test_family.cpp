#include <doctest.h>

#include <random>
#include <set>

#include "p3t/family.hpp"
#include "p3t/iso.hpp"

using namespace p3t;

namespace {

const GadgetCatalog& catalog() {
  static const GadgetCatalog c = load_catalog(default_catalog_path());
  return c;
}

int degree(const Adjacency& a, VertexId v) { return static_cast<int>(a[v].size()); }

}  // namespace

TEST_CASE("family_parameters examples") {
  FamilySpec s = family_parameters(22);
  CHECK(s.F2 == 5);
  CHECK(std::array{s.k1, s.k2, s.k3} == std::array{1, 1, 1});
  CHECK(s.F == 10);
  CHECK(s.F1 == 1);

  s = family_parameters(26);
  CHECK(s.F2 == 0);
  CHECK(std::array{s.k1, s.k2, s.k3} == std::array{0, 1, 1});
  CHECK(s.F == 8);
  CHECK(s.F1 == 4);

  s = family_parameters(238);
  CHECK(s.F2 == 10);
  CHECK(std::array{s.k1, s.k2, s.k3} == std::array{8, 8, 8});
  CHECK(s.F == 52);
  CHECK(s.F1 == 38);

  CHECK_THROWS_WITH_AS(family_parameters(21), doctest::Contains("below construction range"), FamilyError);
}

TEST_CASE("family_parameters agree with a direct count of vertices") {
  for (int n = 22; n <= 400; ++n) {
    const FamilySpec s = family_parameters(n);
    // skeleton vertices + 5 per 8-vertex gadget + 2 per 5-vertex gadget
    CHECK(s.k_sum() + 4 + 5 * s.F1 + 2 * s.F2 == n);
    CHECK(s.F2 < 11);
    CHECK(s.F1 >= 0);
    CHECK(s.k1 <= s.k2);
    CHECK(s.k2 <= s.k3);
    CHECK(s.k3 <= s.k1 + 1);
    CHECK(static_cast<int>(s.f_order.size()) == s.F - 4);
  }
}

TEST_CASE("build_skeleton") {
  Skeleton k = build_skeleton(0, 0, 0);
  CHECK(k.vertex_count() == 4);
  CHECK(k.f_faces.empty());
  for (const Face& f : k.exceptional) CHECK((f == k.tree.outer() || k.tree.has_inner_face(f)));

  k = build_skeleton(1, 1, 1);
  CHECK(k.vertex_count() == 7);
  CHECK(k.tree.faces().size() == 10);
  CHECK(k.f_faces.size() == 6);
  CHECK(degree(k.tree.adjacency(), k.w) == 6);

  k = build_skeleton(8, 8, 8);
  CHECK(k.vertex_count() == 28);
  CHECK(k.tree.faces().size() == 52);
  CHECK(k.f_faces.size() == 48);
  CHECK(degree(k.tree.adjacency(), 2) == 8 + 8 + 3);
}

TEST_CASE("skeleton face classification") {
  for (auto [a, b, c] : {std::array{1, 1, 1}, std::array{0, 1, 1}, std::array{3, 4, 4}, std::array{2, 2, 3}}) {
    const Skeleton k = build_skeleton(a, b, c);
    std::set<Face> one, many;
    for (const Face& f : k.tree.faces()) {
      int outer = 0;
      for (VertexId v : f) outer += v < 3;
      (outer == 1 ? one : many).insert(sorted_face(f));
    }
    std::set<Face> stored;
    for (const Face& f : k.f_faces) {
      stored.insert(sorted_face(f));
      CHECK(f[2] < 3);  // outer vertex last
    }
    CHECK(stored == one);
    std::set<Face> exceptional;
    for (const Face& f : k.exceptional) exceptional.insert(sorted_face(f));
    CHECK(exceptional == many);
    const Adjacency adj = k.tree.adjacency();
    for (int v = 3; v < k.vertex_count(); ++v) CHECK(degree(adj, v) <= 6);
  }
}

TEST_CASE("family sizes") {
  CHECK(family_size(family_parameters(22)) == 1701);
  CHECK(family_size(family_parameters(26)) == 2401);
  const BigInt big = family_size(family_parameters(238));
  CHECK(big == boost::multiprecision::pow(BigInt(7), 38) * boost::multiprecision::pow(BigInt(3), 10));
  CHECK(big.str().size() == 37);
}

TEST_CASE("index decoding") {
  const FamilySpec s = family_parameters(22);
  const Assignment last = decode_index(s, 1700);
  // f_order lists the five 3-gadget faces first, then the single 7-gadget face
  CHECK(last.digits == std::vector<int>{2, 2, 2, 2, 2, 6});
  CHECK(decode_index(s, 0).digits == std::vector<int>(6, 0));
  CHECK_THROWS_AS(decode_index(s, 1701), FamilyError);
  // the 7-gadget digit is most significant
  CHECK(decode_index(s, 243).digits == std::vector<int>{0, 0, 0, 0, 0, 1});
  CHECK(decode_index(s, 1).digits == std::vector<int>{0, 0, 0, 0, 1, 0});

  const FamilySpec b = family_parameters(238);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    BigInt x = (BigInt(rng()) << 64 | rng()) % family_size(b);
    CHECK(encode_index(b, decode_index(b, x)) == x);
  }
}

TEST_CASE("members have n vertices and are 3-trees rooted at the outer face") {
  const FamilySpec s = family_parameters(22);
  const TriTree g0 = graph_at(s, catalog(), 0);
  CHECK(g0.size() == 22);
  CHECK(g0.faces().size() == 40);
  CHECK(g0.edge_count() == 60);
  const Recognition r = recognize(g0.adjacency(), g0.outer());
  CHECK(r.tree.size() == 22);

  const FamilySpec t = family_parameters(238);
  const TriTree big = graph_at(t, catalog(), family_size(t) - 1);
  CHECK(big.size() == 238);
  CHECK(big.faces().size() == 2 * 238 - 4);
}

TEST_CASE("enumeration yields distinct members in index order") {
  const FamilySpec s = family_parameters(22);
  FamilyEnumerator e(s, catalog());
  CHECK(e.size() == 1701);
  std::set<CanonicalForm> forms;
  std::uint64_t expected = 0;
  while (auto item = e.next()) {
    CHECK(item->first == expected);
    if (expected % 97 == 0) CHECK(item->second == graph_at(s, catalog(), expected));
    ++expected;
    forms.insert(canonical_form_colored(item->second.adjacency(),
                                        std::vector<int>(item->second.size(), 0)));
  }
  CHECK(expected == 1701);
  CHECK(forms.size() >= 284);
  CHECK_THROWS_WITH_AS(FamilyEnumerator(family_parameters(30), catalog()),
                       doctest::Contains("enumeration cap"), FamilyError);
}

TEST_CASE("degree_report at n = 238") {
  const FamilySpec s = family_parameters(238);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    const BigInt x = (BigInt(rng()) << 64 | rng()) % family_size(s);
    const TriTree g = graph_at(s, catalog(), x);
    const DegreeReport d = degree_report(g, s);
    const Adjacency adj = g.adjacency();
    for (int o = 0; o < 3; ++o) {
      CHECK(d.outer[o] == degree(adj, o));
      CHECK(d.outer[o] >= 35);
    }
    CHECK(d.max_skeleton_other <= 30);
    CHECK(d.max_gadget_internal <= 7);
  }
}

TEST_CASE("family_spec_json") {
  const std::string j = family_spec_json(family_parameters(22));
  CHECK(j.find("\"F2\":5") != std::string::npos);
  CHECK(j.find("\"family_size\":\"1701\"") != std::string::npos);
}
