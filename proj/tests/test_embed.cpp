#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "p3t/embed.hpp"
#include "p3t/family.hpp"
#include "p3t/pointsets.hpp"

using namespace p3t;

namespace {

const Triangle kBig{Point{0, 0}, Point{12, 0}, Point{0, 12}};

TriTree five(const Face& second) {
  TriTree t = TriTree::new_root();
  t.stack({0, 1, 2}, "d");
  t.stack(second, "e");
  return t;
}

const PointSet kX(std::vector<Point>{{0, 0}, {12, 0}, {0, 12}, {4, 4}, {1, 2}});
const OuterMapping kM{{Point{0, 0}, Point{12, 0}, Point{0, 12}}};

/// Candidates matching `counts`, counted with the rational oracle.
std::vector<Point> brute_apexes(const std::vector<Point>& X, const Triangle& t, const SplitCounts& counts) {
  std::vector<Point> out;
  for (Point p : X) {
    if (!oracle::inside(p, t[0], t[1], t[2])) continue;
    SplitCounts c{};
    for (Point q : X) {
      if (q == p) continue;
      if (oracle::inside(q, p, t[1], t[2])) ++c[0];
      if (oracle::inside(q, t[0], p, t[2])) ++c[1];
      if (oracle::inside(q, t[0], t[1], p)) ++c[2];
    }
    if (c == counts) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("place_apex") {
  CHECK(place_apex(std::vector<Point>{{1, 1}}, Triangle{Point{0, 0}, Point{10, 0}, Point{0, 10}}, {0, 0, 0}) ==
        Point{1, 1});
  const std::vector<Point> X{{1, 2}, {2, 1}, {4, 4}};
  CHECK(place_apex(X, kBig, {0, 1, 1}) == Point{4, 4});
  CHECK_FALSE(place_apex(X, kBig, {2, 0, 0}));
  CHECK_THROWS_AS(place_apex(X, kBig, {-1, 2, 1}), EmbedError);
  CHECK_THROWS_AS(place_apex(X, kBig, {1, 1, 1}), EmbedError);
}

TEST_CASE("matching_apexes agrees with the rational oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + trial % 12;
    const PointSet S = sample({m + 3, 60, rng(), HullMode::triangular});
    const Triangle t{S[0], S[1], S[2]};
    const std::vector<Point> interior(S.points().begin() + 3, S.points().end());
    for (int a = 0; a < m; ++a)
      for (int b = 0; a + b < m; ++b) {
        const SplitCounts c{a, b, m - 1 - a - b};
        auto got = matching_apexes(interior, t, c);
        auto want = brute_apexes(interior, t, c);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        CHECK(got.size() <= 1);
      }
  }
}

TEST_CASE("decide_embed_fixed examples") {
  const auto w = decide_embed_fixed(five({0, 2, 3}), kX, kM);
  REQUIRE(w);
  CHECK(w->position[3] == Point{4, 4});
  CHECK(w->position[4] == Point{1, 2});
  CHECK(is_plane_drawing(five({0, 2, 3}), *w));
  CHECK(brute_embed_fixed(five({0, 2, 3}), kX, kM));

  CHECK_FALSE(decide_embed_fixed(five({0, 1, 3}), kX, kM));
  CHECK_FALSE(brute_embed_fixed(five({0, 1, 3}), kX, kM));
}

TEST_CASE("decide_embed_fixed preconditions") {
  const OuterMapping wrong{{Point{0, 0}, Point{12, 0}, Point{4, 4}}};
  CHECK_THROWS_AS(decide_embed_fixed(five({0, 2, 3}), kX, wrong), EmbedError);
  const PointSet small(std::vector<Point>{{0, 0}, {12, 0}, {0, 12}, {4, 4}});
  CHECK_THROWS_AS(decide_embed_fixed(five({0, 2, 3}), small, kM), EmbedError);
  const PointSet square(std::vector<Point>{{0, 0}, {10, 0}, {10, 10}, {0, 10}, {3, 4}});
  CHECK_THROWS_AS(decide_embed_fixed(five({0, 2, 3}), square, kM), EmbedError);
}

TEST_CASE("decide_embed_free") {
  const TriTree tri = TriTree::new_root();
  const PointSet three(std::vector<Point>{{0, 0}, {5, 0}, {0, 5}});
  CHECK(decide_embed_free(tri, three));

  const TriTree neg = five({0, 1, 3});
  const auto e = decide_embed_free(neg, kX);
  CHECK(e.has_value() == brute_embed(neg, kX));
  if (e) CHECK(is_plane_drawing(neg, e->witness));
}

TEST_CASE("brute_embed on K4") {
  TriTree k4 = TriTree::new_root();
  k4.stack({0, 1, 2});
  CHECK(brute_embed(k4, PointSet(std::vector<Point>{{0, 0}, {9, 0}, {0, 9}, {2, 3}})));
  CHECK_FALSE(brute_embed(k4, PointSet(std::vector<Point>{{0, 0}, {9, 0}, {9, 9}, {0, 9}})));
  const auto w = decide_embed_free(k4, PointSet(std::vector<Point>{{0, 0}, {9, 0}, {0, 9}, {2, 3}}));
  REQUIRE(w);
  CHECK(w->witness.position[3] == Point{2, 3});
}

TEST_CASE("fixed embeddability ignores the order of the points") {
  std::mt19937_64 rng(12);
  const auto programs = all_stacking_programs(6);
  for (int trial = 0; trial < 60; ++trial) {
    const PointSet X = sample({6, 40, rng(), HullMode::triangular});
    std::vector<Point> pts = X.points();
    std::shuffle(pts.begin(), pts.end(), rng);
    const PointSet Y(pts);
    const auto maps = hull_mappings(*hull_triangle(X.points()));
    const TriTree& g = programs[trial % programs.size()];
    for (const auto& m : maps) CHECK(decide_embed_fixed(g, X, m).has_value() == decide_embed_fixed(g, Y, m).has_value());
  }
}

TEST_CASE("free decision equals per-face fixed decisions on a family member") {
  const GadgetCatalog catalog = load_catalog(default_catalog_path());
  const FamilySpec spec = family_parameters(22);
  const TriTree g = graph_at(spec, catalog, 123);
  const PreparedGraph prepared(g);
  CHECK(prepared.rootings().size() == 40);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PointSet X = sample({22, 1000, seed, HullMode::triangular});
    const EmbedIndex index(X);
    bool any = false;
    for (const Face& f : g.faces()) {
      const Recognition r = recognize(g.adjacency(), f);
      for (const auto& m : hull_mappings(*hull_triangle(X.points()))) {
        if (auto w = decide_embed_fixed(r.tree, X, m)) {
          any = true;
          CHECK(is_plane_drawing(r.tree, *w));
        }
      }
    }
    const auto e = decide_embed_free(prepared, index);
    CHECK(e.has_value() == any);
    if (e) {
      CHECK(e->witness.position.size() == 22);
      CHECK(is_plane_drawing(g, e->witness));
    }
  }
}

TEST_CASE("is_plane_drawing rejects crossings and repeated points") {
  TriTree k4 = TriTree::new_root();
  k4.stack({0, 1, 2});
  CHECK(is_plane_drawing(k4, {{{0, 0}, {9, 0}, {0, 9}, {2, 3}}}));
  CHECK_FALSE(is_plane_drawing(k4, {{{0, 0}, {9, 0}, {9, 9}, {0, 9}}}));
  CHECK_FALSE(is_plane_drawing(k4, {{{0, 0}, {9, 0}, {0, 9}, {0, 9}}}));
}

TEST_CASE("simultaneous_count") {
  const TriTree tri = TriTree::new_root();
  const PointSet three(std::vector<Point>{{0, 0}, {5, 0}, {0, 5}});
  const std::vector<PreparedGraph> one{PreparedGraph(tri)};
  CHECK(simultaneous_count(one, three).count == 1);
  CHECK(simultaneous_count(std::span<const PreparedGraph>{}, three).count == 0);
}

TEST_CASE("render_svg draws every edge") {
  TriTree k4 = TriTree::new_root();
  k4.stack({0, 1, 2});
  const std::string svg = render_svg(k4, {{{0, 0}, {9, 0}, {0, 9}, {2, 3}}});
  std::size_t lines = 0;
  for (std::size_t at = svg.find("<line"); at != std::string::npos; at = svg.find("<line", at + 1)) ++lines;
  CHECK(lines == 6);
}
