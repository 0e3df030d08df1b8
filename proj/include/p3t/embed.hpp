#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "p3t/geom.hpp"
#include "p3t/tritree.hpp"

namespace p3t {

class EmbedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Images of the outer vertices (a, b, c) of a TriTree.
struct OuterMapping {
  std::array<Point, 3> images{};

  friend bool operator==(const OuterMapping&, const OuterMapping&) = default;
};

/// Point assigned to each vertex, indexed by vertex id.
struct EmbedWitness {
  std::vector<Point> position;
};

/// Child interior counts of a split, in TriTree child order: counts[i] is the
/// number of vertices strictly inside the child face opposite corner i.
using SplitCounts = std::array<int, 3>;

/// Every point p of X strictly inside t whose three sub-triangles opposite
/// t[0], t[1], t[2] hold exactly counts[0..2] of the other candidates.
std::vector<Point> matching_apexes(std::span<const Point> X, const Triangle& t,
                                   const SplitCounts& counts);

/// Throws EmbedError on malformed counts and std::logic_error if two
/// candidates match (which would contradict apex uniqueness).
std::optional<Point> place_apex(std::span<const Point> X, const Triangle& t,
                                const SplitCounts& counts);

/// Precomputed orientation and triangle-content tables for one point set.
/// Immutable after construction.
class EmbedIndex {
 public:
  static constexpr int kMaxPoints = 128;

  explicit EmbedIndex(const PointSet& X);

  int size() const { return n_; }
  const Point& point(int i) const { return pts_[i]; }
  int index_of(Point p) const;
  const std::array<int, 3>& hull() const { return hull_; }
  bool has_triangular_hull() const { return hull_[0] >= 0; }

  int inside_count(int i, int j, int k) const { return content_[at(i, j, k)]; }
  bool inside(int p, int i, int j, int k) const;
  /// First interior point whose sub-triangles opposite i, j, k hold `counts`.
  std::optional<int> apex(int i, int j, int k, const SplitCounts& counts) const;

 private:
  std::size_t at(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }

  int n_ = 0;
  std::vector<Point> pts_;
  std::vector<std::int8_t> orient_;
  std::vector<std::int16_t> content_;
  std::array<int, 3> hull_{-1, -1, -1};
};

/// All 2n - 4 rootings of a 3-tree, each flattened to its split nodes.
class PreparedGraph {
 public:
  struct Split {
    std::int16_t apex;
    std::array<std::int16_t, 3> child;  // -1 when that child face is empty
    SplitCounts counts;
  };
  struct Rooting {
    Face face;                          // in the source graph's vertex ids
    std::vector<Split> splits;          // splits[0] is the root split
  };

  explicit PreparedGraph(const TriTree& g);

  int size() const { return n_; }
  const std::vector<Rooting>& rootings() const { return rootings_; }

 private:
  int n_ = 0;
  std::vector<Rooting> rootings_;
};

struct FreeEmbedding {
  Face face{};             // face of g drawn on the hull
  OuterMapping mapping;    // images of face[0], face[1], face[2]
  EmbedWitness witness;
};

/// Greedy apex placement down the face tree; nullopt at the first failure.
/// Throws EmbedError for size mismatch, non-general position, a non-triangular
/// hull, or a mapping whose images are not the hull vertices.
std::optional<EmbedWitness> decide_embed_fixed(const TriTree& g, const PointSet& X,
                                               const OuterMapping& m);

/// Tries every face in creation order and the six hull bijections in
/// lexicographic order; returns the first success.
std::optional<FreeEmbedding> decide_embed_free(const TriTree& g, const PointSet& X);

/// Indexed variants used by batch searches. Preconditions are not rechecked.
std::optional<EmbedWitness> decide_embed_fixed(const TriTree& g, const EmbedIndex& index,
                                               const std::array<int, 3>& outer_points);
std::optional<FreeEmbedding> decide_embed_free(const PreparedGraph& g, const EmbedIndex& index);
bool embeddable_free(const PreparedGraph& g, const EmbedIndex& index);

/// Exhaustive search over all bijections V -> X. Throws EmbedError above 9 points.
bool brute_embed(const TriTree& g, const PointSet& X);
/// Same, restricted to bijections extending the outer mapping.
bool brute_embed_fixed(const TriTree& g, const PointSet& X, const OuterMapping& m);

/// Distinct points and no two edges crossing.
bool is_plane_drawing(const TriTree& g, const EmbedWitness& w);

struct LemmaCheck {
  int count = 0;
  std::vector<bool> embeddable;
};

/// How many of the rooted trees embed on X with their outer face fixed by m.
LemmaCheck gadget_lemma_check(std::span<const TriTree> family, const PointSet& X,
                              const OuterMapping& m);

/// The six bijections from (a, b, c) onto the hull, lexicographic in the
/// permutation of the hull triangle.
std::array<OuterMapping, 6> hull_mappings(const Triangle& hull);

struct SimultaneousResult {
  std::size_t count = 0;
  std::vector<std::size_t> embeddable;  // positions in the input sequence
};

SimultaneousResult simultaneous_count(std::span<const PreparedGraph> members, const PointSet& X);

std::string render_svg(const TriTree& g, const EmbedWitness& w, int canvas = 600);

}  // namespace p3t
