#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace p3t {

using VertexId = int;
using Face = std::array<VertexId, 3>;
using Adjacency = std::vector<std::vector<VertexId>>;

class TriTreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Face sorted_face(Face f);

/// One face split: `vertex` is inserted into `parent` and joined to its corners.
struct StackStep {
  VertexId vertex = 0;
  Face parent{};
};

/// A planar 3-tree stored as its stacking program. Vertices 0, 1, 2 bound the
/// outer face; program vertices follow in insertion order.
///
/// A bare triangle exposes a single stackable face. Splitting face (p, q, r)
/// with apex v replaces it by (q, r, v), (p, r, v), (p, q, v), in that order,
/// so child i is the face opposite corner i.
class TriTree {
 public:
  static TriTree new_root(const std::array<std::string, 3>& labels = {"a", "b", "c"});

  /// Throws TriTreeError("face not present") for unknown or already split faces.
  VertexId stack(const Face& face, std::string label = {});

  int size() const { return static_cast<int>(labels_.size()); }
  static constexpr Face outer() { return {0, 1, 2}; }
  const std::vector<StackStep>& program() const { return program_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> find_label(const std::string& name) const;

  /// Current stackable faces, in creation order.
  std::vector<Face> inner_faces() const;
  /// All 2n - 4 faces: the outer face first, then the inner faces.
  std::vector<Face> faces() const;
  bool has_inner_face(const Face& f) const;

  Adjacency adjacency() const;
  int edge_count() const;

  /// Rebuild with outer vertex i renamed to perm[i]; labels stay positional.
  TriTree permute_outer(const std::array<VertexId, 3>& perm) const;

  friend bool operator==(const TriTree& a, const TriTree& b);

 private:
  struct FaceSlot {
    Face face;
    bool alive = true;
  };
  std::vector<std::string> labels_;
  std::vector<StackStep> program_;
  std::vector<FaceSlot> slots_;
  std::map<Face, std::size_t> live_;  // sorted triple -> slot
};

/// Split hierarchy of a TriTree. Node 0 is the outer face; every split node
/// has three children ordered as in TriTree::stack.
struct FaceTree {
  struct Node {
    Face face{};
    VertexId apex = -1;               // -1 for leaves
    std::array<int, 3> children{-1, -1, -1};
    int interior_count = 0;
  };
  std::vector<Node> nodes;

  const Node& root() const { return nodes.front(); }
  bool is_leaf(int i) const { return nodes[i].apex < 0; }
  std::array<int, 3> child_counts(int i) const;
};

FaceTree face_tree(const TriTree& t);

/// A TriTree rebuilt from a plain graph, plus the original id of each vertex.
struct Recognition {
  TriTree tree;
  std::vector<VertexId> original;
};

/// Peels degree-3 vertices outside `outer` (lowest id first) and replays the
/// removals in reverse. Throws TriTreeError("not a planar 3-tree on this root").
Recognition recognize(const Adjacency& adjacency, const Face& outer,
                      const std::vector<std::string>& labels = {});

/// Every stacking program on n vertices (not up to isomorphism): each step
/// picks one of the current inner faces, in creation order.
std::vector<TriTree> all_stacking_programs(int n);

/// Textual stacking format: "outer: a b c" then one "v: p q r" line per split.
std::string to_stacking_text(const TriTree& t);
TriTree parse_stacking_text(const std::string& text);

}  // namespace p3t
