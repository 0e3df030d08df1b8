#include "p3t/embed.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace p3t {

namespace {

void check_counts(const SplitCounts& counts) {
  for (int c : counts)
    if (c < 0) throw EmbedError("malformed counts: negative entry");
}

std::vector<std::pair<VertexId, VertexId>> edges_of(const TriTree& g) {
  std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {1, 2}, {0, 2}};
  for (const StackStep& s : g.program())
    for (VertexId p : s.parent) edges.emplace_back(p, s.vertex);
  return edges;
}

// Validates the shared preconditions and returns the hull triangle.
Triangle require_instance(const TriTree& g, const PointSet& X) {
  if (static_cast<int>(X.size()) != g.size()) {
    throw EmbedError("size mismatch: graph has " + std::to_string(g.size()) +
                     " vertices, point set has " + std::to_string(X.size()));
  }
  if (!X.is_general_position()) throw EmbedError("point set is not in general position");
  const auto hull = hull_triangle(X.points());
  if (!hull) throw EmbedError("hull is not a triangle");
  return *hull;
}

bool mapping_is_hull(const OuterMapping& m, const Triangle& hull) {
  std::array<Point, 3> a = m.images, b = hull;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Greedy over a flattened rooting. `at` holds the point index of every placed
// vertex; returns false at the first split with no matching apex.
bool place_splits(const std::vector<PreparedGraph::Split>& splits, int node,
                  std::array<int, 3> tri, const EmbedIndex& index, std::vector<int>& at) {
  const PreparedGraph::Split& s = splits[node];
  const auto p = index.apex(tri[0], tri[1], tri[2], s.counts);
  if (!p) return false;
  at[s.apex] = *p;
  const std::array<std::array<int, 3>, 3> kids{{{tri[1], tri[2], *p},
                                                {tri[0], tri[2], *p},
                                                {tri[0], tri[1], *p}}};
  for (int k = 0; k < 3; ++k) {
    if (s.child[k] >= 0 && !place_splits(splits, s.child[k], kids[k], index, at)) return false;
  }
  return true;
}

std::vector<PreparedGraph::Split> flatten(const FaceTree& ft) {
  std::vector<int> split_id(ft.nodes.size(), -1);
  std::vector<PreparedGraph::Split> splits;
  for (std::size_t i = 0; i < ft.nodes.size(); ++i) {
    if (!ft.is_leaf(static_cast<int>(i))) {
      split_id[i] = static_cast<int>(splits.size());
      splits.push_back({});
    }
  }
  for (std::size_t i = 0; i < ft.nodes.size(); ++i) {
    const int sid = split_id[i];
    if (sid < 0) continue;
    const auto& node = ft.nodes[i];
    auto& s = splits[sid];
    s.apex = static_cast<std::int16_t>(node.apex);
    for (int k = 0; k < 3; ++k) {
      s.child[k] = static_cast<std::int16_t>(split_id[node.children[k]]);
      s.counts[k] = ft.nodes[node.children[k]].interior_count;
    }
  }
  return splits;
}

std::optional<std::vector<int>> run_rooting(const std::vector<PreparedGraph::Split>& splits,
                                            int n, const std::array<int, 3>& outer_points,
                                            const EmbedIndex& index) {
  std::vector<int> at(n, -1);
  for (int i = 0; i < 3; ++i) at[i] = outer_points[i];
  if (!splits.empty() && !place_splits(splits, 0, outer_points, index, at)) return std::nullopt;
  return at;
}

constexpr std::array<std::array<int, 3>, 6> kPermutations{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

std::vector<Point> matching_apexes(std::span<const Point> X, const Triangle& t,
                                   const SplitCounts& counts) {
  check_counts(counts);
  std::vector<Point> candidates;
  for (const Point& p : X)
    if (strictly_inside(p, t)) candidates.push_back(p);
  if (counts[0] + counts[1] + counts[2] + 1 != static_cast<int>(candidates.size())) {
    throw EmbedError("malformed counts: sum does not match the candidate count");
  }
  std::vector<Point> found;
  for (const Point& p : candidates) {
    const std::array<Triangle, 3> sub{{{t[1], t[2], p}, {t[0], t[2], p}, {t[0], t[1], p}}};
    std::array<int, 3> got{};
    for (const Point& q : candidates) {
      if (q == p) continue;
      for (int k = 0; k < 3; ++k)
        if (strictly_inside(q, sub[k])) ++got[k];
    }
    if (got == counts) found.push_back(p);
  }
  return found;
}

std::optional<Point> place_apex(std::span<const Point> X, const Triangle& t,
                                const SplitCounts& counts) {
  const auto found = matching_apexes(X, t, counts);
  if (found.size() > 1) throw std::logic_error("two apex candidates match the same counts");
  if (found.empty()) return std::nullopt;
  return found.front();
}

EmbedIndex::EmbedIndex(const PointSet& X) : n_(static_cast<int>(X.size())), pts_(X.points()) {
  if (n_ > kMaxPoints) throw EmbedError("point set exceeds the indexed decider cap");
  if (!X.is_general_position()) throw EmbedError("point set is not in general position");
  const std::size_t cube = static_cast<std::size_t>(n_) * n_ * n_;
  orient_.assign(cube, 0);
  content_.assign(cube, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        orient_[at(i, j, k)] = static_cast<std::int8_t>(orient(pts_[i], pts_[j], pts_[k]));

  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k) {
        std::int16_t c = 0;
        for (int p = 0; p < n_; ++p) c += inside(p, i, j, k) ? 1 : 0;
        for (const auto& [u, v, w] : {std::array{i, j, k}, std::array{i, k, j}, std::array{j, i, k},
                                     std::array{j, k, i}, std::array{k, i, j}, std::array{k, j, i}})
          content_[at(u, v, w)] = c;
      }

  if (n_ >= 3) {
    if (const auto hull = hull_triangle(pts_)) {
      for (int h = 0; h < 3; ++h) hull_[h] = index_of((*hull)[h]);
    }
  }
}

int EmbedIndex::index_of(Point p) const {
  const auto it = std::find(pts_.begin(), pts_.end(), p);
  if (it == pts_.end()) throw EmbedError("point " + to_string(p) + " not in the point set");
  return static_cast<int>(it - pts_.begin());
}

bool EmbedIndex::inside(int p, int i, int j, int k) const {
  const std::int8_t s = orient_[at(i, j, k)];
  return s != 0 && orient_[at(i, j, p)] == s && orient_[at(j, k, p)] == s &&
         orient_[at(k, i, p)] == s;
}

std::optional<int> EmbedIndex::apex(int i, int j, int k, const SplitCounts& counts) const {
  for (int p = 0; p < n_; ++p) {
    if (content_[at(j, k, p)] != counts[0] || content_[at(i, k, p)] != counts[1] ||
        content_[at(i, j, p)] != counts[2])
      continue;
    if (inside(p, i, j, k)) return p;
  }
  return std::nullopt;
}

PreparedGraph::PreparedGraph(const TriTree& g) : n_(g.size()) {
  const Adjacency adj = g.adjacency();
  for (const Face& f : g.faces()) {
    Recognition r = recognize(adj, f);
    std::vector<Split> splits = flatten(face_tree(r.tree));
    // Translate apex ids back to the source graph.
    for (Split& s : splits) s.apex = static_cast<std::int16_t>(r.original[s.apex]);
    rootings_.push_back({f, std::move(splits)});
  }
}

std::optional<EmbedWitness> decide_embed_fixed(const TriTree& g, const EmbedIndex& index,
                                               const std::array<int, 3>& outer_points) {
  const auto at = run_rooting(flatten(face_tree(g)), g.size(), outer_points, index);
  if (!at) return std::nullopt;
  EmbedWitness w;
  for (int p : *at) w.position.push_back(index.point(p));
  return w;
}

std::optional<EmbedWitness> decide_embed_fixed(const TriTree& g, const PointSet& X,
                                               const OuterMapping& m) {
  const Triangle hull = require_instance(g, X);
  if (!mapping_is_hull(m, hull)) throw EmbedError("mapping is not the hull");
  const EmbedIndex index(X);
  std::array<int, 3> outer{};
  for (int i = 0; i < 3; ++i) outer[i] = index.index_of(m.images[i]);
  return decide_embed_fixed(g, index, outer);
}

std::optional<FreeEmbedding> decide_embed_free(const PreparedGraph& g, const EmbedIndex& index) {
  if (!index.has_triangular_hull()) return std::nullopt;
  const auto& hull = index.hull();
  for (const auto& rooting : g.rootings()) {
    // Vertex ids inside a rooting refer to the source graph; the root face
    // corners are the rooting's face.
    for (const auto& perm : kPermutations) {
      std::vector<int> at(g.size(), -1);
      std::array<int, 3> tri{};
      for (int i = 0; i < 3; ++i) {
        tri[i] = hull[perm[i]];
        at[rooting.face[i]] = tri[i];
      }
      if (!rooting.splits.empty() && !place_splits(rooting.splits, 0, tri, index, at)) continue;
      FreeEmbedding out;
      out.face = rooting.face;
      for (int i = 0; i < 3; ++i) out.mapping.images[i] = index.point(tri[i]);
      for (int p : at) out.witness.position.push_back(index.point(p));
      return out;
    }
  }
  return std::nullopt;
}

bool embeddable_free(const PreparedGraph& g, const EmbedIndex& index) {
  if (!index.has_triangular_hull()) return false;
  const auto& hull = index.hull();
  std::vector<int> at(g.size(), -1);
  for (const auto& rooting : g.rootings()) {
    for (const auto& perm : kPermutations) {
      const std::array<int, 3> tri{hull[perm[0]], hull[perm[1]], hull[perm[2]]};
      if (rooting.splits.empty() || place_splits(rooting.splits, 0, tri, index, at)) return true;
    }
  }
  return false;
}

std::optional<FreeEmbedding> decide_embed_free(const TriTree& g, const PointSet& X) {
  require_instance(g, X);
  const EmbedIndex index(X);
  return decide_embed_free(PreparedGraph(g), index);
}

namespace {

bool brute_search(const TriTree& g, const PointSet& X, const std::optional<OuterMapping>& m) {
  const int n = g.size();
  if (static_cast<int>(X.size()) != n) throw EmbedError("size mismatch");
  if (n > 9) throw EmbedError("brute force is capped at 9 points");
  const auto edges = edges_of(g);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (m) {
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) ok = X[perm[i]] == m->images[i];
      if (!ok) continue;
    }
    bool plane = true;
    for (std::size_t e = 0; e < edges.size() && plane; ++e) {
      const Segment s1{X[perm[edges[e].first]], X[perm[edges[e].second]]};
      for (std::size_t f = e + 1; f < edges.size(); ++f) {
        const Segment s2{X[perm[edges[f].first]], X[perm[edges[f].second]]};
        if (segments_cross(s1, s2)) {
          plane = false;
          break;
        }
      }
    }
    if (plane) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

bool brute_embed(const TriTree& g, const PointSet& X) { return brute_search(g, X, std::nullopt); }

bool brute_embed_fixed(const TriTree& g, const PointSet& X, const OuterMapping& m) {
  return brute_search(g, X, m);
}

bool is_plane_drawing(const TriTree& g, const EmbedWitness& w) {
  if (static_cast<int>(w.position.size()) != g.size()) return false;
  std::set<Point> distinct(w.position.begin(), w.position.end());
  if (distinct.size() != w.position.size()) return false;
  const auto edges = edges_of(g);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Segment s1{w.position[edges[e].first], w.position[edges[e].second]};
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      const Segment s2{w.position[edges[f].first], w.position[edges[f].second]};
      if (segments_cross(s1, s2)) return false;
    }
  }
  return true;
}

LemmaCheck gadget_lemma_check(std::span<const TriTree> family, const PointSet& X,
                              const OuterMapping& m) {
  LemmaCheck out;
  if (family.empty()) return out;
  const Triangle hull = require_instance(family.front(), X);
  if (!mapping_is_hull(m, hull)) throw EmbedError("mapping is not the hull");
  const EmbedIndex index(X);
  std::array<int, 3> outer{};
  for (int i = 0; i < 3; ++i) outer[i] = index.index_of(m.images[i]);
  for (const TriTree& g : family) {
    if (g.size() != index.size()) throw EmbedError("size mismatch");
    const bool ok = decide_embed_fixed(g, index, outer).has_value();
    out.embeddable.push_back(ok);
    out.count += ok ? 1 : 0;
  }
  return out;
}

std::array<OuterMapping, 6> hull_mappings(const Triangle& hull) {
  std::array<OuterMapping, 6> out;
  for (std::size_t i = 0; i < kPermutations.size(); ++i)
    for (int k = 0; k < 3; ++k) out[i].images[k] = hull[kPermutations[i][k]];
  return out;
}

SimultaneousResult simultaneous_count(std::span<const PreparedGraph> members, const PointSet& X) {
  SimultaneousResult out;
  if (members.empty()) return out;
  const EmbedIndex index(X);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].size() != index.size()) throw EmbedError("size mismatch");
    if (embeddable_free(members[i], index)) {
      ++out.count;
      out.embeddable.push_back(i);
    }
  }
  return out;
}

std::string render_svg(const TriTree& g, const EmbedWitness& w, int canvas) {
  if (static_cast<int>(w.position.size()) != g.size()) throw EmbedError("witness size mismatch");
  std::int64_t lo_x = w.position[0].x, hi_x = lo_x, lo_y = w.position[0].y, hi_y = lo_y;
  for (const Point& p : w.position) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double margin = 20.0;
  const double span = static_cast<double>(std::max<std::int64_t>({hi_x - lo_x, hi_y - lo_y, 1}));
  const double scale = (canvas - 2 * margin) / span;
  auto sx = [&](const Point& p) { return margin + (p.x - lo_x) * scale; };
  auto sy = [&](const Point& p) { return canvas - margin - (p.y - lo_y) * scale; };

  std::ostringstream out;
  out.precision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas << "\" height=\"" << canvas
      << "\" viewBox=\"0 0 " << canvas << ' ' << canvas << "\">\n";
  out << "<g stroke=\"#334\" stroke-width=\"1\">\n";
  for (const auto& [u, v] : edges_of(g)) {
    out << "<line x1=\"" << sx(w.position[u]) << "\" y1=\"" << sy(w.position[u]) << "\" x2=\""
        << sx(w.position[v]) << "\" y2=\"" << sy(w.position[v]) << "\"/>\n";
  }
  out << "</g>\n<g fill=\"#c33\">\n";
  for (VertexId v = 0; v < g.size(); ++v) {
    out << "<circle cx=\"" << sx(w.position[v]) << "\" cy=\"" << sy(w.position[v])
        << "\" r=\"3\"><title>" << g.label(v) << "</title></circle>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace p3t
