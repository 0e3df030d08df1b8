#include "p3t/tritree.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace p3t {

Face sorted_face(Face f) {
  std::sort(f.begin(), f.end());
  return f;
}

TriTree TriTree::new_root(const std::array<std::string, 3>& labels) {
  TriTree t;
  t.labels_.assign(labels.begin(), labels.end());
  t.slots_.push_back({outer(), true});
  t.live_.emplace(outer(), 0);
  return t;
}

VertexId TriTree::stack(const Face& face, std::string label) {
  const auto it = live_.find(sorted_face(face));
  if (it == live_.end()) {
    throw TriTreeError("face not present");
  }
  const std::size_t slot = it->second;
  const Face f = slots_[slot].face;
  slots_[slot].alive = false;
  live_.erase(it);

  const VertexId v = size();
  if (label.empty()) label = std::to_string(v);
  labels_.push_back(std::move(label));
  program_.push_back({v, f});

  for (const Face& child : {Face{f[1], f[2], v}, Face{f[0], f[2], v}, Face{f[0], f[1], v}}) {
    live_.emplace(sorted_face(child), slots_.size());
    slots_.push_back({child, true});
  }
  return v;
}

std::optional<VertexId> TriTree::find_label(const std::string& name) const {
  const auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::vector<Face> TriTree::inner_faces() const {
  std::vector<Face> out;
  out.reserve(live_.size());
  for (const FaceSlot& s : slots_)
    if (s.alive) out.push_back(s.face);
  return out;
}

std::vector<Face> TriTree::faces() const {
  std::vector<Face> out{outer()};
  for (const FaceSlot& s : slots_)
    if (s.alive) out.push_back(s.face);
  return out;
}

bool TriTree::has_inner_face(const Face& f) const {
  return live_.contains(sorted_face(f));
}

Adjacency TriTree::adjacency() const {
  Adjacency adj(size());
  auto link = [&](VertexId u, VertexId v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  link(0, 1);
  link(1, 2);
  link(0, 2);
  for (const StackStep& s : program_)
    for (VertexId p : s.parent) link(s.vertex, p);
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

int TriTree::edge_count() const { return 3 + 3 * static_cast<int>(program_.size()); }

TriTree TriTree::permute_outer(const std::array<VertexId, 3>& perm) const {
  auto map = [&](VertexId v) { return v < 3 ? perm[v] : v; };
  TriTree t = new_root({labels_[0], labels_[1], labels_[2]});
  for (const StackStep& s : program_) {
    t.stack({map(s.parent[0]), map(s.parent[1]), map(s.parent[2])}, labels_[s.vertex]);
  }
  return t;
}

bool operator==(const TriTree& a, const TriTree& b) {
  if (a.labels_ != b.labels_ || a.program_.size() != b.program_.size()) return false;
  for (std::size_t i = 0; i < a.program_.size(); ++i) {
    if (a.program_[i].vertex != b.program_[i].vertex ||
        sorted_face(a.program_[i].parent) != sorted_face(b.program_[i].parent))
      return false;
  }
  return true;
}

std::array<int, 3> FaceTree::child_counts(int i) const {
  const Node& node = nodes[i];
  std::array<int, 3> counts{};
  for (int k = 0; k < 3; ++k) counts[k] = nodes[node.children[k]].interior_count;
  return counts;
}

FaceTree face_tree(const TriTree& t) {
  FaceTree ft;
  ft.nodes.reserve(1 + 3 * t.program().size());
  ft.nodes.push_back({TriTree::outer(), -1, {-1, -1, -1}, 0});
  std::map<Face, int> leaf_of{{sorted_face(TriTree::outer()), 0}};

  for (const StackStep& s : t.program()) {
    const auto it = leaf_of.find(sorted_face(s.parent));
    if (it == leaf_of.end()) throw TriTreeError("face not present");
    const int idx = it->second;
    leaf_of.erase(it);
    const Face f = ft.nodes[idx].face;
    ft.nodes[idx].apex = s.vertex;
    const std::array<Face, 3> kids{Face{f[1], f[2], s.vertex}, Face{f[0], f[2], s.vertex},
                                   Face{f[0], f[1], s.vertex}};
    for (int k = 0; k < 3; ++k) {
      const int child = static_cast<int>(ft.nodes.size());
      ft.nodes[idx].children[k] = child;
      ft.nodes.push_back({kids[k], -1, {-1, -1, -1}, 0});
      leaf_of.emplace(sorted_face(kids[k]), child);
    }
  }

  // Children always follow their parent, so a reverse sweep is a post-order.
  for (int i = static_cast<int>(ft.nodes.size()) - 1; i >= 0; --i) {
    auto& node = ft.nodes[i];
    if (node.apex < 0) continue;
    node.interior_count = 1;
    for (int c : node.children) node.interior_count += ft.nodes[c].interior_count;
  }
  return ft;
}

Recognition recognize(const Adjacency& adjacency, const Face& outer,
                      const std::vector<std::string>& labels) {
  const int n = static_cast<int>(adjacency.size());
  auto fail = [] { return TriTreeError("not a planar 3-tree on this root"); };
  if (n < 3) throw fail();
  for (VertexId v : outer)
    if (v < 0 || v >= n) throw fail();
  if (outer[0] == outer[1] || outer[1] == outer[2] || outer[0] == outer[2]) throw fail();

  std::vector<std::set<VertexId>> adj(n);
  for (int v = 0; v < n; ++v) {
    for (VertexId u : adjacency[v]) {
      if (u < 0 || u >= n || u == v) throw fail();
      adj[v].insert(u);
    }
  }
  for (int v = 0; v < n; ++v)
    for (VertexId u : adj[v])
      if (!adj[u].contains(v)) throw fail();

  std::vector<bool> is_outer(n, false);
  for (VertexId v : outer) is_outer[v] = true;

  auto peelable = [&](VertexId v) {
    if (is_outer[v] || adj[v].size() != 3) return false;
    const std::vector<VertexId> nb(adj[v].begin(), adj[v].end());
    return adj[nb[0]].contains(nb[1]) && adj[nb[0]].contains(nb[2]) &&
           adj[nb[1]].contains(nb[2]);
  };

  std::vector<bool> removed(n, false);
  std::set<VertexId> ready;
  for (int v = 0; v < n; ++v)
    if (peelable(v)) ready.insert(v);

  std::vector<StackStep> peeled;
  peeled.reserve(n - 3);
  while (!ready.empty()) {
    const VertexId v = *ready.begin();
    ready.erase(ready.begin());
    if (removed[v] || !peelable(v)) continue;
    const std::vector<VertexId> nb(adj[v].begin(), adj[v].end());
    peeled.push_back({v, {nb[0], nb[1], nb[2]}});
    removed[v] = true;
    for (VertexId u : nb) adj[u].erase(v);
    adj[v].clear();
    for (VertexId u : nb)
      if (peelable(u)) ready.insert(u);
  }

  if (static_cast<int>(peeled.size()) != n - 3) throw fail();
  for (VertexId v : outer) {
    std::set<VertexId> expect;
    for (VertexId u : outer)
      if (u != v) expect.insert(u);
    if (adj[v] != expect) throw fail();
  }

  Recognition r;
  r.original.assign(outer.begin(), outer.end());
  std::vector<VertexId> new_id(n, -1);
  for (int i = 0; i < 3; ++i) new_id[outer[i]] = i;
  auto name = [&](VertexId v) {
    return v < static_cast<int>(labels.size()) ? labels[v] : std::to_string(v);
  };
  r.tree = TriTree::new_root({name(outer[0]), name(outer[1]), name(outer[2])});
  try {
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
      const Face parent{new_id[it->parent[0]], new_id[it->parent[1]], new_id[it->parent[2]]};
      new_id[it->vertex] = r.tree.stack(parent, name(it->vertex));
      r.original.push_back(it->vertex);
    }
  } catch (const TriTreeError&) {
    throw fail();
  }
  return r;
}

std::vector<TriTree> all_stacking_programs(int n) {
  if (n < 3) throw TriTreeError("a stacking program has at least 3 vertices");
  std::vector<TriTree> level{TriTree::new_root()};
  for (int size = 3; size < n; ++size) {
    std::vector<TriTree> next;
    for (const TriTree& t : level) {
      for (const Face& f : t.inner_faces()) {
        TriTree child = t;
        child.stack(f);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::string to_stacking_text(const TriTree& t) {
  std::ostringstream out;
  out << "outer: " << t.label(0) << ' ' << t.label(1) << ' ' << t.label(2) << '\n';
  for (const StackStep& s : t.program()) {
    out << t.label(s.vertex) << ": " << t.label(s.parent[0]) << ' ' << t.label(s.parent[1])
        << ' ' << t.label(s.parent[2]) << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

}  // namespace

TriTree parse_stacking_text(const std::string& text) {
  std::istringstream in(text);
  std::optional<TriTree> tree;
  std::unordered_map<std::string, VertexId> ids;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto colon = line.find(':');
    const auto words = split_words(line);
    if (words.empty()) continue;
    auto err = [&](const std::string& what) {
      return TriTreeError("line " + std::to_string(line_no) + ": " + what);
    };
    if (colon == std::string::npos) throw err("expected ':'");
    const auto head = split_words(line.substr(0, colon));
    const auto rest = split_words(line.substr(colon + 1));
    if (head.size() != 1 || rest.size() != 3) throw err("expected 'name: p q r'");

    if (!tree) {
      if (head[0] != "outer") throw err("first line must be 'outer: a b c'");
      tree = TriTree::new_root({rest[0], rest[1], rest[2]});
      for (int i = 0; i < 3; ++i) {
        if (!ids.emplace(rest[i], i).second) throw err("duplicate label " + rest[i]);
      }
      continue;
    }
    Face parent{};
    for (int i = 0; i < 3; ++i) {
      const auto it = ids.find(rest[i]);
      if (it == ids.end()) throw err("unknown label " + rest[i]);
      parent[i] = it->second;
    }
    if (ids.contains(head[0])) throw err("duplicate label " + head[0]);
    try {
      ids.emplace(head[0], tree->stack(parent, head[0]));
    } catch (const TriTreeError& e) {
      throw err(e.what());
    }
  }
  if (!tree) throw TriTreeError("missing 'outer:' line");
  return *tree;
}

}  // namespace p3t
