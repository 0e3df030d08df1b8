#include "p3t/gadgets.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "p3t/iso.hpp"

#ifndef P3T_DEFAULT_CATALOG
#define P3T_DEFAULT_CATALOG "data/catalog.txt"
#endif

namespace p3t {

namespace {

std::string family_token(GadgetFamily f) { return f == GadgetFamily::seven ? "T" : "T~"; }

CanonicalForm rooted_form(const TriTree& t) {
  return canonical_form_rooted(t.adjacency(), TriTree::outer());
}

std::string trim_comment(std::string line) {
  if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

}  // namespace

std::vector<TriTree> GadgetCatalog::trees(GadgetFamily f) const {
  std::vector<TriTree> out;
  for (const Gadget& g : family(f)) out.push_back(g.tree);
  return out;
}

Gadget flip(const Gadget& g) {
  return {g.name + "'", g.family, g.tree.permute_outer({1, 0, 2})};
}

void validate_gadget(const Gadget& g) {
  auto fail = [&](const std::string& what) {
    return CatalogError("gadget " + g.name + ": " + what);
  };
  const int expected = g.family == GadgetFamily::seven ? kSevenVertices : kThreeVertices;
  if (g.tree.size() != expected) {
    throw fail("vertex count (expected " + std::to_string(expected) + ", found " +
               std::to_string(g.tree.size()) + ")");
  }
  if (static_cast<int>(g.tree.faces().size()) != 2 * expected - 4) throw fail("face count");
  if (sorted_face(g.tree.program().front().parent) != TriTree::outer()) {
    throw fail("first vertex must split the outer face");
  }
  const Adjacency adj = g.tree.adjacency();
  for (VertexId o = 0; o < 3; ++o) {
    int internal = 0;
    for (VertexId u : adj[o]) internal += u >= 3 ? 1 : 0;
    if (internal > kMaxOuterInternalNeighbours) {
      throw fail("outer vertex " + g.tree.label(o) + " has more than " +
                 std::to_string(kMaxOuterInternalNeighbours) + " internal neighbours");
    }
  }
  for (VertexId v = 3; v < g.tree.size(); ++v) {
    if (static_cast<int>(adj[v].size()) > kMaxInternalDegree) {
      throw fail("internal vertex " + g.tree.label(v) + " has degree above " +
                 std::to_string(kMaxInternalDegree));
    }
  }
}

std::vector<int> flip_permutation(std::span<const Gadget> family) {
  std::map<CanonicalForm, int> index;
  std::vector<std::size_t> duplicates;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!index.emplace(rooted_form(family[i].tree), static_cast<int>(i)).second) {
      duplicates.push_back(i);
    }
  }
  std::vector<int> perm;
  for (const Gadget& g : family) {
    const auto it = index.find(rooted_form(flip(g).tree));
    if (it == index.end()) throw CatalogError("gadget " + g.name + ": flip-symmetry violated");
    perm.push_back(it->second);
  }
  if (!duplicates.empty()) {
    throw CatalogError("gadget " + family[duplicates.front()].name +
                       ": rooted distinctness violated");
  }
  return perm;
}

GadgetCatalog parse_catalog(const std::string& text) {
  struct Block {
    std::string header;
    std::string body;
    int line = 0;
  };
  std::vector<Block> blocks;
  std::istringstream in(text);
  bool open = false;
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const bool comment_only = raw.find_first_not_of(" \t\r") != std::string::npos &&
                              trim_comment(raw).empty();
    if (comment_only) continue;
    const std::string line = trim_comment(raw);
    if (line.empty()) {
      open = false;
      continue;
    }
    if (!open) {
      blocks.push_back({line, {}, line_no});
      open = true;
    } else {
      blocks.back().body += line + "\n";
    }
  }

  GadgetCatalog cat;
  for (const Block& b : blocks) {
    std::istringstream head(b.header);
    std::string kw, name, fam, extra;
    head >> kw >> name >> fam;
    if (kw != "gadget" || name.empty() || fam.empty() || (head >> extra)) {
      throw CatalogError("line " + std::to_string(b.line) +
                         ": expected 'gadget <name> <family>'");
    }
    Gadget g;
    g.name = name;
    if (fam == "T") {
      g.family = GadgetFamily::seven;
    } else if (fam == "T~") {
      g.family = GadgetFamily::three;
    } else {
      throw CatalogError("gadget " + name + ": unknown family '" + fam + "'");
    }
    try {
      g.tree = parse_stacking_text(b.body);
    } catch (const TriTreeError& e) {
      throw CatalogError("gadget " + name + ": parse error: " + e.what());
    }
    if (g.tree.size() <= 3) throw CatalogError("gadget " + name + ": vertex count");
    validate_gadget(g);
    (g.family == GadgetFamily::seven ? cat.seven : cat.three).push_back(std::move(g));
  }
  if (cat.seven.size() != 7) {
    throw CatalogError("catalog must hold 7 gadgets of family T, found " +
                       std::to_string(cat.seven.size()));
  }
  if (cat.three.size() != 3) {
    throw CatalogError("catalog must hold 3 gadgets of family T~, found " +
                       std::to_string(cat.three.size()));
  }
  cat.flip_seven = flip_permutation(cat.seven);
  cat.flip_three = flip_permutation(cat.three);
  return cat;
}

GadgetCatalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

std::string to_catalog_text(const GadgetCatalog& catalog) {
  std::string out;
  for (const auto* fam : {&catalog.seven, &catalog.three}) {
    for (const Gadget& g : *fam) {
      if (!out.empty()) out += "\n";
      out += "gadget " + g.name + " " + family_token(g.family) + "\n" + to_stacking_text(g.tree);
    }
  }
  return out;
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("P3T_CATALOG"); env != nullptr && *env != '\0') return env;
  return P3T_DEFAULT_CATALOG;
}

}  // namespace p3t
