#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "p3t/tritree.hpp"

namespace p3t {

/// The seven 8-vertex gadgets (token "T") or the three 5-vertex ones ("T~").
enum class GadgetFamily { seven, three };

struct Gadget {
  std::string name;
  GadgetFamily family = GadgetFamily::seven;
  TriTree tree;
};

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GadgetCatalog {
  std::vector<Gadget> seven;
  std::vector<Gadget> three;
  /// flip_seven[i] = j when flipping gadget i yields gadget j up to rooted isomorphism.
  std::vector<int> flip_seven;
  std::vector<int> flip_three;

  const std::vector<Gadget>& family(GadgetFamily f) const {
    return f == GadgetFamily::seven ? seven : three;
  }
  std::vector<TriTree> trees(GadgetFamily f) const;
};

inline constexpr int kSevenVertices = 8;
inline constexpr int kThreeVertices = 5;
inline constexpr int kMaxOuterInternalNeighbours = 4;
inline constexpr int kMaxInternalDegree = 7;

/// Swap the roles of outer vertices a and b.
Gadget flip(const Gadget& g);

/// Per-gadget invariants. Throws CatalogError naming the gadget and invariant.
void validate_gadget(const Gadget& g);

/// Index permutation induced by flip; throws CatalogError("... flip-symmetry")
/// when the family is not closed, or on duplicate rooted forms.
std::vector<int> flip_permutation(std::span<const Gadget> family);

GadgetCatalog parse_catalog(const std::string& text);
GadgetCatalog load_catalog(const std::string& path);
std::string to_catalog_text(const GadgetCatalog& catalog);

/// $P3T_CATALOG if set, otherwise the catalog shipped with the sources.
std::string default_catalog_path();

}  // namespace p3t
