#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "p3t/tritree.hpp"

namespace p3t {

inline constexpr int kIsoMaxVertices = 64;

/// Byte string; equal iff the (coloured) graphs are isomorphic.
using CanonicalForm = std::string;

class IsoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical labelling by colour refinement plus individualisation.
/// `colors` are an invariant vertex colouring that isomorphisms must respect.
CanonicalForm canonical_form_colored(const Adjacency& adjacency, const std::vector<int>& colors);

CanonicalForm canonical_form(const Adjacency& adjacency);

/// Canonical under isomorphisms fixing each pinned vertex individually.
CanonicalForm canonical_form_rooted(const Adjacency& adjacency, const Face& pinned);

/// As above, but the first two pinned vertices share a colour, so the
/// isomorphism may swap them.
CanonicalForm canonical_form_rooted_ab(const Adjacency& adjacency, const Face& pinned);

class IsoHistogram {
 public:
  void add(const CanonicalForm& form, std::size_t count = 1) { counts_[form] += count; }
  void add_graph(const Adjacency& adjacency) { add(canonical_form(adjacency)); }
  void merge(const IsoHistogram& other);

  std::size_t classes() const { return counts_.size(); }
  std::size_t total() const;
  std::size_t largest_class() const;
  /// class size -> number of classes with that size
  std::map<std::size_t, std::size_t> size_distribution() const;
  const std::map<CanonicalForm, std::size_t>& counts() const { return counts_; }

  /// One row per class: hex-encoded form and its count.
  std::string to_csv() const;

 private:
  std::map<CanonicalForm, std::size_t> counts_;
};

template <typename Range>
IsoHistogram iso_histogram(const Range& graphs) {
  IsoHistogram h;
  for (const Adjacency& g : graphs) h.add_graph(g);
  return h;
}

}  // namespace p3t
