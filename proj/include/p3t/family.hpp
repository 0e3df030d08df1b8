#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "p3t/gadgets.hpp"
#include "p3t/tritree.hpp"

namespace p3t {

using BigInt = boost::multiprecision::cpp_int;

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMinFamilyN = 22;

/// Skeleton B(k1,k2,k3): outer x, y, z (ids 0, 1, 2), hub w (id 3), then the
/// fans alpha (inside y w z), beta (inside z w x), gamma (inside x w y).
struct Skeleton {
  TriTree tree;
  std::array<int, 3> k{};
  VertexId w = 3;
  std::vector<VertexId> alpha, beta, gamma;
  /// Faces with exactly one outer vertex, stored as (a-side, b-side, outer).
  std::vector<Face> f_faces;
  /// <x,y,z>, <x,y,gamma_k3>, <alpha_k1,y,z>, <x,beta_k2,z>; empty fans use w.
  std::array<Face, 4> exceptional{};

  int vertex_count() const { return tree.size(); }
};

Skeleton build_skeleton(int k1, int k2, int k3);

struct FamilySpec {
  int n = 0;
  int k1 = 0, k2 = 0, k3 = 0;
  int F = 0;
  int F1 = 0;
  int F2 = 0;
  /// Canonical order of the skeleton faces with one outer vertex.
  std::vector<Face> f_order;
  /// Positions in f_order planted from the 3-gadget family: the first F2.
  std::vector<int> f2_set;

  int k_sum() const { return k1 + k2 + k3; }
};

/// Throws FamilyError("below construction range") for n < 22.
FamilySpec family_parameters(int n);

/// 7^F1 * 3^F2.
BigInt family_size(const FamilySpec& spec);

/// One gadget digit per face of f_order: base 3 on the first F2 faces,
/// base 7 on the rest.
struct Assignment {
  std::vector<int> digits;
};

/// Mixed radix, most significant first: the F1 faces (base 7) in f_order,
/// then the F2 faces (base 3) in f_order. Throws FamilyError when out of range.
Assignment decode_index(const FamilySpec& spec, const BigInt& index);
BigInt encode_index(const FamilySpec& spec, const Assignment& a);

/// Plant gadgets onto the skeleton: gadget c goes to the face's outer vertex,
/// a and b to the other two in stored order.
TriTree plant(const Skeleton& skeleton, const FamilySpec& spec, const GadgetCatalog& catalog,
              const Assignment& a);
TriTree graph_at(const FamilySpec& spec, const GadgetCatalog& catalog, const BigInt& index);

/// Lazy walk over the family in index order.
class FamilyEnumerator {
 public:
  /// Throws FamilyError("enumeration cap ...") when the family exceeds `cap`.
  FamilyEnumerator(const FamilySpec& spec, const GadgetCatalog& catalog,
                   std::uint64_t cap = kDefaultCap);

  static constexpr std::uint64_t kDefaultCap = 10000;

  std::uint64_t size() const { return size_; }
  std::optional<std::pair<std::uint64_t, TriTree>> next();

 private:
  FamilySpec spec_;
  const GadgetCatalog& catalog_;
  Skeleton skeleton_;
  std::uint64_t size_ = 0;
  std::uint64_t at_ = 0;
  Assignment digits_;
};

struct DegreeReport {
  std::array<int, 3> outer{};   // deg x, y, z
  int max_skeleton_other = 0;   // w and the fan vertices
  int max_gadget_internal = 0;
  std::vector<int> degrees;
};

DegreeReport degree_report(const TriTree& g, const FamilySpec& spec);

std::string family_spec_json(const FamilySpec& spec);

}  // namespace p3t
