#include "p3t/family.hpp"

#include <algorithm>

#include <json.hpp>

namespace p3t {

Skeleton build_skeleton(int k1, int k2, int k3) {
  if (k1 < 0 || k2 < 0 || k3 < 0) throw FamilyError("fan sizes must be nonnegative");
  Skeleton s;
  s.k = {k1, k2, k3};
  s.tree = TriTree::new_root({"x", "y", "z"});
  constexpr VertexId x = 0, y = 1, z = 2;
  s.w = s.tree.stack({x, y, z}, "w");

  // Each fan hangs off w inside one of the three faces around it; the first
  // fan vertex splits (o1, w, o2) and the next ones split (prev, o1, o2).
  auto fan = [&](int k, VertexId o1, VertexId o2, const std::string& name,
                 std::vector<VertexId>& ids) {
    VertexId prev = s.w;
    for (int i = 1; i <= k; ++i) {
      const Face parent = i == 1 ? Face{o1, s.w, o2} : Face{prev, o1, o2};
      const VertexId v = s.tree.stack(parent, name + std::to_string(i));
      s.f_faces.push_back({prev, v, o1});
      s.f_faces.push_back({prev, v, o2});
      ids.push_back(v);
      prev = v;
    }
    return prev;
  };
  const VertexId alpha_last = fan(k1, y, z, "alpha", s.alpha);
  const VertexId beta_last = fan(k2, z, x, "beta", s.beta);
  const VertexId gamma_last = fan(k3, x, y, "gamma", s.gamma);

  s.exceptional = {Face{x, y, z}, Face{x, y, gamma_last}, Face{alpha_last, y, z},
                   Face{x, beta_last, z}};
  return s;
}

FamilySpec family_parameters(int n) {
  if (n < kMinFamilyN) {
    throw FamilyError("n = " + std::to_string(n) + " is below construction range (n >= 22)");
  }
  FamilySpec spec;
  spec.n = n;
  spec.F2 = static_cast<int>((7LL * n + 5) % 11);
  // 11 * (k1 + k2 + k3) = n - 4 + 3 F2, which is always divisible by 11.
  const int sum = (n - 4 + 3 * spec.F2) / 11;
  const int q = sum / 3, r = sum % 3;
  spec.k1 = q;
  spec.k2 = q + (r >= 2 ? 1 : 0);
  spec.k3 = q + (r >= 1 ? 1 : 0);
  spec.F = 2 * sum + 4;
  spec.F1 = spec.F - 4 - spec.F2;
  spec.f_order = build_skeleton(spec.k1, spec.k2, spec.k3).f_faces;
  for (int i = 0; i < spec.F2; ++i) spec.f2_set.push_back(i);
  return spec;
}

BigInt family_size(const FamilySpec& spec) {
  return boost::multiprecision::pow(BigInt(7), static_cast<unsigned>(spec.F1)) *
         boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(spec.F2));
}

namespace {

// Digit positions in significance order (most significant first) and their radix.
std::vector<std::pair<int, int>> digit_order(const FamilySpec& spec) {
  std::vector<std::pair<int, int>> order;
  const int faces = static_cast<int>(spec.f_order.size());
  for (int i = spec.F2; i < faces; ++i) order.emplace_back(i, 7);
  for (int i = 0; i < spec.F2; ++i) order.emplace_back(i, 3);
  return order;
}

}  // namespace

Assignment decode_index(const FamilySpec& spec, const BigInt& index) {
  if (index < 0 || index >= family_size(spec)) throw FamilyError("index out of range");
  Assignment a;
  a.digits.assign(spec.f_order.size(), 0);
  BigInt rest = index;
  const auto order = digit_order(spec);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    a.digits[it->first] = static_cast<int>(rest % it->second);
    rest /= it->second;
  }
  return a;
}

BigInt encode_index(const FamilySpec& spec, const Assignment& a) {
  BigInt index = 0;
  for (const auto& [pos, radix] : digit_order(spec)) {
    const int d = a.digits.at(pos);
    if (d < 0 || d >= radix) throw FamilyError("digit out of range");
    index = index * radix + d;
  }
  return index;
}

TriTree plant(const Skeleton& skeleton, const FamilySpec& spec, const GadgetCatalog& catalog,
              const Assignment& a) {
  if (a.digits.size() != spec.f_order.size()) throw FamilyError("assignment size mismatch");
  TriTree g = skeleton.tree;
  for (std::size_t j = 0; j < spec.f_order.size(); ++j) {
    const bool small = static_cast<int>(j) < spec.F2;
    const auto& fam = small ? catalog.three : catalog.seven;
    const int d = a.digits[j];
    if (d < 0 || d >= static_cast<int>(fam.size())) throw FamilyError("digit out of range");
    const TriTree& gadget = fam[d].tree;
    const Face& face = spec.f_order[j];

    std::vector<VertexId> to(gadget.size(), -1);
    for (int i = 0; i < 3; ++i) to[i] = face[i];
    const std::string prefix = "F" + std::to_string(j) + ".";
    for (const StackStep& step : gadget.program()) {
      const Face parent{to[step.parent[0]], to[step.parent[1]], to[step.parent[2]]};
      to[step.vertex] = g.stack(parent, prefix + gadget.label(step.vertex));
    }
  }
  return g;
}

TriTree graph_at(const FamilySpec& spec, const GadgetCatalog& catalog, const BigInt& index) {
  const Assignment a = decode_index(spec, index);
  return plant(build_skeleton(spec.k1, spec.k2, spec.k3), spec, catalog, a);
}

FamilyEnumerator::FamilyEnumerator(const FamilySpec& spec, const GadgetCatalog& catalog,
                                   std::uint64_t cap)
    : spec_(spec),
      catalog_(catalog),
      skeleton_(build_skeleton(spec.k1, spec.k2, spec.k3)) {
  const BigInt size = family_size(spec);
  if (size > cap) {
    throw FamilyError("enumeration cap exceeded: family has " + size.str() +
                      " members, cap is " + std::to_string(cap));
  }
  size_ = static_cast<std::uint64_t>(size);
  digits_.digits.assign(spec.f_order.size(), 0);
}

std::optional<std::pair<std::uint64_t, TriTree>> FamilyEnumerator::next() {
  if (at_ >= size_) return std::nullopt;
  std::pair<std::uint64_t, TriTree> out{at_, plant(skeleton_, spec_, catalog_, digits_)};
  ++at_;
  // Odometer increment from the least significant digit.
  const auto order = digit_order(spec_);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (++digits_.digits[it->first] < it->second) break;
    digits_.digits[it->first] = 0;
  }
  return out;
}

DegreeReport degree_report(const TriTree& g, const FamilySpec& spec) {
  const int skeleton_vertices = spec.k_sum() + 4;
  if (g.size() < skeleton_vertices) throw FamilyError("graph smaller than its skeleton");
  const Adjacency adj = g.adjacency();
  DegreeReport r;
  for (VertexId v = 0; v < g.size(); ++v) {
    const int d = static_cast<int>(adj[v].size());
    r.degrees.push_back(d);
    if (v < 3) {
      r.outer[v] = d;
    } else if (v < skeleton_vertices) {
      r.max_skeleton_other = std::max(r.max_skeleton_other, d);
    } else {
      r.max_gadget_internal = std::max(r.max_gadget_internal, d);
    }
  }
  return r;
}

std::string family_spec_json(const FamilySpec& spec) {
  const Skeleton sk = build_skeleton(spec.k1, spec.k2, spec.k3);
  nlohmann::ordered_json j;
  j["n"] = spec.n;
  j["k"] = {spec.k1, spec.k2, spec.k3};
  j["F"] = spec.F;
  j["F1"] = spec.F1;
  j["F2"] = spec.F2;
  j["family_size"] = family_size(spec).str();
  auto faces = nlohmann::ordered_json::array();
  for (const Face& f : spec.f_order) {
    faces.push_back({sk.tree.label(f[0]), sk.tree.label(f[1]), sk.tree.label(f[2])});
  }
  j["f_order"] = faces;
  j["f2_set"] = spec.f2_set;
  return j.dump();
}

}  // namespace p3t
