#include "p3t/iso.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace p3t {

namespace {

class Canonicalizer {
 public:
  Canonicalizer(const Adjacency& adjacency, const std::vector<int>& colors)
      : n_(static_cast<int>(adjacency.size())), adj_(adjacency), base_(n_) {
    if (n_ > kIsoMaxVertices) {
      throw IsoError("graph exceeds the canonical-form size cap of " +
                     std::to_string(kIsoMaxVertices) + " vertices");
    }
    if (static_cast<int>(colors.size()) != n_) throw IsoError("colour vector size mismatch");
    rows_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) {
      for (VertexId u : adj_[v]) {
        if (u < 0 || u >= n_ || u == v) throw IsoError("not a simple graph");
        rows_[v] |= std::uint64_t{1} << u;
      }
    }
    for (int v = 0; v < n_; ++v)
      for (int u = 0; u < n_; ++u)
        if (((rows_[v] >> u) & 1) != ((rows_[u] >> v) & 1)) throw IsoError("adjacency not symmetric");

    std::vector<int> distinct(colors);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n_; ++v) {
      base_[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), colors[v]) -
                                  distinct.begin());
    }
  }

  CanonicalForm run() {
    std::vector<int> c = base_;
    search(c);
    return *best_;
  }

 private:
  // Re-rank until stable; ranks depend only on isomorphism-invariant data.
  void refine(std::vector<int>& c) const {
    std::vector<std::vector<int>> sig(n_);
    std::vector<int> order(n_);
    int classes = -1;
    while (true) {
      for (int v = 0; v < n_; ++v) {
        sig[v].clear();
        sig[v].push_back(c[v]);
        for (VertexId u : adj_[v]) sig[v].push_back(c[u]);
        std::sort(sig[v].begin() + 1, sig[v].end());
      }
      for (int v = 0; v < n_; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int rank = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
        c[order[i]] = rank;
      }
      const int now = n_ == 0 ? 0 : rank + 1;
      if (now == classes) return;
      classes = now;
    }
  }

  CanonicalForm form_of(const std::vector<int>& c) const {
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v) at[c[v]] = v;
    CanonicalForm f;
    f.push_back(static_cast<char>(n_));
    for (int i = 0; i < n_; ++i) f.push_back(static_cast<char>(base_[at[i]]));
    unsigned char byte = 0;
    int bits = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        byte = static_cast<unsigned char>((byte << 1) | ((rows_[at[i]] >> at[j]) & 1));
        if (++bits == 8) {
          f.push_back(static_cast<char>(byte));
          byte = 0;
          bits = 0;
        }
      }
    }
    if (bits > 0) f.push_back(static_cast<char>(byte << (8 - bits)));
    return f;
  }

  void search(std::vector<int>& c) {
    refine(c);
    std::vector<int> size(n_, 0);
    for (int v = 0; v < n_; ++v) ++size[c[v]];
    int target = -1;
    for (int col = 0; col < n_; ++col) {
      if (size[col] > 1 && (target < 0 || size[col] < size[target])) target = col;
    }
    if (target < 0) {
      CanonicalForm f = form_of(c);
      if (!best_ || f < *best_) best_ = std::move(f);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (c[v] != target) continue;
      std::vector<int> next(n_);
      for (int u = 0; u < n_; ++u) next[u] = 2 * c[u] + (c[u] == target && u != v ? 1 : 0);
      search(next);
    }
  }

  int n_;
  const Adjacency& adj_;
  std::vector<int> base_;
  std::vector<std::uint64_t> rows_;
  std::optional<CanonicalForm> best_;
};

}  // namespace

CanonicalForm canonical_form_colored(const Adjacency& adjacency, const std::vector<int>& colors) {
  return Canonicalizer(adjacency, colors).run();
}

CanonicalForm canonical_form(const Adjacency& adjacency) {
  return canonical_form_colored(adjacency, std::vector<int>(adjacency.size(), 0));
}

CanonicalForm canonical_form_rooted(const Adjacency& adjacency, const Face& pinned) {
  std::vector<int> colors(adjacency.size(), 0);
  for (int i = 0; i < 3; ++i) colors.at(pinned[i]) = i + 1;
  return canonical_form_colored(adjacency, colors);
}

CanonicalForm canonical_form_rooted_ab(const Adjacency& adjacency, const Face& pinned) {
  std::vector<int> colors(adjacency.size(), 0);
  colors.at(pinned[0]) = 1;
  colors.at(pinned[1]) = 1;
  colors.at(pinned[2]) = 2;
  return canonical_form_colored(adjacency, colors);
}

void IsoHistogram::merge(const IsoHistogram& other) {
  for (const auto& [form, count] : other.counts_) counts_[form] += count;
}

std::size_t IsoHistogram::total() const {
  std::size_t t = 0;
  for (const auto& [form, count] : counts_) t += count;
  return t;
}

std::size_t IsoHistogram::largest_class() const {
  std::size_t m = 0;
  for (const auto& [form, count] : counts_) m = std::max(m, count);
  return m;
}

std::map<std::size_t, std::size_t> IsoHistogram::size_distribution() const {
  std::map<std::size_t, std::size_t> dist;
  for (const auto& [form, count] : counts_) ++dist[count];
  return dist;
}

std::string IsoHistogram::to_csv() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "form,count\n";
  for (const auto& [form, count] : counts_) {
    for (unsigned char ch : form) {
      out.push_back(kHex[ch >> 4]);
      out.push_back(kHex[ch & 15]);
    }
    out += "," + std::to_string(count) + "\n";
  }
  return out;
}

}  // namespace p3t
