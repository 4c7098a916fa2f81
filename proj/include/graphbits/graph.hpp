#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphbits/bitstring.hpp"
#include "graphbits/rng.hpp"

namespace graphbits {

inline std::int64_t pair_count(int n) {
  if (n < 0) throw std::invalid_argument("pair_count: negative n");
  return std::int64_t(n) * (n - 1) / 2;
}

// 0-based position of edge {i,j}, 1 <= i < j <= n, under the row-major
// lexicographic pair order (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).
inline std::size_t edge_index(int i, int j, int n) {
  if (i < 1 || j <= i || j > n)
    throw std::invalid_argument("edge_index: need 1 <= i < j <= n");
  const std::int64_t row_start =
      std::int64_t(i - 1) * n - std::int64_t(i) * (i - 1) / 2;
  return std::size_t(row_start + (j - i - 1));
}

// Inverse of edge_index.
inline std::pair<int, int> edge_at(std::size_t index, int n) {
  if (std::int64_t(index) >= pair_count(n))
    throw std::out_of_range("edge_at: index out of range");
  int i = 1;
  std::size_t remaining = index;
  while (remaining >= std::size_t(n - i)) {
    remaining -= std::size_t(n - i);
    ++i;
  }
  return {i, i + 1 + int(remaining)};
}

// A bijection pi on {1..n}; mapping()[i-1] holds pi(i).
class Permutation {
 public:
  static Permutation identity(int n) {
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 1);
    return Permutation(std::move(m));
  }

  explicit Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
    std::vector<bool> seen(map_.size(), false);
    for (int v : map_) {
      if (v < 1 || std::size_t(v) > map_.size() || seen[std::size_t(v) - 1])
        throw std::invalid_argument("Permutation: mapping is not a bijection");
      seen[std::size_t(v) - 1] = true;
    }
  }

  int n() const { return int(map_.size()); }
  int operator()(int i) const {
    if (i < 1 || std::size_t(i) > map_.size())
      throw std::out_of_range("Permutation: label out of range");
    return map_[std::size_t(i) - 1];
  }
  const std::vector<int>& mapping() const { return map_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < map_.size(); ++i)
      if (map_[i] != int(i) + 1) return false;
    return true;
  }

  int moved_count() const {
    int m = 0;
    for (std::size_t i = 0; i < map_.size(); ++i)
      if (map_[i] != int(i) + 1) ++m;
    return m;
  }

  // (a.compose(b))(i) = a(b(i))
  Permutation compose(const Permutation& b) const {
    if (n() != b.n()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> m(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i)
      m[i] = (*this)(b(int(i) + 1));
    return Permutation(std::move(m));
  }

  Permutation inverse() const {
    std::vector<int> m(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i)
      m[std::size_t(map_[i]) - 1] = int(i) + 1;
    return Permutation(std::move(m));
  }

  bool operator==(const Permutation& o) const { return map_ == o.map_; }

 private:
  std::vector<int> map_;
};

// Simple undirected graph on nodes 1..n, stored as the n(n-1)/2-bit edge
// string; bit edge_index(i,j,n) is 1 iff {i,j} is an edge.
class Graph {
 public:
  explicit Graph(int n) : n_(check_n(n)), bits_(std::size_t(pair_count(n))) {}

  Graph(int n, BitString bits) : n_(check_n(n)), bits_(std::move(bits)) {
    if (bits_.size() != std::size_t(pair_count(n)))
      throw std::invalid_argument("Graph: bit count must be n(n-1)/2");
  }

  int n() const { return n_; }
  const BitString& bits() const { return bits_; }

  bool edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return bits_.get(edge_index(i, j, n_));
  }

  void set_edge(int i, int j, bool present) {
    if (i == j) throw std::invalid_argument("Graph: no loops");
    if (i > j) std::swap(i, j);
    bits_.set(edge_index(i, j, n_), present);
  }

  std::int64_t edge_count() const { return std::int64_t(bits_.popcount()); }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }
  bool operator!=(const Graph& o) const { return !(*this == o); }

  static Graph complete(int n) {
    Graph g(n);
    for (std::size_t e = 0; e < g.bits_.size(); ++e) g.bits_.set(e, true);
    return g;
  }

  static Graph from_edges(int n,
                          std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [i, j] : edges) g.set_edge(i, j, true);
    return g;
  }

 private:
  static int check_n(int n) {
    if (n < 1) throw std::invalid_argument("Graph: need n >= 1");
    return n;
  }

  int n_;
  BitString bits_;
};

// Ordered-labeled subgraph pattern on k nodes; same encoding convention
// as Graph with n = k.
class PatternGraph {
 public:
  explicit PatternGraph(int k) : k_(check_k(k)), bits_(std::size_t(pair_count(k))) {}

  PatternGraph(int k, BitString bits) : k_(check_k(k)), bits_(std::move(bits)) {
    if (bits_.size() != std::size_t(pair_count(k)))
      throw std::invalid_argument("PatternGraph: bit count must be k(k-1)/2");
  }

  int k() const { return k_; }
  const BitString& bits() const { return bits_; }

  bool edge(int a, int b) const {
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    return bits_.get(edge_index(a, b, k_));
  }

  void set_edge(int a, int b, bool present) {
    if (a == b) throw std::invalid_argument("PatternGraph: no loops");
    if (a > b) std::swap(a, b);
    bits_.set(edge_index(a, b, k_), present);
  }

  Graph as_graph() const { return Graph(k_, bits_); }
  static PatternGraph of(const Graph& g) { return PatternGraph(g.n(), g.bits()); }

  bool operator==(const PatternGraph& o) const {
    return k_ == o.k_ && bits_ == o.bits_;
  }
  bool operator!=(const PatternGraph& o) const { return !(*this == o); }

 private:
  static int check_k(int k) {
    if (k < 1) throw std::invalid_argument("PatternGraph: need k >= 1");
    return k;
  }

  int k_;
  BitString bits_;
};

inline BitString encode(const Graph& g) { return g.bits(); }

inline Graph decode(int n, const BitString& bits) { return Graph(n, bits); }

// G' with edge (pi(i),pi(j)) iff G has edge (i,j).
inline Graph apply_permutation(const Graph& g, const Permutation& pi) {
  if (pi.n() != g.n())
    throw std::invalid_argument("apply_permutation: size mismatch");
  Graph out(g.n());
  const std::int64_t m = pair_count(g.n());
  for (std::int64_t e = 0; e < m; ++e) {
    if (!g.bits().get(std::size_t(e))) continue;
    auto [i, j] = edge_at(std::size_t(e), g.n());
    out.set_edge(pi(i), pi(j), true);
  }
  return out;
}

// Pattern induced by the sorted node subset S = {i_1 < ... < i_k}:
// H has edge (a,b) iff G has edge (i_a, i_b).
inline PatternGraph induced_pattern(const Graph& g, const std::vector<int>& s) {
  const int k = int(s.size());
  if (k < 1) throw std::invalid_argument("induced_pattern: need |S| >= 1");
  for (int a = 0; a < k; ++a) {
    if (s[std::size_t(a)] < 1 || s[std::size_t(a)] > g.n())
      throw std::invalid_argument("induced_pattern: node out of range");
    if (a > 0 && s[std::size_t(a)] <= s[std::size_t(a) - 1])
      throw std::invalid_argument("induced_pattern: S must be strictly increasing");
  }
  PatternGraph h(k);
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b)
      if (g.edge(s[std::size_t(a) - 1], s[std::size_t(b) - 1]))
        h.set_edge(a, b, true);
  return h;
}

// Each of the n(n-1)/2 edge bits is an independent fair coin from the
// seeded generator; identical (n, seed, stream) gives identical graphs.
inline Graph random_graph(int n, std::uint64_t seed, std::uint64_t stream = 0) {
  if (n < 1) throw std::invalid_argument("random_graph: need n >= 1");
  Xoshiro256StarStar rng(seed, stream);
  const std::int64_t m = pair_count(n);
  BitString bits(static_cast<std::size_t>(m));
  std::uint64_t word = 0;
  for (std::int64_t e = 0; e < m; ++e) {
    if ((e & 63) == 0) word = rng.next();
    bits.set(std::size_t(e), (word >> (e & 63)) & 1u);
  }
  return Graph(n, std::move(bits));
}

inline int degree(const Graph& g, int v) {
  if (v < 1 || v > g.n()) throw std::out_of_range("degree: node out of range");
  int d = 0;
  for (int u = 1; u <= g.n(); ++u)
    if (u != v && g.edge(v, u)) ++d;
  return d;
}

// Single pass over the set bits of the packed encoding.
inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.n()), 0);
  const auto& words = g.bits().words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t word = words[w];
    while (word) {
      const std::size_t e = w * 64 + std::size_t(std::countr_zero(word));
      word &= word - 1;
      const auto [i, j] = edge_at(e, g.n());
      ++d[std::size_t(i) - 1];
      ++d[std::size_t(j) - 1];
    }
  }
  return d;
}

inline Graph complement(const Graph& g) {
  BitString bits(static_cast<std::size_t>(pair_count(g.n())));
  for (std::size_t e = 0; e < bits.size(); ++e)
    bits.set(e, !g.bits().get(e));
  return Graph(g.n(), std::move(bits));
}

// Adjacency rows as word-packed bitmasks, node v at row v-1, bit u-1.
// Convenience for the bitset-parallel algorithms.
class AdjacencyRows {
 public:
  explicit AdjacencyRows(const Graph& g)
      : n_(g.n()), words_per_row_((std::size_t(g.n()) + 63) / 64),
        rows_(std::size_t(g.n()) * words_per_row_, 0) {
    const std::int64_t m = pair_count(g.n());
    for (std::int64_t e = 0; e < m; ++e) {
      if (!g.bits().get(std::size_t(e))) continue;
      auto [i, j] = edge_at(std::size_t(e), g.n());
      set_bit(i - 1, j - 1);
      set_bit(j - 1, i - 1);
    }
  }

  int n() const { return n_; }
  std::size_t words_per_row() const { return words_per_row_; }
  const std::uint64_t* row(int v0) const {  // 0-based
    return rows_.data() + std::size_t(v0) * words_per_row_;
  }
  bool adjacent(int u0, int v0) const {
    return (row(u0)[std::size_t(v0) >> 6] >> (v0 & 63)) & 1u;
  }
  // Rows carry no self-loops, so the intersection can never contain u or v.
  int common_neighbors(int u0, int v0) const {
    const std::uint64_t* a = row(u0);
    const std::uint64_t* b = row(v0);
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < words_per_row_; ++w)
      total += std::uint64_t(std::popcount(a[w] & b[w]));
    return int(total);
  }
  int degree(int v0) const {
    const std::uint64_t* r = row(v0);
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < words_per_row_; ++w)
      total += std::uint64_t(std::popcount(r[w]));
    return int(total);
  }

 private:
  void set_bit(int r, int c) {
    rows_[std::size_t(r) * words_per_row_ + (std::size_t(c) >> 6)] |=
        std::uint64_t{1} << (c & 63);
  }

  int n_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace graphbits
