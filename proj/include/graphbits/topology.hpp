#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graphbits/graph.hpp"
#include "graphbits/maxflow.hpp"

namespace graphbits {

// Disjoint length-2 paths between i and j: the common-neighbor count,
// together with the reordered 2(n-2)-bit string of edge pairs
// ((i,k),(j,k)) for k != i,j in increasing k.
struct TwoPathProfile {
  int i = 0;
  int j = 0;
  int count = 0;
  BitString e_ij;
};

inline TwoPathProfile two_path_count(const Graph& g, int i, int j) {
  if (i == j) throw std::invalid_argument("two_path_count: i == j");
  if (i < 1 || j < 1 || i > g.n() || j > g.n())
    throw std::out_of_range("two_path_count: node out of range");
  TwoPathProfile prof;
  prof.i = i;
  prof.j = j;
  prof.e_ij = BitString(2 * std::size_t(std::max(g.n() - 2, 0)));
  std::size_t pos = 0;
  for (int k = 1; k <= g.n(); ++k) {
    if (k == i || k == j) continue;
    const bool a = g.edge(i, k);
    const bool b = g.edge(j, k);
    prof.e_ij.set(pos++, a);
    prof.e_ij.set(pos++, b);
    if (a && b) ++prof.count;
  }
  return prof;
}

// Max over node pairs of shortest-path length; nullopt when disconnected.
// Complete graphs are the only ones with diameter 1.
inline std::optional<int> diameter(const Graph& g) {
  const int n = g.n();
  if (n == 1) return 0;
  const AdjacencyRows adj(g);
  const std::size_t words = adj.words_per_row();
  std::vector<std::uint64_t> visited(words), frontier(words), next(words);
  int diam = 0;
  for (int s = 0; s < n; ++s) {
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    frontier[std::size_t(s) >> 6] = std::uint64_t{1} << (s & 63);
    visited = frontier;
    int reached = 1;
    int dist = 0;
    while (true) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t f = frontier[w];
        while (f) {
          const int v = int(w * 64) + std::countr_zero(f);
          f &= f - 1;
          const std::uint64_t* row = adj.row(v);
          for (std::size_t x = 0; x < words; ++x) next[x] |= row[x];
        }
      }
      for (std::size_t w = 0; w < words; ++w) next[w] &= ~visited[w];
      int gained = 0;
      for (std::size_t w = 0; w < words; ++w)
        gained += std::popcount(next[w]);
      if (gained == 0) break;
      ++dist;
      reached += gained;
      for (std::size_t w = 0; w < words; ++w) visited[w] |= next[w];
      frontier = next;
    }
    if (reached < n) return std::nullopt;
    diam = std::max(diam, dist);
  }
  return diam;
}

namespace detail {

// Node-disjoint path count between non-adjacent s,t via unit node
// capacities: split every vertex into in/out with an internal arc.
inline std::int64_t node_disjoint_paths(const AdjacencyRows& adj, int s0, int t0,
                                        std::int64_t limit) {
  const int n = adj.n();
  MaxFlow net(2 * n);
  auto in_node = [](int v) { return 2 * v; };
  auto out_node = [](int v) { return 2 * v + 1; };
  for (int v = 0; v < n; ++v) net.add_edge(in_node(v), out_node(v), 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj.adjacent(u, v)) {
        net.add_edge(out_node(u), in_node(v), 1);
        net.add_edge(out_node(v), in_node(u), 1);
      }
  return net.max_flow(out_node(s0), in_node(t0), limit);
}

}  // namespace detail

// Largest k such that G is k-connected: by Menger, the minimum over
// non-adjacent pairs of the node-disjoint path count, capped by the
// minimum degree; n-1 for complete graphs.
inline int node_connectivity(const Graph& g) {
  const int n = g.n();
  if (n < 2) throw std::invalid_argument("node_connectivity: need n >= 2");
  const AdjacencyRows adj(g);
  std::int64_t best = n - 1;
  for (int v = 0; v < n; ++v) best = std::min(best, std::int64_t(adj.degree(v)));
  for (int u = 0; u < n && best > 0; ++u)
    for (int v = u + 1; v < n && best > 0; ++v)
      if (!adj.adjacent(u, v))
        best = std::min(best, detail::node_disjoint_paths(adj, u, v, best));
  return int(best);
}

// Threshold query: same flows as node_connectivity, cut off at k.
inline bool is_k_connected(const Graph& g, int k) {
  const int n = g.n();
  if (n < 2) throw std::invalid_argument("is_k_connected: need n >= 2");
  if (k <= 0) return true;
  if (k > n - 1) return false;
  const AdjacencyRows adj(g);
  for (int v = 0; v < n; ++v)
    if (adj.degree(v) < k) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!adj.adjacent(u, v) &&
          detail::node_disjoint_paths(adj, u, v, k) < k)
        return false;
  return true;
}

namespace detail {

// Tomita-style branch and bound with a greedy coloring bound.
class CliqueSolver {
 public:
  explicit CliqueSolver(const AdjacencyRows& adj)
      : adj_(adj), n_(adj.n()), words_(adj.words_per_row()) {}

  int solve() {
    std::vector<std::uint64_t> cand(words_, 0);
    for (int v = 0; v < n_; ++v)
      cand[std::size_t(v) >> 6] |= std::uint64_t{1} << (v & 63);
    best_ = 0;
    expand(cand, 0);
    return best_;
  }

 private:
  void expand(const std::vector<std::uint64_t>& cand, int size) {
    if (size > best_) best_ = size;
    // greedy coloring: color class c gets an upper bound of size + c + 1
    std::vector<int> order;
    std::vector<int> bound;
    std::vector<std::uint64_t> uncolored = cand;
    int color = 0;
    while (any(uncolored)) {
      ++color;
      std::vector<std::uint64_t> can_take = uncolored;
      while (any(can_take)) {
        const int v = first_bit(can_take);
        clear_bit(uncolored, v);
        clear_bit(can_take, v);
        const std::uint64_t* row = adj_.row(v);
        for (std::size_t w = 0; w < words_; ++w) can_take[w] &= ~row[w];
        order.push_back(v);
        bound.push_back(size + color);
      }
    }
    std::vector<std::uint64_t> rest = cand;
    for (int idx = int(order.size()) - 1; idx >= 0; --idx) {
      if (bound[std::size_t(idx)] <= best_) return;
      const int v = order[std::size_t(idx)];
      std::vector<std::uint64_t> next(words_);
      const std::uint64_t* row = adj_.row(v);
      bool nonempty = false;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = rest[w] & row[w];
        nonempty |= next[w] != 0;
      }
      if (nonempty)
        expand(next, size + 1);
      else if (size + 1 > best_)
        best_ = size + 1;
      clear_bit(rest, v);
    }
  }

  bool any(const std::vector<std::uint64_t>& s) const {
    for (std::uint64_t w : s)
      if (w) return true;
    return false;
  }
  int first_bit(const std::vector<std::uint64_t>& s) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (s[w]) return int(w * 64) + std::countr_zero(s[w]);
    return -1;
  }
  static void clear_bit(std::vector<std::uint64_t>& s, int v) {
    s[std::size_t(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  const AdjacencyRows& adj_;
  int n_;
  std::size_t words_;
  int best_ = 0;
};

}  // namespace detail

// Exact maximum clique size. Always >= 1; >= 2 iff the graph has an edge.
inline int max_clique(const Graph& g) {
  const AdjacencyRows adj(g);
  detail::CliqueSolver solver(adj);
  return solver.solve();
}

}  // namespace graphbits
