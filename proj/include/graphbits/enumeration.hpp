#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphbits/covers.hpp"
#include "graphbits/graph.hpp"

namespace graphbits {

inline constexpr int kDefaultEnumLimit = 7;        // exhaustive 2^(n choose 2) scan
inline constexpr int kDefaultAutLimit = 10;        // backtracking automorphism search
inline constexpr int kDefaultBurnsideLimit = 32;   // partition enumeration

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int t = 2; t <= n; ++t) f *= std::uint64_t(t);
  return f;  // exact for n <= 20
}

// ---------------------------------------------------------------------------
// Mirrored packing: encodings of graphs with n <= 11 fit one word, with edge
// index 0 in the most significant used bit so that integer order equals
// lexicographic order of the encodings.

inline std::uint64_t mbits_from_graph(const Graph& g) {
  const std::int64_t cbits = pair_count(g.n());
  if (cbits > 63) throw std::length_error("mbits_from_graph: n too large");
  std::uint64_t x = 0;
  for (std::int64_t e = 0; e < cbits; ++e)
    if (g.bits().get(std::size_t(e))) x |= std::uint64_t{1} << (cbits - 1 - e);
  return x;
}

inline Graph graph_from_mbits(int n, std::uint64_t x) {
  const std::int64_t cbits = pair_count(n);
  if (cbits > 63) throw std::length_error("graph_from_mbits: n too large");
  BitString bits(static_cast<std::size_t>(cbits));
  for (std::int64_t e = 0; e < cbits; ++e)
    bits.set(std::size_t(e), (x >> (cbits - 1 - e)) & 1u);
  return Graph(n, std::move(bits));
}

// All n! permutations of the edge-bit positions (mirrored packing), used by
// the exhaustive scans. Memory is n! * C(n,2) bytes, fine through n = 8.
class PermTable {
 public:
  explicit PermTable(int n) : n_(n), cbits_(int(pair_count(n))) {
    if (n < 1 || n > 8) throw std::invalid_argument("PermTable: need 1 <= n <= 8");
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      Entry entry;
      entry.map.resize(std::size_t(cbits_));
      int moved = 0;
      for (int v = 0; v < n; ++v)
        if (p[std::size_t(v)] != v) ++moved;
      entry.moved = std::uint8_t(moved);
      std::int64_t e = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++e) {
          const int a = std::min(p[std::size_t(i)], p[std::size_t(j)]);
          const int b = std::max(p[std::size_t(i)], p[std::size_t(j)]);
          const std::int64_t target = std::int64_t(edge_index(a + 1, b + 1, n));
          entry.map[std::size_t(cbits_ - 1 - e)] = std::uint8_t(cbits_ - 1 - target);
        }
      perms_.push_back(std::move(entry));
    } while (std::next_permutation(p.begin(), p.end()));
  }

  int n() const { return n_; }
  int cbits() const { return cbits_; }
  std::size_t size() const { return perms_.size(); }

  std::uint64_t apply(std::size_t perm, std::uint64_t x) const {
    const Entry& entry = perms_[perm];
    std::uint64_t y = 0;
    while (x) {
      const int b = std::countr_zero(x);
      x &= x - 1;
      y |= std::uint64_t{1} << entry.map[std::size_t(b)];
    }
    return y;
  }

  int moved(std::size_t perm) const { return perms_[perm].moved; }

  // x is canonical iff no relabeling yields a lexicographically smaller
  // encoding.
  bool is_canonical(std::uint64_t x) const {
    for (std::size_t t = 0; t < perms_.size(); ++t)
      if (apply(t, x) < x) return false;
    return true;
  }

  std::uint64_t canonical(std::uint64_t x) const {
    std::uint64_t best = x;
    for (std::size_t t = 0; t < perms_.size(); ++t)
      best = std::min(best, apply(t, x));
    return best;
  }

  struct AutStats {
    std::uint64_t aut_size = 0;
    int max_moved = 0;
  };

  AutStats aut_stats(std::uint64_t x) const {
    AutStats stats;
    for (std::size_t t = 0; t < perms_.size(); ++t) {
      if (apply(t, x) == x) {
        stats.aut_size += 1;
        stats.max_moved = std::max(stats.max_moved, moved(t));
      }
    }
    return stats;
  }

 private:
  struct Entry {
    std::vector<std::uint8_t> map;
    std::uint8_t moved = 0;
  };

  int n_;
  int cbits_;
  std::vector<Entry> perms_;
};

// ---------------------------------------------------------------------------
// Automorphism search. Candidate targets are restricted to the vertex's stable
// color class from 1-dimensional refinement (degree, then iterated
// neighbor-color multisets), which every automorphism must preserve.

namespace detail {

// Stable coloring; returns color ids per vertex (0-based).
inline std::vector<int> wl_colors(const AdjacencyRows& adj) {
  const int n = adj.n();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[std::size_t(v)] = adj.degree(v);
  std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
  int classes = 0;
  for (int round = 0; round < n; ++round) {
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[std::size_t(v)];
      sig.clear();
      sig.push_back(color[std::size_t(v)]);
      for (int u = 0; u < n; ++u)
        if (adj.adjacent(v, u)) sig.push_back(color[std::size_t(u)]);
      std::sort(sig.begin() + 1, sig.end());
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return signature[std::size_t(a)] < signature[std::size_t(b)];
    });
    std::vector<int> next(static_cast<std::size_t>(n));
    int id = 0;
    for (std::size_t t = 0; t < order.size(); ++t) {
      if (t > 0 && signature[std::size_t(order[t])] != signature[std::size_t(order[t - 1])])
        ++id;
      next[std::size_t(order[t])] = id;
    }
    const int new_classes = id + 1;
    color.swap(next);
    if (new_classes == classes) break;
    classes = new_classes;
  }
  return color;
}

struct AutSearch {
  const AdjacencyRows& adj;
  std::vector<int> color;
  std::vector<int> target;   // pi(v), -1 while unassigned
  std::vector<bool> used;
  std::uint64_t count = 0;
  int max_moved = 0;
  bool stop_at_nontrivial = false;
  bool found_nontrivial = false;

  explicit AutSearch(const AdjacencyRows& a) : adj(a), color(wl_colors(a)) {
    target.assign(std::size_t(adj.n()), -1);
    used.assign(std::size_t(adj.n()), false);
  }

  bool consistent(int v, int w) const {
    if (color[std::size_t(v)] != color[std::size_t(w)]) return false;
    for (int u = 0; u < v; ++u)
      if (adj.adjacent(v, u) != adj.adjacent(w, target[std::size_t(u)]))
        return false;
    return true;
  }

  void dfs(int v) {
    const int n = adj.n();
    if (v == n) {
      int moved = 0;
      for (int u = 0; u < n; ++u)
        if (target[std::size_t(u)] != u) ++moved;
      ++count;
      max_moved = std::max(max_moved, moved);
      if (moved > 0 && stop_at_nontrivial) found_nontrivial = true;
      return;
    }
    // non-identity targets first, so the identity leaf is always reached last
    for (int pass = 0; pass < 2 && !found_nontrivial; ++pass) {
      for (int w = 0; w < n && !found_nontrivial; ++w) {
        const bool self = w == v;
        if ((pass == 0 && self) || (pass == 1 && !self)) continue;
        if (used[std::size_t(w)] || !consistent(v, w)) continue;
        target[std::size_t(v)] = w;
        used[std::size_t(w)] = true;
        dfs(v + 1);
        used[std::size_t(w)] = false;
        target[std::size_t(v)] = -1;
      }
    }
  }
};

}  // namespace detail

struct AutReport {
  std::uint64_t aut_size = 0;  // d(Aut(G))
  int moved = 0;               // max over automorphisms of nodes moved
  bool rigid = false;
  std::uint64_t orbit_size = 0;  // n!/aut_size
};

inline AutReport automorphisms(const Graph& g, int limit = kDefaultAutLimit) {
  if (g.n() > limit)
    throw std::length_error("automorphisms: n beyond exhaustive limit");
  const AdjacencyRows adj(g);
  detail::AutSearch search(adj);
  search.dfs(0);
  AutReport report;
  report.aut_size = search.count;
  report.moved = search.max_moved;
  report.rigid = search.count == 1;
  report.orbit_size = factorial_u64(g.n()) / search.count;
  return report;
}

inline int moved_class(const Graph& g, int limit = kDefaultAutLimit) {
  return automorphisms(g, limit).moved;
}

// Exact rigidity test without enumerating the whole group: the candidate
// search stops at the first nontrivial automorphism. With all-singleton
// stable color classes the identity is the only candidate.
inline bool is_rigid(const Graph& g) {
  const AdjacencyRows adj(g);
  detail::AutSearch search(adj);
  bool all_singleton = true;
  {
    std::vector<int> count(std::size_t(adj.n()), 0);
    for (int c : search.color) ++count[std::size_t(c)];
    for (int v = 0; v < adj.n(); ++v)
      if (count[std::size_t(search.color[std::size_t(v)])] > 1) {
        all_singleton = false;
        break;
      }
  }
  if (all_singleton) return true;
  search.stop_at_nontrivial = true;
  search.dfs(0);
  return !search.found_nontrivial;
}

// d(Aut(G)) <= n^m for G whose automorphisms move at most m nodes.
inline mpz_class aut_bound(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("aut_bound: need 0 <= m <= n");
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), unsigned(n), unsigned(m));
  return result;
}

struct ProbClassBound {
  double value = 0.0;
  bool vacuous = false;  // bound >= 1 says nothing
};

// Prob(G in class m) <= 2^(-m(n/2 - 3m/8 - log2 n)).
inline ProbClassBound prob_class_bound(int n, int m) {
  if (m < 0 || m > n)
    throw std::invalid_argument("prob_class_bound: need 0 <= m <= n");
  ProbClassBound out;
  const double exponent =
      -double(m) * (double(n) / 2.0 - 3.0 * double(m) / 8.0 - std::log2(double(n)));
  out.value = std::exp2(exponent);
  out.vacuous = out.value >= 1.0;
  return out;
}

// ---------------------------------------------------------------------------
// Unlabeled counting.

struct UnlabeledCounts {
  int n = 0;
  mpz_class g_n;
  mpq_class E_n;    // expected automorphism group size, exact rational
  mpq_class lower;  // 2^(n choose 2) / n!
  mpq_class upper;  // lower * (1 + 4 n^4 / 2^n)
};

inline UnlabeledCounts unlabeled_counts_from_g(int n, const mpz_class& g) {
  UnlabeledCounts out;
  out.n = n;
  out.g_n = g;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), unsigned(n));
  mpz_class pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, unsigned(pair_count(n)));
  out.E_n = mpq_class(g * fact, pow2);
  out.E_n.canonicalize();
  out.lower = mpq_class(pow2, fact);
  out.lower.canonicalize();
  mpz_class pow2n;
  mpz_ui_pow_ui(pow2n.get_mpz_t(), 2, unsigned(n));
  mpz_class n4 = mpz_class(n) * n * n * n;
  out.upper = out.lower * mpq_class(pow2n + 4 * n4, pow2n);
  out.upper.canonicalize();
  return out;
}

// Independent oracle for g_n: orbit counting of the pair action over the
// cycle types of S_n. g_n = (1/n!) sum over cycle types lambda of
// (n!/z_lambda) 2^{e(lambda)}, e(lambda) = sum floor(c_i/2) + sum gcd(c_i,c_j).
inline mpz_class burnside_g(int n, int limit = kDefaultBurnsideLimit) {
  if (n < 1) throw std::invalid_argument("burnside_g: need n >= 1");
  if (n > limit) throw std::length_error("burnside_g: n beyond partition limit");
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), unsigned(n));
  mpz_class total = 0;

  std::vector<int> parts;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      // z_lambda = prod over part sizes j: j^{m_j} m_j!
      mpz_class z = 1;
      int run_value = -1, run_length = 0;
      auto flush = [&]() {
        if (run_length == 0) return;
        mpz_class jpow;
        mpz_ui_pow_ui(jpow.get_mpz_t(), unsigned(run_value), unsigned(run_length));
        mpz_class mfact;
        mpz_fac_ui(mfact.get_mpz_t(), unsigned(run_length));
        z *= jpow * mfact;
      };
      for (int part : parts) {
        if (part == run_value) {
          ++run_length;
        } else {
          flush();
          run_value = part;
          run_length = 1;
        }
      }
      flush();
      long edge_orbits = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        edge_orbits += parts[i] / 2;
        for (std::size_t j = i + 1; j < parts.size(); ++j)
          edge_orbits += std::gcd(parts[i], parts[j]);
      }
      mpz_class term = fact / z;
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), unsigned(edge_orbits));
      total += term;
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  recurse(recurse, n, n);

  mpz_class g = total / fact;
  if (g * fact != total)
    throw std::logic_error("burnside_g: cycle-type sum not divisible by n!");
  return g;
}

struct EnumerationResult {
  std::vector<Graph> representatives;  // ascending canonical encodings
  UnlabeledCounts counts;
};

// The labeled-to-unlabeled procedure: walk all 2^(n choose 2) encodings in
// ascending order and keep exactly those that no relabeling can lower.
inline EnumerationResult enumerate_unlabeled(int n, int limit = kDefaultEnumLimit) {
  if (n < 1) throw std::invalid_argument("enumerate_unlabeled: need n >= 1");
  if (n > limit || n > 8)
    throw std::length_error("enumerate_unlabeled: n beyond exhaustive limit");
  EnumerationResult result;
  const PermTable table(n);
  const std::uint64_t space = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t x = 0; x < space; ++x)
    if (table.is_canonical(x))
      result.representatives.push_back(graph_from_mbits(n, x));
  result.counts = unlabeled_counts_from_g(
      n, mpz_class(static_cast<unsigned long>(result.representatives.size())));
  return result;
}

// Lexicographically minimal encoding over all relabelings.
inline Graph canonical_form(const Graph& g, int limit = kDefaultAutLimit) {
  const int n = g.n();
  if (n > limit || n > 11)
    throw std::length_error("canonical_form: n beyond exhaustive limit");
  if (n <= 8) {
    const PermTable table(n);
    return graph_from_mbits(n, table.canonical(mbits_from_graph(g)));
  }
  // larger n: brute force over assignments, first slot restricted to
  // min-degree vertices (the lex-min first row forces minimum degree there)
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(std::size_t(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      adj[std::size_t(i - 1)][std::size_t(j - 1)] = i != j && g.edge(i, j);
  std::vector<int> deg(std::size_t(n), 0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (adj[std::size_t(v)][std::size_t(u)]) ++deg[std::size_t(v)];
  const int min_deg = *std::min_element(deg.begin(), deg.end());

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> rest;
  for (int first = 0; first < n; ++first) {
    if (deg[std::size_t(first)] != min_deg) continue;
    rest.clear();
    for (int v = 0; v < n; ++v)
      if (v != first) rest.push_back(v);
    std::sort(rest.begin(), rest.end());
    do {
      std::uint64_t image = 0;
      std::array<int, 12> order{};
      order[0] = first;
      for (int t = 1; t < n; ++t) order[std::size_t(t)] = rest[std::size_t(t) - 1];
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          image = (image << 1) |
                  std::uint64_t(adj[std::size_t(order[std::size_t(a)])]
                                   [std::size_t(order[std::size_t(b)])]);
      best = std::min(best, image);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return graph_from_mbits(n, best);
}

struct CanonicalIndex {
  std::uint64_t rank = 0;  // position of the canonical form in enumeration order
  int bit_length = 0;      // ceil(log2 g_n)
  mpz_class g_n;
};

inline CanonicalIndex canonical_index(const Graph& g, int limit = kDefaultEnumLimit) {
  const EnumerationResult enumeration = enumerate_unlabeled(g.n(), limit);
  const std::uint64_t canon = mbits_from_graph(canonical_form(g));
  std::uint64_t lo = 0, hi = enumeration.representatives.size();
  while (lo < hi) {
    const std::uint64_t mid = (lo + hi) / 2;
    if (mbits_from_graph(enumeration.representatives[mid]) < canon)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo >= enumeration.representatives.size() ||
      mbits_from_graph(enumeration.representatives[lo]) != canon)
    throw std::logic_error("canonical_index: canonical form missing from enumeration");
  CanonicalIndex out;
  out.rank = lo;
  out.g_n = enumeration.counts.g_n;
  if (out.g_n <= 1) {
    out.bit_length = 0;
  } else {
    const std::size_t bits = mpz_sizeinbase(out.g_n.get_mpz_t(), 2);
    const bool power_of_two = mpz_popcount(out.g_n.get_mpz_t()) == 1;
    out.bit_length = int(bits) - (power_of_two ? 1 : 0);
  }
  return out;
}

struct RigidityCheck {
  bool rigid = false;
  double delta_hat = 0.0;
  double threshold = 0.0;  // n + log2 n + 2
  bool within_threshold = false;
  // threshold satisfied but not rigid: diagnostic only, since delta_hat is
  // a compressor proxy rather than the true deficiency
  bool falsification_candidate = false;
};

inline RigidityCheck rigidity_deficiency_check(const Graph& g, double delta_hat) {
  RigidityCheck out;
  out.rigid = is_rigid(g);
  out.delta_hat = delta_hat;
  out.threshold = double(g.n()) + std::log2(double(g.n())) + 2.0;
  out.within_threshold = delta_hat <= out.threshold;
  out.falsification_candidate = out.within_threshold && !out.rigid;
  return out;
}

}  // namespace graphbits
