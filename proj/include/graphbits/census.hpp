#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graphbits/blockstats.hpp"
#include "graphbits/covers.hpp"
#include "graphbits/graph.hpp"

namespace graphbits {

// Probability that fair-coin edges hit one fixed k-node pattern: 2^(-k(k-1)/2).
inline double pattern_probability(int k) {
  return std::ldexp(1.0, -int(pair_count(k)));
}

namespace detail {

// Visit all k-subsets of {1..n} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) s[std::size_t(a)] = a + 1;
  while (true) {
    fn(const_cast<const std::vector<int>&>(s));
    int a = k - 1;
    while (a >= 0 && s[std::size_t(a)] == n - (k - 1 - a)) --a;
    if (a < 0) break;
    ++s[std::size_t(a)];
    for (int b = a + 1; b < k; ++b) s[std::size_t(b)] = s[std::size_t(b) - 1] + 1;
  }
}

// Pattern id of the induced subgraph on sorted subset s: bit e of the
// pattern encoding at integer bit e. Requires k(k-1)/2 <= 63.
inline std::uint64_t induced_pattern_id(const Graph& g, const std::vector<int>& s) {
  const int k = int(s.size());
  std::uint64_t id = 0;
  std::size_t e = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b, ++e)
      if (g.edge(s[std::size_t(a)], s[std::size_t(b)])) id |= std::uint64_t{1} << e;
  return id;
}

inline std::uint64_t pattern_id(const PatternGraph& h) {
  if (pair_count(h.k()) > 63)
    throw std::length_error("pattern_id: pattern too large for id fast path");
  std::uint64_t id = 0;
  for (std::size_t e = 0; e < h.bits().size(); ++e)
    if (h.bits().get(e)) id |= std::uint64_t{1} << e;
  return id;
}

inline PatternGraph pattern_from_id(int k, std::uint64_t id) {
  BitString bits(static_cast<std::size_t>(pair_count(k)));
  for (std::size_t e = 0; e < bits.size(); ++e)
    bits.set(e, (id >> e) & 1u);
  return PatternGraph(k, std::move(bits));
}

}  // namespace detail

// #H(G): number of k-subsets whose induced ordered-labeled subgraph is H.
inline std::int64_t count_occurrences(const Graph& g, const PatternGraph& h) {
  if (h.k() > g.n())
    throw std::invalid_argument("count_occurrences: pattern larger than graph");
  std::int64_t count = 0;
  detail::for_each_subset(g.n(), h.k(), [&](const std::vector<int>& s) {
    if (induced_pattern(g, s) == h) ++count;
  });
  return count;
}

// #H(G,i): occurrences of H among the N disjoint subsets of cover C_i.
inline std::int64_t count_occurrences_in_cover(const Graph& g, const PatternGraph& h,
                                               const CoverFamily& family,
                                               std::int64_t cover_index) {
  if (family.n != g.n() || family.k != h.k())
    throw std::invalid_argument("count_occurrences_in_cover: family mismatch");
  if (cover_index < 0 || cover_index >= family.h)
    throw std::out_of_range("count_occurrences_in_cover: cover index");
  std::int64_t count = 0;
  for (const auto& subset : family.covers[std::size_t(cover_index)])
    if (induced_pattern(g, subset) == h) ++count;
  return count;
}

// Which alpha the deviation bound uses. The subgraph form takes
// alpha = (K_H + delta + log2 h + c) * 3 / log2(e); the block form carries a
// factor 3l (l = k(k-1)/2) instead of 3, matching the string-block bound.
// Reports record the variant used.
enum class AlphaVariant { kSubgraphForm, kBlockForm };

struct FrequencyBound {
  double alpha = 0.0;
  double value = 0.0;
  std::int64_t h = 0;
  double p = 0.0;
  AlphaVariant variant = AlphaVariant::kSubgraphForm;
};

// Deviation bound C(n,k) * sqrt(alpha (k/n) p) for |#H(G) - C(n,k) p|.
inline FrequencyBound frequency_bound(int n, int k, double K_H, double delta,
                                      double c,
                                      AlphaVariant variant = AlphaVariant::kSubgraphForm) {
  if (k < 1 || n < 1 || n % k != 0)
    throw std::invalid_argument("frequency_bound: k must divide n");
  if (K_H < 0 || delta < 0 || c < 0)
    throw std::invalid_argument("frequency_bound: negative parameter");
  FrequencyBound out;
  out.variant = variant;
  out.h = binomial(n, k) / (n / k);
  out.p = pattern_probability(k);
  const double log_h = out.h > 1 ? std::log2(double(out.h)) : 0.0;
  const double factor =
      variant == AlphaVariant::kSubgraphForm ? 3.0 : 3.0 * double(pair_count(k));
  out.alpha = (K_H + delta + log_h + c) * factor / kLog2E;
  out.value = double(binomial(n, k)) *
              std::sqrt(out.alpha * (double(k) / double(n)) * out.p);
  return out;
}

// K(H|n) surrogate from the all-subgraphs argument:
// k(k-1)/2 + 2 log2(k(k-1)/2) + c_K.
inline double pattern_k_surrogate(int k, double c_K = 0.0) {
  const double bits = double(pair_count(k));
  return bits + 2.0 * std::log2(std::max(1.0, bits)) + c_K;
}

struct KThreshold {
  int k = 0;
  double k_surrogate = 0.0;
};

// k = floor(sqrt(2 log2 n)), the scale at which every pattern shows up.
inline KThreshold k_threshold(int n) {
  if (n < 2) throw std::invalid_argument("k_threshold: need n >= 2");
  KThreshold out;
  out.k = int(std::floor(std::sqrt(2.0 * std::log2(double(n)))));
  out.k_surrogate = pattern_k_surrogate(out.k);
  return out;
}

struct PatternPresence {
  bool all_present = false;
  std::vector<PatternGraph> missing;
};

// True iff every one of the 2^{k(k-1)/2} patterns occurs at least once.
inline PatternPresence all_patterns_present(const Graph& g, int k,
                                            std::int64_t pattern_limit = 1 << 20) {
  if (k < 1 || k > g.n())
    throw std::invalid_argument("all_patterns_present: need 1 <= k <= n");
  const std::int64_t cbits = pair_count(k);
  if (cbits > 62 || (std::int64_t{1} << cbits) > pattern_limit)
    throw std::length_error("all_patterns_present: pattern space beyond limit");
  const std::size_t total = std::size_t(1) << cbits;
  std::vector<bool> seen(total, false);
  detail::for_each_subset(g.n(), k, [&](const std::vector<int>& s) {
    seen[std::size_t(detail::induced_pattern_id(g, s))] = true;
  });
  PatternPresence out;
  out.all_present = true;
  for (std::size_t id = 0; id < total; ++id) {
    if (!seen[id]) {
      out.all_present = false;
      out.missing.push_back(detail::pattern_from_id(k, std::uint64_t(id)));
    }
  }
  return out;
}

// Census of one pattern against a graph, with the evaluated deviation bound.
struct CensusResult {
  PatternGraph H;
  std::int64_t total = 0;
  std::vector<std::int64_t> per_cover;  // empty when no cover family used
  double p = 0.0;
  double expected = 0.0;  // C(n,k) p
  double bound = 0.0;
  bool within = false;
  AlphaVariant variant = AlphaVariant::kSubgraphForm;
};

// Full census over all 2^{k(k-1)/2} patterns in one subset sweep.
// When `family` is non-null it must match (g.n(), k) and per-cover counts
// are collected in the same sweep.
inline std::vector<CensusResult> census_all_patterns(
    const Graph& g, int k, const CoverFamily* family, double K_H, double delta,
    double c, AlphaVariant variant = AlphaVariant::kSubgraphForm,
    std::int64_t pattern_limit = 1 << 20) {
  if (k < 1 || k > g.n())
    throw std::invalid_argument("census_all_patterns: need 1 <= k <= n");
  const std::int64_t cbits = pair_count(k);
  if (cbits > 62 || (std::int64_t{1} << cbits) > pattern_limit)
    throw std::length_error("census_all_patterns: pattern space beyond limit");
  if (family && (family->n != g.n() || family->k != k))
    throw std::invalid_argument("census_all_patterns: family mismatch");

  const std::size_t npatterns = std::size_t(1) << cbits;
  std::vector<std::int64_t> totals(npatterns, 0);
  std::vector<std::vector<std::int64_t>> per_cover;
  if (family) {
    per_cover.assign(npatterns,
                     std::vector<std::int64_t>(std::size_t(family->h), 0));
    for (std::int64_t i = 0; i < family->h; ++i)
      for (const auto& subset : family->covers[std::size_t(i)]) {
        const std::uint64_t id = detail::induced_pattern_id(g, subset);
        totals[std::size_t(id)] += 1;
        per_cover[std::size_t(id)][std::size_t(i)] += 1;
      }
  } else {
    detail::for_each_subset(g.n(), k, [&](const std::vector<int>& s) {
      totals[std::size_t(detail::induced_pattern_id(g, s))] += 1;
    });
  }

  const bool divides = g.n() % k == 0;
  FrequencyBound fb;
  if (divides) fb = frequency_bound(g.n(), k, K_H, delta, c, variant);
  std::vector<CensusResult> out;
  out.reserve(npatterns);
  for (std::size_t id = 0; id < npatterns; ++id) {
    CensusResult r{detail::pattern_from_id(k, std::uint64_t(id)),
                   totals[id],
                   family ? per_cover[id] : std::vector<std::int64_t>{},
                   pattern_probability(k),
                   double(binomial(g.n(), k)) * pattern_probability(k),
                   divides ? fb.value : 0.0,
                   false,
                   variant};
    r.within = divides && std::abs(double(r.total) - r.expected) <= r.bound;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace graphbits
