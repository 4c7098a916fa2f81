#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "graphbits/graph.hpp"
#include "graphbits/maxflow.hpp"

namespace graphbits {

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int t = 1; t <= k; ++t) {
    // exact at every step: result * (n-k+t) is divisible by t
    result = result * unsigned(n - k + t) / unsigned(t);
    if (result > (unsigned __int128)INT64_MAX)
      throw std::overflow_error("binomial: value exceeds int64");
  }
  return std::int64_t(result);
}

// Partition of all C(n,k) k-subsets of {1..n} into h = C(n,k)/(n/k)
// covers, each cover a partition of {1..n} into N = n/k disjoint subsets.
struct CoverFamily {
  int n = 0;
  int k = 0;
  std::int64_t N = 0;  // subsets per cover
  std::int64_t h = 0;  // number of covers
  // covers[i] holds N sorted k-subsets (1-based node labels).
  std::vector<std::vector<std::vector<int>>> covers;
};

// Constructive route: add elements 1..n one at a time; at each step an
// integral max-flow decides, for every cover, which of its partial subsets
// receives the new element. The flow network has one unit source arc per
// cover and a demand arc per distinct partial-subset trace, sized so that
// every eventual k-subset shows up exactly once overall.
inline CoverFamily baranyai_covers(int n, int k,
                                   std::int64_t subset_limit = 10'000'000) {
  if (k < 1) throw std::invalid_argument("baranyai_covers: need k >= 1");
  if (n < 1 || n % k != 0)
    throw std::invalid_argument("baranyai_covers: k must divide n");
  if (n > 63)
    throw std::invalid_argument("baranyai_covers: n beyond mask width");
  const std::int64_t total_subsets = binomial(n, k);
  if (total_subsets > subset_limit)
    throw std::length_error("baranyai_covers: C(n,k) beyond configured limit");

  const std::int64_t N = n / k;
  const std::int64_t h = total_subsets / N;

  // slots[i] = partial subsets of cover i, as node masks
  std::vector<std::vector<std::uint64_t>> slots(
      std::size_t(h), std::vector<std::uint64_t>(std::size_t(N), 0));
  std::vector<std::vector<int>> slot_size(
      std::size_t(h), std::vector<int>(std::size_t(N), 0));

  for (int elem = 1; elem <= n; ++elem) {
    // group incomplete slots by trace within each cover
    std::map<std::uint64_t, int> trace_node;  // trace mask -> flow node id
    std::vector<std::uint64_t> trace_of_node;
    const int source = 0;
    // cover i = node 1 + i; trace nodes appended after covers; sink last
    MaxFlow net(1 + int(h));
    // (arc id, trace node) per cover
    std::vector<std::vector<std::pair<int, int>>> cover_arcs(
        static_cast<std::size_t>(h));
    for (std::int64_t i = 0; i < h; ++i) {
      net.add_edge(source, 1 + int(i), 1);
      std::vector<std::uint64_t> seen;
      for (std::int64_t sidx = 0; sidx < N; ++sidx) {
        if (slot_size[std::size_t(i)][std::size_t(sidx)] >= k) continue;
        const std::uint64_t trace = slots[std::size_t(i)][std::size_t(sidx)];
        if (std::find(seen.begin(), seen.end(), trace) != seen.end()) continue;
        seen.push_back(trace);
        auto it = trace_node.find(trace);
        int tn;
        if (it == trace_node.end()) {
          tn = net.add_node();
          trace_node.emplace(trace, tn);
          trace_of_node.push_back(trace);
        } else {
          tn = it->second;
        }
        const int arc = net.add_edge(1 + int(i), tn, 1);
        cover_arcs[std::size_t(i)].push_back({arc, tn});
      }
    }
    const int sink = net.add_node();
    const int remaining = n - elem;  // elements still to place after this one
    for (auto& [trace, tn] : trace_node) {
      const int size = std::popcount(trace);
      const std::int64_t demand = binomial(remaining, k - size - 1);
      if (demand > 0) net.add_edge(tn, sink, demand);
    }
    const std::int64_t flow = net.max_flow(source, sink);
    if (flow != h)
      throw std::logic_error("baranyai_covers: infeasible flow step");
    // apply: each cover augments the first incomplete slot with the chosen trace
    for (std::int64_t i = 0; i < h; ++i) {
      std::uint64_t chosen_trace = 0;
      bool found = false;
      for (auto [arc, tn] : cover_arcs[std::size_t(i)]) {
        if (net.flow_on(arc) == 1) {
          chosen_trace = trace_of_node[std::size_t(tn) - std::size_t(h) - 1];
          found = true;
          break;
        }
      }
      if (!found)
        throw std::logic_error("baranyai_covers: cover left unaugmented");
      for (std::int64_t sidx = 0; sidx < N; ++sidx) {
        if (slot_size[std::size_t(i)][std::size_t(sidx)] < k &&
            slots[std::size_t(i)][std::size_t(sidx)] == chosen_trace) {
          slots[std::size_t(i)][std::size_t(sidx)] |= std::uint64_t{1}
                                                      << (elem - 1);
          slot_size[std::size_t(i)][std::size_t(sidx)] += 1;
          break;
        }
      }
    }
  }

  CoverFamily family;
  family.n = n;
  family.k = k;
  family.N = N;
  family.h = h;
  family.covers.resize(std::size_t(h));
  for (std::int64_t i = 0; i < h; ++i) {
    auto& cover = family.covers[std::size_t(i)];
    cover.reserve(std::size_t(N));
    for (std::int64_t sidx = 0; sidx < N; ++sidx) {
      std::uint64_t mask = slots[std::size_t(i)][std::size_t(sidx)];
      std::vector<int> subset;
      subset.reserve(std::size_t(k));
      while (mask) {
        subset.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
      }
      cover.push_back(std::move(subset));
    }
    std::sort(cover.begin(), cover.end());
  }
  return family;
}

// Checks all three defining invariants; throws on the first violation.
inline void validate_cover_family(const CoverFamily& family) {
  if (family.h != std::int64_t(family.covers.size()))
    throw std::logic_error("cover family: wrong cover count");
  if (family.h * family.N != binomial(family.n, family.k))
    throw std::logic_error("cover family: h*N != C(n,k)");
  std::map<std::vector<int>, int> seen;
  for (const auto& cover : family.covers) {
    if (std::int64_t(cover.size()) != family.N)
      throw std::logic_error("cover family: wrong subsets per cover");
    std::uint64_t used = 0;
    for (const auto& subset : cover) {
      if (std::int64_t(subset.size()) != family.k)
        throw std::logic_error("cover family: wrong subset size");
      for (int v : subset) {
        if (v < 1 || v > family.n)
          throw std::logic_error("cover family: node out of range");
        if (used & (std::uint64_t{1} << (v - 1)))
          throw std::logic_error("cover family: cover is not a partition");
        used |= std::uint64_t{1} << (v - 1);
      }
      seen[subset] += 1;
    }
    if (std::popcount(used) != family.n)
      throw std::logic_error("cover family: cover misses nodes");
  }
  if (std::int64_t(seen.size()) != binomial(family.n, family.k))
    throw std::logic_error("cover family: not all subsets present");
  for (const auto& [subset, count] : seen)
    if (count != 1)
      throw std::logic_error("cover family: subset appears more than once");
}

}  // namespace graphbits
