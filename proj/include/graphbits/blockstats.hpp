#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "graphbits/bitstring.hpp"

namespace graphbits {

inline constexpr double kLog2E = 1.4426950408889634074;  // log2(e)

// Number of (possibly overlapping) occurrences of y in x. With wrap on,
// all |x| cyclic start positions count; with wrap off, only the
// |x|-|y|+1 non-wrapping ones.
inline std::uint64_t count_block(const BitString& x, const BitString& y,
                                 bool wrap = true) {
  if (y.size() == 0) throw std::invalid_argument("count_block: empty block");
  if (y.size() > x.size())
    throw std::invalid_argument("count_block: block longer than string");
  const std::size_t n = x.size();
  const std::size_t l = y.size();
  const std::size_t starts = wrap ? n : n - l + 1;
  std::uint64_t count = 0;
  for (std::size_t p = 0; p < starts; ++p) {
    bool match = true;
    for (std::size_t t = 0; t < l; ++t) {
      if (x.get_cyclic(p + t) != y.get(t)) {
        match = false;
        break;
      }
    }
    if (match) ++count;
  }
  return count;
}

// Occurrences at positions that are multiples of |y| (non-overlapping
// aligned blocks, no wrap). |x| need not be a multiple of |y|; a partial
// tail block never matches.
inline std::uint64_t count_aligned_block(const BitString& x, const BitString& y) {
  if (y.size() == 0) throw std::invalid_argument("count_aligned_block: empty block");
  const std::size_t l = y.size();
  std::uint64_t count = 0;
  for (std::size_t p = 0; p + l <= x.size(); p += l) {
    bool match = true;
    for (std::size_t t = 0; t < l; ++t) {
      if (x.get(p + t) != y.get(t)) {
        match = false;
        break;
      }
    }
    if (match) ++count;
  }
  return count;
}

// Parameters of the deviation bound |#y(x) - pn| <= sqrt(alpha p n),
// alpha = (K_y + log2 l + delta + c) * 3l / log2(e). All quantities in bits,
// all logs base 2.
struct BlockStatParams {
  std::uint64_t n = 0;  // string length
  std::uint64_t l = 1;  // block length
  double K_y = 0.0;     // surrogate for K(y|n)
  double delta = 0.0;   // randomness deficiency
  double c = 0.0;       // tuning constant

  double p() const { return std::ldexp(1.0, -int(l)); }
};

struct BlockBound {
  double alpha = 0.0;
  double value = 0.0;
  // The bound's hypothesis needs l <= log2 n; the arithmetic is still
  // evaluated when it does not hold, this just flags it.
  bool precondition_violated = false;
};

inline BlockBound block_deviation_bound(const BlockStatParams& params) {
  if (params.l < 1)
    throw std::invalid_argument("block_deviation_bound: need l >= 1");
  if (params.K_y < 0 || params.delta < 0 || params.c < 0)
    throw std::invalid_argument("block_deviation_bound: negative parameter");
  BlockBound out;
  const double log2l = std::log2(double(params.l));
  out.alpha = (params.K_y + log2l + params.delta + params.c) *
              (3.0 * double(params.l)) / kLog2E;
  out.value = std::sqrt(out.alpha * params.p() * double(params.n));
  out.precondition_violated =
      params.n == 0 || double(params.l) > std::log2(double(params.n));
  return out;
}

// Fraction of strings (graph encodings) that are delta-incompressible:
// at least 1 - 2^-delta.
inline double random_fraction_bound(double delta) {
  if (delta < 0)
    throw std::invalid_argument("random_fraction_bound: need delta >= 0");
  return 1.0 - std::exp2(-delta);
}

// Default surrogate for K(y|n) of an l-bit block: l + 2 log2 l + c_K,
// from K(x) <= C(x) + 2 log C(x) + O(1) and C(y) <= l(y) + O(1).
inline double block_k_surrogate(std::uint64_t l, double c_K = 0.0) {
  const double len = double(l);
  return len + 2.0 * std::log2(std::max(1.0, len)) + c_K;
}

}  // namespace graphbits
