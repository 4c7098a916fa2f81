#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graphbits/graph.hpp"

namespace graphbits {

// Native text format: "<n>:<hex of the edge bits>", hex padded to
// ceil(n(n-1)/2 / 4) digits with edge index 0 in the most significant bit.
inline std::string to_native(const Graph& g) {
  return std::to_string(g.n()) + ":" + g.bits().to_hex();
}

inline Graph from_native(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("from_native: missing ':'");
  int n = 0;
  for (char c : text.substr(0, colon)) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("from_native: bad node count");
    n = n * 10 + (c - '0');
    if (n > 100000) throw std::invalid_argument("from_native: node count too large");
  }
  if (n < 1) throw std::invalid_argument("from_native: need n >= 1");
  const std::size_t nbits = std::size_t(pair_count(n));
  return Graph(n, BitString::from_hex(text.substr(colon + 1), nbits));
}

// graph6: standard public format. Size word N(n), then the upper triangle
// in column order (1,2),(1,3),(2,3),(1,4),... packed 6 bits per char,
// each char offset by 63. Column order differs from this codec's row-major
// order, so every bit is remapped through edge_index.
inline std::string to_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(char(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(char(63 + ((n >> 12) & 63)));
    out.push_back(char(63 + ((n >> 6) & 63)));
    out.push_back(char(63 + (n & 63)));
  } else {
    throw std::invalid_argument("to_graph6: n too large");
  }
  unsigned group = 0;
  int filled = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      group = (group << 1) | unsigned(g.edge(i, j));
      if (++filled == 6) {
        out.push_back(char(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(char(63 + (group << (6 - filled))));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  auto next_char = [&]() -> unsigned {
    if (pos >= text.size())
      throw std::invalid_argument("from_graph6: truncated input");
    const char c = text[pos++];
    if (c < 63 || c > 126)
      throw std::invalid_argument("from_graph6: byte out of range");
    return unsigned(c) - 63;
  };

  int n;
  if (!text.empty() && text[0] == '~') {
    ++pos;
    if (pos < text.size() && text[pos] == '~')
      throw std::invalid_argument("from_graph6: n >= 2^18 unsupported");
    const unsigned a = next_char(), b = next_char(), c = next_char();
    n = int((a << 12) | (b << 6) | c);
  } else {
    n = int(next_char());
  }
  if (n < 1) throw std::invalid_argument("from_graph6: need n >= 1");

  const std::int64_t nbits = pair_count(n);
  const std::size_t expect = std::size_t(pos) + std::size_t((nbits + 5) / 6);
  if (text.size() != expect)
    throw std::invalid_argument("from_graph6: wrong length");

  Graph g(n);
  std::int64_t bit = 0;
  unsigned group = 0;
  int avail = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      if (avail == 0) {
        group = next_char();
        avail = 6;
      }
      if ((group >> (avail - 1)) & 1u) g.set_edge(i, j, true);
      --avail;
      ++bit;
    }
  }
  if (avail > 0 && (group & ((1u << avail) - 1)) != 0)
    throw std::invalid_argument("from_graph6: nonzero padding");
  return g;
}

}  // namespace graphbits
