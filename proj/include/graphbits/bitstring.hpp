#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace graphbits {

// Fixed-length bit sequence. Bit 0 is the first (most significant) position
// of the string; storage is word-packed, LSB-first within each word.
class BitString {
 public:
  BitString() = default;

  explicit BitString(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  static BitString from_string(std::string_view s) {
    BitString b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        b.set(i, true);
      else if (s[i] != '0')
        throw std::invalid_argument("BitString: expected only '0'/'1'");
    }
    return b;
  }

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool get(std::size_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i, bool v) {
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  std::uint64_t popcount() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }

  // Cyclic read, used by wraparound block scans.
  bool get_cyclic(std::size_t i) const { return get(i % nbits_); }

  bool operator==(const BitString& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }
  bool operator!=(const BitString& o) const { return !(*this == o); }

  // Lexicographic comparison of equal-length strings; position 0 dominates.
  int compare_lex(const BitString& o) const {
    if (nbits_ != o.nbits_)
      throw std::invalid_argument("compare_lex: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const std::uint64_t diff = words_[w] ^ o.words_[w];
      if (diff) {
        const int bit = std::countr_zero(diff);
        return ((words_[w] >> bit) & 1u) ? 1 : -1;
      }
    }
    return 0;
  }

  std::string to_string() const {
    std::string s(nbits_, '0');
    for (std::size_t i = 0; i < nbits_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  // Bytes with bit 0 in the most significant position of byte 0,
  // zero-padded at the tail.
  std::vector<std::uint8_t> packed_bytes() const {
    std::vector<std::uint8_t> out((nbits_ + 7) / 8, 0);
    for (std::size_t i = 0; i < nbits_; ++i)
      if (get(i)) out[i >> 3] |= std::uint8_t(0x80u >> (i & 7));
    return out;
  }

  // Hex rendering, ceil(nbits/4) digits, bit 0 = MSB of the first digit.
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    const std::size_t ndigits = (nbits_ + 3) / 4;
    std::string s(ndigits, '0');
    for (std::size_t d = 0; d < ndigits; ++d) {
      unsigned nib = 0;
      for (unsigned b = 0; b < 4; ++b) {
        const std::size_t i = d * 4 + b;
        if (i < nbits_ && get(i)) nib |= 8u >> b;
      }
      s[d] = digits[nib];
    }
    return s;
  }

  static BitString from_hex(std::string_view hex, std::size_t nbits) {
    const std::size_t ndigits = (nbits + 3) / 4;
    if (hex.size() != ndigits)
      throw std::invalid_argument("BitString::from_hex: expected " +
                                  std::to_string(ndigits) + " hex digits");
    BitString b(nbits);
    for (std::size_t d = 0; d < ndigits; ++d) {
      const unsigned nib = hex_value(hex[d]);
      for (unsigned bit = 0; bit < 4; ++bit) {
        const std::size_t i = d * 4 + bit;
        const bool v = (nib >> (3 - bit)) & 1u;
        if (i < nbits)
          b.set(i, v);
        else if (v)
          throw std::invalid_argument("BitString::from_hex: nonzero padding");
      }
    }
    return b;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void check_index(std::size_t i) const {
    if (i >= nbits_) throw std::out_of_range("BitString: index out of range");
  }

  static unsigned hex_value(char c) {
    if (c >= '0' && c <= '9') return unsigned(c - '0');
    if (c >= 'a' && c <= 'f') return unsigned(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return unsigned(c - 'A' + 10);
    throw std::invalid_argument("BitString::from_hex: bad hex digit");
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace graphbits
