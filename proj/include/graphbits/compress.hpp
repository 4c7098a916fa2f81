#pragma once

#include <zlib.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphbits/graph.hpp"

namespace graphbits {

// Lossless compressors used as computable stand-ins for description length.
class Compressor {
 public:
  virtual ~Compressor() = default;
  virtual std::string id() const = 0;
  // Compressed size in bits of the packed byte rendering of the bitstring.
  virtual std::int64_t compressed_bits(const BitString& bits) const = 0;
};

class ZlibCompressor final : public Compressor {
 public:
  explicit ZlibCompressor(int level = 9) : level_(level) {}

  std::string id() const override {
    return "zlib-" + std::string(zlibVersion()) + "-l" + std::to_string(level_);
  }

  std::int64_t compressed_bits(const BitString& bits) const override {
    const std::vector<std::uint8_t> input = bits.packed_bytes();
    uLongf dest_len = compressBound(uLong(input.size()));
    std::vector<std::uint8_t> dest(dest_len);
    const int rc = compress2(dest.data(), &dest_len,
                             input.empty() ? reinterpret_cast<const Bytef*>("") : input.data(),
                             uLong(input.size()), level_);
    if (rc != Z_OK) throw std::runtime_error("zlib compress2 failed");
    return std::int64_t(dest_len) * 8;
  }

 private:
  int level_;
};

// Identity "compressor": stored bytes, no modeling. Useful as a null
// baseline and for exercising the plug-in selection path.
class StoreCompressor final : public Compressor {
 public:
  std::string id() const override { return "store"; }
  std::int64_t compressed_bits(const BitString& bits) const override {
    return std::int64_t((bits.size() + 7) / 8) * 8;
  }
};

inline std::shared_ptr<const Compressor> compressor_for(const std::string& id) {
  if (id == "zlib") return std::make_shared<ZlibCompressor>();
  if (id == "store") return std::make_shared<StoreCompressor>();
  throw std::invalid_argument("unknown compressor id: " + id);
}

// Mean overhead, in bits, of the compressor on uniform random strings of
// the given length (fixed internal seeds, so the value is reproducible).
// Subtracting it removes the header/framing bias from deficiency estimates.
inline double compressor_calibration_offset(const std::string& compressor_id,
                                            std::size_t nbits) {
  static std::mutex mu;
  static std::map<std::pair<std::string, std::size_t>, double> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({compressor_id, nbits});
    if (it != cache.end()) return it->second;
  }
  const auto compressor = compressor_for(compressor_id);
  constexpr int kSamples = 16;
  constexpr std::uint64_t kCalibrationSeed = 0x6772617068626974ULL;
  double total = 0.0;
  for (int s = 0; s < kSamples; ++s) {
    Xoshiro256StarStar rng(kCalibrationSeed, std::uint64_t(s));
    BitString bits(nbits);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < nbits; ++i) {
      if ((i & 63) == 0) word = rng.next();
      bits.set(i, (word >> (i & 63)) & 1u);
    }
    total += double(compressor->compressed_bits(bits)) - double(nbits);
  }
  const double offset = std::max(0.0, total / kSamples);
  std::lock_guard<std::mutex> lock(mu);
  cache[{compressor_id, nbits}] = offset;
  return offset;
}

// Compression-based estimate of the randomness deficiency of E(G):
// delta_hat = max(0, |E(G)| - calibrated compressed length). An upper-bound
// style proxy; larger delta_hat = more compressible = less random.
struct DeficiencyEstimate {
  int n = 0;
  std::int64_t encoded_len = 0;     // n(n-1)/2 bits
  std::int64_t compressed_len = 0;  // raw compressor output, bits
  double calibration_offset = 0.0;  // subtracted from compressed_len
  double delta_hat = 0.0;
  std::string compressor_id;
};

inline DeficiencyEstimate estimate_deficiency(const Graph& g,
                                              const std::string& compressor_id = "zlib",
                                              bool calibrate = true) {
  const auto compressor = compressor_for(compressor_id);
  DeficiencyEstimate est;
  est.n = g.n();
  est.encoded_len = pair_count(g.n());
  est.compressed_len = compressor->compressed_bits(g.bits());
  est.calibration_offset =
      calibrate ? compressor_calibration_offset(compressor_id, g.bits().size())
                : 0.0;
  est.compressor_id = compressor->id();
  est.delta_hat = std::max(
      0.0, double(est.encoded_len) -
               (double(est.compressed_len) - est.calibration_offset));
  return est;
}

}  // namespace graphbits
