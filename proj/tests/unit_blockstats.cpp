#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "graphbits/blockstats.hpp"
#include "graphbits/rng.hpp"

using namespace graphbits;

namespace {

BitString random_bits(std::size_t nbits, std::uint64_t seed, std::uint64_t stream) {
  Xoshiro256StarStar rng(seed, stream);
  BitString bits(nbits);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < nbits; ++i) {
    if ((i & 63) == 0) word = rng.next();
    bits.set(i, (word >> (i & 63)) & 1u);
  }
  return bits;
}

BitString rotated(const BitString& x, std::size_t shift) {
  BitString out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out.set(i, x.get((i + shift) % x.size()));
  return out;
}

}  // namespace

TEST_CASE("count_block examples") {
  CHECK(count_block(BitString::from_string("1111"), BitString::from_string("1")) == 4);
  CHECK(count_block(BitString::from_string("0101"), BitString::from_string("01"), true) == 2);
  CHECK(count_block(BitString::from_string("1111"), BitString::from_string("11"), true) == 4);
  // wrap off: only 3 start positions
  CHECK(count_block(BitString::from_string("1111"), BitString::from_string("11"), false) == 3);
  // wraparound occurrence: y matches only across the boundary
  CHECK(count_block(BitString::from_string("1001"), BitString::from_string("11"), true) == 1);
  CHECK(count_block(BitString::from_string("1001"), BitString::from_string("11"), false) == 0);
  CHECK_THROWS_AS(count_block(BitString::from_string("11"), BitString()), std::invalid_argument);
  CHECK_THROWS_AS(count_block(BitString::from_string("1"), BitString::from_string("11")),
                  std::invalid_argument);
}

TEST_CASE("count_block: cyclic positions partition over all patterns") {
  // sum over all 2^l patterns of the wrapped count equals n
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const BitString x = random_bits(97, 12345, seed);
    for (std::size_t l = 1; l <= 3; ++l) {
      std::uint64_t total = 0;
      for (std::uint64_t pat = 0; pat < (std::uint64_t{1} << l); ++pat) {
        BitString y(l);
        for (std::size_t t = 0; t < l; ++t) y.set(t, (pat >> t) & 1u);
        total += count_block(x, y, true);
      }
      CHECK(total == x.size());
    }
  }
}

TEST_CASE("count_block is invariant under cyclic rotation") {
  const BitString x = random_bits(64, 99, 0);
  const BitString y = BitString::from_string("011");
  const std::uint64_t base = count_block(x, y, true);
  for (std::size_t shift : {1u, 7u, 31u, 63u})
    CHECK(count_block(rotated(x, shift), y, true) == base);
}

TEST_CASE("count_block empirical mean tracks p*n") {
  // mean over 1e4 random strings of length 1024, l in {1,2,3}: within
  // 3 sigma of the Binomial(n, p) band
  const std::size_t n = 1024;
  const int samples = 10000;
  for (std::size_t l = 1; l <= 3; ++l) {
    BitString y(l);  // all-zero pattern
    double total = 0;
    for (int s = 0; s < samples; ++s)
      total += double(count_block(random_bits(n, 777, std::uint64_t(s)), y, true));
    const double p = std::ldexp(1.0, -int(l));
    const double mean = total / samples;
    const double sigma = std::sqrt(double(n) * p * (1 - p));
    CHECK(std::abs(mean - p * double(n)) <= 3.0 * sigma);
  }
}

TEST_CASE("count_aligned_block") {
  const BitString x = BitString::from_string("11011011");
  CHECK(count_aligned_block(x, BitString::from_string("11")) == 2);
  CHECK(count_aligned_block(x, BitString::from_string("1101")) == 1);
  // partial tail block never matches
  CHECK(count_aligned_block(BitString::from_string("11111"), BitString::from_string("11")) == 2);
}

TEST_CASE("block_deviation_bound frozen example and properties") {
  // K_y=2, l=1, delta=0, c=0, n=1024: alpha = 6/log2(e), bound = sqrt(alpha*512)
  BlockStatParams params;
  params.n = 1024;
  params.l = 1;
  params.K_y = 2;
  const BlockBound bound = block_deviation_bound(params);
  CHECK(bound.alpha == doctest::Approx(4.1588830833596715).epsilon(1e-12));
  CHECK(bound.value == doctest::Approx(46.144860371228255).epsilon(1e-12));
  CHECK_FALSE(bound.precondition_violated);

  SUBCASE("strictly monotone in delta, K_y, c") {
    BlockStatParams p2 = params;
    p2.delta = 1;
    CHECK(block_deviation_bound(p2).value > bound.value);
    p2 = params;
    p2.K_y = 3;
    CHECK(block_deviation_bound(p2).value > bound.value);
    p2 = params;
    p2.c = 0.5;
    CHECK(block_deviation_bound(p2).value > bound.value);
  }

  SUBCASE("degenerate n = 0") {
    BlockStatParams p2 = params;
    p2.n = 0;
    const BlockBound b2 = block_deviation_bound(p2);
    CHECK(b2.value == 0.0);
    CHECK(b2.precondition_violated);
  }

  SUBCASE("l beyond log2 n is flagged, not rejected") {
    BlockStatParams p2 = params;
    p2.n = 16;
    p2.l = 5;
    const BlockBound b2 = block_deviation_bound(p2);
    CHECK(b2.precondition_violated);
    CHECK(b2.value > 0.0);
  }

  CHECK_THROWS_AS(block_deviation_bound(BlockStatParams{16, 0, 0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("random_fraction_bound") {
  CHECK(random_fraction_bound(0) == 0.0);
  CHECK(random_fraction_bound(1) == 0.5);
  CHECK(random_fraction_bound(2) == 0.75);
  CHECK(random_fraction_bound(10) == doctest::Approx(1.0 - 1.0 / 1024).epsilon(1e-15));
  CHECK_THROWS_AS(random_fraction_bound(-1), std::invalid_argument);
}

TEST_CASE("counting identity behind the fraction bound") {
  // strings of length C(5,2) = 10: there are 2^(10-delta) - 1 descriptions
  // shorter than 10 - delta bits, so at most a 2^-delta fraction of the 1024
  // encodings can have one
  const int encodings = 1 << 10;
  for (int delta = 0; delta <= 10; ++delta) {
    const std::int64_t shorter = (std::int64_t{1} << (10 - delta)) - 1;
    CHECK(double(shorter) / encodings <= std::ldexp(1.0, -delta));
    // complement view: the delta-incompressible fraction meets the bound
    CHECK(1.0 - double(shorter) / encodings >= random_fraction_bound(delta));
  }
}

TEST_CASE("block_k_surrogate") {
  CHECK(block_k_surrogate(1) == 1.0);
  CHECK(block_k_surrogate(4) == 4.0 + 2.0 * 2.0);
  CHECK(block_k_surrogate(4, 1.5) == 4.0 + 4.0 + 1.5);
}
