#include <doctest.h>

#include <cmath>
#include <vector>

#include "kirchhoff/rng.hpp"

using namespace kirchhoff;

TEST_CASE("splitmix64 matches the reference stream") {
  // First outputs of the public-domain reference implementation for seed 0.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafull);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ull);
  CHECK(rng.next() == 0x06c45d188009454full);

  SplitMix64 rng2(1234567);
  CHECK(rng2.next() == 0x599ed017fb08fc85ull);
  CHECK(rng2.next() == 0x2c73f08458540fa5ull);
}

TEST_CASE("fnv1a64 matches the published test vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("fnv1a64 word overload hashes little-endian bytes") {
  // "abcdefgh" read as a little-endian u64 is 0x6867666564636261.
  CHECK(fnv1a64({0x6867666564636261ull}) == fnv1a64("abcdefgh"));
}

TEST_CASE("next_double stays in [0,1) and fills the range") {
  SplitMix64 rng(99);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo < 0.001);
  CHECK(hi > 0.999);
}

TEST_CASE("next_gaussian has roughly standard moments") {
  SplitMix64 rng(7);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.next_gaussian();
    sum += z;
    sum_sq += z * z;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(var - 1.0) < 4.0 * std::sqrt(2.0 / n));
}

TEST_CASE("distinct seeds give distinct streams") {
  SplitMix64 a(1), b(2);
  int diff = 0;
  for (int i = 0; i < 64; ++i)
    if (a.next() != b.next()) ++diff;
  CHECK(diff == 64);
}
