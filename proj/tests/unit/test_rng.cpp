#include <doctest.h>

#include <cmath>

#include "mobembed/rng.hpp"

using mobembed::Rng;

TEST_CASE("uniform stays in [0,1) and is deterministic per seed") {
  Rng a(123), b(123), c(124);
  bool same = true, all_in_range = true;
  bool differs = false;
  for (int i = 0; i < 10000; ++i) {
    const double x = a.uniform();
    same = same && (x == b.uniform());
    differs = differs || (x != c.uniform());
    all_in_range = all_in_range && x >= 0.0 && x < 1.0;
  }
  CHECK(same);
  CHECK(differs);
  CHECK(all_in_range);
}

TEST_CASE("uniform_index covers [0,n) roughly uniformly") {
  Rng rng(7);
  const std::uint64_t n = 13;
  std::vector<int> counts(n, 0);
  const int draws = 130000;
  for (int i = 0; i < draws; ++i) ++counts[rng.uniform_index(n)];
  for (const int c : counts) {
    CHECK(c > draws / static_cast<int>(n) * 0.9);
    CHECK(c < draws / static_cast<int>(n) * 1.1);
  }
}

TEST_CASE("normal has near-zero mean and unit variance") {
  Rng rng(99);
  double sum = 0.0, sum2 = 0.0;
  const int draws = 200000;
  for (int i = 0; i < draws; ++i) {
    const double z = rng.normal();
    sum += z;
    sum2 += z * z;
  }
  const double mean = sum / draws;
  const double var = sum2 / draws - mean * mean;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(var - 1.0) < 0.02);
}

TEST_CASE("stream keys separate streams") {
  CHECK(mobembed::stream_key(1, 2, 3) != mobembed::stream_key(1, 2, 4));
  CHECK(mobembed::stream_key(1, 2, 3) != mobembed::stream_key(2, 2, 3));
  CHECK(mobembed::stream_key(1, 2, 3, 4, 5) == mobembed::stream_key(1, 2, 3, 4, 5));
}
