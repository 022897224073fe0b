#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>

namespace mobembed {

// splitmix64 finalizer; used to derive independent engine seeds from stream keys.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream key for a (seed, purpose, index...) tuple. Streams with distinct
// keys are statistically independent, so work items can be processed in any
// order (or concurrently) with identical results.
constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t a,
                                   std::uint64_t b = 0, std::uint64_t c = 0,
                                   std::uint64_t d = 0) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  h = mix64(h ^ d);
  return h;
}

inline constexpr std::uint64_t kStreamTrace = 0x6d6f625f74726163ULL;
inline constexpr std::uint64_t kStreamWalks = 0x6d6f625f77616c6bULL;
inline constexpr std::uint64_t kStreamEmbed = 0x6d6f625f656d6264ULL;

// mt19937_64 engine with hand-rolled distributions. The standard pins the
// engine's output but not the distributions', so rolling our own keeps every
// draw bit-stable across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n), unbiased via masked rejection
  std::uint64_t uniform_index(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t mask = ~0ULL >> std::countl_zero(n - 1);
    std::uint64_t x;
    do {
      x = eng_() & mask;
    } while (x >= n);
    return x;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal (Box-Muller, second variate cached).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace mobembed
