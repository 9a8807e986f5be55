#pragma once

#include <random>

#include "ogradlab/rational.hpp"

namespace ogradlab {

// Deterministic sampler: mt19937_64 output is fixed by the standard, so a
// seeded run reproduces bit-for-bit on any platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    // uniform_int_distribution is not portable across standard libraries;
    // reduce the raw stream instead.
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(eng_() % span);
  }

  // Nonzero small rational with numerator in [-maxnum, maxnum].
  Rational nonzero_rational(int maxnum = 9, int maxden = 4) {
    while (true) {
      std::int64_t num = uniform(-maxnum, maxnum);
      if (num == 0) continue;
      std::int64_t den = uniform(1, maxden);
      return rat(num, den);
    }
  }

  Rational rational(int maxnum = 9, int maxden = 4) {
    std::int64_t num = uniform(-maxnum, maxnum);
    std::int64_t den = uniform(1, maxden);
    return rat(num, den);
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

// Suite-wide defaults, recorded in every report.
inline constexpr std::uint64_t kDefaultSeed = 37;
inline constexpr std::uint64_t kDefaultPrime = 2147483647ull;  // 2^31 - 1

}  // namespace ogradlab
