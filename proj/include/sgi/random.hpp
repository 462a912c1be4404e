#pragma once

// Seeded draws whose results do not depend on the standard library's
// distribution implementations, so outputs are reproducible across
// toolchains. The engine itself (mt19937_64) is fully specified.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <utility>

namespace sgi {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n), n > 0, by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Standard normal by Box-Muller.
  double normal() {
    double u1;
    do {
      u1 = unit();
    } while (u1 <= 0.0);
    const double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  template <class T>
  void shuffle(std::span<T> xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::swap(xs[i - 1], xs[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sgi
