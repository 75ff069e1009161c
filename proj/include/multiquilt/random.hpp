#ifndef MULTIQUILT_RANDOM_HPP
#define MULTIQUILT_RANDOM_HPP

#include "multiquilt/rational.hpp"

#include <cstdint>
#include <limits>
#include <random>

namespace multiquilt {

/// Seeded generator. The bounded draw is done by hand (rejection sampling)
/// because std::uniform_int_distribution is not portable across stdlibs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return lo + static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  /// Positive rational p/q with 1 <= p, q <= bound.
  Rational positive_rational(std::int64_t bound = 20) {
    const std::int64_t p = uniform(1, bound);
    const std::int64_t q = uniform(1, bound);
    return Rational(p, q);
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace multiquilt

#endif  // MULTIQUILT_RANDOM_HPP
