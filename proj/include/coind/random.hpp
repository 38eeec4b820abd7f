#ifndef COIND_RANDOM_HPP
#define COIND_RANDOM_HPP

#include <cstdint>
#include <random>

namespace coind {

/// Portable deterministic generator: std::mt19937_64 keyed through
/// std::seed_seq by (seed, stream). Both are fully specified by the standard,
/// and bounded draws avoid std::*_distribution, whose output is
/// implementation-defined, so a seed means the same sequence everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n); n > 0. Rejection on the top of the range.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace coind

#endif  // COIND_RANDOM_HPP
