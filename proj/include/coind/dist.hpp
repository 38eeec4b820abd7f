#ifndef COIND_DIST_HPP
#define COIND_DIST_HPP

// Samplers for standard distributions in the random bit model.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coind/cotree.hpp"
#include "coind/erat.hpp"

namespace coind {

class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// t = CoNode(CoLeaf true, CoNode(CoLeaf false, t)).
Cotree<bool> bernoulli_two_thirds();

/// 0 <= p <= 1 with denominator at most 2^62. p = 2/3 returns
/// bernoulli_two_thirds(); other p use a rejection loop on ceil(log2 den)
/// bits read most significant first, exiting with value < num.
Cotree<bool> bernoulli(const ERat& p);

/// Uniform on {0, ..., n-1}, n >= 1, by rejection on ceil(log2 n) bits.
Cotree<std::uint64_t> uniform(std::uint64_t n);

/// Number of failures before the first success of bernoulli(p), 0 < p <= 1.
Cotree<std::uint64_t> geometric(const ERat& p);

/// Parsed form of "bernoulli:NUM/DEN", "uniform:N" or "geometric:NUM/DEN".
struct DistSpec {
  enum class Kind { Bernoulli, Uniform, Geometric };
  Kind kind;
  ERat p;             ///< bernoulli, geometric
  std::uint64_t n{};  ///< uniform

  /// Throws InvalidParameter.
  static DistSpec parse(std::string_view text);
  std::string to_string() const;
  /// Outcomes as naturals; bernoulli maps true to 1 and false to 0.
  Cotree<std::uint64_t> build() const;
};

/// "true"/"false" for bernoulli, "k=N" for the others.
struct EventSpec {
  std::uint64_t value;

  /// Throws InvalidParameter when the event does not fit the distribution.
  static EventSpec parse(std::string_view text, const DistSpec& dist);
  bool operator()(std::uint64_t x) const { return x == value; }
};

}  // namespace coind

#endif  // COIND_DIST_HPP
