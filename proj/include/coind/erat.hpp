#ifndef COIND_ERAT_HPP
#define COIND_ERAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace coind {

/// Exact nonnegative rational extended with +infinity.
///
/// Finite values are kept in lowest terms with a positive denominator.
/// Infinity absorbs addition, halving and multiplication by a nonzero value;
/// 0 * inf = 0 following the measure-theoretic convention.
class ERat {
 public:
  using Int = boost::multiprecision::cpp_int;

  ERat() = default;
  ERat(std::uint64_t n);  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error if den == 0 or either part is negative.
  ERat(Int num, Int den);

  static ERat infinity();
  /// 1 / 2^k.
  static ERat dyadic(unsigned k);

  /// Accepts "inf", "N", "N/D" and decimals such as "0.01" or "1e-4".
  /// Throws std::invalid_argument on anything else.
  static ERat parse(std::string_view text);

  bool is_infinite() const noexcept { return infinite_; }
  bool is_zero() const noexcept { return !infinite_ && num_ == 0; }
  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }

  ERat div2() const;
  /// Truncated subtraction: max(0, a - b). inf - inf is 0.
  friend ERat sub_trunc(const ERat& a, const ERat& b);
  friend ERat operator+(const ERat& a, const ERat& b);
  friend ERat operator*(const ERat& a, const ERat& b);
  /// Division by a finite positive value; throws std::domain_error otherwise.
  friend ERat operator/(const ERat& a, const ERat& b);

  ERat& operator+=(const ERat& b) { return *this = *this + b; }

  friend bool operator==(const ERat& a, const ERat& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || (a.num_ == b.num_ && a.den_ == b.den_));
  }
  friend std::strong_ordering operator<=>(const ERat& a, const ERat& b);

  /// "num/den", always with an explicit denominator; "inf" for infinity.
  std::string to_string() const;
  double to_double() const;

 private:
  void normalize();

  Int num_ = 0;
  Int den_ = 1;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ERat& x);

/// Midpoint of two finite values.
ERat midpoint(const ERat& a, const ERat& b);

}  // namespace coind

#endif  // COIND_ERAT_HPP
