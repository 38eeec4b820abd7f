#include "coind/erat.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace coind {

namespace {

ERat::Int pow10(unsigned k) {
  ERat::Int r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 10;
  return r;
}

ERat::Int parse_digits(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("expected digits");
  ERat::Int r = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("not a digit: '" + std::string(1, c) + "'");
    }
    r = r * 10 + (c - '0');
  }
  return r;
}

}  // namespace

ERat::ERat(std::uint64_t n) : num_(n), den_(1) {}

ERat::ERat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("ERat: zero denominator");
  if (num_ < 0 || den_ < 0) throw std::domain_error("ERat: negative component");
  normalize();
}

ERat ERat::infinity() {
  ERat r;
  r.infinite_ = true;
  return r;
}

ERat ERat::dyadic(unsigned k) {
  Int den = 1;
  den <<= k;
  return ERat(Int(1), den);
}

void ERat::normalize() {
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

ERat ERat::parse(std::string_view text) {
  if (text == "inf") return infinity();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Int d = parse_digits(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return ERat(parse_digits(text.substr(0, slash)), d);
  }
  std::string_view mant = text;
  long exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mant = text.substr(0, e);
    std::string_view ex = text.substr(e + 1);
    bool neg = false;
    if (!ex.empty() && (ex[0] == '-' || ex[0] == '+')) {
      neg = ex[0] == '-';
      ex.remove_prefix(1);
    }
    if (ex.empty() || ex.size() > 4) throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
    exp10 = static_cast<long>(parse_digits(ex));
    if (neg) exp10 = -exp10;
  }
  Int num;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mant.substr(0, dot);
    std::string_view fp = mant.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw std::invalid_argument("empty number");
    num = (ip.empty() ? Int(0) : parse_digits(ip)) * pow10(static_cast<unsigned>(fp.size())) +
          (fp.empty() ? Int(0) : parse_digits(fp));
    exp10 -= static_cast<long>(fp.size());
  } else {
    num = parse_digits(mant);
  }
  if (exp10 >= 0) return ERat(num * pow10(static_cast<unsigned>(exp10)), Int(1));
  return ERat(num, pow10(static_cast<unsigned>(-exp10)));
}

ERat ERat::div2() const {
  if (infinite_) return *this;
  return ERat(num_, den_ * 2);
}

ERat sub_trunc(const ERat& a, const ERat& b) {
  if (b.infinite_) return ERat();
  if (a.infinite_) return a;
  ERat::Int l = a.num_ * b.den_;
  ERat::Int r = b.num_ * a.den_;
  if (l <= r) return ERat();
  return ERat(l - r, a.den_ * b.den_);
}

ERat operator+(const ERat& a, const ERat& b) {
  if (a.infinite_ || b.infinite_) return ERat::infinity();
  return ERat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ERat operator*(const ERat& a, const ERat& b) {
  if (a.is_zero() || b.is_zero()) return ERat();
  if (a.infinite_ || b.infinite_) return ERat::infinity();
  return ERat(a.num_ * b.num_, a.den_ * b.den_);
}

ERat operator/(const ERat& a, const ERat& b) {
  if (b.infinite_ || b.is_zero()) throw std::domain_error("ERat: divisor must be finite and positive");
  if (a.infinite_) return a;
  return ERat(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const ERat& a, const ERat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  ERat::Int l = a.num_ * b.den_;
  ERat::Int r = b.num_ * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ERat::to_string() const {
  if (infinite_) return "inf";
  return num_.str() + "/" + den_.str();
}

double ERat::to_double() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  // Scale to keep 64 significant bits before the conversion.
  using boost::multiprecision::msb;
  Int n = num_;
  Int d = den_;
  if (n == 0) return 0.0;
  long shift = static_cast<long>(msb(d)) - static_cast<long>(msb(n)) + 64;
  if (shift > 0) n <<= shift; else d <<= -shift;
  return std::ldexp((n / d).convert_to<double>(), static_cast<int>(-shift));
}

std::ostream& operator<<(std::ostream& os, const ERat& x) { return os << x.to_string(); }

ERat midpoint(const ERat& a, const ERat& b) { return (a + b).div2(); }

}  // namespace coind
