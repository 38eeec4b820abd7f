#include "coind/dist.hpp"

#include <charconv>
#include <limits>
#include <optional>

namespace coind {

namespace {

struct Unit {
  friend bool operator==(Unit, Unit) = default;
};

template <class R>
using Step = Either<Unit, R>;

unsigned ceil_log2(std::uint64_t n) {
  unsigned k = 0;
  while (k < 64 && (std::uint64_t{1} << k) < n) ++k;
  return k;
}

/// Complete tree on `remaining` more bits; the value accumulated so far is
/// `prefix`. Leaves exit with accept(v) or restart the loop.
template <class R, class Accept>
Cotree<Step<R>> bits_tree(std::uint64_t prefix, unsigned remaining, Accept accept) {
  if (remaining == 0) {
    std::optional<R> r = accept(prefix);
    return Cotree<Step<R>>::leaf(r ? Step<R>::right(*r) : Step<R>::left(Unit{}));
  }
  return Cotree<Step<R>>::lazy([=]() -> typename Cotree<Step<R>>::Cell {
    return typename Cotree<Step<R>>::Node{bits_tree<R>((prefix << 1) | 1U, remaining - 1, accept),
                                          bits_tree<R>(prefix << 1, remaining - 1, accept)};
  });
}

std::uint64_t to_u64(const ERat::Int& x) {
  if (x > ERat::Int(std::uint64_t{1} << 62)) throw InvalidParameter("denominator exceeds 2^62");
  return static_cast<std::uint64_t>(x);
}

void check_probability(const ERat& p) {
  if (p.is_infinite() || p > ERat(1)) throw InvalidParameter("probability must lie in [0, 1]");
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidParameter(std::string("invalid ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Cotree<bool> bernoulli_two_thirds() {
  return Cotree<bool>::lazy([]() -> Cotree<bool>::Cell {
    return Cotree<bool>::Node{Cotree<bool>::leaf(true),
                              Cotree<bool>::node(Cotree<bool>::leaf(false), bernoulli_two_thirds())};
  });
}

Cotree<bool> bernoulli(const ERat& p) {
  check_probability(p);
  if (p == ERat(2, 3)) return bernoulli_two_thirds();
  const std::uint64_t den = to_u64(p.den());
  const std::uint64_t num = static_cast<std::uint64_t>(p.num());
  if (den == 1) return Cotree<bool>::leaf(num == 1);
  const unsigned k = ceil_log2(den);
  auto accept = [num, den](std::uint64_t v) -> std::optional<bool> {
    if (v < den) return v < num;
    return std::nullopt;
  };
  return iter_cotree<Unit, bool>([k, accept](const Unit&) { return bits_tree<bool>(0, k, accept); }, Unit{});
}

Cotree<std::uint64_t> uniform(std::uint64_t n) {
  if (n == 0) throw InvalidParameter("uniform requires n >= 1");
  if (n > (std::uint64_t{1} << 62)) throw InvalidParameter("uniform bound exceeds 2^62");
  if (n == 1) return Cotree<std::uint64_t>::leaf(0);
  const unsigned k = ceil_log2(n);
  auto accept = [n](std::uint64_t v) -> std::optional<std::uint64_t> {
    if (v < n) return v;
    return std::nullopt;
  };
  return iter_cotree<Unit, std::uint64_t>(
      [k, accept](const Unit&) { return bits_tree<std::uint64_t>(0, k, accept); }, Unit{});
}

Cotree<std::uint64_t> geometric(const ERat& p) {
  check_probability(p);
  if (p.is_zero()) throw InvalidParameter("geometric requires p > 0");
  using S = Either<std::uint64_t, std::uint64_t>;
  auto body = [p](const std::uint64_t& i) {
    return bind(bernoulli(p), [i](const bool& b) {
      return Cotree<S>::leaf(b ? S::right(i) : S::left(i + 1));
    });
  };
  return iter_cotree<std::uint64_t, std::uint64_t>(body, 0);
}

DistSpec DistSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidParameter("distribution spec needs NAME:PARAM");
  const std::string_view name = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  DistSpec d{};
  if (name == "uniform") {
    d.kind = Kind::Uniform;
    d.n = parse_u64(arg, "uniform bound");
    if (d.n == 0) throw InvalidParameter("uniform requires n >= 1");
    return d;
  }
  if (name != "bernoulli" && name != "geometric") {
    throw InvalidParameter("unknown distribution '" + std::string(name) + "'");
  }
  d.kind = name == "bernoulli" ? Kind::Bernoulli : Kind::Geometric;
  try {
    d.p = ERat::parse(arg);
  } catch (const std::invalid_argument& e) {
    throw InvalidParameter(e.what());
  }
  check_probability(d.p);
  to_u64(d.p.den());
  if (d.kind == Kind::Geometric && d.p.is_zero()) throw InvalidParameter("geometric requires p > 0");
  return d;
}

std::string DistSpec::to_string() const {
  switch (kind) {
    case Kind::Bernoulli: return "bernoulli:" + p.to_string();
    case Kind::Uniform: return "uniform:" + std::to_string(n);
    case Kind::Geometric: return "geometric:" + p.to_string();
  }
  return {};
}

Cotree<std::uint64_t> DistSpec::build() const {
  switch (kind) {
    case Kind::Bernoulli:
      return map_cotree<bool, std::uint64_t>([](bool b) { return b ? std::uint64_t{1} : std::uint64_t{0}; },
                                             bernoulli(p));
    case Kind::Uniform: return uniform(n);
    case Kind::Geometric: return geometric(p);
  }
  throw InvalidParameter("unknown distribution");
}

EventSpec EventSpec::parse(std::string_view text, const DistSpec& dist) {
  if (dist.kind == DistSpec::Kind::Bernoulli) {
    if (text == "true") return {1};
    if (text == "false") return {0};
    throw InvalidParameter("bernoulli events are 'true' or 'false'");
  }
  if (text.substr(0, 2) != "k=") throw InvalidParameter("events for this distribution have the form k=N");
  EventSpec e{parse_u64(text.substr(2), "event value")};
  if (dist.kind == DistSpec::Kind::Uniform && e.value >= dist.n) {
    throw InvalidParameter("event outside the support of " + dist.to_string());
  }
  return e;
}

}  // namespace coind
