#ifndef COIND_APPROX_HPP
#define COIND_APPROX_HPP

// Fuel-indexed approximation chains.
//
// A continuous extension of a monotone basis function f is the supremum of
// f applied to the finite approximants idl(a, 0), idl(a, 1), ... of a
// coinductive value. Suprema are not computable, so ext_eval materializes the
// chain up to a fuel bound and converge() applies an explicit stopping policy.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coind/erat.hpp"

namespace coind {

enum class Direction { Increasing, Decreasing };

template <class V>
struct ApproxChain {
  std::vector<V> values;
  Direction direction = Direction::Increasing;
  /// Earliest fuel k < N after which every observed value equals values[k].
  /// nullopt is the BoundsOnly verdict.
  std::optional<std::size_t> stabilized_at;

  std::size_t max_fuel() const { return values.empty() ? 0 : values.size() - 1; }
  const V& back() const { return values.back(); }
  bool stabilized() const { return stabilized_at.has_value(); }
};

/// Computes the verdict for a sequence of values: the start of the final run
/// of equal values, provided that run has at least two entries.
template <class V>
std::optional<std::size_t> stabilization_point(const std::vector<V>& values) {
  if (values.size() < 2) return std::nullopt;
  std::size_t k = values.size() - 1;
  while (k > 0 && values[k - 1] == values[k]) --k;
  if (k == values.size() - 1) return std::nullopt;
  return k;
}

class MonotonicityViolation : public std::runtime_error {
 public:
  explicit MonotonicityViolation(std::size_t fuel)
      : std::runtime_error("approximation chain is not monotone at fuel " + std::to_string(fuel)),
        fuel_(fuel) {}
  std::size_t fuel() const noexcept { return fuel_; }

 private:
  std::size_t fuel_;
};

class NotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f applied n times to z.
template <class A, class F>
A iter(A z, F&& f, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) z = f(std::move(z));
  return z;
}

/// Chain iter(bottom, f, i) for i = 0..fuel. Monotonicity of f is the
/// caller's contract and is not checked here.
template <class A, class F>
ApproxChain<A> coiter_approx(F&& f, A bottom, std::size_t fuel) {
  ApproxChain<A> chain;
  chain.values.reserve(fuel + 1);
  chain.values.push_back(std::move(bottom));
  for (std::size_t i = 0; i < fuel; ++i) chain.values.push_back(f(chain.values.back()));
  chain.stabilized_at = stabilization_point(chain.values);
  return chain;
}

/// Evaluates basis_fn on the approximants idl(a, 0..max_fuel).
///
/// Throws MonotonicityViolation(i) when values[i-1] -> values[i] breaks the
/// chain order; `leq` is the order of the codomain.
template <class Carrier, class BasisFn, class Idl, class Leq = std::less_equal<>>
auto ext_eval(BasisFn&& basis_fn, Idl&& idl, const Carrier& a, std::size_t max_fuel,
              Direction direction = Direction::Increasing, Leq leq = {}) {
  using V = std::decay_t<decltype(basis_fn(idl(a, std::size_t{0})))>;
  ApproxChain<V> chain;
  chain.direction = direction;
  chain.values.reserve(max_fuel + 1);
  for (std::size_t i = 0; i <= max_fuel; ++i) {
    V v = basis_fn(idl(a, i));
    if (i > 0) {
      const V& prev = chain.values.back();
      bool ok = direction == Direction::Increasing ? leq(prev, v) : leq(v, prev);
      if (!ok) throw MonotonicityViolation(i);
    }
    chain.values.push_back(std::move(v));
  }
  chain.stabilized_at = stabilization_point(chain.values);
  return chain;
}

template <class V>
struct Converged {
  V value;
  std::size_t fuel;
};

struct FixedFuel {
  std::size_t fuel;
};

struct StabilizeWindow {
  std::size_t window;
};

struct EpsGap {
  ERat eps;
};

template <class V>
Converged<V> converge(const ApproxChain<V>& chain, FixedFuel policy) {
  if (chain.values.empty() || policy.fuel > chain.max_fuel()) {
    throw NotConverged("chain shorter than requested fuel");
  }
  return {chain.values[policy.fuel], policy.fuel};
}

/// First value repeated `window` times in a row.
template <class V>
Converged<V> converge(const ApproxChain<V>& chain, StabilizeWindow policy) {
  if (policy.window == 0) throw std::invalid_argument("window must be positive");
  std::size_t run = 0;
  for (std::size_t i = 0; i < chain.values.size(); ++i) {
    run = (i > 0 && chain.values[i] == chain.values[i - 1]) ? run + 1 : 1;
    if (run >= policy.window) return {chain.values[i], i - run + 1};
  }
  throw NotConverged("no run of " + std::to_string(policy.window) + " equal values");
}

/// Lower and upper bounds produced by an increasing/decreasing chain pair.
struct Bracket {
  ERat lower;
  ERat upper;
  std::size_t lower_fuel;  ///< earliest fuel attaining `lower`
  std::size_t upper_fuel;  ///< earliest fuel attaining `upper`
  ERat gap() const { return sub_trunc(upper, lower); }
  bool contains(const ERat& x) const { return lower <= x && x <= upper; }
};

/// Best bracket over the full chains, with fuels of first attainment.
Bracket best_bracket(const ApproxChain<ERat>& lower, const ApproxChain<ERat>& upper);

/// Succeeds at the first fuel where upper - lower <= eps.
Converged<Bracket> converge(const ApproxChain<ERat>& lower, const ApproxChain<ERat>& upper,
                            const EpsGap& policy);

}  // namespace coind

#endif  // COIND_APPROX_HPP
