#ifndef COIND_LAZY_HPP
#define COIND_LAZY_HPP

// Memoized thunks and step budgets.
//
// Every first-time evaluation of a Thunk charges one step to each StepBudget
// that is active on the calling thread (see BudgetScope). When a budget has
// no steps left the force throws Exhausted instead of running the generator,
// so potentially divergent corecursion always terminates under a budget.
//
// Forcing is single-threaded per value: a thunk may be forced by one thread
// at a time, and fully forced values may be shared freely.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace coind {

class StepBudget;

/// Raised by a force that would exceed an active budget, or that would nest
/// deeper than max_force_depth().
class Exhausted : public std::exception {
 public:
  explicit Exhausted(const StepBudget* budget = nullptr) : budget_(budget) {}

  /// The budget that ran out; nullptr when the nesting limit was hit.
  const StepBudget* budget() const noexcept { return budget_; }

  const char* what() const noexcept override { return "step budget exhausted"; }

 private:
  const StepBudget* budget_;
};

/// Raised when a lazy consumer forces a bottom cell that it needs a value from.
class HitBottom : public std::exception {
 public:
  const char* what() const noexcept override { return "forced bottom"; }
};

/// Distinguished non-value outcomes of a budgeted lazy evaluation.
enum class Halt { Exhausted, HitBottom };

class StepBudget {
 public:
  explicit StepBudget(std::uint64_t steps) : remaining_(steps), initial_(steps) {}

  std::uint64_t remaining() const noexcept { return remaining_; }
  std::uint64_t used() const noexcept { return initial_ - remaining_; }
  bool exhausted() const noexcept { return exhausted_; }

  /// Takes one step. Returns false (and latches exhausted()) when none are left.
  bool consume() noexcept {
    if (remaining_ == 0) {
      exhausted_ = true;
      return false;
    }
    --remaining_;
    return true;
  }

 private:
  std::uint64_t remaining_;
  std::uint64_t initial_;
  bool exhausted_ = false;
};

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

namespace detail {

inline std::vector<StepBudget*>& active_budgets() {
  thread_local std::vector<StepBudget*> stack;
  return stack;
}

inline std::size_t& force_depth() {
  thread_local std::size_t depth = 0;
  return depth;
}

}  // namespace detail

/// Nested force calls beyond this depth are reported as Exhausted rather than
/// overflowing the stack.
inline constexpr std::size_t max_force_depth() { return 2000; }

/// Makes `budget` active on this thread for the lifetime of the scope.
class BudgetScope {
 public:
  explicit BudgetScope(StepBudget& budget) : budget_(&budget) {
    detail::active_budgets().push_back(budget_);
  }
  ~BudgetScope() { detail::active_budgets().pop_back(); }

  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

 private:
  StepBudget* budget_;
};

/// Charges one step to every active budget; throws Exhausted on the first
/// budget that is already empty.
inline void charge_step() {
  for (StepBudget* b : detail::active_budgets()) {
    if (!b->consume()) throw Exhausted(b);
  }
}

template <class T>
class Thunk {
 public:
  using value_type = T;

  template <class F>
    requires std::is_invocable_r_v<T, F&>
  explicit Thunk(F&& gen)
      : state_(std::make_shared<State>(std::function<T()>(std::forward<F>(gen)))) {}

  static Thunk ready(T value) {
    Thunk t;
    t.state_ = std::make_shared<State>(std::move(value));
    return t;
  }

  bool forced() const noexcept { return state_->value.has_value(); }

  const T& force() const {
    State& s = *state_;
    if (s.value) return *s.value;
    charge_step();
    std::size_t& depth = detail::force_depth();
    if (depth >= max_force_depth()) throw Exhausted(nullptr);
    ++depth;
    struct Unwind {
      std::size_t& d;
      ~Unwind() { --d; }
    } unwind{depth};
    // A generator that throws leaves the thunk unevaluated so a later force
    // under a fresh budget can retry.
    T v = s.gen();
    if (!s.value) {
      s.value.emplace(std::move(v));
      s.gen = nullptr;
    }
    return *s.value;
  }

  /// Moves the forced value out when this handle is the sole owner, leaving
  /// the handle empty. Used for iterative teardown of long lazy chains.
  std::optional<T> release_if_unique() noexcept {
    if (!state_ || state_.use_count() != 1 || !state_->value) return std::nullopt;
    std::optional<T> v = std::move(state_->value);
    state_.reset();
    return v;
  }

  /// Identity of the shared cell, for sharing-aware algorithms.
  const void* id() const noexcept { return state_.get(); }

 private:
  Thunk() = default;

  struct State {
    explicit State(std::function<T()> g) : gen(std::move(g)) {}
    explicit State(T v) : value(std::move(v)) {}
    std::optional<T> value;
    std::function<T()> gen;
  };

  std::shared_ptr<State> state_;
};

}  // namespace coind

#endif  // COIND_LAZY_HPP
