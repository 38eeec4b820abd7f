#ifndef COIND_COLIST_HPP
#define COIND_COLIST_HPP

// Lazy bottom-terminated streams.
//
// A Colist is a memoized cell that is either CoBot (divergence, not an empty
// list) or Cocons(head, tail). AList, the finite basis, is a std::vector read
// left to right; incl maps it to a stream ending in CoBot.
//
// Operations that may force without bound (filter, coexists, ...) run under
// whatever BudgetScope the caller has open and throw Exhausted when it runs
// out. Operations that take a StepBudget report exhaustion in their result.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "coind/approx.hpp"
#include "coind/lazy.hpp"

namespace coind {

template <class A>
using AList = std::vector<A>;

template <class A>
class Colist {
 public:
  struct Cons;
  /// nullopt is CoBot.
  using Cell = std::optional<Cons>;

  explicit Colist(Thunk<Cell> cell) : cell_(std::move(cell)) {}
  Colist(const Colist&) = default;
  Colist(Colist&&) noexcept = default;
  Colist& operator=(const Colist&) = default;
  Colist& operator=(Colist&&) noexcept = default;

  // Unlinks uniquely owned forced cells one at a time; recursive destruction
  // of a long forced stream would otherwise overflow the stack.
  ~Colist() {
    std::optional<Cell> c = cell_.release_if_unique();
    while (c && *c) {
      Thunk<Cell> next = std::move((*c)->tail.cell_);
      c.reset();
      c = next.release_if_unique();
    }
  }

  static Colist bot() { return Colist(Thunk<Cell>::ready(std::nullopt)); }
  static Colist cons(A head, Colist tail) {
    return Colist(Thunk<Cell>::ready(Cell(Cons{std::move(head), std::move(tail)})));
  }
  template <class F>
  static Colist lazy(F&& gen) {
    return Colist(Thunk<Cell>(std::forward<F>(gen)));
  }

  const Cell& force() const { return cell_.force(); }
  bool forced() const { return cell_.forced(); }

 private:
  Thunk<Cell> cell_;
};

template <class A>
struct Colist<A>::Cons {
  A head;
  Colist<A> tail;
};

/// Right fold: Nil -> z, Cons(a, t) -> f(a, fold t).
template <class A, class B, class F>
B list_fold(B z, F&& f, const AList<A>& l) {
  for (auto it = l.rbegin(); it != l.rend(); ++it) z = f(*it, std::move(z));
  return z;
}

/// Up to n heads, cutting at CoBot.
template <class A>
AList<A> colist_idl(const Colist<A>& l, std::size_t n) {
  AList<A> out;
  const Colist<A>* cur = &l;
  while (out.size() < n) {
    const auto& c = cur->force();
    if (!c) break;
    out.push_back(c->head);
    cur = &c->tail;
  }
  return out;
}

/// Nil maps to CoBot, the bottom of the stream order.
template <class A>
Colist<A> colist_incl(const AList<A>& l) {
  Colist<A> s = Colist<A>::bot();
  for (auto it = l.rbegin(); it != l.rend(); ++it) s = Colist<A>::cons(*it, std::move(s));
  return s;
}

/// Semantic cofold: chain of list_fold(bottom, f, idl(l, i)).
template <class A, class B, class F, class Leq = std::less_equal<>>
ApproxChain<B> cofold_sem(F f, B bottom, const Colist<A>& l, std::size_t fuel, Leq leq = {}) {
  return ext_eval(
      [&](const AList<A>& prefix) { return list_fold<A, B>(bottom, f, prefix); },
      [](const Colist<A>& s, std::size_t i) { return colist_idl(s, i); }, l, fuel,
      Direction::Increasing, leq);
}

namespace detail {

template <class A, class B, class F>
B cofold_lazy_step(const F& f, const Colist<A>& l) {
  const auto& c = l.force();
  if (!c) throw HitBottom();
  Colist<A> tail = c->tail;
  Thunk<B> rest([f, tail] { return cofold_lazy_step<A, B>(f, tail); });
  return f(c->head, rest);
}

}  // namespace detail

/// Lazy cofold: on Cocons(a, t) returns f(a, deferred cofold of t).
///
/// f receives the recursive result as a Thunk<B> and forces it only if it
/// needs it. Reaching CoBot yields Halt::HitBottom.
template <class B, class A, class F>
std::variant<B, Halt> cofold_lazy(F f, const Colist<A>& l, StepBudget& budget) {
  BudgetScope scope(budget);
  try {
    return detail::cofold_lazy_step<A, B>(f, l);
  } catch (const Exhausted&) {
    return Halt::Exhausted;
  } catch (const HitBottom&) {
    return Halt::HitBottom;
  }
}

/// Lazy filter. Satisfies
///   filter p (cocons a l) = cocons a (filter p l)  if p(a)
///   filter p (cocons a l) = filter p l             otherwise
///   filter p bot = bot.
/// Searching for the next match runs in a loop within a single cell, so a
/// never-true predicate exhausts the active budget instead of the stack.
template <class A, class P>
Colist<A> filter(P pred, Colist<A> l) {
  // The captured cursor advances past rejected cells, so an exhausted search
  // resumes where it stopped and does not pin the skipped prefix.
  return Colist<A>::lazy([pred = std::move(pred), cur = std::move(l)]() mutable -> typename Colist<A>::Cell {
    for (;;) {
      const auto& c = cur.force();
      if (!c) return std::nullopt;
      if (pred(c->head)) {
        return typename Colist<A>::Cons{c->head, filter<A>(pred, c->tail)};
      }
      Colist<A> next = c->tail;
      cur = std::move(next);
      charge_step();
    }
  });
}

template <class A, class B, class F>
Colist<B> map(F f, Colist<A> l) {
  return Colist<B>::lazy([f = std::move(f), l = std::move(l)]() -> typename Colist<B>::Cell {
    const auto& c = l.force();
    if (!c) return std::nullopt;
    return typename Colist<B>::Cons{f(c->head), map<A, B>(f, c->tail)};
  });
}

struct Found {
  std::size_t index;
  friend bool operator==(const Found&, const Found&) = default;
};
struct NotFoundUpTo {
  std::size_t fuel;
  friend bool operator==(const NotFoundUpTo&, const NotFoundUpTo&) = default;
};
using ExistsResult = std::variant<Found, NotFoundUpTo>;

/// Semi-decides "some element satisfies P" on idl(l, max_fuel).
/// NotFoundUpTo is absence of evidence, not a refutation.
template <class A, class P>
ExistsResult coexists(P pred, const Colist<A>& l, std::size_t max_fuel) {
  const Colist<A>* cur = &l;
  for (std::size_t i = 0; i < max_fuel; ++i) {
    const auto& c = cur->force();
    if (!c) break;
    if (pred(c->head)) return Found{i};
    cur = &c->tail;
  }
  return NotFoundUpTo{max_fuel};
}

struct HoldsUpTo {
  std::size_t depth;
  friend bool operator==(const HoldsUpTo&, const HoldsUpTo&) = default;
};
struct CounterexampleAt {
  std::size_t index;
  friend bool operator==(const CounterexampleAt&, const CounterexampleAt&) = default;
};
using ForallResult = std::variant<HoldsUpTo, CounterexampleAt>;

/// Checks P on every element of idl(l, depth).
template <class A, class P>
ForallResult coforall_upto(P pred, const Colist<A>& l, std::size_t depth) {
  const Colist<A>* cur = &l;
  for (std::size_t i = 0; i < depth; ++i) {
    const auto& c = cur->force();
    if (!c) break;
    if (!pred(c->head)) return CounterexampleAt{i};
    cur = &c->tail;
  }
  return HoldsUpTo{depth};
}

/// values[i] = length(idl(l, i)).
template <class A>
ApproxChain<std::size_t> colength_chain(const Colist<A>& l, std::size_t fuel) {
  return ext_eval([](const AList<A>& p) { return p.size(); },
                  [](const Colist<A>& s, std::size_t i) { return colist_idl(s, i); }, l, fuel);
}

/// True iff n Cocons cells can be forced within the budget; false if the
/// stream reaches CoBot first.
template <class A>
std::variant<bool, Halt> check_productive(const Colist<A>& l, std::size_t n, StepBudget& budget) {
  BudgetScope scope(budget);
  try {
    const Colist<A>* cur = &l;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& c = cur->force();
      if (!c) return false;
      cur = &c->tail;
    }
    return true;
  } catch (const Exhausted&) {
    return Halt::Exhausted;
  }
}

/// Every element of idl(l, depth) is R-related to every later element.
template <class A, class R>
bool ordered_upto(R rel, const Colist<A>& l, std::size_t depth) {
  AList<A> p = colist_idl(l, depth);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (!rel(p[i], p[j])) return false;
    }
  }
  return true;
}

/// Stream order restricted to idl(l1, depth) against l2.
template <class A, class Eq = std::equal_to<>>
bool prefix_le_upto(const Colist<A>& l1, const Colist<A>& l2, std::size_t depth, Eq eq = {}) {
  AList<A> p = colist_idl(l1, depth);
  const Colist<A>* cur = &l2;
  for (const A& a : p) {
    const auto& c = cur->force();
    if (!c || !eq(a, c->head)) return false;
    cur = &c->tail;
  }
  return true;
}

}  // namespace coind

#endif  // COIND_COLIST_HPP
