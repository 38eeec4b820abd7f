#ifndef COIND_COTREE_HPP
#define COIND_COTREE_HPP

// Lazy binary cotrees as samplers in the random bit model.
//
// A Cotree cell is CoBot, CoLeaf(a) or CoNode(on_true, on_false). A sampler
// consumes one fair bit per node; bit 1 (true) selects on_true, drawn as the
// left subtree. ATree is the finite basis and cotree_idl(t, n) its depth-n
// truncation, so wp/wlp/mu approximants are exact rational folds.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coind/approx.hpp"
#include "coind/erat.hpp"
#include "coind/lazy.hpp"
#include "coind/random.hpp"

namespace coind {

template <class A>
class Cotree {
 public:
  struct Leaf {
    A value;
  };
  struct Node;
  /// monostate is CoBot.
  using Cell = std::variant<std::monostate, Leaf, Node>;

  explicit Cotree(Thunk<Cell> cell) : cell_(std::move(cell)) {}

  static Cotree bot() { return Cotree(Thunk<Cell>::ready(Cell(std::monostate{}))); }
  static Cotree leaf(A a) { return Cotree(Thunk<Cell>::ready(Cell(Leaf{std::move(a)}))); }
  static Cotree node(Cotree on_true, Cotree on_false) {
    return Cotree(Thunk<Cell>::ready(Cell(Node{std::move(on_true), std::move(on_false)})));
  }
  template <class F>
  static Cotree lazy(F&& gen) {
    return Cotree(Thunk<Cell>(std::forward<F>(gen)));
  }

  const Cell& force() const { return cell_.force(); }
  bool forced() const { return cell_.forced(); }

 private:
  Thunk<Cell> cell_;
};

template <class A>
struct Cotree<A>::Node {
  Cotree<A> on_true;
  Cotree<A> on_false;

  const Cotree<A>& child(bool bit) const { return bit ? on_true : on_false; }
};

/// Finite binary tree: ABot, ALeaf(a) or ANode(on_true, on_false).
template <class A>
class ATree {
 public:
  enum class Kind { Bot, Leaf, Node };

  ATree() = default;
  static ATree bot() { return ATree(); }
  static ATree leaf(A a) {
    ATree t;
    t.kind_ = Kind::Leaf;
    t.value_ = std::move(a);
    return t;
  }
  static ATree node(ATree on_true, ATree on_false) {
    ATree t;
    t.kind_ = Kind::Node;
    t.kids_ = std::make_shared<const std::pair<ATree, ATree>>(std::move(on_true), std::move(on_false));
    return t;
  }

  Kind kind() const noexcept { return kind_; }
  bool is_bot() const noexcept { return kind_ == Kind::Bot; }
  bool is_leaf() const noexcept { return kind_ == Kind::Leaf; }
  bool is_node() const noexcept { return kind_ == Kind::Node; }
  const A& value() const { return *value_; }
  const ATree& on_true() const { return kids_->first; }
  const ATree& on_false() const { return kids_->second; }

  friend bool operator==(const ATree& a, const ATree& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case Kind::Bot: return true;
      case Kind::Leaf: return *a.value_ == *b.value_;
      case Kind::Node: return a.on_true() == b.on_true() && a.on_false() == b.on_false();
    }
    return false;
  }

 private:
  Kind kind_ = Kind::Bot;
  std::optional<A> value_;
  std::shared_ptr<const std::pair<ATree, ATree>> kids_;
};

/// ABot -> z, ALeaf a -> leaf_fn(a), ANode -> node_fn(fold on_true, fold on_false).
template <class A, class B, class LeafFn, class NodeFn>
B atree_fold(const B& z, const LeafFn& leaf_fn, const NodeFn& node_fn, const ATree<A>& t) {
  switch (t.kind()) {
    case ATree<A>::Kind::Bot: return z;
    case ATree<A>::Kind::Leaf: return leaf_fn(t.value());
    case ATree<A>::Kind::Node:
      return node_fn(atree_fold<A, B>(z, leaf_fn, node_fn, t.on_true()),
                     atree_fold<A, B>(z, leaf_fn, node_fn, t.on_false()));
  }
  return z;
}

/// Structural order: ABot below everything, leaves equal, nodes pointwise.
template <class A>
bool atree_le(const ATree<A>& a, const ATree<A>& b) {
  if (a.is_bot()) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_leaf()) return a.value() == b.value();
  return atree_le(a.on_true(), b.on_true()) && atree_le(a.on_false(), b.on_false());
}

template <class A>
std::size_t atree_depth(const ATree<A>& t) {
  if (!t.is_node()) return t.is_leaf() ? 1 : 0;
  return 1 + std::max(atree_depth(t.on_true()), atree_depth(t.on_false()));
}

template <class A>
Cotree<A> atree_incl(const ATree<A>& t) {
  switch (t.kind()) {
    case ATree<A>::Kind::Bot: return Cotree<A>::bot();
    case ATree<A>::Kind::Leaf: return Cotree<A>::leaf(t.value());
    case ATree<A>::Kind::Node: return Cotree<A>::node(atree_incl(t.on_true()), atree_incl(t.on_false()));
  }
  return Cotree<A>::bot();
}

/// Steps a single cell may take inside cotree_idl before it is approximated by
/// ABot. Cells that loop without producing a constructor (a nonproductive
/// iteration) are semantically bottom.
inline constexpr std::uint64_t kCellSteps = 100'000;

namespace detail {

/// Forces `t` with a private step allowance. nullptr when the allowance ran out.
template <class A>
const typename Cotree<A>::Cell* force_cell(const Cotree<A>& t, std::uint64_t cell_steps) {
  if (t.forced()) return &t.force();
  StepBudget local(cell_steps);
  BudgetScope scope(local);
  try {
    return &t.force();
  } catch (const Exhausted& e) {
    if (e.budget() == &local) return nullptr;
    throw;
  }
}

}  // namespace detail

/// Depth-n truncation: fuel 0 is ABot; a leaf costs one unit of fuel.
template <class A>
ATree<A> cotree_idl(const Cotree<A>& t, std::size_t n, std::uint64_t cell_steps = kCellSteps) {
  if (n == 0) return ATree<A>::bot();
  const auto* c = detail::force_cell(t, cell_steps);
  if (c == nullptr || std::holds_alternative<std::monostate>(*c)) return ATree<A>::bot();
  if (const auto* leaf = std::get_if<typename Cotree<A>::Leaf>(c)) return ATree<A>::leaf(leaf->value);
  const auto& node = std::get<typename Cotree<A>::Node>(*c);
  return ATree<A>::node(cotree_idl(node.on_true, n - 1, cell_steps), cotree_idl(node.on_false, n - 1, cell_steps));
}

template <class A, class B, class F>
Cotree<B> map_cotree(F f, Cotree<A> t) {
  return Cotree<B>::lazy([f = std::move(f), t = std::move(t)]() -> typename Cotree<B>::Cell {
    const auto& c = t.force();
    if (const auto* leaf = std::get_if<typename Cotree<A>::Leaf>(&c)) return typename Cotree<B>::Leaf{f(leaf->value)};
    if (const auto* node = std::get_if<typename Cotree<A>::Node>(&c)) {
      return typename Cotree<B>::Node{map_cotree<A, B>(f, node->on_true), map_cotree<A, B>(f, node->on_false)};
    }
    return std::monostate{};
  });
}

/// Monadic bind: CoBot -> CoBot, CoLeaf a -> k(a), CoNode -> node of binds.
template <class A, class K>
auto bind(Cotree<A> t, K k) -> std::invoke_result_t<K&, const A&> {
  using TB = std::invoke_result_t<K&, const A&>;
  return TB::lazy([t = std::move(t), k = std::move(k)]() -> typename TB::Cell {
    const auto& c = t.force();
    if (const auto* leaf = std::get_if<typename Cotree<A>::Leaf>(&c)) return k(leaf->value).force();
    if (const auto* node = std::get_if<typename Cotree<A>::Node>(&c)) {
      return typename TB::Node{bind(node->on_true, k), bind(node->on_false, k)};
    }
    return std::monostate{};
  });
}

/// Sum type for loop bodies: left continues with a new state, right exits.
template <class L, class R>
class Either {
 public:
  static Either left(L l) { return Either(std::in_place_index<0>, std::move(l)); }
  static Either right(R r) { return Either(std::in_place_index<1>, std::move(r)); }

  bool is_left() const noexcept { return v_.index() == 0; }
  const L& left_value() const { return std::get<0>(v_); }
  const R& right_value() const { return std::get<1>(v_); }

  friend bool operator==(const Either&, const Either&) = default;

 private:
  template <std::size_t I, class T>
  Either(std::in_place_index_t<I> tag, T&& v) : v_(tag, std::forward<T>(v)) {}
  std::variant<L, R> v_;
};

namespace detail {

template <class I, class A, class Body>
Cotree<A> iter_from(Body body, Cotree<Either<I, A>> t) {
  using Step = Either<I, A>;
  // The cursor lives in the closure, so a budget-interrupted loop resumes.
  return Cotree<A>::lazy([body = std::move(body), cur = std::move(t)]() mutable -> typename Cotree<A>::Cell {
    for (;;) {
      const auto& c = cur.force();
      if (const auto* leaf = std::get_if<typename Cotree<Step>::Leaf>(&c)) {
        if (!leaf->value.is_left()) return typename Cotree<A>::Leaf{leaf->value.right_value()};
        Cotree<Step> next = body(leaf->value.left_value());
        cur = std::move(next);
        charge_step();
        continue;
      }
      if (const auto* node = std::get_if<typename Cotree<Step>::Node>(&c)) {
        return typename Cotree<A>::Node{iter_from<I, A>(body, node->on_true), iter_from<I, A>(body, node->on_false)};
      }
      return std::monostate{};
    }
  });
}

}  // namespace detail

/// Least fixed point of iter f i = bind(f i, left j -> iter f j; right x -> leaf x).
/// A body that loops without ever reaching a node or an exit leaf denotes
/// CoBot; forcing it spends the active budget.
template <class I, class A, class Body>
Cotree<A> iter_cotree(Body body, I i0) {
  Cotree<Either<I, A>> first = body(i0);
  return detail::iter_from<I, A>(std::move(body), std::move(first));
}

// --- expectations --------------------------------------------------------

class ExpectationAboveOne : public std::domain_error {
 public:
  ExpectationAboveOne() : std::domain_error("wlp requires an expectation bounded by 1") {}
};

/// Halves the sum of the two branch values.
inline ERat average(const ERat& a, const ERat& b) { return (a + b).div2(); }

template <class A, class F>
ERat wp_atree(const F& f, const ATree<A>& t) {
  return atree_fold<A, ERat>(ERat(0), [&](const A& a) { return ERat(f(a)); }, average, t);
}

template <class A, class F>
ERat wlp_atree(const F& f, const ATree<A>& t) {
  return atree_fold<A, ERat>(
      ERat(1),
      [&](const A& a) {
        ERat v = f(a);
        if (v > ERat(1)) throw ExpectationAboveOne();
        return v;
      },
      average, t);
}

template <class A, class F>
ApproxChain<ERat> wp_chain(const F& f, const Cotree<A>& t, std::size_t fuel) {
  return ext_eval([&](const ATree<A>& a) { return wp_atree<A>(f, a); },
                  [](const Cotree<A>& c, std::size_t i) { return cotree_idl(c, i); }, t, fuel,
                  Direction::Increasing);
}

/// Throws ExpectationAboveOne if f exceeds 1 on a leaf within the fuel.
template <class A, class F>
ApproxChain<ERat> wlp_chain(const F& f, const Cotree<A>& t, std::size_t fuel) {
  return ext_eval([&](const ATree<A>& a) { return wlp_atree<A>(f, a); },
                  [](const Cotree<A>& c, std::size_t i) { return cotree_idl(c, i); }, t, fuel,
                  Direction::Decreasing);
}

/// Indicator expectation [Q].
template <class A, class Q>
auto indicator(Q q) {
  return [q = std::move(q)](const A& a) { return q(a) ? ERat(1) : ERat(0); };
}

/// wp [f >= a] t <= wp f t / a, compared exactly. Requires a > 0.
template <class A, class F>
bool markov_check(const F& f, const ATree<A>& t, const ERat& a) {
  ERat lhs = wp_atree<A>([&](const A& x) { return ERat(f(x)) >= a ? ERat(1) : ERat(0); }, t);
  ERat rhs = wp_atree<A>(f, t) / a;
  return lhs <= rhs;
}

// --- preimages and measure -----------------------------------------------

/// A finite bitstring over {'0', '1'}; '1' is the true branch.
using Bits = std::string;
/// Cotree encoding of a countable union of basic cylinder sets.
using BitSet = Cotree<Bits>;

/// Failing leaves become CoBot; nodes are preserved.
template <class A, class P>
Cotree<A> filter_cotree(P pred, Cotree<A> t) {
  return Cotree<A>::lazy([pred = std::move(pred), t = std::move(t)]() -> typename Cotree<A>::Cell {
    const auto& c = t.force();
    if (const auto* leaf = std::get_if<typename Cotree<A>::Leaf>(&c)) {
      if (pred(leaf->value)) return *leaf;
      return std::monostate{};
    }
    if (const auto* node = std::get_if<typename Cotree<A>::Node>(&c)) {
      return typename Cotree<A>::Node{filter_cotree<A>(pred, node->on_true), filter_cotree<A>(pred, node->on_false)};
    }
    return std::monostate{};
  });
}

/// Bitstrings leading to any leaf: CoLeaf -> CoLeaf(""), CoNode -> each
/// child's strings prefixed by its bit.
template <class A>
BitSet lang_cotree(Cotree<A> t) {
  return BitSet::lazy([t = std::move(t)]() -> BitSet::Cell {
    const auto& c = t.force();
    if (std::holds_alternative<typename Cotree<A>::Leaf>(c)) return BitSet::Leaf{Bits()};
    if (const auto* node = std::get_if<typename Cotree<A>::Node>(&c)) {
      auto prefix = [](char b) { return [b](const Bits& s) { return b + s; }; };
      return BitSet::Node{map_cotree<Bits, Bits>(prefix('1'), lang_cotree(node->on_true)),
                          map_cotree<Bits, Bits>(prefix('0'), lang_cotree(node->on_false))};
    }
    return std::monostate{};
  });
}

template <class A, class Q>
BitSet preimage(Q q, Cotree<A> t) {
  return lang_cotree(filter_cotree<A>(std::move(q), std::move(t)));
}

/// Sum over leaves of 1 / 2^len.
inline ERat mu_atree(const ATree<Bits>& s) {
  return atree_fold<Bits, ERat>(
      ERat(0), [](const Bits& b) { return ERat::dyadic(static_cast<unsigned>(b.size())); },
      [](const ERat& x, const ERat& y) { return x + y; }, s);
}

inline ApproxChain<ERat> mu_chain(const BitSet& s, std::size_t fuel) {
  return ext_eval(mu_atree, [](const BitSet& c, std::size_t i) { return cotree_idl(c, i); }, s, fuel,
                  Direction::Increasing);
}

template <class A>
void atree_leaves(const ATree<A>& t, std::vector<A>& out) {
  if (t.is_leaf()) out.push_back(t.value());
  if (t.is_node()) {
    atree_leaves(t.on_true(), out);
    atree_leaves(t.on_false(), out);
  }
}

/// Prefix-incomparable: neither string is a prefix of the other.
inline bool incomparable(const Bits& x, const Bits& y) {
  const std::size_t n = std::min(x.size(), y.size());
  return x.compare(0, n, y, 0, n) != 0;
}

/// All leaf bitstrings of cotree_idl(s, depth) pairwise prefix-incomparable.
inline bool disjoint_upto(const BitSet& s, std::size_t depth) {
  std::vector<Bits> leaves;
  atree_leaves(cotree_idl(s, depth), leaves);
  std::sort(leaves.begin(), leaves.end());
  // In lexicographic order a string and its extensions are contiguous.
  for (std::size_t i = 1; i < leaves.size(); ++i) {
    if (!incomparable(leaves[i - 1], leaves[i])) return false;
  }
  return true;
}

// --- sampling ------------------------------------------------------------

/// Fair bits from a seeded generator or from an explicit finite string.
class BitSource {
 public:
  static BitSource seeded(std::uint64_t seed, std::uint64_t stream = 0) {
    BitSource s;
    s.rng_.emplace(seed, stream);
    return s;
  }
  /// Throws std::invalid_argument on characters other than '0' and '1'.
  static BitSource from_string(std::string bits) {
    if (bits.find_first_not_of("01") != std::string::npos) {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
    BitSource s;
    s.bits_ = std::move(bits);
    return s;
  }

  /// nullopt when a finite source is used up.
  std::optional<bool> next() {
    if (rng_) {
      if (left_ == 0) {
        word_ = rng_->next();
        left_ = 64;
      }
      --left_;
      ++consumed_;
      return ((word_ >> left_) & 1U) != 0;
    }
    if (pos_ >= bits_.size()) return std::nullopt;
    ++consumed_;
    return bits_[pos_++] == '1';
  }

  std::uint64_t consumed() const noexcept { return consumed_; }

 private:
  BitSource() = default;

  std::optional<Rng> rng_;
  std::string bits_;
  std::size_t pos_ = 0;
  std::uint64_t word_ = 0;
  unsigned left_ = 0;
  std::uint64_t consumed_ = 0;
};

template <class A>
struct Sampled {
  A value;
  std::uint64_t bits;
};

enum class DivergeReason { Bottom, Budget };

struct Diverged {
  DivergeReason reason;
  std::uint64_t bits;
};

struct BitsExhausted {
  std::uint64_t bits;
};

template <class A>
using SampleResult = std::variant<Sampled<A>, Diverged, BitsExhausted>;

/// Walks t from the root, consuming one bit per node. Each node visit and
/// each new cell evaluation costs a step of `budget`.
template <class A>
SampleResult<A> sample(const Cotree<A>& t, BitSource& bits, StepBudget& budget) {
  BudgetScope scope(budget);
  std::uint64_t used = 0;
  try {
    const Cotree<A>* cur = &t;
    for (;;) {
      charge_step();
      const auto& c = cur->force();
      if (const auto* leaf = std::get_if<typename Cotree<A>::Leaf>(&c)) return Sampled<A>{leaf->value, used};
      const auto* node = std::get_if<typename Cotree<A>::Node>(&c);
      if (node == nullptr) return Diverged{DivergeReason::Bottom, used};
      std::optional<bool> b = bits.next();
      if (!b) return BitsExhausted{used};
      ++used;
      cur = &node->child(*b);
    }
  } catch (const Exhausted&) {
    return Diverged{DivergeReason::Budget, used};
  }
}

}  // namespace coind

#endif  // COIND_COTREE_HPP
