#ifndef COIND_TESTS_ORACLES_HPP
#define COIND_TESTS_ORACLES_HPP

// Reference implementations used only by tests. They share no code with the
// library beyond the Regex syntax tree.

#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coind/cotree.hpp"
#include "coind/erat.hpp"
#include "coind/random.hpp"
#include "coind/regex.hpp"

namespace oracle {

using Word = std::vector<std::size_t>;

/// All words of length <= max_len over {0..arity-1}, in shortlex order.
inline std::vector<Word> all_words(std::size_t arity, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t c = 0; c < arity; ++c) {
        Word w = out[i];
        w.push_back(c);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

/// Substring-interval matcher: does r match w[i, j)?
class Matcher {
 public:
  explicit Matcher(const Word& w) : w_(w) {}

  bool match(const coind::Regex& r) { return at(r, 0, w_.size()); }

 private:
  bool at(const coind::Regex& r, std::size_t i, std::size_t j) {
    auto key = std::make_tuple(&r, i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool v = compute(r, i, j);
    memo_[key] = v;
    return v;
  }

  bool compute(const coind::Regex& r, std::size_t i, std::size_t j) {
    using K = coind::Regex::Kind;
    switch (r.kind()) {
      case K::Empty: return false;
      case K::Eps: return i == j;
      case K::Chr: return j == i + 1 && w_[i] == r.symbol();
      case K::Union: return at(r.left(), i, j) || at(r.right(), i, j);
      case K::Inter: return at(r.left(), i, j) && at(r.right(), i, j);
      case K::Comp: return !at(r.left(), i, j);
      case K::Cat:
        for (std::size_t k = i; k <= j; ++k) {
          if (at(r.left(), i, k) && at(r.right(), k, j)) return true;
        }
        return false;
      case K::Star:
        if (i == j) return true;
        for (std::size_t k = i + 1; k <= j; ++k) {
          if (at(r.left(), i, k) && at(r, k, j)) return true;
        }
        return false;
    }
    return false;
  }

  const Word& w_;
  std::map<std::tuple<const coind::Regex*, std::size_t, std::size_t>, bool> memo_;
};

inline bool matches(const coind::Regex& r, const Word& w) { return Matcher(w).match(r); }

/// Shortest (shortlex-first) word of length <= depth on which r1 and r2 differ.
inline std::optional<Word> difference(const coind::Regex& r1, const coind::Regex& r2, std::size_t arity,
                                      std::size_t depth) {
  for (const Word& w : all_words(arity, depth)) {
    if (matches(r1, w) != matches(r2, w)) return w;
  }
  return std::nullopt;
}

using Rational = boost::multiprecision::cpp_rational;
using Tree = coind::ATree<std::uint64_t>;

inline Rational to_rational(const coind::ERat& r) { return Rational(r.num(), r.den()); }

/// Expectation over a finite tree with an explicit value for bottom.
template <class F>
Rational expect(const Tree& t, const F& f, const Rational& at_bot) {
  if (t.is_bot()) return at_bot;
  if (t.is_leaf()) return f(t.value());
  return (expect(t.on_true(), f, at_bot) + expect(t.on_false(), f, at_bot)) / 2;
}

/// T(0) = {bot, leaf v : v in values}; T(d) = T(0) + node(T(d-1), T(d-1)).
inline std::vector<Tree> all_trees(std::size_t depth, const std::vector<std::uint64_t>& values) {
  std::vector<Tree> base{Tree::bot()};
  for (std::uint64_t v : values) base.push_back(Tree::leaf(v));
  std::vector<Tree> cur = base;
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<Tree> next = base;
    for (const Tree& l : cur) {
      for (const Tree& r : cur) next.push_back(Tree::node(l, r));
    }
    cur = std::move(next);
  }
  return cur;
}

/// Random tree of depth <= depth with leaves in [0, values).
inline Tree random_tree(coind::Rng& rng, std::size_t depth, std::uint64_t values) {
  const std::uint64_t pick = rng.below(depth == 0 ? 2 : 5);
  if (pick == 0) return Tree::bot();
  if (pick == 1 || depth == 0) return Tree::leaf(rng.below(values));
  return Tree::node(random_tree(rng, depth - 1, values), random_tree(rng, depth - 1, values));
}

/// Depth-n truncation of the two-thirds figure, built by hand:
/// t = node(leaf true, node(leaf false, t)), leaves cost one unit of fuel.
inline coind::ATree<bool> two_thirds_trunc(std::size_t n) {
  using B = coind::ATree<bool>;
  auto leaf = [](bool v, std::size_t m) { return m == 0 ? B::bot() : B::leaf(v); };
  if (n == 0) return B::bot();
  const std::size_t m = n - 1;
  B inner = m == 0 ? B::bot() : B::node(leaf(false, m - 1), two_thirds_trunc(m - 1));
  return B::node(leaf(true, m), inner);
}

}  // namespace oracle

#endif  // COIND_TESTS_ORACLES_HPP
