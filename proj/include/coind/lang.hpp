#ifndef COIND_LANG_HPP
#define COIND_LANG_HPP

// Regular languages as coinductive tries.
//
// A Lang is a lazily built node carrying an accept label and one child per
// alphabet symbol; the child for symbol x is the Brzozowski derivative. The
// empty language is the all-false trie. TLang is the finite basis: tries cut
// off at some depth, with TBot standing in for the empty language below the
// cut.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coind/lazy.hpp"

namespace coind {

/// Raised for input symbols outside the configured alphabet.
class UnknownSymbol : public std::invalid_argument {
 public:
  explicit UnknownSymbol(char32_t c);
  char32_t symbol() const noexcept { return symbol_; }

 private:
  char32_t symbol_;
};

/// Decodes UTF-8; throws std::invalid_argument on malformed input.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);

/// Ordered, duplicate-free, nonempty list of single code point symbols.
class Alphabet {
 public:
  /// Throws std::invalid_argument when empty, duplicated or when a symbol is
  /// one of the regex metacharacters 0 1 + & ~ * ( ) or whitespace.
  explicit Alphabet(std::u32string symbols);
  static Alphabet from_utf8(std::string_view symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  char32_t symbol(std::size_t i) const { return symbols_.at(i); }
  std::optional<std::size_t> index_of(char32_t c) const noexcept;
  /// Symbol indices of a UTF-8 word; throws UnknownSymbol.
  std::vector<std::size_t> encode(std::string_view word) const;
  std::string decode(const std::vector<std::size_t>& word) const;
  const std::u32string& symbols() const noexcept { return symbols_; }

 private:
  std::u32string symbols_;
};

class Lang;

struct LNode {
  bool accept = false;
  std::vector<Lang> branch;  ///< one derivative per symbol index
};

class Lang {
 public:
  explicit Lang(Thunk<LNode> node, std::size_t arity, bool known_empty = false)
      : node_(std::move(node)), arity_(arity), known_empty_(known_empty) {}

  const LNode& node() const { return node_.force(); }
  bool accepts_empty() const { return node().accept; }
  const Lang& deriv(std::size_t x) const { return node().branch.at(x); }
  std::size_t arity() const noexcept { return arity_; }
  /// Set only for languages built by empty(); false does not mean nonempty.
  bool known_empty() const noexcept { return known_empty_; }

 private:
  Thunk<LNode> node_;
  std::size_t arity_;
  bool known_empty_;
};

Lang empty(std::size_t arity);
Lang eps(std::size_t arity);
/// Throws std::out_of_range if symbol >= arity.
Lang chr(std::size_t arity, std::size_t symbol);

Lang lang_union(const Lang& a, const Lang& b);
Lang inter(const Lang& a, const Lang& b);
Lang comp(const Lang& a);
/// o(ab) = o(a) && o(b); d_x(ab) = d_x(a) b + (o(a) ? d_x(b) : 0).
Lang concat(const Lang& a, const Lang& b);
/// o(a*) = true; d_x(a*) = d_x(a) a*.
Lang star(const Lang& a);

/// Follows one branch per symbol; forces |word| + 1 nodes.
bool in_lang(const Lang& t, const std::vector<std::size_t>& word);

struct TLang {
  bool bot = true;  ///< TBot when true; accept and branch are unused
  bool accept = false;
  std::vector<TLang> branch;

  static TLang tbot() { return {}; }
  static TLang tnode(bool accept, std::vector<TLang> branch) { return {false, accept, std::move(branch)}; }
  friend bool operator==(const TLang&, const TLang&) = default;
};

/// Depth-n truncation: n = 0 gives TBot, otherwise the node label with
/// children truncated at n - 1.
TLang lang_idl(const Lang& t, std::size_t n);
/// Injection of a finite trie: TBot maps to the empty language.
Lang lang_incl(const TLang& t, std::size_t arity);

/// TBot, or a false-labelled node whose children are all is_bot.
bool is_bot(const TLang& t);
/// Basis order; every is_bot trie sits below everything.
bool tlang_le(const TLang& a, const TLang& b);

/// Concatenation of a finite trie with a language, by structural recursion
/// on the trie: TBot -> 0, TNode(b, k) -> node(b && o(l), x -> k_x l + (b ? d_x l : 0)).
/// concat(a, b) is the limit of tconcat(lang_idl(a, n), b).
Lang tconcat(const TLang& a, const Lang& b);

struct Equal {
  friend bool operator==(const Equal&, const Equal&) = default;
};
struct Counterexample {
  std::vector<std::size_t> word;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};
using EquivResult = std::variant<Equal, Counterexample>;

/// Compares accept labels on every word of length <= depth, walking both
/// tries in shortlex order, so a counterexample is a shortest disagreeing
/// word with ties broken by alphabet order.
EquivResult equiv_upto(const Lang& a, const Lang& b, std::size_t depth);

/// Language containment on words of length <= depth.
bool le_upto(const Lang& a, const Lang& b, std::size_t depth);

}  // namespace coind

#endif  // COIND_LANG_HPP
