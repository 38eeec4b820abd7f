#ifndef COIND_REGEX_HPP
#define COIND_REGEX_HPP

// Concrete regex syntax over an Alphabet:
//
//   0  empty language      1  empty word       c  symbol from the alphabet
//   r+s union              r&s intersection    ~r complement
//   rs concatenation       r* star             (r) grouping
//
// Star and complement bind tightest, then concatenation, then &, then +.
// Whitespace between tokens is ignored.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coind/lang.hpp"

namespace coind {

class Regex {
 public:
  enum class Kind { Empty, Eps, Chr, Union, Inter, Comp, Cat, Star };

  static Regex empty();
  static Regex eps();
  static Regex chr(std::size_t symbol);
  static Regex union_of(Regex a, Regex b);
  static Regex inter(Regex a, Regex b);
  static Regex comp(Regex a);
  static Regex cat(Regex a, Regex b);
  static Regex star(Regex a);

  Kind kind() const noexcept { return node_->kind; }
  std::size_t symbol() const noexcept { return node_->symbol; }
  const Regex& left() const { return *node_->lhs; }
  const Regex& right() const { return *node_->rhs; }
  /// Number of constructors.
  std::size_t size() const;

  friend bool operator==(const Regex& a, const Regex& b);

 private:
  struct Node {
    Kind kind;
    std::size_t symbol = 0;
    std::shared_ptr<const Regex> lhs;
    std::shared_ptr<const Regex> rhs;
  };
  explicit Regex(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

  std::shared_ptr<const Node> node_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected);
  /// Code point offset where the parser stopped.
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Throws ParseError, or UnknownSymbol for a literal outside the alphabet.
Regex parse_regex(std::string_view text, const Alphabet& alphabet);

/// Minimal-parenthesis rendering in the concrete syntax; parses back to an
/// equal tree.
std::string to_string(const Regex& r, const Alphabet& alphabet);

Lang compile(const Regex& r, std::size_t arity);

}  // namespace coind

#endif  // COIND_REGEX_HPP
