#include "coind/regex.hpp"

namespace coind {

Regex Regex::empty() { return Regex(Node{Kind::Empty, 0, nullptr, nullptr}); }
Regex Regex::eps() { return Regex(Node{Kind::Eps, 0, nullptr, nullptr}); }
Regex Regex::chr(std::size_t symbol) { return Regex(Node{Kind::Chr, symbol, nullptr, nullptr}); }

Regex Regex::union_of(Regex a, Regex b) {
  return Regex(Node{Kind::Union, 0, std::make_shared<const Regex>(std::move(a)),
                    std::make_shared<const Regex>(std::move(b))});
}
Regex Regex::inter(Regex a, Regex b) {
  return Regex(Node{Kind::Inter, 0, std::make_shared<const Regex>(std::move(a)),
                    std::make_shared<const Regex>(std::move(b))});
}
Regex Regex::cat(Regex a, Regex b) {
  return Regex(Node{Kind::Cat, 0, std::make_shared<const Regex>(std::move(a)),
                    std::make_shared<const Regex>(std::move(b))});
}
Regex Regex::comp(Regex a) { return Regex(Node{Kind::Comp, 0, std::make_shared<const Regex>(std::move(a)), nullptr}); }
Regex Regex::star(Regex a) { return Regex(Node{Kind::Star, 0, std::make_shared<const Regex>(std::move(a)), nullptr}); }

std::size_t Regex::size() const {
  switch (kind()) {
    case Kind::Empty: case Kind::Eps: case Kind::Chr:
      return 1;
    case Kind::Comp: case Kind::Star:
      return 1 + left().size();
    default:
      return 1 + left().size() + right().size();
  }
}

bool operator==(const Regex& a, const Regex& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Regex::Kind::Empty: case Regex::Kind::Eps:
      return true;
    case Regex::Kind::Chr:
      return a.symbol() == b.symbol();
    case Regex::Kind::Comp: case Regex::Kind::Star:
      return a.left() == b.left();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

ParseError::ParseError(std::size_t position, std::string expected)
    : std::runtime_error("parse error at " + std::to_string(position) + ": expected " + expected),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

class Parser {
 public:
  Parser(std::u32string text, const Alphabet& alphabet) : text_(std::move(text)), alphabet_(alphabet) {}

  Regex parse() {
    Regex r = parse_union();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "end of input");
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == U' ' || text_[pos_] == U'\t' || text_[pos_] == U'\n' ||
                                   text_[pos_] == U'\r')) {
      ++pos_;
    }
  }

  bool accept(char32_t c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_unary() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char32_t c = text_[pos_];
    return c == U'0' || c == U'1' || c == U'(' || c == U'~' || alphabet_.index_of(c).has_value();
  }

  Regex parse_union() {
    Regex r = parse_inter();
    while (accept(U'+')) r = Regex::union_of(std::move(r), parse_inter());
    return r;
  }

  Regex parse_inter() {
    Regex r = parse_cat();
    while (accept(U'&')) r = Regex::inter(std::move(r), parse_cat());
    return r;
  }

  Regex parse_cat() {
    Regex r = parse_unary();
    while (starts_unary()) r = Regex::cat(std::move(r), parse_unary());
    return r;
  }

  Regex parse_unary() {
    if (accept(U'~')) return Regex::comp(parse_unary());
    Regex r = parse_atom();
    while (accept(U'*')) r = Regex::star(std::move(r));
    return r;
  }

  Regex parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "expression");
    char32_t c = text_[pos_];
    if (c == U'0') {
      ++pos_;
      return Regex::empty();
    }
    if (c == U'1') {
      ++pos_;
      return Regex::eps();
    }
    if (c == U'(') {
      ++pos_;
      Regex r = parse_union();
      if (!accept(U')')) throw ParseError(pos_, "')'");
      return r;
    }
    if (auto i = alphabet_.index_of(c)) {
      ++pos_;
      return Regex::chr(*i);
    }
    throw ParseError(pos_, "expression");
  }

  std::u32string text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

int precedence(Regex::Kind k) {
  switch (k) {
    case Regex::Kind::Union: return 1;
    case Regex::Kind::Inter: return 2;
    case Regex::Kind::Cat: return 3;
    case Regex::Kind::Comp: case Regex::Kind::Star: return 4;
    default: return 5;
  }
}

void render(const Regex& r, const Alphabet& alphabet, std::u32string& out);

void render_at(const Regex& r, const Alphabet& alphabet, bool parens, std::u32string& out) {
  if (parens) out.push_back(U'(');
  render(r, alphabet, out);
  if (parens) out.push_back(U')');
}

void render(const Regex& r, const Alphabet& alphabet, std::u32string& out) {
  using K = Regex::Kind;
  const int p = precedence(r.kind());
  switch (r.kind()) {
    case K::Empty: out.push_back(U'0'); return;
    case K::Eps: out.push_back(U'1'); return;
    case K::Chr: out.push_back(alphabet.symbol(r.symbol())); return;
    case K::Star:
      render_at(r.left(), alphabet, r.left().kind() != K::Star && precedence(r.left().kind()) < 5, out);
      out.push_back(U'*');
      return;
    case K::Comp:
      out.push_back(U'~');
      render_at(r.left(), alphabet, precedence(r.left().kind()) < 4, out);
      return;
    default: {
      // Left-associative: equal precedence needs parentheses only on the right.
      render_at(r.left(), alphabet, precedence(r.left().kind()) < p, out);
      if (r.kind() == K::Union) out.push_back(U'+');
      if (r.kind() == K::Inter) out.push_back(U'&');
      render_at(r.right(), alphabet, precedence(r.right().kind()) <= p, out);
      return;
    }
  }
}

}  // namespace

Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
  return Parser(decode_utf8(text), alphabet).parse();
}

std::string to_string(const Regex& r, const Alphabet& alphabet) {
  std::u32string out;
  render(r, alphabet, out);
  return encode_utf8(out);
}

Lang compile(const Regex& r, std::size_t arity) {
  using K = Regex::Kind;
  switch (r.kind()) {
    case K::Empty: return empty(arity);
    case K::Eps: return eps(arity);
    case K::Chr: return chr(arity, r.symbol());
    case K::Union: return lang_union(compile(r.left(), arity), compile(r.right(), arity));
    case K::Inter: return inter(compile(r.left(), arity), compile(r.right(), arity));
    case K::Comp: return comp(compile(r.left(), arity));
    case K::Cat: return concat(compile(r.left(), arity), compile(r.right(), arity));
    case K::Star: return star(compile(r.left(), arity));
  }
  throw std::logic_error("unreachable regex kind");
}

}  // namespace coind
