#include "coind/lang.hpp"

#include <deque>
#include <utility>

namespace coind {

namespace {

std::string describe(char32_t c) {
  return "'" + encode_utf8(std::u32string(1, c)) + "'";
}

bool reserved(char32_t c) {
  switch (c) {
    case U'0': case U'1': case U'+': case U'&': case U'~': case U'*': case U'(': case U')':
    case U' ': case U'\t': case U'\n': case U'\r':
      return true;
    default:
      return false;
  }
}

}  // namespace

UnknownSymbol::UnknownSymbol(char32_t c)
    : std::invalid_argument("symbol " + describe(c) + " is not in the alphabet"), symbol_(c) {}

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  for (std::size_t i = 0; i < s.size();) {
    auto b = static_cast<unsigned char>(s[i]);
    std::size_t len = b < 0x80 ? 1 : (b >> 5) == 0x6 ? 2 : (b >> 4) == 0xE ? 3 : (b >> 3) == 0x1E ? 4 : 0;
    if (len == 0 || i + len > s.size()) throw std::invalid_argument("malformed UTF-8");
    char32_t cp = len == 1 ? b : len == 2 ? (b & 0x1F) : len == 3 ? (b & 0x0F) : (b & 0x07);
    for (std::size_t k = 1; k < len; ++k) {
      auto cb = static_cast<unsigned char>(s[i + k]);
      if ((cb >> 6) != 0x2) throw std::invalid_argument("malformed UTF-8");
      cp = (cp << 6) | (cb & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(std::u32string_view s) {
  std::string out;
  for (char32_t c : s) {
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (c >> 12)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (c >> 18)));
      out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

Alphabet::Alphabet(std::u32string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (reserved(symbols_[i])) {
      throw std::invalid_argument("symbol " + describe(symbols_[i]) + " is reserved by the regex syntax");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (symbols_[i] == symbols_[j]) throw std::invalid_argument("duplicate symbol " + describe(symbols_[i]));
    }
  }
}

Alphabet Alphabet::from_utf8(std::string_view symbols) { return Alphabet(decode_utf8(symbols)); }

std::optional<std::size_t> Alphabet::index_of(char32_t c) const noexcept {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == c) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> Alphabet::encode(std::string_view word) const {
  std::vector<std::size_t> out;
  for (char32_t c : decode_utf8(word)) {
    auto i = index_of(c);
    if (!i) throw UnknownSymbol(c);
    out.push_back(*i);
  }
  return out;
}

std::string Alphabet::decode(const std::vector<std::size_t>& word) const {
  std::u32string s;
  for (std::size_t i : word) s.push_back(symbol(i));
  return encode_utf8(s);
}

// --- constructions -------------------------------------------------------

Lang empty(std::size_t arity) {
  return Lang(Thunk<LNode>([arity] {
                LNode n;
                n.branch.reserve(arity);
                for (std::size_t x = 0; x < arity; ++x) n.branch.push_back(empty(arity));
                return n;
              }),
              arity, true);
}

Lang eps(std::size_t arity) {
  return Lang(Thunk<LNode>([arity] {
                LNode n;
                n.accept = true;
                for (std::size_t x = 0; x < arity; ++x) n.branch.push_back(empty(arity));
                return n;
              }),
              arity);
}

Lang chr(std::size_t arity, std::size_t symbol) {
  if (symbol >= arity) throw std::out_of_range("chr: symbol index outside alphabet");
  return Lang(Thunk<LNode>([arity, symbol] {
                LNode n;
                for (std::size_t x = 0; x < arity; ++x) n.branch.push_back(x == symbol ? eps(arity) : empty(arity));
                return n;
              }),
              arity);
}

Lang lang_union(const Lang& a, const Lang& b) {
  if (a.known_empty()) return b;
  if (b.known_empty()) return a;
  return Lang(Thunk<LNode>([a, b] {
                const LNode& na = a.node();
                const LNode& nb = b.node();
                LNode n;
                n.accept = na.accept || nb.accept;
                for (std::size_t x = 0; x < na.branch.size(); ++x) {
                  n.branch.push_back(lang_union(na.branch[x], nb.branch[x]));
                }
                return n;
              }),
              a.arity());
}

Lang inter(const Lang& a, const Lang& b) {
  if (a.known_empty() || b.known_empty()) return empty(a.arity());
  return Lang(Thunk<LNode>([a, b] {
                const LNode& na = a.node();
                const LNode& nb = b.node();
                LNode n;
                n.accept = na.accept && nb.accept;
                for (std::size_t x = 0; x < na.branch.size(); ++x) {
                  n.branch.push_back(inter(na.branch[x], nb.branch[x]));
                }
                return n;
              }),
              a.arity());
}

Lang comp(const Lang& a) {
  return Lang(Thunk<LNode>([a] {
                const LNode& na = a.node();
                LNode n;
                n.accept = !na.accept;
                for (const Lang& d : na.branch) n.branch.push_back(comp(d));
                return n;
              }),
              a.arity());
}

Lang concat(const Lang& a, const Lang& b) {
  if (a.known_empty() || b.known_empty()) return empty(a.arity());
  return Lang(Thunk<LNode>([a, b] {
                const LNode& na = a.node();
                LNode n;
                n.accept = na.accept && b.accepts_empty();
                for (std::size_t x = 0; x < na.branch.size(); ++x) {
                  Lang head = concat(na.branch[x], b);
                  n.branch.push_back(na.accept ? lang_union(head, b.deriv(x)) : head);
                }
                return n;
              }),
              a.arity());
}

Lang star(const Lang& a) {
  return Lang(Thunk<LNode>([a] {
                const LNode& na = a.node();
                LNode n;
                n.accept = true;
                for (const Lang& d : na.branch) n.branch.push_back(concat(d, star(a)));
                return n;
              }),
              a.arity());
}

bool in_lang(const Lang& t, const std::vector<std::size_t>& word) {
  const Lang* cur = &t;
  for (std::size_t x : word) cur = &cur->deriv(x);
  return cur->accepts_empty();
}

// --- finite basis --------------------------------------------------------

TLang lang_idl(const Lang& t, std::size_t n) {
  if (n == 0) return TLang::tbot();
  const LNode& node = t.node();
  std::vector<TLang> kids;
  kids.reserve(node.branch.size());
  for (const Lang& d : node.branch) kids.push_back(lang_idl(d, n - 1));
  return TLang::tnode(node.accept, std::move(kids));
}

Lang lang_incl(const TLang& t, std::size_t arity) {
  if (t.bot) return empty(arity);
  return Lang(Thunk<LNode>([t, arity] {
                LNode n;
                n.accept = t.accept;
                for (const TLang& k : t.branch) n.branch.push_back(lang_incl(k, arity));
                return n;
              }),
              arity);
}

bool is_bot(const TLang& t) {
  if (t.bot) return true;
  if (t.accept) return false;
  for (const TLang& k : t.branch) {
    if (!is_bot(k)) return false;
  }
  return true;
}

bool tlang_le(const TLang& a, const TLang& b) {
  if (is_bot(a)) return true;
  if (b.bot) return false;
  if (a.accept && !b.accept) return false;
  for (std::size_t x = 0; x < a.branch.size(); ++x) {
    if (!tlang_le(a.branch[x], b.branch[x])) return false;
  }
  return true;
}

Lang tconcat(const TLang& a, const Lang& l) {
  if (a.bot) return empty(l.arity());
  return Lang(Thunk<LNode>([a, l] {
                LNode n;
                n.accept = a.accept && l.accepts_empty();
                for (std::size_t x = 0; x < a.branch.size(); ++x) {
                  Lang head = tconcat(a.branch[x], l);
                  n.branch.push_back(a.accept ? lang_union(head, l.deriv(x)) : head);
                }
                return n;
              }),
              l.arity());
}

// --- bounded comparison --------------------------------------------------

namespace {

struct Pending {
  Lang a;
  Lang b;
  std::vector<std::size_t> word;
};

/// Shortlex walk over both tries; `bad` decides whether a node pair is a
/// witness. Returns the first witness word.
template <class Bad>
std::optional<std::vector<std::size_t>> first_witness(const Lang& a, const Lang& b, std::size_t depth, Bad bad) {
  std::deque<Pending> queue;
  queue.push_back({a, b, {}});
  while (!queue.empty()) {
    Pending p = std::move(queue.front());
    queue.pop_front();
    if (bad(p.a.accepts_empty(), p.b.accepts_empty())) return p.word;
    if (p.word.size() == depth) continue;
    for (std::size_t x = 0; x < p.a.arity(); ++x) {
      std::vector<std::size_t> w = p.word;
      w.push_back(x);
      queue.push_back({p.a.deriv(x), p.b.deriv(x), std::move(w)});
    }
  }
  return std::nullopt;
}

}  // namespace

EquivResult equiv_upto(const Lang& a, const Lang& b, std::size_t depth) {
  auto w = first_witness(a, b, depth, [](bool x, bool y) { return x != y; });
  if (w) return Counterexample{std::move(*w)};
  return Equal{};
}

bool le_upto(const Lang& a, const Lang& b, std::size_t depth) {
  return !first_witness(a, b, depth, [](bool x, bool y) { return x && !y; });
}

}  // namespace coind
