#include <doctest.h>

#include "coind/ka.hpp"
#include "coind/lang.hpp"
#include "coind/regex.hpp"
#include "oracles.hpp"

using namespace coind;

namespace {

const Alphabet& ab() {
  static const Alphabet a = Alphabet::from_utf8("ab");
  return a;
}

Lang L(std::string_view pattern) { return compile(parse_regex(pattern, ab()), 2); }
std::vector<std::size_t> W(std::string_view word) { return ab().encode(word); }

std::vector<Regex> random_regexes(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<Regex> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_regex(rng, 1 + rng.below(5), 2));
  return out;
}

}  // namespace

TEST_CASE("alphabet") {
  CHECK(ab().size() == 2);
  CHECK(ab().decode(W("abba")) == "abba");
  CHECK_THROWS_AS(ab().encode("abc"), UnknownSymbol);
  CHECK_THROWS(Alphabet::from_utf8(""));
  CHECK_THROWS(Alphabet::from_utf8("aa"));
  CHECK_THROWS(Alphabet::from_utf8("a*"));
  CHECK_THROWS(Alphabet::from_utf8("a1"));
  const Alphabet greek = Alphabet::from_utf8("αβ");
  CHECK(greek.size() == 2);
  CHECK(in_lang(compile(parse_regex("(αβ)*", greek), 2), greek.encode("αβαβ")));
}

TEST_CASE("constructor membership") {
  CHECK(in_lang(eps(2), W("")));
  CHECK_FALSE(in_lang(eps(2), W("a")));
  CHECK(in_lang(chr(2, 0), W("a")));
  CHECK_FALSE(in_lang(chr(2, 0), W("")));
  CHECK(in_lang(lang_union(chr(2, 0), chr(2, 1)), W("b")));
  CHECK_FALSE(in_lang(inter(chr(2, 0), chr(2, 1)), W("a")));
  for (const auto& w : oracle::all_words(2, 6)) CHECK(in_lang(comp(empty(2)), w));
  CHECK(in_lang(concat(chr(2, 0), chr(2, 1)), W("ab")));
  CHECK_FALSE(in_lang(concat(chr(2, 0), chr(2, 1)), W("a")));
  CHECK(in_lang(concat(star(chr(2, 0)), chr(2, 1)), W("aab")));
  CHECK(in_lang(star(chr(2, 0)), W("")));
  CHECK(in_lang(star(chr(2, 0)), W("aaa")));
  CHECK_FALSE(in_lang(star(chr(2, 0)), W("ab")));
  for (const auto& w : oracle::all_words(2, 6)) CHECK(in_lang(star(lang_union(chr(2, 0), chr(2, 1))), w));
  CHECK(in_lang(L("(ab)*"), W("abab")));
  CHECK_FALSE(in_lang(empty(2), W("")));
  CHECK_FALSE(in_lang(comp(eps(2)), W("")));
}

TEST_CASE("truncations") {
  CHECK(is_bot(lang_idl(empty(2), 3)));
  CHECK(lang_idl(eps(2), 1) == TLang::tnode(true, {TLang::tbot(), TLang::tbot()}));
  CHECK(lang_idl(chr(2, 0), 0) == TLang::tbot());
  for (const Regex& r : random_regexes(5, 60)) {
    Lang t = compile(r, 2);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(tlang_le(lang_idl(t, n), lang_idl(t, n + 1)));
  }
  // An all-false trie sits below anything.
  CHECK(tlang_le(lang_idl(empty(2), 3), lang_idl(eps(2), 1)));
  CHECK_FALSE(tlang_le(lang_idl(eps(2), 2), lang_idl(empty(2), 2)));
}

TEST_CASE("incl of a truncation agrees below its depth") {
  for (const Regex& r : random_regexes(8, 40)) {
    Lang t = compile(r, 2);
    Lang back = lang_incl(lang_idl(t, 4), 2);
    for (const auto& w : oracle::all_words(2, 3)) CHECK(in_lang(back, w) == in_lang(t, w));
  }
}

TEST_CASE("parser") {
  CHECK(parse_regex("a*b", ab()) == Regex::cat(Regex::star(Regex::chr(0)), Regex::chr(1)));
  CHECK(parse_regex("~(0)", ab()) == Regex::comp(Regex::empty()));
  CHECK(parse_regex(" a + b & a ", ab()) ==
        Regex::union_of(Regex::chr(0), Regex::inter(Regex::chr(1), Regex::chr(0))));
  CHECK(parse_regex("~a*", ab()) == Regex::comp(Regex::star(Regex::chr(0))));
  try {
    parse_regex("a(", ab());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_regex("ac", ab()), ParseError);
  CHECK_THROWS_AS(parse_regex("", ab()), ParseError);
  CHECK_THROWS_AS(parse_regex("a)", ab()), ParseError);
}

TEST_CASE("printer round-trips") {
  for (const Regex& r : random_regexes(17, 300)) {
    const std::string s = to_string(r, ab());
    CHECK_MESSAGE(parse_regex(s, ab()) == r, s);
  }
  CHECK(to_string(parse_regex("(a+b)*", ab()), ab()) == "(a+b)*");
  CHECK(to_string(parse_regex("a(bc)", Alphabet::from_utf8("abc")), Alphabet::from_utf8("abc")) == "a(bc)");
}

TEST_CASE("membership agrees with the interval matcher") {
  const auto words = oracle::all_words(2, 5);
  for (const Regex& r : random_regexes(23, 200)) {
    Lang t = compile(r, 2);
    for (const auto& w : words) REQUIRE_MESSAGE(in_lang(t, w) == oracle::matches(r, w), to_string(r, ab()));
  }
}

TEST_CASE("derivative soundness") {
  const auto words = oracle::all_words(2, 5);
  for (const Regex& r : random_regexes(29, 80)) {
    Lang t = compile(r, 2);
    for (const auto& w : words) {
      for (std::size_t c = 0; c < 2; ++c) {
        std::vector<std::size_t> cw{c};
        cw.insert(cw.end(), w.begin(), w.end());
        CHECK(in_lang(t, cw) == in_lang(t.deriv(c), w));
      }
    }
  }
}

TEST_CASE("equiv_upto") {
  CHECK(std::holds_alternative<Equal>(equiv_upto(L("(a+b)*"), L("(a*b*)*"), 6)));
  CHECK(equiv_upto(L("a"), L("b"), 1) == EquivResult(Counterexample{W("a")}));
  CHECK(equiv_upto(L("a"), L("aa"), 2) == EquivResult(Counterexample{W("a")}));
  CHECK(std::holds_alternative<Equal>(equiv_upto(L("0"), L("~~0"), 4)));
  for (const Regex& r : random_regexes(31, 50)) {
    CHECK(std::holds_alternative<Equal>(equiv_upto(compile(r, 2), compile(r, 2), 5)));
  }
  const auto rs = random_regexes(37, 120);
  for (std::size_t i = 0; i + 1 < rs.size(); i += 2) {
    auto got = equiv_upto(compile(rs[i], 2), compile(rs[i + 1], 2), 5);
    auto want = oracle::difference(rs[i], rs[i + 1], 2, 5);
    if (want) {
      CHECK(got == EquivResult(Counterexample{*want}));
    } else {
      CHECK(std::holds_alternative<Equal>(got));
    }
  }
}

TEST_CASE("le_upto") {
  CHECK(le_upto(chr(2, 0), star(chr(2, 0)), 4));
  CHECK_FALSE(le_upto(star(chr(2, 0)), chr(2, 0), 4));
  const auto rs = random_regexes(41, 100);
  for (std::size_t i = 0; i + 1 < rs.size(); i += 2) {
    Lang a = compile(rs[i], 2), b = compile(rs[i + 1], 2);
    bool subset = true;
    for (const auto& w : oracle::all_words(2, 5)) {
      if (oracle::matches(rs[i], w) && !oracle::matches(rs[i + 1], w)) subset = false;
    }
    CHECK(le_upto(a, b, 5) == subset);
    CHECK(le_upto(a, b, 5) == std::holds_alternative<Equal>(equiv_upto(lang_union(a, b), b, 5)));
  }
}

TEST_CASE("boolean structure") {
  for (const Regex& r : random_regexes(43, 60)) {
    Lang a = compile(r, 2);
    CHECK(std::holds_alternative<Equal>(equiv_upto(comp(comp(a)), a, 6)));
  }
  const auto rs = random_regexes(47, 60);
  for (std::size_t i = 0; i + 1 < rs.size(); i += 2) {
    Lang a = compile(rs[i], 2), b = compile(rs[i + 1], 2);
    CHECK(std::holds_alternative<Equal>(equiv_upto(comp(lang_union(a, b)), inter(comp(a), comp(b)), 6)));
    CHECK(std::holds_alternative<Equal>(equiv_upto(comp(inter(a, b)), lang_union(comp(a), comp(b)), 6)));
  }
}

TEST_CASE("concat is the limit of tconcat over truncations") {
  const auto rs = random_regexes(53, 80);
  for (std::size_t i = 0; i + 1 < rs.size(); i += 2) {
    Lang a = compile(rs[i], 2), b = compile(rs[i + 1], 2);
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(std::holds_alternative<Equal>(equiv_upto(tconcat(lang_idl(a, n), b), concat(a, b), n - 1)));
    }
  }
}

TEST_CASE("concat with eps is identity") {
  for (const Regex& r : random_regexes(59, 50)) {
    Lang a = compile(r, 2);
    CHECK(std::holds_alternative<Equal>(equiv_upto(concat(eps(2), a), a, 6)));
  }
}
