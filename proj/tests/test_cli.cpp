#include <doctest.h>

#include <sstream>

#include "coind/cli.hpp"

using namespace coind;
using namespace coind::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

template <class T>
void round_trip(const std::string& text) {
  const json j = json::parse(text);
  const T rec = j.get<T>();
  CHECK(json(rec) == j);
}

}  // namespace

TEST_CASE("sieve command") {
  auto r = call({"sieve", "--count", "5"});
  CHECK(r.code == kOk);
  CHECK(r.out.rfind("2 3 5 7 11\n", 0) == 0);
  CHECK(r.out.find("sound true") != std::string::npos);
  CHECK(call({"sieve", "--count", "1"}).out.rfind("2\n", 0) == 0);
  CHECK(call({"sieve", "--count", "0"}).code == kError);
  CHECK(call({"sieve"}).code == kError);
  CHECK(call({"sieve", "--count", "100", "--step-budget", "10"}).code == kError);
  auto j = call({"--json", "sieve", "--count", "5"});
  round_trip<SieveCmdReport>(j.out);
  CHECK(json::parse(j.out)["outputs"] == json({2, 3, 5, 7, 11}));
}

TEST_CASE("regex commands") {
  CHECK(call({"regex", "match", "(ab)*", "abab", "--alphabet", "ab"}).code == kOk);
  CHECK(call({"regex", "match", "1", "", "--alphabet", "ab"}).code == kOk);
  CHECK(call({"regex", "match", "a&b", "a", "--alphabet", "ab"}).code == kNegative);
  CHECK(call({"regex", "match", "a(", "a"}).code == kError);
  CHECK(call({"regex", "match", "a", "c"}).code == kError);
  CHECK(call({"regex", "match", "c", "a"}).code == kError);
  CHECK(call({"regex", "equiv", "(a+b)*", "(a*b*)*", "--depth", "6", "--alphabet", "ab"}).code == kOk);
  auto cx = call({"regex", "equiv", "a", "aa", "--depth", "2", "--alphabet", "ab"});
  CHECK(cx.code == kNegative);
  CHECK(cx.out == "counterexample \"a\"\n");
  CHECK(call({"regex", "equiv", "0", "~~0", "--depth", "4"}).code == kOk);
  round_trip<MatchReport>(call({"--json", "regex", "match", "a*", "aaa"}).out);
  round_trip<EquivReport>(call({"--json", "regex", "equiv", "a", "aa", "--depth", "2"}).out);
  round_trip<EquivReport>(call({"--json", "regex", "equiv", "a", "a", "--depth", "2"}).out);
}

TEST_CASE("laws command") {
  auto r = call({"--json", "regex", "laws", "--depth", "4", "--trials", "10", "--seed", "1"});
  CHECK(r.code == kOk);
  round_trip<LawsReport>(r.out);
  CHECK(json::parse(r.out)["passed"] == true);
}

TEST_CASE("wp command") {
  auto r = call({"--json", "wp", "--dist", "bernoulli:2/3", "--event", "true", "--fuel", "4"});
  REQUIRE(r.code == kOk);
  const json j = json::parse(r.out);
  CHECK(j["wp_lower"] == "5/8");
  CHECK(j["wlp_upper"] == "3/4");
  round_trip<WpReport>(r.out);
  auto one = json::parse(call({"--json", "wp", "--dist", "bernoulli:1/1", "--event", "true", "--fuel", "1"}).out);
  CHECK(one["wp_lower"] == "1/1");
  CHECK(one["wlp_upper"] == "1/1");
  auto conv = json::parse(
      call({"--json", "wp", "--dist", "bernoulli:2/3", "--event", "true", "--fuel", "20", "--eps", "1/10^4"}).out);
  CHECK(conv["converged"] == true);
  CHECK(ERat::parse(conv["wp_lower"].get<std::string>()) <= ERat(2, 3));
  CHECK(ERat(2, 3) <= ERat::parse(conv["wlp_upper"].get<std::string>()));
  CHECK(call({"wp", "--dist", "bernoulli:2/3", "--event", "k=1", "--fuel", "3"}).code == kError);
  CHECK(call({"wp", "--dist", "nope:1", "--event", "true", "--fuel", "3"}).code == kError);
}

TEST_CASE("sample and equidist commands") {
  auto s = call({"--json", "sample", "--dist", "uniform:3", "--n", "300", "--seed", "9"});
  REQUIRE(s.code == kOk);
  round_trip<SampleReport>(s.out);
  auto j = json::parse(s.out);
  CHECK(j["counts"]["0"].get<int>() + j["counts"]["1"].get<int>() + j["counts"]["2"].get<int>() == 300);

  auto e = call({"--json", "equidist", "--dist", "bernoulli:2/3", "--event", "true", "--n", "20000", "--seed", "1",
                 "--tol", "0.02"});
  CHECK(e.code == kOk);
  round_trip<EquidistReport>(e.out);
  auto exact = json::parse(call({"--json", "equidist", "--dist", "bernoulli:1/1", "--event", "true", "--n", "100",
                                 "--seed", "1", "--tol", "0.01"})
                               .out);
  CHECK(exact["empirical_freq"] == 1.0);
  CHECK(exact["pass"] == true);
  CHECK(call({"equidist", "--dist", "uniform:3", "--event", "k=0", "--n", "0", "--tol", "0.01"}).code == kError);
}

TEST_CASE("equidist fails loudly when the bracket cannot close") {
  auto r = call({"equidist", "--dist", "geometric:1/7", "--event", "k=0", "--n", "10", "--tol", "0.000001",
                 "--step-budget", "5000"});
  CHECK(r.code == kError);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("determinism") {
  const std::vector<std::vector<std::string>> cmds{
      {"sample", "--dist", "geometric:1/3", "--n", "2000", "--seed", "5"},
      {"--json", "equidist", "--dist", "uniform:3", "--event", "k=1", "--n", "5000", "--seed", "5", "--tol", "0.05"},
      {"regex", "laws", "--depth", "3", "--trials", "8", "--seed", "5"},
  };
  for (const auto& c : cmds) CHECK(call(c).out == call(c).out);
}

TEST_CASE("rational flag syntax") {
  CHECK(parse_rational("1/10^6") == ERat(1, 1'000'000));
  CHECK(parse_rational("3/2^2") == ERat(3, 4));
  CHECK(parse_rational("0.25") == ERat(1, 4));
  CHECK_THROWS(parse_rational("1/0^2"));
}

TEST_CASE("help exits cleanly") { CHECK(call({"--help"}).code == kOk); }
