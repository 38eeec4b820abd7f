#include <doctest.h>

#include "coind/dist.hpp"
#include "coind/kernels.hpp"

using namespace coind;

TEST_CASE("sample tallies match between serial and parallel") {
  for (const char* spec : {"bernoulli:2/3", "uniform:5", "geometric:1/3"}) {
    const DistSpec d = DistSpec::parse(spec);
    auto make = [&] { return d.build(); };
    const SampleTally s = sample_tally(make, 5000, 42, kDefaultStepBudget, Execution::Serial);
    const SampleTally p = sample_tally(make, 5000, 42, kDefaultStepBudget, Execution::Parallel);
    CHECK(s == p);
    CHECK(s.n_samples == 5000);
    CHECK(s.n_diverged() == 0);
  }
}

TEST_CASE("sample tally counts are seed dependent and complete") {
  auto make = [] { return uniform(3); };
  const SampleTally a = sample_tally(make, 999, 1, kDefaultStepBudget, Execution::Serial);
  const SampleTally b = sample_tally(make, 999, 2, kDefaultStepBudget, Execution::Serial);
  CHECK(a.count(0) + a.count(1) + a.count(2) == 999);
  CHECK_FALSE(a == b);
}

TEST_CASE("divergent samplers are tallied separately") {
  auto make = [] { return Cotree<std::uint64_t>::node(Cotree<std::uint64_t>::leaf(1), Cotree<std::uint64_t>::bot()); };
  const SampleTally t = sample_tally(make, 2000, 3, 1000, Execution::Parallel);
  CHECK(t.n_diverged_bottom + t.count(1) == 2000);
  CHECK(t.n_diverged_bottom > 800);
  CHECK(t.n_diverged_budget == 0);
}

TEST_CASE("ka suite matches between serial and parallel") {
  KaConfig cfg;
  cfg.depth = 4;
  cfg.trials = 30;
  cfg.seed = 11;
  const Alphabet ab = Alphabet::from_utf8("ab");
  const KaReport s = ka_axiom_suite(cfg, ab, Execution::Serial);
  const KaReport p = ka_axiom_suite(cfg, ab, Execution::Parallel);
  CHECK(s.order_plus_left == p.order_plus_left);
  CHECK(s.order_plus_right == p.order_plus_right);
  CHECK(s.counterexamples.size() == p.counterexamples.size());
  for (std::size_t i = 0; i < s.laws.size(); ++i) CHECK(s.laws[i].failures == p.laws[i].failures);
}

TEST_CASE("sieve bounds match between serial and parallel") {
  const std::vector<std::int64_t> bounds{2, 10, 100, 500, 1000};
  auto s = verify_sieve_bounds(bounds, kDefaultStepBudget, Execution::Serial);
  auto p = verify_sieve_bounds(bounds, kDefaultStepBudget, Execution::Parallel);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].outputs == p[i].outputs);
    CHECK(s[i].sound);
    CHECK(s[i].complete);
  }
  CHECK_THROWS_AS(verify_sieve_bounds({5, 1}, 1000, Execution::Parallel), std::invalid_argument);
}
