#include <doctest.h>

#include <random>

#include "coind/colist.hpp"
#include "coind/sieve.hpp"

using namespace coind;

using IntList = Colist<std::int64_t>;

TEST_CASE("list_fold") {
  CHECK(list_fold<int, int>(0, [](int a, int b) { return a + b; }, {1, 2, 3}) == 6);
  CHECK(list_fold<int, int>(9, [](int a, int b) { return a + b; }, {}) == 9);
  auto even_step = [](std::int64_t a, IntList rest) { return a % 2 == 0 ? IntList::cons(a, std::move(rest)) : rest; };
  IntList r = list_fold<std::int64_t, IntList>(IntList::bot(), even_step, {2, 3, 4});
  CHECK(colist_idl(r, 10) == AList<std::int64_t>{2, 4});
  CHECK_FALSE(colist_idl(r, 10).size() == 3);
}

TEST_CASE("idl and incl") {
  CHECK(colist_idl(nats(0), 3) == AList<std::int64_t>{0, 1, 2});
  CHECK(colist_idl(IntList::bot(), 5).empty());
  IntList one = colist_incl(AList<std::int64_t>{7});
  REQUIRE(one.force());
  CHECK(one.force()->head == 7);
  CHECK_FALSE(one.force()->tail.force());
}

TEST_CASE("cofold_sem") {
  auto plus = [](std::int64_t a, std::int64_t b) { return a + b; };
  auto chain = cofold_sem(plus, std::int64_t{0}, colist_incl(colist_idl(nats(1), 3)), 5);
  CHECK(chain.back() == 6);
  auto on_bot = cofold_sem(plus, std::int64_t{0}, IntList::bot(), 4);
  CHECK(on_bot.stabilized_at == 0);
  auto len = cofold_sem([](std::int64_t, std::size_t n) { return n + 1; }, std::size_t{0},
                        colist_incl(AList<std::int64_t>{5, 6}), 4);
  CHECK(len.values == std::vector<std::size_t>{0, 1, 2, 2, 2});
}

TEST_CASE("cofold_lazy") {
  StepBudget ample(10'000);
  auto sum = cofold_lazy<std::int64_t>([](std::int64_t a, const Thunk<std::int64_t>& r) { return a + r.force(); },
                                       colist_incl(AList<std::int64_t>{1, 2}), ample);
  CHECK(std::get<Halt>(sum) == Halt::HitBottom);

  using V = std::vector<std::int64_t>;
  StepBudget b2(10'000);
  int remaining = 3;
  auto take3 = cofold_lazy<V>(
      [&](std::int64_t a, const Thunk<V>& r) {
        if (--remaining == 0) return V{a};
        V rest = r.force();
        rest.insert(rest.begin(), a);
        return rest;
      },
      nats(0), b2);
  CHECK(std::get<V>(take3) == V{0, 1, 2});

  StepBudget b3(10'000);
  auto bad = cofold_lazy<int>([](std::int64_t, const Thunk<int>& r) { return r.force(); }, nats(0), b3);
  CHECK(std::get<Halt>(bad) == Halt::Exhausted);
}

TEST_CASE("filter") {
  IntList evens = filter<std::int64_t>([](std::int64_t x) { return x % 2 == 0; }, nats(0));
  AList<std::int64_t> oracle;
  for (std::int64_t x : colist_idl(nats(0), 9)) {
    if (x % 2 == 0) oracle.push_back(x);
  }
  oracle.resize(3);
  CHECK(colist_idl(evens, 3) == oracle);

  StepBudget b(1000);
  IntList never = filter<std::int64_t>([](std::int64_t) { return false; }, nats(0));
  {
    BudgetScope scope(b);
    CHECK_THROWS_AS(never.force(), Exhausted);
  }
  CHECK(b.exhausted());

  IntList fb = filter<std::int64_t>([](std::int64_t) { return true; }, IntList::bot());
  CHECK_FALSE(fb.force());
}

TEST_CASE("filter never-true exhausts a budget of any size without recursion") {
  IntList never = filter<std::int64_t>([](std::int64_t) { return false; }, nats(0));
  StepBudget b(2'000'000);
  BudgetScope scope(b);
  CHECK_THROWS_AS(never.force(), Exhausted);
}

TEST_CASE("map") {
  auto sq = map<std::int64_t, std::int64_t>([](std::int64_t x) { return x * x; }, nats(1));
  CHECK(colist_idl(sq, 4) == AList<std::int64_t>{1, 4, 9, 16});
}

TEST_CASE("coexists and coforall") {
  auto eq5 = [](std::int64_t x) { return x == 5; };
  CHECK(coexists(eq5, nats(0), 10) == ExistsResult(Found{5}));
  CHECK(coexists(eq5, nats(6), 10) == ExistsResult(NotFoundUpTo{10}));
  CHECK(coexists(is_prime, sieve(), 1) == ExistsResult(Found{0}));
  // Monotone in fuel.
  for (std::size_t fuel = 6; fuel < 20; ++fuel) CHECK(coexists(eq5, nats(0), fuel) == ExistsResult(Found{5}));

  CHECK(coforall_upto([](std::int64_t x) { return x < 10; }, nats(0), 5) == ForallResult(HoldsUpTo{5}));
  CHECK(coforall_upto([](std::int64_t x) { return x < 3; }, nats(0), 5) == ForallResult(CounterexampleAt{3}));
  for (std::size_t d = 4; d < 12; ++d) {
    CHECK(coforall_upto([](std::int64_t x) { return x < 3; }, nats(0), d) == ForallResult(CounterexampleAt{3}));
  }
  CHECK(coforall_upto(is_prime, sieve(), 50) == ForallResult(HoldsUpTo{50}));
}

TEST_CASE("colength and productivity") {
  CHECK(colength_chain(colist_incl(AList<std::int64_t>{1, 2}), 4).values == std::vector<std::size_t>{0, 1, 2, 2, 2});
  StepBudget ample(1'000'000);
  CHECK(std::get<bool>(check_productive(nats(0), 100, ample)));
  StepBudget small(100'000);
  auto r = check_productive(filter<std::int64_t>([](std::int64_t) { return false; }, nats(0)), 1, small);
  CHECK(std::get<Halt>(r) == Halt::Exhausted);
  StepBudget b3(1000);
  CHECK_FALSE(std::get<bool>(check_productive(colist_incl(AList<std::int64_t>{1}), 2, b3)));
}

TEST_CASE("ordered_upto and prefix_le_upto") {
  CHECK(ordered_upto(std::less<>(), nats(0), 10));
  IntList rep = IntList::cons(1, IntList::cons(2, IntList::cons(1, nats(5))));
  CHECK_FALSE(ordered_upto(std::not_equal_to<>(), rep, 3));
  CHECK(ordered_upto(std::less<>(), sieve(), 25));

  CHECK(prefix_le_upto(IntList::bot(), nats(3), 5));
  CHECK(prefix_le_upto(colist_incl(AList<std::int64_t>{1, 2}), nats(1), 5));
  CHECK_FALSE(prefix_le_upto(colist_incl(AList<std::int64_t>{1, 3}), nats(1), 5));
}

TEST_CASE("filter fusion: idl(filter p l, n) comes from folding a longer prefix") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t m = 2 + static_cast<std::int64_t>(gen() % 5);
    auto p = [m](std::int64_t x) { return x % m == 1; };
    const std::size_t n = gen() % 8;
    AList<std::int64_t> want = colist_idl(filter<std::int64_t>(p, nats(0)), n);
    // A prefix of length m*n + m holds n matches of a residue class mod m.
    AList<std::int64_t> prefix = colist_idl(nats(0), static_cast<std::size_t>(m) * n + static_cast<std::size_t>(m));
    AList<std::int64_t> folded;
    for (std::int64_t x : prefix) {
      if (p(x) && folded.size() < n) folded.push_back(x);
    }
    CHECK(want == folded);
  }
}

TEST_CASE("long forced stream is destroyed without deep recursion") {
  IntList s = nats(0);
  CHECK(colist_idl(s, 300'000).size() == 300'000);
}
