#include "coind/sieve.hpp"

#include <stdexcept>

namespace coind {

using Stream = Colist<std::int64_t>;

Stream nats(std::int64_t n) {
  return Stream::lazy([n]() -> Stream::Cell { return Stream::Cons{n, nats(n + 1)}; });
}

namespace {

auto not_multiple_of(std::int64_t n) {
  return [n](std::int64_t m) { return m % n != 0; };
}

}  // namespace

Stream sieve_aux(Stream l) {
  return Stream::lazy([l = std::move(l)]() -> Stream::Cell {
    const auto& c = l.force();
    if (!c) return std::nullopt;
    return Stream::Cons{c->head, filter(not_multiple_of(c->head), sieve_aux(c->tail))};
  });
}

Stream sieve() { return sieve_aux(nats(2)); }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t m = 2; m * m <= n; ++m) {
    if (n % m == 0) return false;
  }
  return true;
}

Stream sieve_aux_list(const AList<std::int64_t>& l) {
  return list_fold<std::int64_t, Stream>(
      Stream::bot(),
      [](std::int64_t n, Stream rest) { return Stream::cons(n, filter(not_multiple_of(n), std::move(rest))); },
      l);
}

SieveReport verify_sieve(std::int64_t bound, StepBudget& budget) {
  if (bound < 2) throw std::invalid_argument("verify_sieve: bound must be at least 2");
  SieveReport r;
  r.bound = bound;
  Stream s = sieve();
  {
    BudgetScope scope(budget);
    try {
      const Stream* cur = &s;
      for (;;) {
        const auto& c = cur->force();
        ++r.productive_to;
        if (!c || c->head > bound) break;
        r.outputs.push_back(c->head);
        cur = &c->tail;
      }
    } catch (const Exhausted&) {
      r.exhausted = true;
    }
  }
  // Every check below stays within the prefix forced above.
  Stream subject = r.exhausted ? colist_incl(r.outputs) : s;
  const std::size_t n = r.outputs.size();
  r.sound = std::holds_alternative<HoldsUpTo>(coforall_upto(is_prime, subject, n));
  r.sorted = ordered_upto(std::less<>{}, subject, n);
  r.nodup = ordered_upto(std::not_equal_to<>{}, subject, n);

  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= bound; ++p) {
    if (is_prime(p)) primes.push_back(p);
  }
  r.complete = true;
  for (std::int64_t p : primes) {
    auto hit = coexists([p](std::int64_t m) { return m == p; }, subject, primes.size() + 1);
    if (!std::holds_alternative<Found>(hit)) {
      r.complete = false;
      break;
    }
  }
  return r;
}

}  // namespace coind
