#ifndef COIND_SIEVE_HPP
#define COIND_SIEVE_HPP

#include <cstdint>
#include <vector>

#include "coind/colist.hpp"

namespace coind {

/// n, n+1, n+2, ...
Colist<std::int64_t> nats(std::int64_t n);

/// sieve_aux (cocons n l) = cocons n (filter (m mod n != 0) (sieve_aux l)).
Colist<std::int64_t> sieve_aux(Colist<std::int64_t> l);

/// sieve_aux (nats 2).
Colist<std::int64_t> sieve();

/// Trial division: 1 < n and no m in (1, n) divides n.
bool is_prime(std::int64_t n);

/// Finite counterpart of sieve_aux: the fold over a list with bottom CoBot.
/// Its result is a finite approximant of sieve_aux applied to the stream.
Colist<std::int64_t> sieve_aux_list(const AList<std::int64_t>& l);

struct SieveReport {
  std::int64_t bound = 0;
  bool sound = false;
  bool complete = false;
  bool sorted = false;
  bool nodup = false;
  bool exhausted = false;
  std::uint64_t productive_to = 0;  ///< sieve cells forced within the budget
  std::vector<std::int64_t> outputs;  ///< sieve outputs <= bound
};

/// Forces the sieve past `bound` and checks soundness, completeness,
/// sortedness and duplicate-freedom against trial division. On budget
/// exhaustion the partial prefix is reported with exhausted = true.
SieveReport verify_sieve(std::int64_t bound, StepBudget& budget);

}  // namespace coind

#endif  // COIND_SIEVE_HPP
