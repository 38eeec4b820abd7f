#include "coind/approx.hpp"

#include <algorithm>

namespace coind {

Bracket best_bracket(const ApproxChain<ERat>& lower, const ApproxChain<ERat>& upper) {
  if (lower.values.empty() || upper.values.empty()) throw NotConverged("empty chain");
  Bracket b{lower.values[0], upper.values[0], 0, 0};
  for (std::size_t i = 1; i < lower.values.size(); ++i) {
    if (lower.values[i] > b.lower) {
      b.lower = lower.values[i];
      b.lower_fuel = i;
    }
  }
  for (std::size_t i = 1; i < upper.values.size(); ++i) {
    if (upper.values[i] < b.upper) {
      b.upper = upper.values[i];
      b.upper_fuel = i;
    }
  }
  return b;
}

Converged<Bracket> converge(const ApproxChain<ERat>& lower, const ApproxChain<ERat>& upper,
                            const EpsGap& policy) {
  std::size_t n = std::min(lower.values.size(), upper.values.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (sub_trunc(upper.values[i], lower.values[i]) <= policy.eps) {
      return {best_bracket(lower, upper), i};
    }
  }
  throw NotConverged("gap above " + policy.eps.to_string() + " at every fuel");
}

}  // namespace coind
