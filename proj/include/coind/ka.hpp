#ifndef COIND_KA_HPP
#define COIND_KA_HPP

// Randomized Kleene algebra law suite on bounded-depth language equality.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coind/lazy.hpp"
#include "coind/random.hpp"
#include "coind/regex.hpp"

namespace coind {

/// Random regex with exactly `size` constructors over an alphabet of `arity`
/// symbols, drawing from the full grammar (including & and ~).
Regex random_regex(Rng& rng, std::size_t size, std::size_t arity);

/// Names of the checked laws, in report order.
const std::vector<std::string>& ka_law_names();

struct KaConfig {
  std::size_t depth = 6;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  std::size_t max_size = 4;
  std::uint64_t step_budget = kDefaultStepBudget;  ///< per law check
};

struct LawFailure {
  std::size_t law;  ///< index into ka_law_names()
  std::string instance;
  std::string word;  ///< counterexample word, or "<exhausted>"
};

/// Everything one trial contributes; reduced in trial order.
struct KaTrial {
  std::vector<LawFailure> failures;
  std::size_t exhausted = 0;
  bool order_plus_right = false;  ///< le(a, b) agrees with a + b = b
  bool order_plus_left = false;   ///< le(a, b) agrees with a + b = a
};

/// Runs every law once on regexes drawn from Rng(seed, index).
KaTrial run_ka_trial(const KaConfig& cfg, const Alphabet& alphabet, std::size_t index);

struct KaLawSummary {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
};

struct KaReport {
  KaConfig config;
  std::vector<KaLawSummary> laws;
  std::vector<LawFailure> counterexamples;
  std::size_t exhausted = 0;
  /// Order identity tallies over all trials: how often containment agreed
  /// with a + b = b, and with a + b = a.
  std::size_t order_checks = 0;
  std::size_t order_plus_right = 0;
  std::size_t order_plus_left = 0;

  bool passed() const { return counterexamples.empty() && exhausted == 0; }
};

/// Deterministic reduction of per-trial results in index order.
KaReport reduce_ka_trials(const KaConfig& cfg, const std::vector<KaTrial>& trials);

}  // namespace coind

#endif  // COIND_KA_HPP
