#ifndef COIND_KERNELS_HPP
#define COIND_KERNELS_HPP

// Batch kernels with a serial reference and an OpenMP version. Both split the
// work into the same fixed units and reduce in index order, so their results
// are identical for any thread count.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "coind/cotree.hpp"
#include "coind/ka.hpp"
#include "coind/lang.hpp"
#include "coind/sieve.hpp"

namespace coind {

enum class Execution { Serial, Parallel };

/// Samples are split into this many blocks; block b reads bits from
/// BitSource::seeded(seed, b) and builds its own tree.
inline constexpr std::size_t kSampleBlocks = 64;

struct SampleTally {
  std::uint64_t n_samples = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t n_diverged_bottom = 0;
  std::uint64_t n_diverged_budget = 0;
  std::uint64_t bits_consumed = 0;

  std::uint64_t n_diverged() const { return n_diverged_bottom + n_diverged_budget; }
  std::uint64_t n_sampled() const { return n_samples - n_diverged(); }
  std::uint64_t count(std::uint64_t x) const {
    auto it = counts.find(x);
    return it == counts.end() ? 0 : it->second;
  }
  friend bool operator==(const SampleTally&, const SampleTally&) = default;
};

using SamplerFactory = std::function<Cotree<std::uint64_t>()>;

/// n samples; each sample gets its own StepBudget of `per_sample_budget`.
SampleTally sample_tally(const SamplerFactory& make, std::uint64_t n, std::uint64_t seed,
                         std::uint64_t per_sample_budget, Execution exec);

/// Runs cfg.trials KA trials and reduces them.
KaReport ka_axiom_suite(const KaConfig& cfg, const Alphabet& alphabet, Execution exec);

/// verify_sieve at each bound, each with its own budget.
std::vector<SieveReport> verify_sieve_bounds(const std::vector<std::int64_t>& bounds, std::uint64_t budget,
                                             Execution exec);

}  // namespace coind

#endif  // COIND_KERNELS_HPP
