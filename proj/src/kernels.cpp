#include "coind/kernels.hpp"

#include <exception>

namespace coind {

namespace {

/// Runs fn(0..n-1); an exception from any index is rethrown afterwards, the
/// lowest index first.
template <class F>
void for_each_index(std::int64_t n, Execution exec, const F& fn) {
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  auto guarded = [&](std::int64_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) guarded(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) guarded(i);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

SampleTally sample_block(const SamplerFactory& make, std::uint64_t count, std::uint64_t seed, std::uint64_t block,
                         std::uint64_t per_sample_budget) {
  SampleTally tally;
  if (count == 0) return tally;
  const Cotree<std::uint64_t> tree = make();
  BitSource bits = BitSource::seeded(seed, block);
  for (std::uint64_t i = 0; i < count; ++i) {
    StepBudget budget(per_sample_budget);
    const std::uint64_t before = bits.consumed();
    auto r = sample(tree, bits, budget);
    ++tally.n_samples;
    tally.bits_consumed += bits.consumed() - before;
    if (auto* s = std::get_if<Sampled<std::uint64_t>>(&r)) {
      ++tally.counts[s->value];
    } else if (auto* d = std::get_if<Diverged>(&r)) {
      if (d->reason == DivergeReason::Bottom) {
        ++tally.n_diverged_bottom;
      } else {
        ++tally.n_diverged_budget;
      }
    }
  }
  return tally;
}

void merge(SampleTally& into, const SampleTally& part) {
  into.n_samples += part.n_samples;
  for (const auto& [k, v] : part.counts) into.counts[k] += v;
  into.n_diverged_bottom += part.n_diverged_bottom;
  into.n_diverged_budget += part.n_diverged_budget;
  into.bits_consumed += part.bits_consumed;
}

}  // namespace

SampleTally sample_tally(const SamplerFactory& make, std::uint64_t n, std::uint64_t seed,
                         std::uint64_t per_sample_budget, Execution exec) {
  std::vector<SampleTally> parts(kSampleBlocks);
  const auto blocks = static_cast<std::int64_t>(kSampleBlocks);
  auto run = [&](std::int64_t b) {
    const auto ub = static_cast<std::uint64_t>(b);
    const std::uint64_t count = n / kSampleBlocks + (ub < n % kSampleBlocks ? 1 : 0);
    parts[ub] = sample_block(make, count, seed, ub, per_sample_budget);
  };
  for_each_index(blocks, exec, run);
  SampleTally total;
  for (const SampleTally& p : parts) merge(total, p);
  return total;
}

KaReport ka_axiom_suite(const KaConfig& cfg, const Alphabet& alphabet, Execution exec) {
  std::vector<KaTrial> trials(cfg.trials);
  const auto n = static_cast<std::int64_t>(cfg.trials);
  for_each_index(n, exec, [&](std::int64_t i) {
    trials[static_cast<std::size_t>(i)] = run_ka_trial(cfg, alphabet, static_cast<std::size_t>(i));
  });
  return reduce_ka_trials(cfg, trials);
}

std::vector<SieveReport> verify_sieve_bounds(const std::vector<std::int64_t>& bounds, std::uint64_t budget,
                                             Execution exec) {
  std::vector<SieveReport> out(bounds.size());
  const auto n = static_cast<std::int64_t>(bounds.size());
  auto run = [&](std::int64_t i) {
    StepBudget b(budget);
    out[i] = verify_sieve(bounds[i], b);
  };
  for_each_index(n, exec, run);
  return out;
}

}  // namespace coind
