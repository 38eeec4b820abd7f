#ifndef COIND_CLI_HPP
#define COIND_CLI_HPP

// Command-line front end. run() is the whole program minus process setup so
// tests can drive it in memory.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coind/erat.hpp"

namespace coind {

void to_json(nlohmann::json& j, const ERat& r);
void from_json(const nlohmann::json& j, ERat& r);

}  // namespace coind

namespace coind::cli {

/// Exit codes shared by all commands.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  ///< reject, counterexample, failed audit
inline constexpr int kError = 2;     ///< usage, parameter or budget error

/// Largest fuel equidist tries when searching for a converged bracket.
inline constexpr std::size_t kMaxBracketFuel = 256;

struct SieveCmdReport {
  std::uint64_t count = 0;
  std::vector<std::int64_t> outputs;
  std::int64_t bound = 0;
  bool sound = false;
  bool complete = false;
  bool sorted = false;
  bool nodup = false;
};

struct MatchReport {
  std::string pattern;
  std::string input;
  std::string alphabet;
  bool accept = false;
};

struct EquivReport {
  std::string p1;
  std::string p2;
  std::string alphabet;
  std::uint64_t depth = 0;
  bool equal = false;
  std::optional<std::string> counterexample;
};

struct LawCounterexample {
  std::string law;
  std::string instance;
  std::string word;
};

struct LawsReport {
  std::uint64_t depth = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string alphabet;
  std::map<std::string, std::uint64_t> law_failures;
  std::vector<LawCounterexample> counterexamples;
  std::uint64_t exhausted = 0;
  std::uint64_t order_checks = 0;
  std::uint64_t order_plus_right = 0;
  std::uint64_t order_plus_left = 0;
  bool passed = false;
};

struct WpReport {
  std::string dist;
  std::string event;
  std::uint64_t fuel = 0;
  ERat wp_lower;
  ERat wlp_upper;
  ERat gap;
  ERat eps;
  bool converged = false;
};

struct SampleReport {
  std::string dist;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t n_diverged = 0;
  std::uint64_t n_diverged_bottom = 0;
  std::uint64_t n_diverged_budget = 0;
  std::uint64_t bits_consumed = 0;
};

struct EquidistReport {
  std::string dist;
  std::string event;
  std::uint64_t seed = 0;
  std::uint64_t n_samples = 0;
  std::uint64_t n_diverged = 0;
  std::uint64_t n_hits = 0;
  double empirical_freq = 0;
  ERat wp_lower;
  ERat wlp_upper;
  std::uint64_t fuel = 0;
  ERat tolerance;
  bool pass = false;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SieveCmdReport, count, outputs, bound, sound, complete, sorted, nodup)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MatchReport, pattern, input, alphabet, accept)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LawCounterexample, law, instance, word)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LawsReport, depth, trials, seed, alphabet, law_failures, counterexamples,
                                   exhausted, order_checks, order_plus_right, order_plus_left, passed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(WpReport, dist, event, fuel, wp_lower, wlp_upper, gap, eps, converged)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SampleReport, dist, n, seed, counts, n_diverged, n_diverged_bottom,
                                   n_diverged_budget, bits_consumed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EquidistReport, dist, event, seed, n_samples, n_diverged, n_hits,
                                   empirical_freq, wp_lower, wlp_upper, fuel, tolerance, pass)

/// counterexample is null when the patterns agree.
void to_json(nlohmann::json& j, const EquivReport& r);
void from_json(const nlohmann::json& j, EquivReport& r);

/// Accepts everything ERat::parse does plus "N/B^E", e.g. "1/10^6".
ERat parse_rational(std::string_view text);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coind::cli

#endif  // COIND_CLI_HPP
