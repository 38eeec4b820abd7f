#include "coind/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "coind/cotree.hpp"
#include "coind/dist.hpp"
#include "coind/kernels.hpp"
#include "coind/regex.hpp"
#include "coind/sieve.hpp"

namespace coind {

void to_json(nlohmann::json& j, const ERat& r) { j = r.to_string(); }
void from_json(const nlohmann::json& j, ERat& r) { r = ERat::parse(j.get<std::string>()); }

}  // namespace coind

namespace coind::cli {

void to_json(nlohmann::json& j, const EquivReport& r) {
  j = {{"p1", r.p1}, {"p2", r.p2}, {"alphabet", r.alphabet}, {"depth", r.depth}, {"equal", r.equal}};
  j["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, EquivReport& r) {
  j.at("p1").get_to(r.p1);
  j.at("p2").get_to(r.p2);
  j.at("alphabet").get_to(r.alphabet);
  j.at("depth").get_to(r.depth);
  j.at("equal").get_to(r.equal);
  const auto& cx = j.at("counterexample");
  r.counterexample = cx.is_null() ? std::nullopt : std::optional<std::string>(cx.get<std::string>());
}

ERat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto caret = text.find('^');
  if (slash == std::string_view::npos || caret == std::string_view::npos || caret < slash) {
    return ERat::parse(text);
  }
  const ERat num = ERat::parse(text.substr(0, slash));
  const ERat base = ERat::parse(text.substr(slash + 1, caret - slash - 1));
  const ERat exp = ERat::parse(text.substr(caret + 1));
  if (exp.is_infinite() || exp.den() != 1 || exp.num() > 4096) throw std::invalid_argument("exponent out of range");
  if (base.is_zero() || base.is_infinite()) throw std::invalid_argument("base must be finite and positive");
  ERat den(1);
  for (auto i = ERat::Int(0); i < exp.num(); ++i) den = den * base;
  return num / den;
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::uint64_t step_budget = kDefaultStepBudget;
};

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump() << '\n'; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

[[noreturn]] void budget_error() { throw std::runtime_error("step budget exhausted"); }

int cmd_sieve(const Globals& g, std::uint64_t count, std::ostream& out) {
  if (count == 0) throw UsageError("--count must be at least 1");
  StepBudget budget(g.step_budget);
  SieveCmdReport r;
  r.count = count;
  try {
    BudgetScope scope(budget);
    const Colist<std::int64_t> s = sieve();
    const Colist<std::int64_t>* cur = &s;
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto& c = cur->force();
      if (!c) throw std::logic_error("sieve reached CoBot");
      r.outputs.push_back(c->head);
      cur = &c->tail;
    }
  } catch (const Exhausted&) {
    budget_error();
  }
  r.bound = r.outputs.back();
  const SieveReport v = verify_sieve(r.bound, budget);
  if (v.exhausted) budget_error();
  r.sound = v.sound;
  r.complete = v.complete;
  r.sorted = v.sorted;
  r.nodup = v.nodup;
  if (g.json) {
    emit(out, r);
  } else {
    for (std::size_t i = 0; i < r.outputs.size(); ++i) out << (i ? " " : "") << r.outputs[i];
    out << "\nbound " << r.bound << "\nsound " << yes_no(r.sound) << "\ncomplete " << yes_no(r.complete)
        << "\nsorted " << yes_no(r.sorted) << "\nnodup " << yes_no(r.nodup) << '\n';
  }
  return kOk;
}

int cmd_match(const Globals& g, const std::string& pattern, const std::string& input, const std::string& alpha,
              std::ostream& out) {
  const Alphabet alphabet = Alphabet::from_utf8(alpha);
  const Regex re = parse_regex(pattern, alphabet);
  const auto word = alphabet.encode(input);
  MatchReport r{pattern, input, alpha, false};
  StepBudget budget(g.step_budget);
  try {
    BudgetScope scope(budget);
    r.accept = in_lang(compile(re, alphabet.size()), word);
  } catch (const Exhausted&) {
    budget_error();
  }
  if (g.json) {
    emit(out, r);
  } else {
    out << (r.accept ? "accept" : "reject") << '\n';
  }
  return r.accept ? kOk : kNegative;
}

int cmd_equiv(const Globals& g, const std::string& p1, const std::string& p2, std::uint64_t depth,
              const std::string& alpha, std::ostream& out) {
  const Alphabet alphabet = Alphabet::from_utf8(alpha);
  const Regex r1 = parse_regex(p1, alphabet);
  const Regex r2 = parse_regex(p2, alphabet);
  EquivReport r{p1, p2, alpha, depth, false, std::nullopt};
  StepBudget budget(g.step_budget);
  try {
    BudgetScope scope(budget);
    auto res = equiv_upto(compile(r1, alphabet.size()), compile(r2, alphabet.size()), depth);
    if (const auto* cx = std::get_if<Counterexample>(&res)) {
      r.counterexample = alphabet.decode(cx->word);
    } else {
      r.equal = true;
    }
  } catch (const Exhausted&) {
    budget_error();
  }
  if (g.json) {
    emit(out, r);
  } else if (r.equal) {
    out << "equal\n";
  } else {
    out << "counterexample " << quote(*r.counterexample) << '\n';
  }
  return r.equal ? kOk : kNegative;
}

int cmd_laws(const Globals& g, std::uint64_t depth, std::uint64_t trials, std::uint64_t seed,
             const std::string& alpha, std::ostream& out) {
  const Alphabet alphabet = Alphabet::from_utf8(alpha);
  KaConfig cfg;
  cfg.depth = depth;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.step_budget = g.step_budget;
  const KaReport k = ka_axiom_suite(cfg, alphabet, Execution::Parallel);
  LawsReport r;
  r.depth = depth;
  r.trials = trials;
  r.seed = seed;
  r.alphabet = alpha;
  for (const auto& law : k.laws) r.law_failures[law.name] = law.failures;
  for (const auto& cx : k.counterexamples) r.counterexamples.push_back({ka_law_names()[cx.law], cx.instance, cx.word});
  r.exhausted = k.exhausted;
  r.order_checks = k.order_checks;
  r.order_plus_right = k.order_plus_right;
  r.order_plus_left = k.order_plus_left;
  r.passed = k.passed();
  if (g.json) {
    emit(out, r);
  } else {
    for (const auto& law : k.laws) out << law.name << ' ' << law.checks << " checks " << law.failures << " failures\n";
    for (const auto& cx : r.counterexamples) out << "counterexample " << cx.law << ' ' << cx.instance << " at " << quote(cx.word) << '\n';
    out << "order a<=b vs a+b=b agree " << r.order_plus_right << '/' << r.order_checks << '\n'
        << "order a<=b vs a+b=a agree " << r.order_plus_left << '/' << r.order_checks << '\n'
        << "exhausted " << r.exhausted << '\n'
        << "passed " << yes_no(r.passed) << '\n';
  }
  return r.passed ? kOk : kNegative;
}

struct Target {
  DistSpec dist;
  EventSpec event;
};

Target parse_target(const std::string& dist, const std::string& event) {
  DistSpec d = DistSpec::parse(dist);
  return {d, EventSpec::parse(event, d)};
}

int cmd_wp(const Globals& g, const std::string& dist, const std::string& event, std::uint64_t fuel,
           const std::string& eps_text, std::ostream& out) {
  const Target tg = parse_target(dist, event);
  WpReport r;
  r.dist = tg.dist.to_string();
  r.event = event;
  r.fuel = fuel;
  r.eps = parse_rational(eps_text);
  const Cotree<std::uint64_t> t = tg.dist.build();
  const auto f = indicator<std::uint64_t>(tg.event);
  try {
    StepBudget lower_budget(g.step_budget);
    {
      BudgetScope scope(lower_budget);
      r.wp_lower = wp_chain(f, t, fuel).back();
    }
    StepBudget upper_budget(g.step_budget);
    {
      BudgetScope scope(upper_budget);
      r.wlp_upper = wlp_chain(f, t, fuel).back();
    }
  } catch (const Exhausted&) {
    budget_error();
  }
  r.gap = sub_trunc(r.wlp_upper, r.wp_lower);
  r.converged = r.gap <= r.eps;
  if (g.json) {
    emit(out, r);
  } else {
    out << "dist " << r.dist << "\nevent " << r.event << "\nfuel " << r.fuel << "\nwp_lower " << r.wp_lower
        << "\nwlp_upper " << r.wlp_upper << "\ngap " << r.gap << "\neps " << r.eps << "\nconverged "
        << yes_no(r.converged) << '\n';
  }
  return kOk;
}

std::string outcome_name(const DistSpec& d, std::uint64_t x) {
  if (d.kind == DistSpec::Kind::Bernoulli) return x == 1 ? "true" : "false";
  return std::to_string(x);
}

int cmd_sample(const Globals& g, const std::string& dist, std::uint64_t n, std::uint64_t seed, std::ostream& out) {
  const DistSpec d = DistSpec::parse(dist);
  const SampleTally tally = sample_tally([&] { return d.build(); }, n, seed, g.step_budget, Execution::Parallel);
  SampleReport r;
  r.dist = d.to_string();
  r.n = n;
  r.seed = seed;
  for (const auto& [k, v] : tally.counts) r.counts[outcome_name(d, k)] = v;
  r.n_diverged = tally.n_diverged();
  r.n_diverged_bottom = tally.n_diverged_bottom;
  r.n_diverged_budget = tally.n_diverged_budget;
  r.bits_consumed = tally.bits_consumed;
  if (g.json) {
    emit(out, r);
  } else {
    out << "dist " << r.dist << "\nn " << r.n << "\nseed " << r.seed << '\n';
    for (const auto& [k, v] : tally.counts) out << "count " << outcome_name(d, k) << ' ' << v << '\n';
    out << "n_diverged " << r.n_diverged << " (bottom " << r.n_diverged_bottom << ", budget " << r.n_diverged_budget
        << ")\nbits_consumed " << r.bits_consumed << '\n';
  }
  return kOk;
}

ERat abs_diff(const ERat& a, const ERat& b) { return a >= b ? sub_trunc(a, b) : sub_trunc(b, a); }

int cmd_equidist(const Globals& g, const std::string& dist, const std::string& event, std::uint64_t n,
                 std::uint64_t seed, const std::string& tol_text, std::ostream& out) {
  if (n == 0) throw UsageError("--n must be at least 1");
  const Target tg = parse_target(dist, event);
  EquidistReport r;
  r.dist = tg.dist.to_string();
  r.event = event;
  r.seed = seed;
  r.tolerance = parse_rational(tol_text);
  if (r.tolerance.is_zero() || r.tolerance.is_infinite()) throw UsageError("--tol must be finite and positive");
  const ERat eps = r.tolerance / ERat(10);

  const Cotree<std::uint64_t> t = tg.dist.build();
  const auto f = indicator<std::uint64_t>(tg.event);
  bool converged = false;
  StepBudget budget(g.step_budget);
  try {
    BudgetScope scope(budget);
    for (std::size_t fuel = 0; fuel <= kMaxBracketFuel && !converged; ++fuel) {
      const ATree<std::uint64_t> a = cotree_idl(t, fuel);
      r.wp_lower = wp_atree<std::uint64_t>(f, a);
      r.wlp_upper = wlp_atree<std::uint64_t>(f, a);
      r.fuel = fuel;
      converged = sub_trunc(r.wlp_upper, r.wp_lower) <= eps;
    }
  } catch (const Exhausted&) {
    budget_error();
  }
  if (!converged) {
    throw std::runtime_error("wp/wlp bracket wider than tol/10 at fuel " + std::to_string(kMaxBracketFuel));
  }

  const SampleTally tally = sample_tally([&] { return tg.dist.build(); }, n, seed, g.step_budget, Execution::Parallel);
  r.n_samples = tally.n_samples;
  r.n_diverged = tally.n_diverged();
  r.n_hits = tally.count(tg.event.value);
  const std::uint64_t sampled = tally.n_sampled();
  if (sampled > 0) {
    const ERat freq(ERat::Int(r.n_hits), ERat::Int(sampled));
    r.empirical_freq = freq.to_double();
    r.pass = abs_diff(freq, midpoint(r.wp_lower, r.wlp_upper)) <= r.tolerance;
  }
  if (g.json) {
    emit(out, r);
  } else {
    char freq[32];
    std::snprintf(freq, sizeof freq, "%.6f", r.empirical_freq);
    out << "dist " << r.dist << "\nevent " << r.event << "\nseed " << r.seed << "\nn_samples " << r.n_samples
        << "\nn_diverged " << r.n_diverged << "\nn_hits " << r.n_hits << "\nempirical_freq " << freq
        << "\nwp_lower " << r.wp_lower << "\nwlp_upper " << r.wlp_upper << "\nfuel " << r.fuel << "\ntolerance "
        << r.tolerance << "\npass " << yes_no(r.pass) << '\n';
  }
  return r.pass ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coinductive streams, languages and samplers", "coind"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Print a JSON object instead of text");
  app.add_option("--step-budget", g.step_budget, "Forcing steps allowed per evaluation unit")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;

  auto* sieve_cmd = app.add_subcommand("sieve", "List sieve outputs and verify them by trial division");
  sieve_cmd->fallthrough();
  std::uint64_t count = 0;
  sieve_cmd->add_option("--count", count, "Number of primes")->required();
  sieve_cmd->callback([&] { action = [&] { return cmd_sieve(g, count, out); }; });

  auto* regex_cmd = app.add_subcommand("regex", "Regular expressions as coinductive tries");
  regex_cmd->fallthrough();
  regex_cmd->require_subcommand(1);
  std::string alpha = "ab";
  std::string p1, p2;
  std::uint64_t depth = 6;

  auto* match_cmd = regex_cmd->add_subcommand("match", "Test membership of a word");
  match_cmd->fallthrough();
  match_cmd->add_option("pattern", p1)->required();
  match_cmd->add_option("input", p2)->required();
  match_cmd->add_option("--alphabet", alpha, "Alphabet symbols")->capture_default_str();
  match_cmd->callback([&] { action = [&] { return cmd_match(g, p1, p2, alpha, out); }; });

  auto* equiv_cmd = regex_cmd->add_subcommand("equiv", "Compare two patterns up to a word length");
  equiv_cmd->fallthrough();
  equiv_cmd->add_option("p1", p1)->required();
  equiv_cmd->add_option("p2", p2)->required();
  equiv_cmd->add_option("--depth", depth, "Maximum word length")->capture_default_str();
  equiv_cmd->add_option("--alphabet", alpha, "Alphabet symbols")->capture_default_str();
  equiv_cmd->callback([&] { action = [&] { return cmd_equiv(g, p1, p2, depth, alpha, out); }; });

  auto* laws_cmd = regex_cmd->add_subcommand("laws", "Randomized Kleene algebra law check");
  laws_cmd->fallthrough();
  std::uint64_t trials = 200;
  std::uint64_t seed = 0;
  laws_cmd->add_option("--depth", depth, "Maximum word length")->capture_default_str();
  laws_cmd->add_option("--trials", trials, "Number of random instances")->capture_default_str();
  laws_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  laws_cmd->add_option("--alphabet", alpha, "Alphabet symbols")->capture_default_str();
  laws_cmd->callback([&] { action = [&] { return cmd_laws(g, depth, trials, seed, alpha, out); }; });

  std::string dist, event, eps = "1/10^6", tol;
  std::uint64_t fuel = 0, n = 0;

  auto* wp_cmd = app.add_subcommand("wp", "Exact wp lower and wlp upper bounds at a fuel");
  wp_cmd->fallthrough();
  wp_cmd->add_option("--dist", dist, "bernoulli:P, uniform:N or geometric:P")->required();
  wp_cmd->add_option("--event", event, "true, false or k=N")->required();
  wp_cmd->add_option("--fuel", fuel, "Truncation depth")->required();
  wp_cmd->add_option("--eps", eps, "Gap for the convergence verdict")->capture_default_str();
  wp_cmd->callback([&] { action = [&] { return cmd_wp(g, dist, event, fuel, eps, out); }; });

  auto* sample_cmd = app.add_subcommand("sample", "Draw samples with a seeded bit source");
  sample_cmd->fallthrough();
  sample_cmd->add_option("--dist", dist, "bernoulli:P, uniform:N or geometric:P")->required();
  sample_cmd->add_option("--n", n, "Number of samples")->required();
  sample_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  sample_cmd->callback([&] { action = [&] { return cmd_sample(g, dist, n, seed, out); }; });

  auto* eq_cmd = app.add_subcommand("equidist", "Compare sample frequency with the wp/wlp bracket");
  eq_cmd->fallthrough();
  eq_cmd->add_option("--dist", dist, "bernoulli:P, uniform:N or geometric:P")->required();
  eq_cmd->add_option("--event", event, "true, false or k=N")->required();
  eq_cmd->add_option("--n", n, "Number of samples")->required();
  eq_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  eq_cmd->add_option("--tol", tol, "Allowed distance from the bracket midpoint")->required();
  eq_cmd->callback([&] { action = [&] { return cmd_equidist(g, dist, event, n, seed, tol, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace coind::cli
