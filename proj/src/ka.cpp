#include "coind/ka.hpp"

#include <functional>

namespace coind {

Regex random_regex(Rng& rng, std::size_t size, std::size_t arity) {
  if (size <= 1) {
    std::uint64_t pick = rng.below(arity + 2);
    if (pick == 0) return Regex::empty();
    if (pick == 1) return Regex::eps();
    return Regex::chr(pick - 2);
  }
  // Size 2 admits only unary constructors.
  std::uint64_t pick = rng.below(size == 2 ? 2 : 5);
  if (pick == 0) return Regex::star(random_regex(rng, size - 1, arity));
  if (pick == 1) return Regex::comp(random_regex(rng, size - 1, arity));
  std::size_t left = 1 + rng.below(size - 2);
  Regex a = random_regex(rng, left, arity);
  Regex b = random_regex(rng, size - 1 - left, arity);
  if (pick == 2) return Regex::union_of(std::move(a), std::move(b));
  if (pick == 3) return Regex::inter(std::move(a), std::move(b));
  return Regex::cat(std::move(a), std::move(b));
}

namespace {

enum Law : std::size_t {
  kPlusAssoc,
  kPlusComm,
  kPlusIdem,
  kPlusZero,
  kCatAssoc,
  kCatOneLeft,
  kCatOneRight,
  kCatZeroLeft,
  kCatZeroRight,
  kDistribLeft,
  kDistribRight,
  kStarUnfoldLeft,
  kStarUnfoldRight,
  kStarInductLeftPremise,
  kStarInductLeft,
  kStarInductRightPremise,
  kStarInductRight,
  kLawCount,
};

Regex operator+(Regex a, Regex b) { return Regex::union_of(std::move(a), std::move(b)); }
Regex operator*(Regex a, Regex b) { return Regex::cat(std::move(a), std::move(b)); }

}  // namespace

const std::vector<std::string>& ka_law_names() {
  static const std::vector<std::string> names = {
      "plus_assoc",        "plus_comm",           "plus_idem",
      "plus_zero",         "cat_assoc",           "cat_one_left",
      "cat_one_right",     "cat_zero_left",       "cat_zero_right",
      "distrib_left",      "distrib_right",       "star_unfold_left",
      "star_unfold_right", "star_induct_left_premise", "star_induct_left",
      "star_induct_right_premise", "star_induct_right",
  };
  return names;
}

KaTrial run_ka_trial(const KaConfig& cfg, const Alphabet& alphabet, std::size_t index) {
  Rng rng(cfg.seed, index);
  const std::size_t n = alphabet.size();
  auto draw = [&] { return random_regex(rng, 1 + rng.below(cfg.max_size), n); };
  const Regex a = draw();
  const Regex b = draw();
  const Regex c = draw();
  const Regex zero = Regex::empty();
  const Regex one = Regex::eps();
  const Regex as = Regex::star(a);

  KaTrial out;
  auto show = [&](const Regex& r) { return to_string(r, alphabet); };

  // `rel` is either equality or containment of the two sides.
  auto check = [&](std::size_t law, const Regex& lhs, const Regex& rhs, bool containment) {
    StepBudget budget(cfg.step_budget);
    BudgetScope scope(budget);
    try {
      Lang l = compile(lhs, n);
      Lang r = compile(rhs, n);
      if (containment) {
        // a <= b iff a + b = b; report the witness from that equation.
        auto res = equiv_upto(lang_union(l, r), r, cfg.depth);
        if (auto* cx = std::get_if<Counterexample>(&res)) {
          out.failures.push_back({law, show(lhs) + " <= " + show(rhs), alphabet.decode(cx->word)});
        }
      } else {
        auto res = equiv_upto(l, r, cfg.depth);
        if (auto* cx = std::get_if<Counterexample>(&res)) {
          out.failures.push_back({law, show(lhs) + " = " + show(rhs), alphabet.decode(cx->word)});
        }
      }
    } catch (const Exhausted&) {
      ++out.exhausted;
      out.failures.push_back({law, show(lhs) + (containment ? " <= " : " = ") + show(rhs), "<exhausted>"});
    }
  };

  check(kPlusAssoc, a + (b + c), (a + b) + c, false);
  check(kPlusComm, a + b, b + a, false);
  check(kPlusIdem, a + a, a, false);
  check(kPlusZero, a + zero, a, false);
  check(kCatAssoc, a * (b * c), (a * b) * c, false);
  check(kCatOneLeft, one * a, a, false);
  check(kCatOneRight, a * one, a, false);
  check(kCatZeroLeft, zero * a, zero, false);
  check(kCatZeroRight, a * zero, zero, false);
  check(kDistribLeft, a * (b + c), a * b + a * c, false);
  check(kDistribRight, (a + b) * c, a * c + b * c, false);
  check(kStarUnfoldLeft, one + a * as, as, false);
  check(kStarUnfoldRight, one + as * a, as, false);
  // Star induction, instantiated at the least solutions x = a*b and x = ba*.
  const Regex xl = as * b;
  check(kStarInductLeftPremise, b + a * xl, xl, true);
  check(kStarInductLeft, as * b, xl, true);
  const Regex xr = b * as;
  check(kStarInductRightPremise, b + xr * a, xr, true);
  check(kStarInductRight, b * as, xr, true);

  {
    StepBudget budget(cfg.step_budget);
    BudgetScope scope(budget);
    try {
      Lang la = compile(a, n);
      Lang lb = compile(b, n);
      bool le = le_upto(la, lb, cfg.depth);
      bool right = std::holds_alternative<Equal>(equiv_upto(lang_union(la, lb), lb, cfg.depth));
      bool left = std::holds_alternative<Equal>(equiv_upto(lang_union(la, lb), la, cfg.depth));
      out.order_plus_right = le == right;
      out.order_plus_left = le == left;
    } catch (const Exhausted&) {
      ++out.exhausted;
    }
  }
  return out;
}

KaReport reduce_ka_trials(const KaConfig& cfg, const std::vector<KaTrial>& trials) {
  KaReport r;
  r.config = cfg;
  for (const std::string& name : ka_law_names()) r.laws.push_back({name, 0, 0});
  for (const KaTrial& t : trials) {
    for (auto& law : r.laws) ++law.checks;
    for (const LawFailure& f : t.failures) {
      ++r.laws[f.law].failures;
      r.counterexamples.push_back(f);
    }
    r.exhausted += t.exhausted;
    ++r.order_checks;
    r.order_plus_right += t.order_plus_right ? 1 : 0;
    r.order_plus_left += t.order_plus_left ? 1 : 0;
  }
  return r;
}

}  // namespace coind
