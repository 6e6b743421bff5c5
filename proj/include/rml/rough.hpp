/*
 *   Copyright 2026 The rml-rough Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RML_ROUGH_HPP
#define RML_ROUGH_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "fuzzy.hpp"
#include "poset.hpp"
#include "report.hpp"
#include "structure.hpp"

namespace rml {

namespace detail {

[[noreturn]] inline void singleton_violation(const ApproximationSpace& sp, std::size_t x, ElementSet terms,
                                             ElementSet bounds, const char* kind) {
  const FinitePoset& p = sp.structure().poset();
  std::vector<std::string> names;
  for (Element e : bounds) names.push_back(p.name(e));
  throw SingletonViolation(sp.universe()->name(x), names,
                           std::string(kind) + " of " + p.format(terms) + " at object '" + sp.universe()->name(x) +
                               "' is " + p.format(bounds) + ", not a single element");
}

}  // namespace detail

/**
 * Lower approximation: lower(f)(x) = ⋀_y (R(x,y) → f(y)).
 *
 * The meet is taken as the multiinfimum of the term set and must be a
 * single element; SingletonViolation is thrown otherwise.
 */
inline FuzzySet lower_approx(const ApproximationSpace& sp, const FuzzySet& f) {
  if (!same_universe(sp.universe(), f.universe())) throw InputError("fuzzy set and space use different universes");
  const RmlStructure& s = sp.structure();
  const FuzzyRelation& r = sp.relation();
  FuzzySet out = f;
  for (std::size_t x = 0; x < sp.objects(); ++x) {
    ElementSet terms;
    for (std::size_t y = 0; y < sp.objects(); ++y) terms.insert(s.residuum(r(x, y), f[y]));
    const ElementSet inf = s.poset().multiinf(terms);
    if (inf.size() != 1) detail::singleton_violation(sp, x, terms, inf, "multiinfimum");
    out[x] = inf.front();
  }
  return out;
}

/// Upper approximation: upper(f)(x) = ⋁_y (R(x,y) ⊙ f(y)); same singleton contract as lower_approx.
inline FuzzySet upper_approx(const ApproximationSpace& sp, const FuzzySet& f) {
  if (!same_universe(sp.universe(), f.universe())) throw InputError("fuzzy set and space use different universes");
  const RmlStructure& s = sp.structure();
  const FuzzyRelation& r = sp.relation();
  FuzzySet out = f;
  for (std::size_t x = 0; x < sp.objects(); ++x) {
    ElementSet terms;
    for (std::size_t y = 0; y < sp.objects(); ++y) terms.insert(s.otimes(r(x, y), f[y]));
    const ElementSet sup = s.poset().multisup(terms);
    if (sup.size() != 1) detail::singleton_violation(sp, x, terms, sup, "multisupremum");
    out[x] = sup.front();
  }
  return out;
}

/**
 * Both approximations computed with plain binary meets/joins folded from ⊤
 * (resp. ⊥), read straight off the order. Independent of the
 * multiinfimum/multisupremum code path; only valid on lattices.
 */
inline std::pair<FuzzySet, FuzzySet> lattice_oracle_approx(const ApproximationSpace& sp, const FuzzySet& f) {
  const RmlStructure& s = sp.structure();
  const FinitePoset& p = s.poset();
  if (!classify(p).lattice) throw NotApplicable("lattice oracle needs a lattice-shaped structure");
  const auto n = static_cast<Element>(s.size());
  auto meet = [&](Element a, Element b) {
    Element best = s.bottom();
    for (Element m = 0; m < n; ++m) {
      if (p.leq(m, a) && p.leq(m, b) && p.leq(best, m)) best = m;
    }
    return best;
  };
  auto join = [&](Element a, Element b) {
    Element best = s.top();
    for (Element m = 0; m < n; ++m) {
      if (p.leq(a, m) && p.leq(b, m) && p.leq(m, best)) best = m;
    }
    return best;
  };
  const FuzzyRelation& r = sp.relation();
  FuzzySet lower = f;
  FuzzySet upper = f;
  for (std::size_t x = 0; x < sp.objects(); ++x) {
    Element lo = s.top();
    Element up = s.bottom();
    for (std::size_t y = 0; y < sp.objects(); ++y) {
      lo = meet(lo, s.residuum(r(x, y), f[y]));
      up = join(up, s.otimes(r(x, y), f[y]));
    }
    lower[x] = lo;
    upper[x] = up;
  }
  return {lower, upper};
}

enum class RelationProperty { reflexive, symmetric, euclidean, transitive };

inline const char* to_string(RelationProperty p) {
  switch (p) {
    case RelationProperty::reflexive: return "reflexive";
    case RelationProperty::symmetric: return "symmetric";
    case RelationProperty::euclidean: return "euclidean";
    case RelationProperty::transitive: return "transitive";
  }
  return "?";
}

inline constexpr RelationProperty all_relation_properties[] = {RelationProperty::reflexive, RelationProperty::symmetric,
                                                              RelationProperty::euclidean, RelationProperty::transitive};

/// A relation property with, when it fails, the objects of the first violation found.
struct PropertyFlag {
  bool holds = true;
  std::vector<std::size_t> witness;
};

/**
 * Witness conventions:
 *  - reflexive: (x) with R(x,x) ≠ ⊤
 *  - symmetric: (x, y) with R(x,y) ≠ R(y,x)
 *  - euclidean: (z, x, y) with R(z,x)⊙R(z,y) ≰ R(x,y)
 *  - transitive: (x, z, y) with R(x,z)⊙R(z,y) ≰ R(x,y)
 */
struct RelationClassification {
  PropertyFlag reflexive;
  PropertyFlag symmetric;
  PropertyFlag euclidean;
  PropertyFlag transitive;
  PropertyFlag tolerance;
  PropertyFlag equivalence;

  const PropertyFlag& get(RelationProperty p) const {
    switch (p) {
      case RelationProperty::reflexive: return reflexive;
      case RelationProperty::symmetric: return symmetric;
      case RelationProperty::euclidean: return euclidean;
      case RelationProperty::transitive: return transitive;
    }
    throw std::logic_error("unknown relation property");
  }
};

inline RelationClassification classify_relation(const ApproximationSpace& sp) {
  const RmlStructure& s = sp.structure();
  const FuzzyRelation& r = sp.relation();
  const std::size_t n = sp.objects();
  RelationClassification c;
  auto fail = [](PropertyFlag& f, std::vector<std::size_t> w) {
    if (f.holds) {
      f.holds = false;
      f.witness = std::move(w);
    }
  };
  for (std::size_t x = 0; x < n; ++x) {
    if (r(x, x) != s.top()) fail(c.reflexive, {x});
    for (std::size_t y = 0; y < n; ++y) {
      if (r(x, y) != r(y, x)) fail(c.symmetric, {x, y});
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d) {
        // euclidean with centre a: R(a,b)⊙R(a,d) ≤ R(b,d)
        if (!s.leq(s.otimes(r(a, b), r(a, d)), r(b, d))) fail(c.euclidean, {a, b, d});
        // transitive through b: R(a,b)⊙R(b,d) ≤ R(a,d)
        if (!s.leq(s.otimes(r(a, b), r(b, d)), r(a, d))) fail(c.transitive, {a, b, d});
      }
  c.tolerance = !c.reflexive.holds ? c.reflexive : c.symmetric;
  c.equivalence = !c.tolerance.holds ? c.tolerance : c.transitive;
  return c;
}

/// Which of the two operator inequalities that characterise a property.
enum class Clause { first, second };

/**
 * The inequality lhs(f) ≤ rhs(f) characterising `prop`:
 *  - reflexive:  lower(f) ≤ f                 |  f ≤ upper(f)
 *  - symmetric:  upper(lower(f)) ≤ f          |  f ≤ lower(upper(f))
 *  - euclidean:  upper(f) ≤ lower(upper(f))   |  upper(lower(f)) ≤ lower(f)
 *  - transitive: lower(f) ≤ lower(lower(f))   |  upper(upper(f)) ≤ upper(f)
 */
inline std::pair<FuzzySet, FuzzySet> evaluate_clause(const ApproximationSpace& sp, RelationProperty prop, Clause clause,
                                                     const FuzzySet& f) {
  const bool first = clause == Clause::first;
  switch (prop) {
    case RelationProperty::reflexive:
      return first ? std::pair{lower_approx(sp, f), f} : std::pair{f, upper_approx(sp, f)};
    case RelationProperty::symmetric:
      return first ? std::pair{upper_approx(sp, lower_approx(sp, f)), f} : std::pair{f, lower_approx(sp, upper_approx(sp, f))};
    case RelationProperty::euclidean: {
      if (first) {
        FuzzySet up = upper_approx(sp, f);
        return {up, lower_approx(sp, up)};
      }
      FuzzySet lo = lower_approx(sp, f);
      return {upper_approx(sp, lo), lo};
    }
    case RelationProperty::transitive: {
      if (first) {
        FuzzySet lo = lower_approx(sp, f);
        return {lo, lower_approx(sp, lo)};
      }
      FuzzySet up = upper_approx(sp, f);
      return {upper_approx(sp, up), up};
    }
  }
  throw std::logic_error("unknown relation property");
}

inline std::string clause_text(RelationProperty prop, Clause clause) {
  const bool first = clause == Clause::first;
  switch (prop) {
    case RelationProperty::reflexive: return first ? "lower(f)<=f" : "f<=upper(f)";
    case RelationProperty::symmetric: return first ? "upper(lower(f))<=f" : "f<=lower(upper(f))";
    case RelationProperty::euclidean: return first ? "upper(f)<=lower(upper(f))" : "upper(lower(f))<=lower(f)";
    case RelationProperty::transitive: return first ? "lower(f)<=lower(lower(f))" : "upper(upper(f))<=upper(f)";
  }
  return "?";
}

/// A fuzzy set breaking a characterising inequality, and the object where it breaks.
struct Counterexample {
  FuzzySet f;
  std::size_t point;
  std::string construction;
};

/**
 * Builds the witness fuzzy set for a relation lacking `prop`, following the
 * classic constructions: a row slice R_x or a ⊤/⊥ indicator, chosen from
 * the classification witness. Returns nullopt when the relation has the
 * property. The result is checked to violate the inequality at `point`.
 */
inline std::optional<Counterexample> construct_counterexample(const ApproximationSpace& sp, RelationProperty prop,
                                                              Clause clause) {
  const RelationClassification cls = classify_relation(sp);
  const PropertyFlag& flag = cls.get(prop);
  if (flag.holds) return std::nullopt;
  const RmlStructure& s = sp.structure();
  const FuzzyRelation& r = sp.relation();
  const auto& u = sp.universe();
  const auto& w = flag.witness;
  const bool first = clause == Clause::first;
  auto slice = [&](std::size_t x) { return relation_slice(r, x); };
  auto ind = [&](std::size_t x) { return indicator(s, u, x); };
  auto nm = [&](std::size_t x) { return u->name(x); };

  std::optional<Counterexample> out;
  switch (prop) {
    case RelationProperty::reflexive: {
      const std::size_t x0 = w[0];
      out = first ? Counterexample{slice(x0), x0, "f = R_" + nm(x0)} : Counterexample{ind(x0), x0, "f = 1_" + nm(x0)};
      break;
    }
    case RelationProperty::symmetric: {
      const std::size_t x0 = w[0], y0 = w[1];
      // Orient so that R(x0,y0) ≤ R(y0,x0) fails in the direction we use.
      const bool case1 = s.leq(r(x0, y0), r(y0, x0));
      if (first) {
        out = case1 ? Counterexample{slice(x0), y0, "f = R_" + nm(x0)} : Counterexample{slice(y0), x0, "f = R_" + nm(y0)};
      } else {
        out = case1 ? Counterexample{ind(y0), y0, "f = 1_" + nm(y0)} : Counterexample{ind(x0), x0, "f = 1_" + nm(x0)};
      }
      break;
    }
    case RelationProperty::euclidean: {
      // R(c,a)⊙R(c,b) ≰ R(a,b) with centre c.
      const std::size_t c = w[0], a = w[1], b = w[2];
      out = first ? Counterexample{ind(b), c, "f = 1_" + nm(b)} : Counterexample{slice(a), c, "f = R_" + nm(a)};
      break;
    }
    case RelationProperty::transitive: {
      // R(x0,z)⊙R(z,y0) ≰ R(x0,y0).
      const std::size_t x0 = w[0], y0 = w[2];
      out = first ? Counterexample{slice(x0), x0, "f = R_" + nm(x0)} : Counterexample{ind(y0), x0, "f = 1_" + nm(y0)};
      break;
    }
  }
  const auto [lhs, rhs] = evaluate_clause(sp, prop, clause, out->f);
  if (s.leq(lhs[out->point], rhs[out->point])) {
    throw std::logic_error("constructed counterexample does not violate " + clause_text(prop, clause));
  }
  return out;
}

/// How the fuzzy-set quantifier of a verification suite is discharged.
struct VerifyMode {
  enum class Kind { exhaustive, sampled };
  Kind kind = Kind::exhaustive;
  /// Exhaustive runs fall back to sampling above |M|^|X| > budget.
  std::size_t budget = 1'000'000;
  std::size_t samples = 10'000;
  std::uint64_t seed = 1;

  static VerifyMode exhaustive() { return {}; }
  static VerifyMode sampled(std::size_t n, std::uint64_t seed) { return {Kind::sampled, 1'000'000, n, seed}; }
};

namespace detail {

/// |M|^|X|, saturating above `cap`.
inline std::size_t power_capped(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

/**
 * Calls fn(f) for every fuzzy set (odometer order) or for `mode.samples`
 * seeded uniform ones. Returns a description for the report header.
 */
inline std::string for_each_fuzzy_set(const ApproximationSpace& sp, const VerifyMode& mode,
                                      const std::function<void(const FuzzySet&)>& fn) {
  const std::size_t m = sp.structure().size();
  const std::size_t x = sp.objects();
  const std::size_t total = power_capped(m, x, mode.budget);
  if (mode.kind == VerifyMode::Kind::exhaustive && total <= mode.budget) {
    FuzzySet f = FuzzySet::constant(sp.universe(), 0);
    for (std::size_t i = 0; i < total; ++i) {
      fn(f);
      for (std::size_t k = 0; k < x; ++k) {
        if (++f[k] < m) break;
        f[k] = 0;
      }
    }
    return "mode=exhaustive fuzzy-sets=" + std::to_string(total);
  }
  std::mt19937_64 rng(mode.seed);
  FuzzySet f = sp.bottom_set();
  for (std::size_t i = 0; i < mode.samples; ++i) {
    for (std::size_t k = 0; k < x; ++k) f[k] = static_cast<Element>(rng() % m);
    fn(f);
  }
  std::string h = "mode=sampled samples=" + std::to_string(mode.samples) + " seed=" + std::to_string(mode.seed);
  if (mode.kind == VerifyMode::Kind::exhaustive) h += " (exhaustive budget " + std::to_string(mode.budget) + " exceeded)";
  return h;
}

inline void record_leq(const ApproximationSpace& sp, CheckResult& c, const FuzzySet& f, const FuzzySet& lhs,
                       const FuzzySet& rhs) {
  const RmlStructure& s = sp.structure();
  const bool ok = fuzzy_leq(s, lhs, rhs);
  if (ok) {
    ++c.cases;
    return;
  }
  record(c, false, {format_fuzzy_set(s, f)}, format_fuzzy_set(s, lhs), format_fuzzy_set(s, rhs));
}

inline void record_eq(const ApproximationSpace& sp, CheckResult& c, const FuzzySet& f, const FuzzySet& lhs,
                      const FuzzySet& rhs) {
  const RmlStructure& s = sp.structure();
  if (lhs == rhs) {
    ++c.cases;
    return;
  }
  record(c, false, {format_fuzzy_set(s, f)}, format_fuzzy_set(s, lhs), format_fuzzy_set(s, rhs));
}

}  // namespace detail

/**
 * Elementary approximator laws: the constant sets are fixed, both operators
 * are monotone, the two negation inequalities and the duality
 * (upper(f))* = lower(f*). On reflexive spaces also lower(⇓)=⇓ and
 * upper(⇑)=⇑.
 */
inline VerificationReport verify_approx_props(const ApproximationSpace& sp, const VerifyMode& mode = {}) {
  const RmlStructure& s = sp.structure();
  const FinitePoset& p = s.poset();
  VerificationReport rep;
  const FuzzySet top = sp.top_set();
  const FuzzySet bot = sp.bottom_set();

  auto& c_ub = rep.begin("upper-of-bottom");
  detail::record_eq(sp, c_ub, bot, upper_approx(sp, bot), bot);
  auto& c_lt = rep.begin("lower-of-top");
  detail::record_eq(sp, c_lt, top, lower_approx(sp, top), top);

  auto& c_lm = rep.begin("lower-monotone");
  auto& c_um = rep.begin("upper-monotone");
  auto& c_l_dual = rep.begin("lower<=neg(upper(neg f))");
  auto& c_u_dual = rep.begin("upper<=neg(lower(neg f))");
  auto& c_dual = rep.begin("neg(upper f)=lower(neg f)");

  const bool sampled_monotone = mode.kind == VerifyMode::Kind::sampled ||
                                detail::power_capped(s.size(), sp.objects(), mode.budget) > mode.budget;
  std::mt19937_64 rng(mode.seed ^ 0x9e3779b97f4a7c15ULL);
  auto check_monotone = [&](const FuzzySet& f, const FuzzySet& g) {
    detail::record_leq(sp, c_lm, f, lower_approx(sp, f), lower_approx(sp, g));
    detail::record_leq(sp, c_um, f, upper_approx(sp, f), upper_approx(sp, g));
  };

  rep.header.push_back(detail::for_each_fuzzy_set(sp, mode, [&](const FuzzySet& f) {
    const FuzzySet lo = lower_approx(sp, f);
    const FuzzySet up = upper_approx(sp, f);
    const FuzzySet nf = fuzzy_neg(s, f);
    detail::record_leq(sp, c_l_dual, f, lo, fuzzy_neg(s, upper_approx(sp, nf)));
    detail::record_leq(sp, c_u_dual, f, up, fuzzy_neg(s, lower_approx(sp, nf)));
    detail::record_eq(sp, c_dual, f, fuzzy_neg(s, up), lower_approx(sp, nf));
    if (sampled_monotone) {
      FuzzySet g = f;
      for (std::size_t x = 0; x < g.size(); ++x) {
        const auto above = p.up(f[x]).indices();
        g[x] = above[rng() % above.size()];
      }
      check_monotone(f, g);
    } else {
      // Any f ≤ g is a chain of single-coordinate cover steps.
      for (std::size_t x = 0; x < f.size(); ++x) {
        for (Element v : p.minimal(p.up(f[x]) - ElementSet::single(f[x]))) {
          FuzzySet g = f;
          g[x] = v;
          check_monotone(f, g);
        }
      }
    }
  }));
  const char* mono_note = sampled_monotone ? "random g >= f per sample" : "every f and every cover step g of f";
  c_lm.note = mono_note;
  c_um.note = mono_note;

  if (classify_relation(sp).reflexive.holds) {
    auto& c1 = rep.begin("reflexive:lower-of-bottom");
    detail::record_eq(sp, c1, bot, lower_approx(sp, bot), bot);
    auto& c2 = rep.begin("reflexive:upper-of-top");
    detail::record_eq(sp, c2, top, upper_approx(sp, top), top);
  } else {
    rep.not_applicable("reflexive:lower-of-bottom", "relation is not reflexive");
    rep.not_applicable("reflexive:upper-of-top", "relation is not reflexive");
  }
  return rep;
}

/**
 * For each of reflexive/symmetric/euclidean/transitive: when R has the
 * property, both characterising inequalities must hold for every (or every
 * sampled) f; when it lacks it, construct_counterexample must produce a
 * violating f for each inequality.
 */
inline VerificationReport verify_equivalence_props(const ApproximationSpace& sp, const VerifyMode& mode = {}) {
  const RmlStructure& s = sp.structure();
  const RelationClassification cls = classify_relation(sp);
  VerificationReport rep;

  struct Forward {
    RelationProperty prop;
    Clause clause;
    CheckResult* check;
  };
  std::vector<Forward> forward;
  for (RelationProperty prop : all_relation_properties) {
    for (Clause clause : {Clause::first, Clause::second}) {
      const std::string name = std::string(to_string(prop)) + ":" + clause_text(prop, clause);
      if (cls.get(prop).holds) {
        forward.push_back({prop, clause, &rep.begin(name)});
        continue;
      }
      auto& c = rep.begin(name + ":counterexample");
      auto ce = construct_counterexample(sp, prop, clause);
      const auto [lhs, rhs] = evaluate_clause(sp, prop, clause, ce->f);
      const bool violated = !s.leq(lhs[ce->point], rhs[ce->point]);
      record(c, violated, {ce->construction, sp.universe()->name(ce->point)}, format_fuzzy_set(s, lhs),
             format_fuzzy_set(s, rhs));
      c.note = ce->construction + " breaks it at " + sp.universe()->name(ce->point);
    }
  }
  if (!forward.empty()) {
    rep.header.push_back(detail::for_each_fuzzy_set(sp, mode, [&](const FuzzySet& f) {
      for (auto& fw : forward) {
        const auto [lhs, rhs] = evaluate_clause(sp, fw.prop, fw.clause, f);
        detail::record_leq(sp, *fw.check, f, lhs, rhs);
      }
    }));
  }
  return rep;
}

/**
 * The collapse chains for tolerance and equivalence relations:
 *  tolerance:   lower(lower f) = lower f ≤ f ≤ upper f = upper(upper f)
 *  equivalence: additionally upper(lower f) = lower(lower f) and
 *               upper(upper f) = lower(upper f)
 * Parts that do not apply are reported N/A.
 */
inline VerificationReport verify_tolerance_chain(const ApproximationSpace& sp, const VerifyMode& mode = {}) {
  const RelationClassification cls = classify_relation(sp);
  VerificationReport rep;
  const char* tol_names[] = {"tolerance:lower(lower f)=lower f", "tolerance:lower f<=f", "tolerance:f<=upper f",
                             "tolerance:upper f=upper(upper f)"};
  const char* eq_names[] = {"equivalence:upper(lower f)=lower(lower f)", "equivalence:upper(upper f)=lower(upper f)"};
  if (!cls.tolerance.holds) {
    for (const char* n : tol_names) rep.not_applicable(n, "relation is not a tolerance");
    for (const char* n : eq_names) rep.not_applicable(n, "relation is not an equivalence");
    return rep;
  }
  std::vector<CheckResult*> c;
  for (const char* n : tol_names) c.push_back(&rep.begin(n));
  const bool equiv = cls.equivalence.holds;
  if (equiv) {
    for (const char* n : eq_names) c.push_back(&rep.begin(n));
  } else {
    for (const char* n : eq_names) rep.not_applicable(n, "relation is not transitive");
  }
  rep.header.push_back(detail::for_each_fuzzy_set(sp, mode, [&](const FuzzySet& f) {
    const FuzzySet lo = lower_approx(sp, f);
    const FuzzySet up = upper_approx(sp, f);
    const FuzzySet lolo = lower_approx(sp, lo);
    const FuzzySet upup = upper_approx(sp, up);
    detail::record_eq(sp, *c[0], f, lolo, lo);
    detail::record_leq(sp, *c[1], f, lo, f);
    detail::record_leq(sp, *c[2], f, f, up);
    detail::record_eq(sp, *c[3], f, up, upup);
    if (equiv) {
      detail::record_eq(sp, *c[4], f, upper_approx(sp, lo), lolo);
      detail::record_eq(sp, *c[5], f, upup, lower_approx(sp, up));
    }
  }));
  return rep;
}

}  // namespace rml

#endif  // RML_ROUGH_HPP
