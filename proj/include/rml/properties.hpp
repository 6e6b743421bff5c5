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

#ifndef RML_PROPERTIES_HPP
#define RML_PROPERTIES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "poset.hpp"
#include "report.hpp"
#include "structure.hpp"

namespace rml {

/// Controls the subset-quantified checks.
struct PropertyOptions {
  /// Carriers up to this size get every subset; larger ones are sampled.
  std::size_t subset_limit = 8;
  std::size_t sampled_subsets = 4096;
  std::uint64_t seed = 20240917;
};

namespace detail {

/// Image sets that tolerate empty inputs (unlike the public lift_* operations).
inline ElementSet image_otimes(const RmlStructure& s, ElementSet a, ElementSet b) {
  ElementSet r;
  for (Element x : a)
    for (Element y : b) r.insert(s.otimes(x, y));
  return r;
}
inline ElementSet image_residuum(const RmlStructure& s, ElementSet a, ElementSet b) {
  ElementSet r;
  for (Element x : a)
    for (Element y : b) r.insert(s.residuum(x, y));
  return r;
}
inline ElementSet image_neg(const RmlStructure& s, ElementSet a) {
  ElementSet r;
  for (Element x : a) r.insert(s.neg(x));
  return r;
}

/// Visits subsets of the carrier: all of them when small enough, otherwise a seeded sample.
template <class Fn>
std::string for_each_family(std::size_t n, const PropertyOptions& opts, bool include_empty, Fn&& fn) {
  if (n <= opts.subset_limit) {
    if (include_empty) fn(ElementSet{});
    for_each_nonempty_subset(ElementSet::all(n), fn);
    return "all subsets";
  }
  std::mt19937_64 rng(opts.seed);
  const std::uint64_t mask = ElementSet::all(n).bits();
  for (std::size_t i = 0; i < opts.sampled_subsets; ++i) {
    std::uint64_t bits = rng() & mask;
    if (bits == 0 && !include_empty) bits = std::uint64_t{1} << (rng() % n);
    fn(ElementSet(bits));
  }
  return std::to_string(opts.sampled_subsets) + " sampled subsets, seed " + std::to_string(opts.seed);
}

/// Records `l ≤ r` on the named check, with the values in the failure entry.
struct Recorder {
  const RmlStructure& s;
  std::string nm(Element e) const { return s.name(e); }
  std::string fmt(ElementSet e) const { return s.poset().format(e); }

  std::vector<std::string> names(std::initializer_list<Element> w) const {
    std::vector<std::string> out;
    for (Element e : w) out.push_back(nm(e));
    return out;
  }
  void leq(CheckResult& c, std::vector<std::string> w, const std::string& label, Element l, Element r) const {
    record(c, s.leq(l, r), std::move(w), label + ": " + nm(l), nm(r));
  }
  void eq(CheckResult& c, std::vector<std::string> w, const std::string& label, Element l, Element r) const {
    record(c, l == r, std::move(w), label + ": " + nm(l), nm(r));
  }
  void member(CheckResult& c, std::vector<std::string> w, const std::string& label, Element l, ElementSet r) const {
    record(c, r.contains(l), std::move(w), label + ": " + nm(l), fmt(r));
  }
  void subset(CheckResult& c, std::vector<std::string> w, const std::string& label, ElementSet l, ElementSet r) const {
    record(c, l.subset_of(r), std::move(w), label + ": " + fmt(l), fmt(r));
  }
  void same(CheckResult& c, std::vector<std::string> w, const std::string& label, ElementSet l, ElementSet r) const {
    record(c, l == r, std::move(w), label + ": " + fmt(l), fmt(r));
  }
};

}  // namespace detail

/// P1–P9: the pocrim identities and inequalities, over every element tuple.
inline VerificationReport verify_pocrim_props(const RmlStructure& s) {
  const auto n = static_cast<Element>(s.size());
  const detail::Recorder rec{s};
  const Element top = s.top();
  auto O = [&](Element a, Element b) { return s.otimes(a, b); };
  auto R = [&](Element a, Element b) { return s.residuum(a, b); };
  VerificationReport rep;

  auto& p1 = rep.begin("P1");
  auto& p2 = rep.begin("P2");
  auto& p8 = rep.begin("P8");
  auto& p9 = rep.begin("P9");
  for (Element a = 0; a < n; ++a) {
    rec.eq(p8, rec.names({a}), "T->a", R(top, a), a);
    rec.eq(p8, rec.names({a}), "a->T", R(a, top), top);
    for (Element b = 0; b < n; ++b) {
      auto w = rec.names({a, b});
      rec.leq(p1, w, "a*b<=a", O(a, b), a);
      rec.leq(p1, w, "a*b<=b", O(a, b), b);
      rec.leq(p2, w, "a*(a->b)<=a", O(a, R(a, b)), a);
      rec.leq(p2, w, "a<=b->(a*b)", a, R(b, O(a, b)));
      rec.leq(p2, w, "a*(a->b)<=b", O(a, R(a, b)), b);
      rec.leq(p2, w, "b<=a->(a*b)", b, R(a, O(a, b)));
      record(p9, s.leq(a, b) == (R(a, b) == top), w, "a<=b is " + std::string(s.leq(a, b) ? "true" : "false"),
             "a->b=" + rec.nm(R(a, b)));
    }
  }

  auto& p3 = rep.begin("P3");
  auto& p4 = rep.begin("P4");
  auto& p5 = rep.begin("P5");
  auto& p6 = rep.begin("P6");
  auto& p7 = rep.begin("P7");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        auto w = rec.names({a, b, c});
        if (s.leq(a, b)) {
          rec.leq(p3, w, "a*c<=b*c", O(a, c), O(b, c));
          rec.leq(p3, w, "c->a<=c->b", R(c, a), R(c, b));
          rec.leq(p3, w, "b->c<=a->c", R(b, c), R(a, c));
        } else {
          ++p3.cases;
        }
        rec.eq(p4, w, "a->(b->c)=b->(a->c)", R(a, R(b, c)), R(b, R(a, c)));
        rec.eq(p4, w, "b->(a->c)=(a*b)->c", R(b, R(a, c)), R(O(a, b), c));
        rec.leq(p5, w, "(a->b)*(b->c)<=a->c", O(R(a, b), R(b, c)), R(a, c));
        rec.leq(p6, w, "a->b<=(a*c)->(b*c)", R(a, b), R(O(a, c), O(b, c)));
        rec.leq(p7, w, "a->b<=(c->a)->(c->b)", R(a, b), R(R(c, a), R(c, b)));
        rec.leq(p7, w, "a->b<=(b->c)->(a->c)", R(a, b), R(R(b, c), R(a, c)));
      }
  return rep;
}

/**
 * L1–L6, the residuated-lattice identities. Joins and meets of families are
 * taken over subsets of the carrier (the empty family included).
 * Throws NotApplicable when the poset is not a lattice.
 */
inline VerificationReport verify_lattice_props(const RmlStructure& s, const PropertyOptions& opts = {}) {
  const FinitePoset& p = s.poset();
  if (!classify(p).lattice) throw NotApplicable("L1-L6 need a lattice; this poset is a pure multilattice or not a lattice");
  const auto n = static_cast<Element>(s.size());
  const detail::Recorder rec{s};
  auto O = [&](Element a, Element b) { return s.otimes(a, b); };
  auto R = [&](Element a, Element b) { return s.residuum(a, b); };
  auto N = [&](Element a) { return s.neg(a); };
  auto join = [&](ElementSet x) { return p.multisup(x).front(); };
  auto meet = [&](ElementSet x) { return p.multiinf(x).front(); };
  VerificationReport rep;

  auto& l1 = rep.begin("L1");
  auto& l6 = rep.begin("L6");
  for (Element a = 0; a < n; ++a) {
    rec.leq(l1, rec.names({a}), "a<=a**", a, N(N(a)));
    rec.eq(l1, rec.names({a}), "a*=a***", N(a), N(N(N(a))));
    for (Element b = 0; b < n; ++b) {
      auto w = rec.names({a, b});
      rec.eq(l1, w, "a**->b**=b*->a*", R(N(N(a)), N(N(b))), R(N(b), N(a)));
      rec.eq(l1, w, "(a*b)*=a->b*", N(O(a, b)), R(a, N(b)));
      rec.eq(l6, w, "(a*b)*=a->b*", N(O(a, b)), R(a, N(b)));
    }
  }

  auto& l2 = rep.begin("L2");
  auto& l3 = rep.begin("L3");
  auto& l4 = rep.begin("L4");
  auto& l5 = rep.begin("L5");
  const std::string coverage = detail::for_each_family(n, opts, true, [&](ElementSet x) {
    const std::string fx = p.format(x);
    ElementSet negs;
    for (Element xi : x) negs.insert(N(xi));
    rec.eq(l4, {fx}, "(vX)*=^X*", N(join(x)), meet(negs));
    rec.leq(l5, {fx}, "vX*<=(^X)*", join(negs), N(meet(x)));
    for (Element c = 0; c < n; ++c) {
      ElementSet to_c, from_c, times_c;
      for (Element xi : x) {
        to_c.insert(R(xi, c));
        from_c.insert(R(c, xi));
        times_c.insert(O(c, xi));
      }
      std::vector<std::string> w{fx, rec.nm(c)};
      rec.eq(l2, w, "(vX)->c=^(X->c)", R(join(x), c), meet(to_c));
      rec.eq(l2, w, "c->(^X)=^(c->X)", R(c, meet(x)), meet(from_c));
      rec.eq(l3, w, "v(c*X)=c*(vX)", join(times_c), O(c, join(x)));
      rec.leq(l3, w, "c*(^X)<=^(c*X)", O(c, meet(x)), meet(times_c));
    }
  });
  for (CheckResult* c : {&l2, &l3, &l4, &l5}) c->note = coverage;
  return rep;
}

/// M1–M14 on every pair/triple, with ⊔/⊓ and lifted operations on sets.
inline VerificationReport verify_multilattice_props(const RmlStructure& s) {
  const FinitePoset& p = s.poset();
  const auto n = static_cast<Element>(s.size());
  const detail::Recorder rec{s};
  auto O = [&](Element a, Element b) { return s.otimes(a, b); };
  auto R = [&](Element a, Element b) { return s.residuum(a, b); };
  auto N = [&](Element a) { return s.neg(a); };
  auto sup2 = [&](Element a, Element b) { return p.multisup(ElementSet{a, b}); };
  auto inf2 = [&](Element a, Element b) { return p.multiinf(ElementSet{a, b}); };
  auto one = [](Element a) { return ElementSet::single(a); };
  using detail::image_neg;
  using detail::image_otimes;
  using detail::image_residuum;
  VerificationReport rep;

  std::vector<CheckResult*> m(15, nullptr);
  for (int i = 1; i <= 14; ++i) m[i] = &rep.begin("M" + std::to_string(i));

  for (Element x = 0; x < n; ++x) {
    rec.leq(*m[10], rec.names({x}), "x<=x**", x, N(N(x)));
    rec.eq(*m[10], rec.names({x}), "x*=x***", N(x), N(N(N(x))));
    for (Element y = 0; y < n; ++y) {
      auto w = rec.names({x, y});
      const ElementSet inf_xy = inf2(x, y);
      const ElementSet sup_xy = sup2(x, y);
      rec.member(*m[1], w, "x*y in down(x^y)", O(x, y), p.down_closure(inf_xy));
      rec.member(*m[1], w, "x*(x->y) in down(x^y)", O(x, R(x, y)), p.down_closure(inf_xy));
      rec.eq(*m[10], w, "x**->y**=y*->x*", R(N(N(x)), N(N(y))), R(N(y), N(x)));
      // The same identity is stated under two names; it is evaluated for both.
      rec.eq(*m[10], w, "(x*y)*=x->y*", N(O(x, y)), R(x, N(y)));
      rec.eq(*m[11], w, "(x*y)*=x->y*", N(O(x, y)), R(x, N(y)));
      rec.subset(*m[12], w, "(x^y)* in up(x*vy*)", image_neg(s, inf_xy), p.up_closure(sup2(N(x), N(y))));
      rec.subset(*m[13], w, "(xvy)* in down(x*^y*)", image_neg(s, sup_xy), p.down_closure(inf2(N(x), N(y))));
      rec.subset(*m[14], w, "x*^y* in (xvy)*", inf2(N(x), N(y)), image_neg(s, sup_xy));
      for (Element z = 0; z < n; ++z) {
        auto w3 = rec.names({x, y, z});
        rec.subset(*m[2], w3, "(x*y)v(x*z) in x*(yvz)", sup2(O(x, y), O(x, z)), image_otimes(s, one(x), sup2(y, z)));
        rec.subset(*m[3], w3, "x*(y^z) in down((x*y)^(x*z))", image_otimes(s, one(x), inf2(y, z)),
                   p.down_closure(inf2(O(x, y), O(x, z))));
        rec.subset(*m[4], w3, "x*(yvz) in up((x*y)v(x*z))", image_otimes(s, one(x), sup2(y, z)),
                   p.up_closure(sup2(O(x, y), O(x, z))));
        rec.subset(*m[5], w3, "(x^y)->z in up((x->z)v(y->z))", image_residuum(s, inf_xy, one(z)),
                   p.up_closure(sup2(R(x, z), R(y, z))));
        rec.subset(*m[6], w3, "(xvy)->z in down((x->z)^(y->z))", image_residuum(s, sup_xy, one(z)),
                   p.down_closure(inf2(R(x, z), R(y, z))));
        rec.subset(*m[7], w3, "(x->z)^(y->z) in (xvy)->z", inf2(R(x, z), R(y, z)), image_residuum(s, sup_xy, one(z)));
        rec.subset(*m[8], w3, "z->(xvy) in up((z->x)v(z->y))", image_residuum(s, one(z), sup_xy),
                   p.up_closure(sup2(R(z, x), R(z, y))));
        rec.subset(*m[9], w3, "z->(x^y) in down((z->x)^(z->y))", image_residuum(s, one(z), inf_xy),
                   p.down_closure(inf2(R(z, x), R(z, y))));
      }
    }
  }
  m[10]->note = "M10 and M11 share the identity (x*y)*=x->y*";
  m[11]->note = m[10]->note;
  return rep;
}

/// Items 1–6 of the set-valued distributivity corollary, for every z and nonempty X.
inline VerificationReport verify_corollary(const RmlStructure& s, const PropertyOptions& opts = {}) {
  const FinitePoset& p = s.poset();
  const auto n = static_cast<Element>(s.size());
  const detail::Recorder rec{s};
  using detail::image_neg;
  using detail::image_otimes;
  using detail::image_residuum;
  VerificationReport rep;

  auto& c1 = rep.begin("Cor-1");
  auto& c2 = rep.begin("Cor-2");
  auto& c3 = rep.begin("Cor-3");
  auto& c4 = rep.begin("Cor-4");
  auto& c4b = rep.begin("Cor-4-bottom");
  auto& c5 = rep.begin("Cor-5");
  auto& c6a = rep.begin("Cor-6-eq");
  auto& c6b = rep.begin("Cor-6-up");

  const std::string coverage = detail::for_each_family(n, opts, false, [&](ElementSet x) {
    const std::string fx = rec.fmt(x);
    const ElementSet sup = p.multisup(x);
    const ElementSet inf = p.multiinf(x);
    const ElementSet negs = image_neg(s, x);
    rec.subset(c2, {fx}, "(^X)* in up(vX*)", image_neg(s, inf), p.up_closure(p.multisup(negs)));
    rec.subset(c3, {fx}, "(vX)* in down(^X*)", image_neg(s, sup), p.down_closure(p.multiinf(negs)));
    rec.subset(c4b, {fx}, "^X* in (vX)*", p.multiinf(negs), image_neg(s, sup));
    rec.same(c6a, {fx}, "down((vX)*)=down(^X*)", p.down_closure(image_neg(s, sup)), p.down_closure(p.multiinf(negs)));
    rec.subset(c6b, {fx}, "up((^X)*) in up(vX*)", p.up_closure(image_neg(s, inf)), p.up_closure(p.multisup(negs)));
    for (Element z = 0; z < n; ++z) {
      const ElementSet zs = ElementSet::single(z);
      std::vector<std::string> w{fx, rec.nm(z)};
      rec.subset(c1, w, "v(z*X) in z*(vX)", p.multisup(image_otimes(s, zs, x)), image_otimes(s, zs, sup));
      rec.subset(c4, w, "^(X->z) in (vX)->z", p.multiinf(image_residuum(s, x, zs)), image_residuum(s, sup, zs));
      rec.subset(c5, w, "^(z->X) in z->(^X)", p.multiinf(image_residuum(s, zs, x)), image_residuum(s, zs, inf));
    }
  });
  for (auto& c : rep.checks) c.note = coverage;
  return rep;
}

/**
 * Soft left-continuity of ⊙ in its first argument: whenever k⊙y ≤ z for
 * every k in a nonempty K, some m ∈ ⊔K has m⊙y ≤ z. ⊙ is commutative, so
 * this covers the second argument as well.
 */
inline VerificationReport check_soft_left_continuity(const RmlStructure& s, const PropertyOptions& opts = {}) {
  const FinitePoset& p = s.poset();
  const auto n = static_cast<Element>(s.size());
  VerificationReport rep;
  auto& c = rep.begin("soft-left-continuity");
  c.note = detail::for_each_family(n, opts, false, [&](ElementSet k) {
    const ElementSet sup = p.multisup(k);
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        bool premise = true;
        for (Element e : k) premise = premise && p.leq(s.otimes(e, y), z);
        if (!premise) {
          ++c.cases;
          continue;
        }
        bool found = false;
        for (Element m : sup) found = found || p.leq(s.otimes(m, y), z);
        record(c, found, {p.format(k), s.name(y), s.name(z)}, "vK=" + p.format(sup), "no m*y<=z");
      }
    }
  });
  return rep;
}

/// Every property family that applies to `s`; the lattice suite is reported N/A on pure multilattices.
inline VerificationReport verify_all_properties(const RmlStructure& s, const PropertyOptions& opts = {}) {
  VerificationReport rep = verify_pocrim_props(s);
  if (classify(s.poset()).lattice) {
    rep.append(verify_lattice_props(s, opts));
  } else {
    for (int i = 1; i <= 6; ++i) rep.not_applicable("L" + std::to_string(i), "poset is not a lattice");
  }
  rep.append(verify_multilattice_props(s));
  rep.append(verify_corollary(s, opts));
  rep.append(check_soft_left_continuity(s, opts));
  return rep;
}

}  // namespace rml

#endif  // RML_PROPERTIES_HPP
