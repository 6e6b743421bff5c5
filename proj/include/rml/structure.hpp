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

#ifndef RML_STRUCTURE_HPP
#define RML_STRUCTURE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "poset.hpp"
#include "report.hpp"

namespace rml {

/// Square table of a binary operation on element indices, row-major.
class OpTable {
public:
  OpTable() = default;
  explicit OpTable(std::size_t n, Element fill = 0) : n_(n), cells_(n * n, fill) {}

  std::size_t size() const { return n_; }
  Element operator()(Element x, Element y) const { return cells_[x * n_ + y]; }
  Element& at(Element x, Element y) { return cells_[x * n_ + y]; }
  const std::vector<Element>& cells() const { return cells_; }

  bool operator==(const OpTable&) const = default;
  auto operator<=>(const OpTable& o) const { return cells_ <=> o.cells_; }

private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

/**
 * Why no residuum exists for a ⊙ table: for the pair (b, c) the set
 * S = {a : a⊙b ≤ c} is not a principal down-set. Either S has no maximum
 * (`maximal` holds its maximal elements, size ≠ 1) or it has one but some
 * element below it is missing from S (`missing`).
 */
struct AdjointnessFailure {
  Element b = 0;
  Element c = 0;
  ElementSet maximal;
  std::optional<Element> missing;

  std::string describe(const FinitePoset& p) const {
    std::string s = "no residuum for (" + p.name(b) + "," + p.name(c) + "): maximal elements of {x : x*" + p.name(b) +
                    " <= " + p.name(c) + "} are " + p.format(maximal);
    if (missing) s += ", and " + p.name(*missing) + " lies below the maximum but is not in the set";
    return s;
  }
};

class AdjointnessError : public InputError {
public:
  AdjointnessError(AdjointnessFailure f, const FinitePoset& p) : InputError(f.describe(p)), failure_(f) {}
  const AdjointnessFailure& failure() const { return failure_; }

private:
  AdjointnessFailure failure_;
};

/**
 * Computes b→c = max{a : a⊙b ≤ c} for every pair, requiring that set to be
 * the principal down-set of its maximum. Returns the first failing pair in
 * lexicographic (b, c) order otherwise.
 */
inline std::variant<OpTable, AdjointnessFailure> derive_residuum(const FinitePoset& p, const OpTable& otimes) {
  const auto n = static_cast<Element>(p.size());
  OpTable res(n);
  for (Element b = 0; b < n; ++b) {
    for (Element c = 0; c < n; ++c) {
      ElementSet s;
      for (Element a = 0; a < n; ++a) {
        if (p.leq(otimes(a, b), c)) s.insert(a);
      }
      const ElementSet top = p.maximal(s);
      if (top.size() != 1) return AdjointnessFailure{b, c, top, std::nullopt};
      const Element m = top.front();
      const ElementSet gap = p.down(m) - s;
      if (!gap.empty()) return AdjointnessFailure{b, c, top, gap.front()};
      res.at(b, c) = m;
    }
  }
  return res;
}

/**
 * A finite bounded residuated multilattice candidate: poset, ⊤, ⊥ and the
 * tables of ⊙ and →. Construction only checks that the tables are well
 * formed; use verify_structure() for the axioms.
 */
class RmlStructure {
public:
  RmlStructure() = default;

  RmlStructure(FinitePoset poset, Element top, Element bottom, OpTable otimes, OpTable residuum)
      : poset_(std::move(poset)), top_(top), bottom_(bottom), otimes_(std::move(otimes)), residuum_(std::move(residuum)) {
    const std::size_t n = poset_.size();
    if (top_ >= n || bottom_ >= n) throw InputError("top/bottom out of range");
    for (const OpTable* t : {&otimes_, &residuum_}) {
      if (t->size() != n) throw InputError("operation table size does not match the poset");
      for (Element v : t->cells()) {
        if (v >= n) throw InputError("operation table entry out of range");
      }
    }
  }

  /// Builds the structure with → derived from ⊙; throws AdjointnessError when no residuum exists.
  static RmlStructure from_otimes(FinitePoset poset, Element top, Element bottom, OpTable otimes) {
    auto derived = derive_residuum(poset, otimes);
    if (auto* f = std::get_if<AdjointnessFailure>(&derived)) throw AdjointnessError(*f, poset);
    auto res = std::get<OpTable>(std::move(derived));
    return RmlStructure(std::move(poset), top, bottom, std::move(otimes), std::move(res));
  }

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  Element top() const { return top_; }
  Element bottom() const { return bottom_; }
  const OpTable& otimes_table() const { return otimes_; }
  const OpTable& residuum_table() const { return residuum_; }
  const std::string& name(Element e) const { return poset_.name(e); }

  Element otimes(Element x, Element y) const { return otimes_(x, y); }
  Element residuum(Element x, Element y) const { return residuum_(x, y); }
  /// x* = x → ⊥.
  Element neg(Element x) const { return residuum_(x, bottom_); }
  bool leq(Element x, Element y) const { return poset_.leq(x, y); }

  Element otimes(std::string_view x, std::string_view y) const { return otimes(poset_.index_of(x), poset_.index_of(y)); }
  Element residuum(std::string_view x, std::string_view y) const {
    return residuum(poset_.index_of(x), poset_.index_of(y));
  }
  Element neg(std::string_view x) const { return neg(poset_.index_of(x)); }

  bool operator==(const RmlStructure&) const = default;

private:
  FinitePoset poset_;
  Element top_ = 0;
  Element bottom_ = 0;
  OpTable otimes_;
  OpTable residuum_;
};

namespace detail {
inline void require_nonempty(ElementSet a, const char* what) {
  if (a.empty()) throw InputError(std::string(what) + ": lifted operations need nonempty sets");
}
}  // namespace detail

/// A⊙B = {a⊙b : a∈A, b∈B}.
inline ElementSet lift_otimes(const RmlStructure& s, ElementSet a, ElementSet b) {
  detail::require_nonempty(a, "lift_otimes");
  detail::require_nonempty(b, "lift_otimes");
  ElementSet r;
  for (Element x : a)
    for (Element y : b) r.insert(s.otimes(x, y));
  return r;
}

/// A→B = {a→b : a∈A, b∈B}.
inline ElementSet lift_residuum(const RmlStructure& s, ElementSet a, ElementSet b) {
  detail::require_nonempty(a, "lift_residuum");
  detail::require_nonempty(b, "lift_residuum");
  ElementSet r;
  for (Element x : a)
    for (Element y : b) r.insert(s.residuum(x, y));
  return r;
}

/// A* = {a* : a∈A}.
inline ElementSet lift_neg(const RmlStructure& s, ElementSet a) {
  detail::require_nonempty(a, "lift_neg");
  ElementSet r;
  for (Element x : a) r.insert(s.neg(x));
  return r;
}

/**
 * Checks that `s` is a bounded residuated multilattice: ⊤/⊥ extremal,
 * multilattice poset, ⊙ commutative and associative with ⊤ neutral, and
 * a⊙b ≤ c ⟺ a ≤ b→c for every triple.
 */
inline VerificationReport verify_structure(const RmlStructure& s) {
  const FinitePoset& p = s.poset();
  const auto n = static_cast<Element>(s.size());
  auto nm = [&](Element e) { return p.name(e); };
  VerificationReport rep;

  auto& top = rep.begin("top-maximum");
  for (Element x = 0; x < n; ++x) record(top, p.leq(x, s.top()), {nm(x)}, nm(x), nm(s.top()));
  auto& bot = rep.begin("bottom-minimum");
  for (Element x = 0; x < n; ++x) record(bot, p.leq(s.bottom(), x), {nm(x)}, nm(s.bottom()), nm(x));

  auto& ml = rep.begin("multilattice");
  const PosetClassification cls = classify(p);
  if (cls.multilattice_witness) {
    const auto& w = *cls.multilattice_witness;
    record(ml, false, {nm(w.a), nm(w.b), nm(w.x)}, w.upper ? "upper bound without multisup below" : "lower bound without multiinf above", "");
  } else {
    record(ml, true);
  }

  auto& comm = rep.begin("commutativity");
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      record(comm, s.otimes(a, b) == s.otimes(b, a), {nm(a), nm(b)}, nm(s.otimes(a, b)), nm(s.otimes(b, a)));

  auto& neutral = rep.begin("top-neutral");
  for (Element x = 0; x < n; ++x) {
    const bool ok = s.otimes(s.top(), x) == x && s.otimes(x, s.top()) == x;
    record(neutral, ok, {nm(x)}, nm(s.otimes(s.top(), x)), nm(x));
  }

  auto& assoc = rep.begin("associativity");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const Element l = s.otimes(s.otimes(a, b), c);
        const Element r = s.otimes(a, s.otimes(b, c));
        record(assoc, l == r, {nm(a), nm(b), nm(c)}, nm(l), nm(r));
      }

  auto& adj = rep.begin("adjointness");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const bool l = p.leq(s.otimes(a, b), c);
        const bool r = p.leq(a, s.residuum(b, c));
        record(adj, l == r, {nm(a), nm(b), nm(c)}, l ? "a*b<=c" : "a*b</=c", r ? "a<=b->c" : "a</=b->c");
      }
  return rep;
}

}  // namespace rml

#endif  // RML_STRUCTURE_HPP
