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

#ifndef RML_FUZZY_HPP
#define RML_FUZZY_HPP

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "structure.hpp"

namespace rml {

/// The universe X: a nonempty list of uniquely named objects.
class Universe {
public:
  explicit Universe(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InputError("a universe needs at least one object");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw InputError("object identifiers must be nonempty");
      if (!index_.emplace(names_[i], i).second) throw InputError("duplicate object identifier '" + names_[i] + "'");
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::size_t index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw UnknownElement(std::string(name));
    return it->second;
  }

  bool operator==(const Universe& o) const { return names_ == o.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline UniversePtr make_universe(std::vector<std::string> names) {
  return std::make_shared<const Universe>(std::move(names));
}

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) { return a == b || *a == *b; }

/// f : X → M, stored as one element index per object.
class FuzzySet {
public:
  FuzzySet(UniversePtr universe, std::vector<Element> values) : universe_(std::move(universe)), values_(std::move(values)) {
    if (!universe_) throw InputError("fuzzy set without universe");
    if (values_.size() != universe_->size()) throw InputError("fuzzy set is not total over its universe");
  }

  static FuzzySet constant(UniversePtr universe, Element value) {
    const std::size_t n = universe->size();
    return FuzzySet(std::move(universe), std::vector<Element>(n, value));
  }

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return values_.size(); }
  Element operator[](std::size_t x) const { return values_[x]; }
  Element& operator[](std::size_t x) { return values_[x]; }
  const std::vector<Element>& values() const { return values_; }

  bool operator==(const FuzzySet& o) const { return values_ == o.values_ && same_universe(universe_, o.universe_); }

private:
  UniversePtr universe_;
  std::vector<Element> values_;
};

/// R : X² → M, row-major.
class FuzzyRelation {
public:
  FuzzyRelation(UniversePtr universe, std::vector<Element> cells) : universe_(std::move(universe)), cells_(std::move(cells)) {
    if (!universe_) throw InputError("fuzzy relation without universe");
    if (cells_.size() != universe_->size() * universe_->size()) throw InputError("fuzzy relation is not total over X x X");
  }

  static FuzzyRelation constant(UniversePtr universe, Element value) {
    const std::size_t n = universe->size();
    return FuzzyRelation(std::move(universe), std::vector<Element>(n * n, value));
  }

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return universe_->size(); }
  Element operator()(std::size_t x, std::size_t y) const { return cells_[x * size() + y]; }
  Element& at(std::size_t x, std::size_t y) { return cells_[x * size() + y]; }
  const std::vector<Element>& cells() const { return cells_; }

  bool operator==(const FuzzyRelation& o) const { return cells_ == o.cells_ && same_universe(universe_, o.universe_); }

private:
  UniversePtr universe_;
  std::vector<Element> cells_;
};

/// ⇑: the constant ⊤ fuzzy set.
inline FuzzySet top_set(const RmlStructure& s, UniversePtr u) { return FuzzySet::constant(std::move(u), s.top()); }
/// ⇓: the constant ⊥ fuzzy set.
inline FuzzySet bottom_set(const RmlStructure& s, UniversePtr u) { return FuzzySet::constant(std::move(u), s.bottom()); }

/// ⊤ at `x`, ⊥ elsewhere.
inline FuzzySet indicator(const RmlStructure& s, UniversePtr u, std::size_t x) {
  FuzzySet f = bottom_set(s, std::move(u));
  f[x] = s.top();
  return f;
}

/// R_x(y) = R(x, y).
inline FuzzySet relation_slice(const FuzzyRelation& r, std::size_t x) {
  if (x >= r.size()) throw InputError("relation_slice: object out of range");
  std::vector<Element> v(r.size());
  for (std::size_t y = 0; y < r.size(); ++y) v[y] = r(x, y);
  return FuzzySet(r.universe(), std::move(v));
}
inline FuzzySet relation_slice(const FuzzyRelation& r, std::string_view x) {
  return relation_slice(r, r.universe()->index_of(x));
}

enum class PointwiseOp { otimes, residuum };

namespace detail {
inline void require_same_universe(const FuzzySet& f, const FuzzySet& g) {
  if (!same_universe(f.universe(), g.universe())) throw InputError("fuzzy sets live on different universes");
}
}  // namespace detail

inline FuzzySet fuzzy_pointwise(const RmlStructure& s, const FuzzySet& f, const FuzzySet& g, PointwiseOp op) {
  detail::require_same_universe(f, g);
  FuzzySet r = f;
  for (std::size_t x = 0; x < f.size(); ++x) {
    r[x] = op == PointwiseOp::otimes ? s.otimes(f[x], g[x]) : s.residuum(f[x], g[x]);
  }
  return r;
}

inline FuzzySet fuzzy_neg(const RmlStructure& s, const FuzzySet& f) {
  FuzzySet r = f;
  for (std::size_t x = 0; x < f.size(); ++x) r[x] = s.neg(f[x]);
  return r;
}

inline bool fuzzy_leq(const RmlStructure& s, const FuzzySet& f, const FuzzySet& g) {
  detail::require_same_universe(f, g);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!s.leq(f[x], g[x])) return false;
  }
  return true;
}

/// "(p:a, q:b)".
inline std::string format_fuzzy_set(const RmlStructure& s, const FuzzySet& f) {
  std::string out = "(";
  for (std::size_t x = 0; x < f.size(); ++x) {
    out += (x ? ", " : "") + f.universe()->name(x) + ":" + s.name(f[x]);
  }
  return out + ")";
}

/**
 * (X, R) over a verified residuated structure. The structure is checked on
 * construction; the relation must live on the same universe.
 */
class ApproximationSpace {
public:
  ApproximationSpace(RmlStructure structure, FuzzyRelation relation)
      : structure_(std::move(structure)), relation_(std::move(relation)) {
    if (!verify_structure(structure_).passed()) {
      throw InputError("approximation spaces need a verified residuated multilattice");
    }
    for (Element v : relation_.cells()) {
      if (v >= structure_.size()) throw InputError("relation value out of range");
    }
  }

  const RmlStructure& structure() const { return structure_; }
  const FuzzyRelation& relation() const { return relation_; }
  const UniversePtr& universe() const { return relation_.universe(); }
  std::size_t objects() const { return relation_.size(); }

  FuzzySet top_set() const { return rml::top_set(structure_, universe()); }
  FuzzySet bottom_set() const { return rml::bottom_set(structure_, universe()); }

private:
  RmlStructure structure_;
  FuzzyRelation relation_;
};

}  // namespace rml

#endif  // RML_FUZZY_HPP
