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

#ifndef RML_POSET_HPP
#define RML_POSET_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"

namespace rml {

/**
 * A finite partially ordered set with named elements.
 *
 * Elements are addressed by their declaration index. The order is stored as
 * the principal up-set and down-set of every element, which makes bound and
 * closure computations a handful of mask operations. Immutable once built.
 *
 * Finite posets are always coherent (every chain has a max and a min), so no
 * coherence flag is kept.
 */
class FinitePoset {
public:
  FinitePoset() = default;

  /// Builds from a full order matrix, `leq[i][j]` meaning element i ≤ element j.
  static FinitePoset from_matrix(std::vector<std::string> names, const std::vector<std::vector<bool>>& leq) {
    FinitePoset p(std::move(names));
    const std::size_t n = p.size();
    if (leq.size() != n) throw InputError("order matrix has " + std::to_string(leq.size()) + " rows, expected " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (leq[i].size() != n) throw InputError("order matrix row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[i][j]) {
          p.up_[i].insert(static_cast<Element>(j));
          p.down_[j].insert(static_cast<Element>(i));
        }
      }
    }
    for (Element i = 0; i < n; ++i) {
      if (!p.leq(i, i)) throw InputError("order is not reflexive at '" + p.name(i) + "'");
    }
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        if (i != j && p.leq(i, j) && p.leq(j, i)) {
          throw InputError("order is not antisymmetric: cycle " + p.name(i) + "<" + p.name(j) + "<" + p.name(i));
        }
        if (!p.leq(i, j)) continue;
        for (Element k : p.up_[j]) {
          if (!p.leq(i, k)) {
            throw InputError("order is not transitive: " + p.name(i) + "<=" + p.name(j) + "<=" + p.name(k) +
                             " but not " + p.name(i) + "<=" + p.name(k));
          }
        }
      }
    }
    return p;
  }

  /**
   * Builds from strict pairs `x < y` (typically the covers of a Hasse
   * diagram). The pairs are closed reflexively and transitively; a cycle is
   * reported with the offending path.
   */
  static FinitePoset from_pairs(std::vector<std::string> names, const std::vector<std::pair<Element, Element>>& less) {
    FinitePoset p(std::move(names));
    const std::size_t n = p.size();
    std::vector<std::vector<Element>> succ(n);
    for (auto [x, y] : less) {
      if (x >= n || y >= n) throw InputError("order pair refers to an element out of range");
      succ[x].push_back(y);
    }
    if (auto cycle = find_cycle(succ)) {
      std::string path;
      for (Element e : *cycle) path += (path.empty() ? "" : "<") + p.name(e);
      throw InputError("order relation has a cycle: " + path);
    }
    // Reachability by DFS from every node; n <= 64 keeps this trivial.
    for (Element s = 0; s < n; ++s) {
      ElementSet seen = ElementSet::single(s);
      std::vector<Element> stack{s};
      while (!stack.empty()) {
        Element v = stack.back();
        stack.pop_back();
        for (Element w : succ[v]) {
          if (!seen.contains(w)) {
            seen.insert(w);
            stack.push_back(w);
          }
        }
      }
      p.up_[s] = seen;
      for (Element t : seen) p.down_[t].insert(s);
    }
    return p;
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element e) const { return names_.at(e); }
  ElementSet all() const { return ElementSet::all(size()); }

  bool contains(std::string_view name) const { return index_.find(std::string(name)) != index_.end(); }

  Element index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw UnknownElement(std::string(name));
    return it->second;
  }

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  bool leq(std::string_view x, std::string_view y) const { return leq(index_of(x), index_of(y)); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  /// ↑x and ↓x.
  ElementSet up(Element x) const { return up_[x]; }
  ElementSet down(Element x) const { return down_[x]; }

  /// U(s); U(∅) is every element.
  ElementSet upper_bounds(ElementSet s) const {
    ElementSet r = all();
    for (Element x : s) r &= up_[x];
    return r;
  }
  /// L(s); L(∅) is every element.
  ElementSet lower_bounds(ElementSet s) const {
    ElementSet r = all();
    for (Element x : s) r &= down_[x];
    return r;
  }

  ElementSet minimal(ElementSet s) const {
    ElementSet r;
    for (Element x : s) {
      if ((down_[x] & s) == ElementSet::single(x)) r.insert(x);
    }
    return r;
  }
  ElementSet maximal(ElementSet s) const {
    ElementSet r;
    for (Element x : s) {
      if ((up_[x] & s) == ElementSet::single(x)) r.insert(x);
    }
    return r;
  }

  /// ⊔s: minimal upper bounds. Always an antichain.
  ElementSet multisup(ElementSet s) const { return minimal(upper_bounds(s)); }
  /// ⊓s: maximal lower bounds.
  ElementSet multiinf(ElementSet s) const { return maximal(lower_bounds(s)); }

  ElementSet up_closure(ElementSet s) const {
    ElementSet r;
    for (Element x : s) r |= up_[x];
    return r;
  }
  ElementSet down_closure(ElementSet s) const {
    ElementSet r;
    for (Element x : s) r |= down_[x];
    return r;
  }

  bool is_antichain(ElementSet s) const {
    for (Element x : s) {
      if ((up_[x] & s) != ElementSet::single(x)) return false;
    }
    return true;
  }

  std::optional<Element> top() const {
    ElementSet m = maximal(all());
    if (m.size() == 1 && lower_bounds(m) == all()) return m.front();
    return std::nullopt;
  }
  std::optional<Element> bottom() const {
    ElementSet m = minimal(all());
    if (m.size() == 1 && upper_bounds(m) == all()) return m.front();
    return std::nullopt;
  }

  /// Cover pairs (x, y): x < y with nothing strictly between, in declaration order.
  std::vector<std::pair<Element, Element>> covers() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < size(); ++x) {
      ElementSet above = up_[x] - ElementSet::single(x);
      for (Element y : minimal(above)) out.emplace_back(x, y);
    }
    return out;
  }

  /// A linear extension: repeatedly takes the lowest-index minimal element.
  std::vector<Element> linear_extension() const {
    std::vector<Element> order;
    ElementSet rest = all();
    while (!rest.empty()) {
      Element m = minimal(rest).front();
      order.push_back(m);
      rest.erase(m);
    }
    return order;
  }

  std::string format(ElementSet s) const {
    std::string out = "{";
    for (Element x : s) out += (out.size() > 1 ? ", " : "") + name(x);
    return out + "}";
  }

  ElementSet set_of(std::initializer_list<std::string_view> elems) const {
    ElementSet s;
    for (auto e : elems) s.insert(index_of(e));
    return s;
  }

  bool operator==(const FinitePoset& o) const { return names_ == o.names_ && up_ == o.up_; }

private:
  explicit FinitePoset(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InputError("a poset needs at least one element");
    if (names_.size() > max_elements) throw InputError("posets are limited to 64 elements");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw InputError("element identifiers must be nonempty");
      if (!index_.emplace(names_[i], static_cast<Element>(i)).second) {
        throw InputError("duplicate element identifier '" + names_[i] + "'");
      }
    }
    up_.assign(names_.size(), ElementSet{});
    down_.assign(names_.size(), ElementSet{});
  }

  static std::optional<std::vector<Element>> find_cycle(const std::vector<std::vector<Element>>& succ) {
    enum class Mark { fresh, active, done };
    std::vector<Mark> mark(succ.size(), Mark::fresh);
    std::vector<Element> path;
    std::optional<std::vector<Element>> found;
    auto visit = [&](auto&& self, Element v) -> void {
      mark[v] = Mark::active;
      path.push_back(v);
      for (Element w : succ[v]) {
        if (found) return;
        if (mark[w] == Mark::active) {
          auto start = std::find(path.begin(), path.end(), w);
          std::vector<Element> cycle(start, path.end());
          cycle.push_back(w);
          found = std::move(cycle);
          return;
        }
        if (mark[w] == Mark::fresh) self(self, w);
      }
      path.pop_back();
      mark[v] = Mark::done;
    };
    for (Element v = 0; v < succ.size() && !found; ++v) {
      if (mark[v] == Mark::fresh) visit(visit, v);
    }
    return found;
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

/// Structural flags of a poset.
struct PosetClassification {
  /// Elements a, b and x such that a, b ≤ x (upper) or a, b ≥ x (lower) with no
  /// multisupremum below x (resp. multiinfimum above x).
  struct Witness {
    Element a;
    Element b;
    Element x;
    bool upper;
  };

  bool bounded = false;
  bool lattice = false;
  bool multilattice = false;
  bool pure_multilattice = false;
  bool complete_multilattice = false;
  std::optional<Witness> multilattice_witness;
};

/// Subset count above which completeness is decided on the whole carrier only.
inline constexpr std::size_t completeness_subset_limit = 16;

inline PosetClassification classify(const FinitePoset& p) {
  PosetClassification c;
  const auto n = static_cast<Element>(p.size());
  c.bounded = p.top().has_value() && p.bottom().has_value();

  c.lattice = true;
  c.multilattice = true;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      const ElementSet pair{a, b};
      const ElementSet sup = p.multisup(pair);
      const ElementSet inf = p.multiinf(pair);
      if (sup.size() != 1 || inf.size() != 1) c.lattice = false;
      if (!c.multilattice) continue;
      for (Element x : p.upper_bounds(pair)) {
        if ((sup & p.down(x)).empty()) {
          c.multilattice = false;
          c.multilattice_witness = PosetClassification::Witness{a, b, x, true};
          break;
        }
      }
      if (!c.multilattice) continue;
      for (Element x : p.lower_bounds(pair)) {
        if ((inf & p.up(x)).empty()) {
          c.multilattice = false;
          c.multilattice_witness = PosetClassification::Witness{a, b, x, false};
          break;
        }
      }
    }
  }
  c.pure_multilattice = c.multilattice && !c.lattice;

  // Complete: every subset has a nonempty ⊔ and ⊓. U and L are antitone, so
  // for large carriers the whole set is the hardest case.
  bool complete = c.multilattice;
  if (complete && p.size() <= completeness_subset_limit) {
    if (p.multisup(ElementSet{}).empty() || p.multiinf(ElementSet{}).empty()) complete = false;
    for_each_nonempty_subset(p.all(), [&](ElementSet s) {
      if (complete && (p.multisup(s).empty() || p.multiinf(s).empty())) complete = false;
    });
  } else if (complete) {
    complete = !p.multisup(p.all()).empty() && !p.multiinf(p.all()).empty();
  }
  c.complete_multilattice = complete;
  return c;
}

}  // namespace rml

#endif  // RML_POSET_HPP
