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

#ifndef RML_ENUMERATE_HPP
#define RML_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "poset.hpp"
#include "structure.hpp"

namespace rml {

struct SearchConfig {
  FinitePoset poset;
  Element top = 0;
  Element bottom = 0;
  /// Maximum number of structures to emit; 0 means all.
  std::size_t limit = 0;
  /// Emit one representative (the lexicographically least table) per automorphism orbit.
  bool canonical_only = false;
  /// Largest carrier the full-domain naive oracle accepts.
  std::size_t oracle_limit = 5;
};

/// Builds a config with ⊤/⊥ taken from the poset; the poset must be a bounded multilattice.
inline SearchConfig make_search_config(FinitePoset poset) {
  const PosetClassification cls = classify(poset);
  if (!cls.bounded) throw InputError("enumeration needs a bounded poset");
  if (!cls.multilattice) throw InputError("enumeration needs a multilattice");
  SearchConfig cfg;
  cfg.top = *poset.top();
  cfg.bottom = *poset.bottom();
  cfg.poset = std::move(poset);
  return cfg;
}

using Permutation = std::vector<Element>;

/// Every order automorphism of `p`, in lexicographic order of the image vectors.
inline std::vector<Permutation> automorphisms(const FinitePoset& p) {
  const auto n = static_cast<Element>(p.size());
  std::vector<Permutation> out;
  Permutation perm(n);
  ElementSet used;
  auto extend = [&](auto&& self, Element i) -> void {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (Element img = 0; img < n; ++img) {
      if (used.contains(img)) continue;
      if (p.up(i).size() != p.up(img).size() || p.down(i).size() != p.down(img).size()) continue;
      bool ok = true;
      for (Element j = 0; j < i && ok; ++j) {
        ok = p.leq(j, i) == p.leq(perm[j], img) && p.leq(i, j) == p.leq(img, perm[j]);
      }
      if (!ok) continue;
      perm[i] = img;
      used.insert(img);
      self(self, i + 1);
      used.erase(img);
    }
  };
  extend(extend, 0);
  return out;
}

/// The table of ⊙ transported along `perm`: t'(σi, σj) = σ(t(i, j)).
inline OpTable permute(const OpTable& t, const Permutation& perm) {
  const auto n = static_cast<Element>(t.size());
  OpTable r(n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) r.at(perm[i], perm[j]) = perm[t(i, j)];
  return r;
}

/// Lexicographically least table in the orbit of `t`.
inline OpTable canonical_table(const OpTable& t, const std::vector<Permutation>& group) {
  OpTable best = t;
  for (const auto& g : group) {
    OpTable c = permute(t, g);
    if (c.cells() < best.cells()) best = std::move(c);
  }
  return best;
}

namespace detail {

inline constexpr Element unset = ~Element{0};

/// Backtracking state for the ⊙ search.
class TableSearch {
public:
  TableSearch(const SearchConfig& cfg, const std::function<bool(const OpTable&)>& emit)
      : p_(cfg.poset), n_(static_cast<Element>(cfg.poset.size())), table_(n_, unset), emit_(emit) {
    for (Element x = 0; x < n_; ++x) {
      table_.at(cfg.top, x) = x;
      table_.at(x, cfg.top) = x;
    }
    std::vector<Element> rank(n_);
    const auto ext = p_.linear_extension();
    for (Element r = 0; r < n_; ++r) rank[ext[r]] = r;
    for (Element i = 0; i < n_; ++i) {
      if (i == cfg.top) continue;
      for (Element j = i; j < n_; ++j) {
        if (j == cfg.top) continue;
        // a⊙b ≤ a and a⊙b ≤ b in every pocrim.
        std::vector<Element> dom = (p_.down(i) & p_.down(j)).indices();
        std::sort(dom.begin(), dom.end(), [&](Element a, Element b) { return rank[a] < rank[b]; });
        vars_.push_back(Var{i, j, std::move(dom)});
      }
    }
    open_in_column_.assign(n_, 0);
    for (const auto& v : vars_) {
      ++open_in_column_[v.i];
      if (v.i != v.j) ++open_in_column_[v.j];
    }
  }

  void run() { descend(0); }

private:
  struct Var {
    Element i;
    Element j;
    std::vector<Element> domain;
  };

  bool descend(std::size_t k) {
    if (k == vars_.size()) return emit_(table_);
    const Var& v = vars_[k];
    for (Element val : v.domain) {
      assign(v, val);
      bool keep_going = true;
      if (consistent(v)) keep_going = descend(k + 1);
      unassign(v);
      if (!keep_going) return false;
    }
    return true;
  }

  void assign(const Var& v, Element val) {
    table_.at(v.i, v.j) = val;
    table_.at(v.j, v.i) = val;
    --open_in_column_[v.i];
    if (v.i != v.j) --open_in_column_[v.j];
  }
  void unassign(const Var& v) {
    table_.at(v.i, v.j) = unset;
    table_.at(v.j, v.i) = unset;
    ++open_in_column_[v.i];
    if (v.i != v.j) ++open_in_column_[v.j];
  }

  bool consistent(const Var& v) const {
    return monotone_at(v.i, v.j) && monotone_at(v.j, v.i) && associative_now() &&
           (open_in_column_[v.i] != 0 || column_residuated(v.i)) &&
           (v.i == v.j || open_in_column_[v.j] != 0 || column_residuated(v.j));
  }

  /// a ≤ b ⟹ a⊙c ≤ b⊙c against the assigned cells of column c.
  bool monotone_at(Element x, Element c) const {
    const Element v = table_(x, c);
    for (Element a = 0; a < n_; ++a) {
      const Element w = table_(a, c);
      if (w == unset || a == x) continue;
      if (p_.leq(a, x) && !p_.leq(w, v)) return false;
      if (p_.leq(x, a) && !p_.leq(v, w)) return false;
    }
    return true;
  }

  /// (a⊙b)⊙c = a⊙(b⊙c) on every triple whose four cells are known.
  bool associative_now() const {
    for (Element a = 0; a < n_; ++a) {
      for (Element b = 0; b < n_; ++b) {
        const Element ab = table_(a, b);
        if (ab == unset) continue;
        for (Element c = 0; c < n_; ++c) {
          const Element bc = table_(b, c);
          if (bc == unset) continue;
          const Element l = table_(ab, c);
          const Element r = table_(a, bc);
          if (l != unset && r != unset && l != r) return false;
        }
      }
    }
    return true;
  }

  /// Column b is complete: every {a : a⊙b ≤ c} must be a principal down-set.
  bool column_residuated(Element b) const {
    for (Element c = 0; c < n_; ++c) {
      ElementSet s;
      for (Element a = 0; a < n_; ++a) {
        if (p_.leq(table_(a, b), c)) s.insert(a);
      }
      const ElementSet top = p_.maximal(s);
      if (top.size() != 1 || p_.down(top.front()) != s) return false;
    }
    return true;
  }

  const FinitePoset& p_;
  Element n_;
  OpTable table_;
  std::vector<Var> vars_;
  std::vector<int> open_in_column_;
  const std::function<bool(const OpTable&)>& emit_;
};

}  // namespace detail

/**
 * Streams every residuated structure on `cfg.poset` to `emit` in the
 * deterministic order of the backtracking search (cells of the upper
 * triangle row by row, values ascending along a linear extension).
 * `emit` returns false to stop early. Returns the number emitted.
 */
inline std::size_t for_each_structure(const SearchConfig& cfg, const std::function<bool(const RmlStructure&)>& emit) {
  const std::vector<Permutation> group = cfg.canonical_only ? automorphisms(cfg.poset) : std::vector<Permutation>{};
  std::size_t count = 0;
  std::function<bool(const OpTable&)> on_table = [&](const OpTable& t) {
    if (cfg.canonical_only && canonical_table(t, group) != t) return true;
    RmlStructure s = RmlStructure::from_otimes(cfg.poset, cfg.top, cfg.bottom, t);
    if (!verify_structure(s).passed()) throw std::logic_error("enumerator emitted a table that fails verification");
    ++count;
    if (!emit(s)) return false;
    return cfg.limit == 0 || count < cfg.limit;
  };
  detail::TableSearch search(cfg, on_table);
  search.run();
  return count;
}

inline std::vector<RmlStructure> enumerate_structures(const SearchConfig& cfg) {
  std::vector<RmlStructure> out;
  for_each_structure(cfg, [&](const RmlStructure& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

/// Value ranges the brute-force oracle tries for each free cell.
enum class OracleDomain {
  /// Every element, for every cell. Refused above SearchConfig::oracle_limit.
  full,
  /// Only x⊙y ∈ ↓x ∩ ↓y, a consequence of the axioms; usable a little further.
  p1_bounded,
};

inline constexpr std::size_t bounded_oracle_limit = 7;

/**
 * Brute-force oracle: tries every filling of the free cells (upper triangle
 * without the ⊤ row/column), keeps the tables whose residuum exists and that
 * pass verify_structure. Results are sorted by table, or reduced to orbit
 * representatives when `cfg.canonical_only` is set.
 */
inline std::vector<RmlStructure> naive_enumerate(const SearchConfig& cfg, OracleDomain domain = OracleDomain::full) {
  const FinitePoset& p = cfg.poset;
  const auto n = static_cast<Element>(p.size());
  if (domain == OracleDomain::full && n > cfg.oracle_limit) {
    throw InputError("naive oracle refuses " + std::to_string(n) + " elements (oracle limit " +
                     std::to_string(cfg.oracle_limit) + ")");
  }
  if (domain == OracleDomain::p1_bounded && n > bounded_oracle_limit) {
    throw InputError("bounded naive oracle refuses " + std::to_string(n) + " elements (limit " +
                     std::to_string(bounded_oracle_limit) + ")");
  }

  struct Cell {
    Element i, j;
    std::vector<Element> values;
  };
  std::vector<Cell> cells;
  for (Element i = 0; i < n; ++i) {
    if (i == cfg.top) continue;
    for (Element j = i; j < n; ++j) {
      if (j == cfg.top) continue;
      std::vector<Element> vals;
      for (Element v = 0; v < n; ++v) {
        if (domain == OracleDomain::full || (p.leq(v, i) && p.leq(v, j))) vals.push_back(v);
      }
      cells.push_back(Cell{i, j, std::move(vals)});
    }
  }

  OpTable t(n);
  for (Element x = 0; x < n; ++x) {
    t.at(cfg.top, x) = x;
    t.at(x, cfg.top) = x;
  }
  std::vector<std::size_t> digit(cells.size(), 0);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    t.at(cells[k].i, cells[k].j) = cells[k].values[0];
    t.at(cells[k].j, cells[k].i) = cells[k].values[0];
  }

  auto associative = [&] {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (t(t(a, b), c) != t(a, t(b, c))) return false;
    return true;
  };

  std::set<OpTable> found;
  const std::vector<Permutation> group = cfg.canonical_only ? automorphisms(p) : std::vector<Permutation>{};
  while (true) {
    if (associative() && std::holds_alternative<OpTable>(derive_residuum(p, t))) {
      RmlStructure s = RmlStructure::from_otimes(p, cfg.top, cfg.bottom, t);
      if (verify_structure(s).passed()) found.insert(cfg.canonical_only ? canonical_table(t, group) : t);
    }
    std::size_t k = 0;
    for (; k < cells.size(); ++k) {
      if (++digit[k] < cells[k].values.size()) break;
      digit[k] = 0;
      t.at(cells[k].i, cells[k].j) = cells[k].values[0];
      t.at(cells[k].j, cells[k].i) = cells[k].values[0];
    }
    if (k == cells.size()) break;
    t.at(cells[k].i, cells[k].j) = cells[k].values[digit[k]];
    t.at(cells[k].j, cells[k].i) = cells[k].values[digit[k]];
  }

  std::vector<RmlStructure> out;
  for (const OpTable& table : found) out.push_back(RmlStructure::from_otimes(p, cfg.top, cfg.bottom, table));
  return out;
}

}  // namespace rml

#endif  // RML_ENUMERATE_HPP
