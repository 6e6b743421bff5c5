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

#ifndef RML_FORMAT_HPP
#define RML_FORMAT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fuzzy.hpp"
#include "poset.hpp"
#include "structure.hpp"

namespace rml {

/*
 * Line-oriented text format.
 *
 *   # comment (to end of line)
 *   poset:
 *     bot a b top          bare tokens declare elements
 *     bot<a<top  bot<b<top chains of strict pairs, closed transitively
 *   bounds:
 *     top top
 *     bottom bot           both inferred from the order when absent
 *   otimes:
 *     a b = bot            x y = z; the mirror cell y x is filled when absent,
 *                          and cells with top as an operand default to the
 *                          other operand
 *   residuum:
 *     a b = top            optional; derived from otimes when absent
 *   universe:
 *     p q                  object names
 *   relation:
 *     p q = a              missing cells default to the bottom element
 *   fuzzyset f:
 *     p = a                missing objects default to the bottom element
 *
 * Element and object names are any run of characters other than whitespace,
 * '<', '=', ':' and '#'.
 */

struct RmlRow {
  std::size_t line = 0;
  std::vector<std::string> lhs;
  std::string rhs;
};

struct RmlFile {
  struct Poset {
    std::size_t line = 0;
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> less;
    std::vector<std::size_t> less_lines;
  };
  struct Bounds {
    std::size_t line = 0;
    std::optional<std::string> top;
    std::optional<std::string> bottom;
  };
  struct Table {
    std::size_t line = 0;
    std::vector<RmlRow> rows;
  };
  struct Named {
    std::string name;
    Table table;
  };

  std::optional<Poset> poset;
  std::optional<Bounds> bounds;
  std::optional<Table> otimes;
  std::optional<Table> residuum;
  std::optional<std::pair<std::size_t, std::vector<std::string>>> universe;
  std::optional<Table> relation;
  std::vector<Named> fuzzysets;

  bool has_structure() const { return poset && otimes; }
  bool has_space() const { return has_structure() && universe && relation; }
};

namespace detail {

inline bool name_char(char c) {
  return !(c == ' ' || c == '\t' || c == '\r' || c == '<' || c == '=' || c == ':' || c == '#');
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline void check_name(std::size_t line, const std::string& n) {
  if (n.empty()) throw ParseError(line, "empty name");
  for (char c : n) {
    if (!name_char(c)) throw ParseError(line, "invalid character '" + std::string(1, c) + "' in name '" + n + "'");
  }
}

inline RmlRow parse_row(std::size_t line, std::string_view text, std::size_t arity) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
    throw ParseError(line, "expected a row of the form '" + std::string(arity == 2 ? "x y = z" : "x = m") + "'");
  }
  RmlRow row{line, split_ws(text.substr(0, eq)), {}};
  auto rhs = split_ws(text.substr(eq + 1));
  if (row.lhs.size() != arity || rhs.size() != 1) {
    throw ParseError(line, "expected " + std::to_string(arity) + " name(s) before '=' and one after");
  }
  for (const auto& n : row.lhs) check_name(line, n);
  check_name(line, rhs[0]);
  row.rhs = rhs[0];
  return row;
}

}  // namespace detail

/// Parses `.rml` text. Only syntax is checked here; names are resolved by the to_* conversions.
inline RmlFile parse_rml_file(std::string_view text) {
  RmlFile f;
  enum class Sec { none, poset, bounds, otimes, residuum, universe, relation, fuzzyset };
  Sec sec = Sec::none;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    const auto toks = detail::split_ws(line);
    if (toks.empty()) continue;

    if (line.find(':') != std::string_view::npos) {
      const auto colon = line.find(':');
      auto head = detail::split_ws(line.substr(0, colon));
      if (!detail::split_ws(line.substr(colon + 1)).empty()) {
        throw ParseError(lineno, "section header must be alone on its line");
      }
      if (head.empty()) throw ParseError(lineno, "missing section name");
      auto dup = [&](bool present) {
        if (present) throw ParseError(lineno, "duplicate section '" + head[0] + "'");
      };
      const std::string& h0 = head[0];
      if (h0 == "fuzzyset") {
        if (head.size() != 2) throw ParseError(lineno, "expected 'fuzzyset <name>:'");
        detail::check_name(lineno, head[1]);
        for (const auto& fs : f.fuzzysets) {
          if (fs.name == head[1]) throw ParseError(lineno, "duplicate fuzzy set '" + head[1] + "'");
        }
        f.fuzzysets.push_back({head[1], {lineno, {}}});
        sec = Sec::fuzzyset;
        continue;
      }
      if (head.size() != 1) throw ParseError(lineno, "unexpected tokens in section header");
      if (h0 == "poset") {
        dup(f.poset.has_value());
        f.poset.emplace().line = lineno;
        sec = Sec::poset;
      } else if (h0 == "bounds") {
        dup(f.bounds.has_value());
        f.bounds.emplace().line = lineno;
        sec = Sec::bounds;
      } else if (h0 == "otimes") {
        dup(f.otimes.has_value());
        f.otimes.emplace().line = lineno;
        sec = Sec::otimes;
      } else if (h0 == "residuum") {
        dup(f.residuum.has_value());
        f.residuum.emplace().line = lineno;
        sec = Sec::residuum;
      } else if (h0 == "universe") {
        dup(f.universe.has_value());
        f.universe.emplace(lineno, std::vector<std::string>{});
        sec = Sec::universe;
      } else if (h0 == "relation") {
        dup(f.relation.has_value());
        f.relation.emplace().line = lineno;
        sec = Sec::relation;
      } else {
        throw ParseError(lineno, "unknown section '" + h0 + "'");
      }
      continue;
    }

    switch (sec) {
      case Sec::none:
        throw ParseError(lineno, "content before any section header");
      case Sec::poset: {
        if (line.find('=') != std::string_view::npos) throw ParseError(lineno, "unexpected '=' in poset section");
        auto declare = [&](const std::string& n) {
          detail::check_name(lineno, n);
          auto& els = f.poset->elements;
          if (std::find(els.begin(), els.end(), n) == els.end()) els.push_back(n);
        };
        for (const auto& tok : toks) {
          std::vector<std::string> chain;
          std::size_t start = 0;
          while (true) {
            const auto lt = tok.find('<', start);
            chain.push_back(tok.substr(start, lt == std::string::npos ? std::string::npos : lt - start));
            if (lt == std::string::npos) break;
            start = lt + 1;
          }
          for (const auto& n : chain) declare(n);
          for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            f.poset->less.emplace_back(chain[i], chain[i + 1]);
            f.poset->less_lines.push_back(lineno);
          }
        }
        break;
      }
      case Sec::bounds: {
        if (toks.size() != 2 || (toks[0] != "top" && toks[0] != "bottom")) {
          throw ParseError(lineno, "expected 'top <name>' or 'bottom <name>'");
        }
        detail::check_name(lineno, toks[1]);
        auto& slot = toks[0] == "top" ? f.bounds->top : f.bounds->bottom;
        if (slot) throw ParseError(lineno, "duplicate '" + toks[0] + "' entry");
        slot = toks[1];
        break;
      }
      case Sec::otimes: f.otimes->rows.push_back(detail::parse_row(lineno, line, 2)); break;
      case Sec::residuum: f.residuum->rows.push_back(detail::parse_row(lineno, line, 2)); break;
      case Sec::relation: f.relation->rows.push_back(detail::parse_row(lineno, line, 2)); break;
      case Sec::fuzzyset: f.fuzzysets.back().table.rows.push_back(detail::parse_row(lineno, line, 1)); break;
      case Sec::universe: {
        if (line.find('=') != std::string_view::npos || line.find('<') != std::string_view::npos) {
          throw ParseError(lineno, "expected object names in universe section");
        }
        auto& names = f.universe->second;
        for (const auto& t : toks) {
          detail::check_name(lineno, t);
          if (std::find(names.begin(), names.end(), t) != names.end()) {
            throw ParseError(lineno, "duplicate object '" + t + "'");
          }
          names.push_back(t);
        }
        break;
      }
    }
  }
  return f;
}

namespace detail {

inline Element resolve(const FinitePoset& p, std::size_t line, const std::string& n) {
  if (!p.contains(n)) throw ParseError(line, "unknown element '" + n + "'");
  return p.index_of(n);
}

inline std::size_t resolve_object(const Universe& u, std::size_t line, const std::string& n) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u.name(i) == n) return i;
  }
  throw ParseError(line, "unknown object '" + n + "'");
}

/// Fills a binary table from explicit rows; unset cells stay nullopt.
inline std::vector<std::optional<Element>> table_cells(const FinitePoset& p, const RmlFile::Table& t) {
  const std::size_t n = p.size();
  std::vector<std::optional<Element>> cells(n * n);
  for (const auto& row : t.rows) {
    const Element a = resolve(p, row.line, row.lhs[0]);
    const Element b = resolve(p, row.line, row.lhs[1]);
    const Element v = resolve(p, row.line, row.rhs);
    auto& cell = cells[a * n + b];
    if (cell && *cell != v) {
      throw ParseError(row.line, "conflicting entries for cell (" + row.lhs[0] + ", " + row.lhs[1] + ")");
    }
    cell = v;
  }
  return cells;
}

}  // namespace detail

inline FinitePoset to_poset(const RmlFile& f) {
  if (!f.poset) throw InputError("missing 'poset:' section");
  if (f.poset->elements.empty()) throw ParseError(f.poset->line, "poset has no elements");
  if (f.poset->elements.size() > max_elements) {
    throw ParseError(f.poset->line, "at most " + std::to_string(max_elements) + " elements are supported");
  }
  std::map<std::string, Element> idx;
  for (std::size_t i = 0; i < f.poset->elements.size(); ++i) idx[f.poset->elements[i]] = static_cast<Element>(i);
  std::vector<std::pair<Element, Element>> less;
  for (const auto& [a, b] : f.poset->less) less.emplace_back(idx.at(a), idx.at(b));
  try {
    return FinitePoset::from_pairs(f.poset->elements, less);
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(f.poset->line, e.what());
  }
}

inline std::pair<Element, Element> to_bounds(const RmlFile& f, const FinitePoset& p) {
  std::optional<Element> top = p.top();
  std::optional<Element> bottom = p.bottom();
  if (f.bounds) {
    const std::size_t l = f.bounds->line;
    if (f.bounds->top) {
      const Element t = detail::resolve(p, l, *f.bounds->top);
      if (!top || *top != t) throw ParseError(l, "'" + *f.bounds->top + "' is not the greatest element");
    }
    if (f.bounds->bottom) {
      const Element b = detail::resolve(p, l, *f.bounds->bottom);
      if (!bottom || *bottom != b) throw ParseError(l, "'" + *f.bounds->bottom + "' is not the least element");
    }
  }
  if (!top) throw InputError("poset has no greatest element");
  if (!bottom) throw InputError("poset has no least element");
  return {*top, *bottom};
}

/**
 * Structure from poset, bounds and otimes (plus residuum when given). The
 * result is not verified here; run verify_structure. A missing residuum
 * section is derived and AdjointnessError is thrown when that fails.
 */
inline RmlStructure to_structure(const RmlFile& f) {
  FinitePoset p = to_poset(f);
  const auto [top, bottom] = to_bounds(f, p);
  if (!f.otimes) throw InputError("missing 'otimes:' section");
  const std::size_t n = p.size();
  auto cells = detail::table_cells(p, *f.otimes);
  OpTable ot(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      std::optional<Element> v = cells[a * n + b];
      if (!v) v = cells[b * n + a];
      if (!v && a == top) v = b;
      if (!v && b == top) v = a;
      if (!v) {
        throw ParseError(f.otimes->line, "otimes table has no entry for (" + p.name(a) + ", " + p.name(b) + ")");
      }
      ot.at(a, b) = *v;
    }
  }
  if (!f.residuum) return RmlStructure::from_otimes(std::move(p), top, bottom, std::move(ot));
  auto rcells = detail::table_cells(p, *f.residuum);
  OpTable res(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!rcells[a * n + b]) {
        throw ParseError(f.residuum->line, "residuum table has no entry for (" + p.name(a) + ", " + p.name(b) + ")");
      }
      res.at(a, b) = *rcells[a * n + b];
    }
  }
  return RmlStructure(std::move(p), top, bottom, std::move(ot), std::move(res));
}

inline UniversePtr to_universe(const RmlFile& f) {
  if (!f.universe) throw InputError("missing 'universe:' section");
  if (f.universe->second.empty()) throw ParseError(f.universe->first, "universe has no objects");
  return make_universe(f.universe->second);
}

inline ApproximationSpace to_space(const RmlFile& f) {
  if (!f.relation) throw InputError("missing 'relation:' section");
  RmlStructure s = to_structure(f);
  UniversePtr u = to_universe(f);
  const FinitePoset& p = s.poset();
  FuzzyRelation r = FuzzyRelation::constant(u, s.bottom());
  std::vector<bool> seen(u->size() * u->size(), false);
  for (const auto& row : f.relation->rows) {
    const std::size_t x = detail::resolve_object(*u, row.line, row.lhs[0]);
    const std::size_t y = detail::resolve_object(*u, row.line, row.lhs[1]);
    const Element v = detail::resolve(p, row.line, row.rhs);
    if (seen[x * u->size() + y] && r(x, y) != v) {
      throw ParseError(row.line, "conflicting entries for (" + row.lhs[0] + ", " + row.lhs[1] + ")");
    }
    seen[x * u->size() + y] = true;
    r.at(x, y) = v;
  }
  return ApproximationSpace(std::move(s), std::move(r));
}

/**
 * A fuzzy set over the space's universe, read from `f`. When `f` carries a
 * universe section it must list the same objects. With `name` empty the
 * file must hold exactly one fuzzy set.
 */
inline FuzzySet to_fuzzy_set(const RmlFile& f, const ApproximationSpace& sp, const std::string& name = {}) {
  if (f.fuzzysets.empty()) throw InputError("missing 'fuzzyset <name>:' section");
  const RmlFile::Named* pick = nullptr;
  if (name.empty()) {
    if (f.fuzzysets.size() != 1) throw InputError("file holds several fuzzy sets; choose one by name");
    pick = &f.fuzzysets.front();
  } else {
    for (const auto& fs : f.fuzzysets) {
      if (fs.name == name) pick = &fs;
    }
    if (!pick) throw InputError("no fuzzy set named '" + name + "'");
  }
  if (f.universe && f.universe->second != sp.universe()->names()) {
    throw ParseError(f.universe->first, "universe does not match the space's universe");
  }
  const RmlStructure& s = sp.structure();
  FuzzySet out = sp.bottom_set();
  std::vector<bool> seen(out.size(), false);
  for (const auto& row : pick->table.rows) {
    const std::size_t x = detail::resolve_object(*sp.universe(), row.line, row.lhs[0]);
    const Element v = detail::resolve(s.poset(), row.line, row.rhs);
    if (seen[x] && out[x] != v) throw ParseError(row.line, "conflicting entries for '" + row.lhs[0] + "'");
    seen[x] = true;
    out[x] = v;
  }
  return out;
}

inline FinitePoset parse_poset(std::string_view text) { return to_poset(parse_rml_file(text)); }
inline RmlStructure parse_structure(std::string_view text) { return to_structure(parse_rml_file(text)); }
inline ApproximationSpace parse_space(std::string_view text) { return to_space(parse_rml_file(text)); }

// Canonical serialization: fixed section order, declaration-order elements,
// one cover per line, full tables.

inline std::string serialize_rml(const FinitePoset& p) {
  std::ostringstream os;
  os << "poset:\n ";
  for (const auto& n : p.names()) os << ' ' << n;
  os << '\n';
  for (const auto& [a, b] : p.covers()) os << "  " << p.name(a) << '<' << p.name(b) << '\n';
  return os.str();
}

namespace detail {

inline void serialize_table(std::ostream& os, const char* head, const RmlStructure& s, const OpTable& t) {
  os << head << ":\n";
  const auto n = static_cast<Element>(s.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) os << "  " << s.name(a) << ' ' << s.name(b) << " = " << s.name(t(a, b)) << '\n';
  }
}

inline void serialize_structure_body(std::ostream& os, const RmlStructure& s) {
  os << serialize_rml(s.poset());
  os << "bounds:\n  top " << s.name(s.top()) << "\n  bottom " << s.name(s.bottom()) << '\n';
  serialize_table(os, "otimes", s, s.otimes_table());
  serialize_table(os, "residuum", s, s.residuum_table());
}

inline void serialize_universe(std::ostream& os, const Universe& u) {
  os << "universe:\n ";
  for (const auto& n : u.names()) os << ' ' << n;
  os << '\n';
}

}  // namespace detail

inline std::string serialize_rml(const RmlStructure& s) {
  std::ostringstream os;
  detail::serialize_structure_body(os, s);
  return os.str();
}

inline std::string serialize_rml(const ApproximationSpace& sp) {
  std::ostringstream os;
  const RmlStructure& s = sp.structure();
  detail::serialize_structure_body(os, s);
  detail::serialize_universe(os, *sp.universe());
  os << "relation:\n";
  for (std::size_t x = 0; x < sp.objects(); ++x) {
    for (std::size_t y = 0; y < sp.objects(); ++y) {
      os << "  " << sp.universe()->name(x) << ' ' << sp.universe()->name(y) << " = " << s.name(sp.relation()(x, y))
         << '\n';
    }
  }
  return os.str();
}

/// A fuzzy-set file: the universe plus one named fuzzy set, values by element name.
inline std::string serialize_rml(const FuzzySet& f, const RmlStructure& s, const std::string& name = "f") {
  std::ostringstream os;
  detail::serialize_universe(os, *f.universe());
  os << "fuzzyset " << name << ":\n";
  for (std::size_t x = 0; x < f.size(); ++x) os << "  " << f.universe()->name(x) << " = " << s.name(f[x]) << '\n';
  return os.str();
}

}  // namespace rml

#endif  // RML_FORMAT_HPP
