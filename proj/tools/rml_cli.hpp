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

#ifndef RML_TOOLS_RML_CLI_HPP
#define RML_TOOLS_RML_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "rml/rml.hpp"

namespace rml::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_input = 2;

/// Error tied to a named input file.
class FileError : public InputError {
public:
  using InputError::InputError;
};

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parses a file, prefixing errors with its path.
template <class Fn>
auto load(const std::string& path, Fn&& convert) {
  const std::string text = read_text(path);
  try {
    return convert(parse_rml_file(text));
  } catch (const AdjointnessError&) {
    throw;
  } catch (const InputError& e) {
    throw FileError(path + ": " + e.what());
  }
}

inline void print_fuzzy_set(std::ostream& out, const char* name, const RmlStructure& s, const FuzzySet& f) {
  out << "fuzzyset " << name << ":\n";
  for (std::size_t x = 0; x < f.size(); ++x) out << "  " << f.universe()->name(x) << " = " << s.name(f[x]) << '\n';
}

inline std::string witness_text(const ApproximationSpace& sp, const PropertyFlag& f) {
  std::string w = "(";
  for (std::size_t i = 0; i < f.witness.size(); ++i) w += (i ? "," : "") + sp.universe()->name(f.witness[i]);
  return w + ")";
}

inline int run_check(const std::string& path, std::ostream& out) {
  RmlStructure s;
  try {
    s = load(path, [](const RmlFile& f) { return to_structure(f); });
  } catch (const AdjointnessError& e) {
    out << "FAIL  adjointness  (" << e.what() << ")\n";
    return exit_fail;
  }
  VerificationReport rep = verify_structure(s);
  rep.header.insert(rep.header.begin(), "check " + path);
  if (rep.passed()) rep.append(verify_all_properties(s));
  rep.render(out, 5);
  out << (rep.passed() ? "result: PASS\n" : "result: FAIL\n");
  return rep.passed() ? exit_pass : exit_fail;
}

inline int run_residuum(const std::string& path, std::ostream& out) {
  RmlFile f = parse_rml_file(read_text(path));
  f.residuum.reset();
  try {
    RmlStructure s = to_structure(f);
    out << "residuum:\n";
    for (Element a = 0; a < s.size(); ++a) {
      for (Element b = 0; b < s.size(); ++b) {
        out << "  " << s.name(a) << ' ' << s.name(b) << " = " << s.name(s.residuum(a, b)) << '\n';
      }
    }
    return exit_pass;
  } catch (const AdjointnessError& e) {
    out << "no residuum: " << e.what() << '\n';
    return exit_fail;
  } catch (const InputError& e) {
    throw FileError(path + ": " + e.what());
  }
}

inline int run_approx(const std::string& space_path, const std::string& fset_path, const std::string& op,
                      const std::string& name, std::ostream& out) {
  const ApproximationSpace sp = load(space_path, [](const RmlFile& f) { return to_space(f); });
  const FuzzySet f = load(fset_path, [&](const RmlFile& file) { return to_fuzzy_set(file, sp, name); });
  const RmlStructure& s = sp.structure();
  try {
    if (op != "upper") print_fuzzy_set(out, "lower", s, lower_approx(sp, f));
    if (op != "lower") print_fuzzy_set(out, "upper", s, upper_approx(sp, f));
  } catch (const SingletonViolation& e) {
    out << "singleton violation: " << e.what() << '\n';
    return exit_fail;
  }
  return exit_pass;
}

inline int run_classify(const std::string& path, std::ostream& out) {
  const ApproximationSpace sp = load(path, [](const RmlFile& f) { return to_space(f); });
  const RelationClassification c = classify_relation(sp);
  auto line = [&](const char* label, const PropertyFlag& f) {
    out << label << ": " << (f.holds ? "true" : "false");
    if (!f.holds) out << " witness=" << witness_text(sp, f);
    out << '\n';
  };
  line("reflexive", c.reflexive);
  line("symmetric", c.symmetric);
  line("euclidean", c.euclidean);
  line("transitive", c.transitive);
  line("tolerance", c.tolerance);
  line("equivalence", c.equivalence);
  return exit_pass;
}

inline int run_verify(const std::string& path, const VerifyMode& mode, std::ostream& out) {
  const ApproximationSpace sp = load(path, [](const RmlFile& f) { return to_space(f); });
  VerificationReport rep;
  rep.header.push_back("verify " + path);
  try {
    rep.append(verify_approx_props(sp, mode));
    rep.append(verify_equivalence_props(sp, mode));
    rep.append(verify_tolerance_chain(sp, mode));
  } catch (const SingletonViolation& e) {
    rep.render(out, 5);
    out << "singleton violation: " << e.what() << "\nresult: FAIL\n";
    return exit_fail;
  }
  rep.render(out, 5);
  out << (rep.passed() ? "result: PASS\n" : "result: FAIL\n");
  return rep.passed() ? exit_pass : exit_fail;
}

struct EnumerateOptions {
  std::size_t limit = 0;
  bool canonical = false;
  bool oracle_check = false;
  std::string out_dir;
};

inline int run_enumerate(const std::string& path, const EnumerateOptions& o, std::ostream& out) {
  SearchConfig cfg = load(path, [](const RmlFile& f) { return make_search_config(to_poset(f)); });
  cfg.limit = o.limit;
  cfg.canonical_only = o.canonical;
  if (o.oracle_check && cfg.poset.size() > cfg.oracle_limit) {
    throw FileError(path + ": --oracle-check refuses posets with more than " + std::to_string(cfg.oracle_limit) +
                    " elements (this one has " + std::to_string(cfg.poset.size()) + ")");
  }
  const bool to_stdout = o.out_dir == "-";
  if (!to_stdout) std::filesystem::create_directories(o.out_dir);

  std::set<OpTable> found;
  std::size_t index = 0;
  for_each_structure(cfg, [&](const RmlStructure& s) {
    ++index;
    found.insert(s.otimes_table());
    if (to_stdout) {
      out << "# structure " << index << '\n' << serialize_rml(s);
    } else {
      std::ostringstream name;
      name << "structure-" << std::setw(4) << std::setfill('0') << index << ".rml";
      const auto file = std::filesystem::path(o.out_dir) / name.str();
      std::ofstream f(file, std::ios::binary);
      if (!f) throw FileError(file.string() + ": cannot write file");
      f << serialize_rml(s);
    }
    return true;
  });
  out << "count: " << index << '\n';
  if (!o.oracle_check) return exit_pass;

  SearchConfig ocfg = cfg;
  ocfg.limit = 0;
  std::set<OpTable> expected;
  for (const auto& s : naive_enumerate(ocfg)) expected.insert(s.otimes_table());
  // With a limit only containment can be checked.
  bool ok = o.limit == 0 ? expected == found : std::includes(expected.begin(), expected.end(), found.begin(), found.end());
  out << "oracle: " << expected.size() << " structures, " << (ok ? "match" : "MISMATCH") << '\n';
  return ok ? exit_pass : exit_fail;
}

/**
 * Entry point. Exit codes: 0 all checks pass, 1 a verification failed,
 * 2 unreadable or invalid input (including bad arguments).
 */
inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Residuated multilattices and fuzzy rough approximations", "rml"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string file, fset, op = "both", fset_name, mode_name = "exhaustive";
  VerifyMode mode;
  EnumerateOptions eo;

  auto* check = app.add_subcommand("check", "verify a structure and every property suite");
  check->add_option("structure", file, "structure file")->required();

  auto* residuum = app.add_subcommand("residuum", "derive the residuum of an otimes table");
  residuum->add_option("structure", file, "structure file")->required();

  auto* approx = app.add_subcommand("approx", "print lower and/or upper approximations of a fuzzy set");
  approx->add_option("space", file, "space file")->required();
  approx->add_option("fuzzyset", fset, "fuzzy-set file")->required();
  approx->add_option("--op", op, "lower, upper or both")->check(CLI::IsMember({"lower", "upper", "both"}));
  approx->add_option("--name", fset_name, "fuzzy set to use when the file holds several");

  auto* classify_cmd = app.add_subcommand("classify", "report relation properties with witnesses");
  classify_cmd->add_option("space", file, "space file")->required();

  auto* verify = app.add_subcommand("verify", "run the approximation property suites");
  verify->add_option("space", file, "space file")->required();
  verify->add_option("--mode", mode_name, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify->add_option("--samples", mode.samples, "fuzzy sets to sample")->check(CLI::PositiveNumber);
  verify->add_option("--seed", mode.seed, "sampling seed");
  verify->add_option("--budget", mode.budget, "largest exhaustive run before falling back to sampling");

  auto* enumerate = app.add_subcommand("enumerate", "list every structure on a poset");
  enumerate->add_option("poset", file, "poset file")->required();
  enumerate->add_option("--limit", eo.limit, "stop after N structures (0 = all)");
  enumerate->add_flag("--canonical", eo.canonical, "one structure per automorphism orbit");
  enumerate->add_flag("--oracle-check", eo.oracle_check, "compare against brute force");
  enumerate->add_option("--out", eo.out_dir, "output directory, or - for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_input;
  }

  try {
    if (*check) return run_check(file, out);
    if (*residuum) return run_residuum(file, out);
    if (*approx) return run_approx(file, fset, op, fset_name, out);
    if (*classify_cmd) return run_classify(file, out);
    if (*verify) {
      mode.kind = mode_name == "sampled" ? VerifyMode::Kind::sampled : VerifyMode::Kind::exhaustive;
      return run_verify(file, mode, out);
    }
    if (*enumerate) return run_enumerate(file, eo, out);
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const InputError& e) {
    err << "error: " << file << ": " << e.what() << '\n';
    return exit_input;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}

}  // namespace rml::cli

#endif  // RML_TOOLS_RML_CLI_HPP
