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

#ifndef RML_REPORT_HPP
#define RML_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace rml {

enum class Status { pass, fail, not_applicable };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::not_applicable: return "N/A";
  }
  return "?";
}

/// One falsified instance of a check.
struct CheckFailure {
  std::vector<std::string> witness;
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::size_t cases = 0;
  std::vector<CheckFailure> failures;
  std::string note;
};

/**
 * Outcome of a family of checks. Every failing instance is recorded; a check
 * without failures passes unless it was marked not applicable.
 */
class VerificationReport {
public:
  std::vector<std::string> header;
  std::deque<CheckResult> checks;

  /// Starts a new check and returns it for recording.
  CheckResult& begin(std::string name) {
    checks.push_back(CheckResult{std::move(name), Status::pass, 0, {}, {}});
    return checks.back();
  }

  void not_applicable(std::string name, std::string why) {
    checks.push_back(CheckResult{std::move(name), Status::not_applicable, 0, {}, std::move(why)});
  }

  /// True when no check failed (not-applicable checks do not count as failures).
  bool passed() const {
    for (const auto& c : checks) {
      if (c.status == Status::fail) return false;
    }
    return true;
  }

  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failures.size();
    return n;
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  void append(const VerificationReport& other) {
    for (const auto& h : other.header) {
      if (std::find(header.begin(), header.end(), h) == header.end()) header.push_back(h);
    }
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  /// Renders at most `max_witnesses` failures per check (0 prints them all).
  void render(std::ostream& os, std::size_t max_witnesses = 0) const {
    for (const auto& h : header) os << "# " << h << '\n';
    for (const auto& c : checks) {
      os << rml::to_string(c.status) << "  " << c.name;
      if (c.status != Status::not_applicable) os << "  cases=" << c.cases;
      if (c.status == Status::fail) os << "  failures=" << c.failures.size();
      if (!c.note.empty()) os << "  (" << c.note << ")";
      os << '\n';
      std::size_t shown = 0;
      for (const auto& f : c.failures) {
        if (max_witnesses != 0 && shown == max_witnesses) {
          os << "    ... " << (c.failures.size() - shown) << " more\n";
          break;
        }
        os << "    witness=(";
        for (std::size_t i = 0; i < f.witness.size(); ++i) os << (i ? "," : "") << f.witness[i];
        os << ")";
        if (!f.lhs.empty() || !f.rhs.empty()) os << " lhs=" << f.lhs << " rhs=" << f.rhs;
        os << '\n';
        ++shown;
      }
    }
  }

  std::string to_string(std::size_t max_witnesses = 0) const {
    std::ostringstream os;
    render(os, max_witnesses);
    return os.str();
  }
};

/// Records one evaluated case of `check`; `ok == false` marks the check failed.
inline void record(CheckResult& check, bool ok, std::vector<std::string> witness = {}, std::string lhs = {},
                   std::string rhs = {}) {
  ++check.cases;
  if (!ok) {
    check.status = Status::fail;
    check.failures.push_back(CheckFailure{std::move(witness), std::move(lhs), std::move(rhs)});
  }
}

}  // namespace rml

#endif  // RML_REPORT_HPP
