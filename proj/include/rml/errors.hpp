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

#ifndef RML_ERRORS_HPP
#define RML_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rml {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: unknown identifiers, malformed objects, violated invariants.
class InputError : public Error {
public:
  using Error::Error;
};

class UnknownElement : public InputError {
public:
  explicit UnknownElement(const std::string& name) : InputError("unknown identifier '" + name + "'") {}
};

/// Text that does not follow the .rml grammar; `line()` is 1-based.
class ParseError : public InputError {
public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// An operation was requested on an object of the wrong shape (e.g. lattice-only suites).
class NotApplicable : public Error {
public:
  using Error::Error;
};

/// A multiinfimum/multisupremum the approximators rely on was not a singleton.
class SingletonViolation : public Error {
public:
  SingletonViolation(std::string object, std::vector<std::string> antichain, const std::string& what)
      : Error(what), object_(std::move(object)), antichain_(std::move(antichain)) {}

  const std::string& object() const { return object_; }
  const std::vector<std::string>& antichain() const { return antichain_; }

private:
  std::string object_;
  std::vector<std::string> antichain_;
};

}  // namespace rml

#endif  // RML_ERRORS_HPP
