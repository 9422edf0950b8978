/*
 * Copyright (C) 2026 The flipcheck Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flipcheck {

/// Base class for every error raised by the library. The CLI maps the
/// subclasses below onto exit codes, so new error kinds should derive from
/// one of the two category bases (ConfigError or BudgetError) when they fit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad files, bad flags, inconsistent parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The requested instance is too large (or infeasible) for the desk-scale
/// machinery.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ConfigError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ConfigError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DagViolation : public ParseError {
 public:
  using ParseError::ParseError;
};

class BadArity : public ParseError {
 public:
  using ParseError::ParseError;
};

class ArityMismatch : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class IndexOutOfRange : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class ShapeMismatch : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class NotPrime : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class NotIrreducible : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class SingularTraceForm : public Error {
 public:
  using Error::Error;
};

class MalformedEncoding : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class InvalidDesign : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class StaleCertificate : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class SizeLimit : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

class BudgetExceeded : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

class TermBudgetExceeded : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

class ConstructionFailed : public BudgetError {
 public:
  ConstructionFailed(std::size_t rows_achieved, const std::string& what)
      : BudgetError(what), rows_achieved_(rows_achieved) {}
  std::size_t rows_achieved() const { return rows_achieved_; }

 private:
  std::size_t rows_achieved_;
};

class PoolExhausted : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

/// Raised by the counterexample decoder when no query of the certificate
/// fails for the circuit, i.e. the certificate does not obstruct it.
class NoFailingQuery : public Error {
 public:
  using Error::Error;
};

/// Raised when a circuit of the class computes the target, so no obstruction
/// can exist.
class TargetComputable : public Error {
 public:
  TargetComputable(std::string circuit_text, const std::string& what)
      : Error(what), circuit_text_(std::move(circuit_text)) {}
  const std::string& circuit_text() const { return circuit_text_; }

 private:
  std::string circuit_text_;
};

}  // namespace flipcheck
