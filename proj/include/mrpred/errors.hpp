// Copyright 2026 The mrpred Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MRPRED_ERRORS_HPP_
#define MRPRED_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mrpred {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors caused by bad user input (malformed files, unknown names). The CLI
// maps these to exit code 1; every other Error maps to 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class LexError : public Error {
 public:
  LexError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class UnbalancedDelimiters : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t row, std::string column)
      : ValidationError("row " + std::to_string(row) + ", column '" + column +
                        "': " + what),
        row_(row),
        column_(std::move(column)) {}
  std::size_t row() const { return row_; }
  const std::string& column() const { return column_; }

 private:
  std::size_t row_;
  std::string column_;
};

class ValueError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class JoinError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownFeature : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UsageError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DegenerateData : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class FoldError : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class SingleClass : public Error {
 public:
  using Error::Error;
};

class MissingCell : public Error {
 public:
  using Error::Error;
};

}  // namespace mrpred

#endif  // MRPRED_ERRORS_HPP_
