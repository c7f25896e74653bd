// Copyright 2026 The zetacorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZETACORR_ERROR_HPP_
#define ZETACORR_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace zetacorr {

/// Broad failure classes. The command-line tool maps these onto its exit
/// codes, so new kinds must be added there as well.
enum class ErrorKind {
  kInvalidArgument,
  kOutOfRange,
  kDomain,
  kResource,
  kBudget,
  kData,
  kIo,
};

std::string_view ToString(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::kInvalidArgument, what) {}
};

class OutOfRange : public Error {
 public:
  explicit OutOfRange(const std::string& what)
      : Error(ErrorKind::kOutOfRange, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::kDomain, what) {}
};

/// A computation needs more memory/terms than the configured caps allow.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, double required)
      : Error(ErrorKind::kResource, what), required_(required) {}

  /// The limit (sieve size, number of terms) that would have sufficed.
  double required() const noexcept { return required_; }

 private:
  double required_;
};

class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what)
      : Error(ErrorKind::kBudget, what) {}
};

/// Malformed input data; `line` is 1-based, 0 when not line-oriented.
class DataError : public Error {
 public:
  DataError(const std::string& what, std::size_t line = 0)
      : Error(ErrorKind::kData, what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

}  // namespace zetacorr

#endif  // ZETACORR_ERROR_HPP_
