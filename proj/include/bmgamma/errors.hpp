// Copyright 2026 The bmgamma Authors
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

#ifndef BMGAMMA_ERRORS_HPP
#define BMGAMMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bmgamma {

// Exit status used by the command-line driver for each failure family.
enum class ErrorCode : int {
  kUsage = 1,
  kCertification = 2,
  kUnsupportedOrder = 3,
  kPrecision = 4,
  kDomain = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Argument outside the mathematical domain (log of a non-positive number,
/// division by zero).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::kDomain, what) {}
};

/// Caller broke an API contract (mismatched series orders, bad option values).
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorCode::kUsage, what) {}
};

/// Series with zero constant (or linear) coefficient where an inverse is needed.
class SingularError : public Error {
 public:
  explicit SingularError(const std::string& what) : Error(ErrorCode::kUsage, what) {}
};

/// A coefficient order past what the tabulated polynomials cover.
class UnsupportedOrderError : public Error {
 public:
  explicit UnsupportedOrderError(const std::string& what)
      : Error(ErrorCode::kUnsupportedOrder, what) {}
};

class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what) : Error(ErrorCode::kPrecision, what) {}
};

class CertificationError : public Error {
 public:
  explicit CertificationError(const std::string& what)
      : Error(ErrorCode::kCertification, what) {}
};

}  // namespace bmgamma

#endif  // BMGAMMA_ERRORS_HPP
