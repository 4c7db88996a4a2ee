// Copyright 2026 The relbound authors.
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

#ifndef RELBOUND_CORE_ERRORS_HPP_
#define RELBOUND_CORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace relbound {

// Coarse error classes; the C API maps these onto status codes and the CLI
// onto exit codes.
enum class ErrorCode {
  kParse,
  kValidation,
  kSize,
  kIndex,
  kDomain,
  kNonConvergence,
  kRhoCap,
  kBudget,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::kParse, w) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& w)
      : Error(ErrorCode::kValidation, w) {}
};

// A transition row whose entries do not sum to exactly 1.
struct NonStochasticRow : ValidationError {
  NonStochasticRow(int row, const std::string& sum)
      : ValidationError("row " + std::to_string(row) + " sums to " + sum +
                        ", expected 1"),
        row(row) {}
  int row;
};

struct NegativeEntry : ValidationError {
  NegativeEntry(int row, int col)
      : ValidationError("negative entry at row " + std::to_string(row) +
                        ", column " + std::to_string(col)),
        row(row),
        col(col) {}
  int row, col;
};

struct EmptyAlphabet : ValidationError {
  explicit EmptyAlphabet(const std::string& w) : ValidationError(w) {}
};

struct InvalidEpsilon : ValidationError {
  explicit InvalidEpsilon(const std::string& w) : ValidationError(w) {}
};

struct AlphabetMismatch : ValidationError {
  explicit AlphabetMismatch(const std::string& w) : ValidationError(w) {}
};

// A matrix game that violates the solver's preconditions (empty, or a column
// the maximizer can never score against).
struct DegenerateMatrix : ValidationError {
  explicit DegenerateMatrix(const std::string& w) : ValidationError(w) {}
};

struct SizeOverflow : Error {
  explicit SizeOverflow(const std::string& w) : Error(ErrorCode::kSize, w) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& w)
      : Error(ErrorCode::kIndex, w) {}
};

// Quantity undefined for this channel (e.g. critical rate at zero capacity).
struct DegenerateChannel : Error {
  explicit DegenerateChannel(const std::string& w)
      : Error(ErrorCode::kDomain, w) {}
};

struct NonConvergence : Error {
  explicit NonConvergence(const std::string& w)
      : Error(ErrorCode::kNonConvergence, w) {}
};

// The expanding bracket for sup over rho hit the configured cap while the
// objective was still increasing.
struct RhoCapExceeded : Error {
  explicit RhoCapExceeded(const std::string& w)
      : Error(ErrorCode::kRhoCap, w) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& w)
      : Error(ErrorCode::kBudget, w) {}
};

}  // namespace relbound

#endif  // RELBOUND_CORE_ERRORS_HPP_
