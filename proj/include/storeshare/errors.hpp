// Copyright 2026 The storeshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STORESHARE_ERRORS_HPP
#define STORESHARE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace storeshare {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline std::string join_issues(const std::string& head,
                               const std::vector<std::string>& issues) {
  std::string out = head;
  for (const auto& issue : issues) out += "\n  - " + issue;
  return out;
}
}  // namespace detail

// Carries every violated invariant, not just the first one.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : ValidationError(detail::join_issues("invalid configuration:", issues),
                        issues) {}
  ValidationError(std::string what, std::vector<std::string> issues)
      : Error(std::move(what)), issues_(std::move(issues)) {}
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

// A capital cost exceeds the arbitrage price: storage never pays for itself.
class ViabilityError : public ValidationError {
 public:
  explicit ViabilityError(std::vector<std::string> issues)
      : ValidationError(
            detail::join_issues("storage is not viable:", issues), issues) {}
};

class EmptyDistribution : public Error {
 public:
  EmptyDistribution() : Error("empirical distribution has no samples") {}
};

class EmptyCoalition : public Error {
 public:
  EmptyCoalition() : Error("coalition is empty") {}
};

class EmptyConditioningEvent : public Error {
 public:
  EmptyConditioningEvent()
      : Error("no sample satisfies the conditioning event") {}
};

class DegenerateVariance : public Error {
 public:
  explicit DegenerateVariance(std::size_t column)
      : Error("consumer column " + std::to_string(column) +
              " has zero variance") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroTotalExpectedCost : public Error {
 public:
  ZeroTotalExpectedCost()
      : Error("expected cost shares sum to zero; proportional split undefined") {}
};

class EmptyHistory : public Error {
 public:
  EmptyHistory() : Error("allocation history is empty") {}
};

class TooManyPlayers : public Error {
 public:
  TooManyPlayers(int n, int limit)
      : Error("game has " + std::to_string(n) + " players, limit is " +
              std::to_string(limit)) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyAfterFilter : public Error {
 public:
  EmptyAfterFilter() : Error("no days left after calendar filtering") {}
};

class NonPSDCorrelation : public Error {
 public:
  using Error::Error;
};

class MissingSection : public Error {
 public:
  explicit MissingSection(const std::string& name)
      : Error("report has no '" + name + "' section") {}
};

}  // namespace storeshare

#endif  // STORESHARE_ERRORS_HPP
