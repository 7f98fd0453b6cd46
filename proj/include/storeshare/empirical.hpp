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

#ifndef STORESHARE_EMPIRICAL_HPP
#define STORESHARE_EMPIRICAL_HPP

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "storeshare/coalition.hpp"
#include "storeshare/fixed.hpp"

namespace storeshare {

using Date = std::chrono::year_month_day;

/// Day x consumer matrix of peak-window consumption in kWh.
using PeakMatrix = Matrix<Fixed>;

/// Daily peak-period consumption per consumer. Rectangular and nonnegative;
/// days with missing consumers are dropped before a series is built.
struct DailyPeakSeries {
  std::vector<Date> days;
  std::vector<std::string> consumers;
  PeakMatrix values;

  Eigen::Index day_count() const { return values.rows(); }
  int consumer_count() const { return static_cast<int>(values.cols()); }

  /// Throws DimensionMismatch / std::invalid_argument on a malformed series.
  void validate() const;
};

/// Step CDF of a sample under the uniform empirical measure. Repeated values
/// are kept, so ties carry their full mass.
class EmpiricalDistribution {
 public:
  /// Throws EmptyDistribution for an empty sample.
  explicit EmpiricalDistribution(std::vector<Fixed> samples);

  std::size_t size() const { return sorted_.size(); }
  std::span<const Fixed> support() const { return sorted_; }
  Fixed min() const { return sorted_.front(); }
  Fixed max() const { return sorted_.back(); }

  Rational mean() const;

  std::size_t count_at_most(Fixed c) const;
  std::size_t count_at_least(Fixed c) const;

  /// F(c) = #{x <= c} / n.
  Rational cdf(Fixed c) const;
  Rational cdf(const Rational& c) const;

  /// Generalized inverse: the smallest support value c with F(c) >= gamma.
  /// gamma == 0 maps to 0 (no storage). Requires gamma in [0, 1].
  Fixed quantile(const Rational& gamma) const;

  /// P(x == c).
  Rational jump_at(Fixed c) const;

  /// E[x | x >= c]. Throws EmptyConditioningEvent when no sample is >= c.
  Rational tail_mean(Fixed c) const;

  /// E[(x - c)^+].
  Rational expected_excess(const Rational& c) const;

 private:
  // Sum of the raw values of sorted_[k..n).
  std::int64_t suffix_raw_sum(std::size_t k) const {
    return prefix_.back() - prefix_[k];
  }

  std::vector<Fixed> sorted_;
  std::vector<std::int64_t> prefix_;
};

/// Day-aligned consumption of a set of consumers. Column i is consumer i;
/// keeping rows aligned is what makes joint events such as
/// {x_N >= C} well defined.
class JointSample {
 public:
  explicit JointSample(PeakMatrix values);
  explicit JointSample(const DailyPeakSeries& series)
      : JointSample(series.values) {}

  int consumers() const { return static_cast<int>(values_.cols()); }
  Eigen::Index days() const { return values_.rows(); }
  const PeakMatrix& values() const { return values_; }

  /// Columns of `s` only, in member order.
  JointSample restrict(Coalition s) const;

  Fixed aggregate_on(Eigen::Index day, Coalition s) const;
  std::vector<Fixed> aggregate_values(Coalition s) const;
  EmpiricalDistribution marginal(int consumer) const;

 private:
  PeakMatrix values_;
};

Rational cdf(const EmpiricalDistribution& d, Fixed c);
Fixed quantile(const EmpiricalDistribution& d, const Rational& gamma);

/// Empirical law of the day-wise sum over the members of `s`.
EmpiricalDistribution aggregate(const JointSample& j, Coalition s);

/// E[x_target | x_over >= threshold], with x_target and x_over day-wise
/// member sums. Throws EmptyConditioningEvent when no day qualifies.
Rational conditional_mean_given_aggregate(const JointSample& j,
                                          Coalition target, Fixed threshold,
                                          Coalition over);

/// E[x_i | x_N >= threshold] with N the grand coalition of `j`.
Rational conditional_mean_given_aggregate(const JointSample& j, int consumer,
                                          Fixed threshold);

/// Pearson correlation coefficients between consumer columns.
Eigen::MatrixXd correlation_matrix(const PeakMatrix& values);
inline Eigen::MatrixXd correlation_matrix(const DailyPeakSeries& series) {
  return correlation_matrix(series.values);
}

}  // namespace storeshare

#endif  // STORESHARE_EMPIRICAL_HPP
