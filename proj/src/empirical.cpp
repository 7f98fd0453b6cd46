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

#include "storeshare/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "storeshare/errors.hpp"

namespace storeshare {

void DailyPeakSeries::validate() const {
  if (static_cast<std::size_t>(values.rows()) != days.size()) {
    throw DimensionMismatch("series has " + std::to_string(days.size()) +
                            " dates but " + std::to_string(values.rows()) +
                            " rows");
  }
  if (static_cast<std::size_t>(values.cols()) != consumers.size()) {
    throw DimensionMismatch("series has " + std::to_string(consumers.size()) +
                            " consumer ids but " +
                            std::to_string(values.cols()) + " columns");
  }
  for (Eigen::Index c = 0; c < values.cols(); ++c) {
    for (Eigen::Index r = 0; r < values.rows(); ++r) {
      if (values(r, c) < Fixed(0)) {
        throw std::invalid_argument("negative peak consumption for consumer " +
                                    consumers[static_cast<std::size_t>(c)]);
      }
    }
  }
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<Fixed> samples)
    : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw EmptyDistribution();
  std::sort(sorted_.begin(), sorted_.end());
  prefix_.resize(sorted_.size() + 1, 0);
  for (std::size_t k = 0; k < sorted_.size(); ++k) {
    prefix_[k + 1] = prefix_[k] + sorted_[k].raw();
  }
}

Rational EmpiricalDistribution::mean() const {
  return Rational(prefix_.back()) /
         Rational(static_cast<std::int64_t>(size()) * Fixed::kScale);
}

std::size_t EmpiricalDistribution::count_at_most(Fixed c) const {
  return static_cast<std::size_t>(
      std::upper_bound(sorted_.begin(), sorted_.end(), c) - sorted_.begin());
}

std::size_t EmpiricalDistribution::count_at_least(Fixed c) const {
  return static_cast<std::size_t>(
      sorted_.end() - std::lower_bound(sorted_.begin(), sorted_.end(), c));
}

Rational EmpiricalDistribution::cdf(Fixed c) const {
  return Rational(static_cast<std::int64_t>(count_at_most(c)),
                  static_cast<std::int64_t>(size()));
}

Rational EmpiricalDistribution::cdf(const Rational& c) const {
  // Samples sit on the fixed grid, so x <= c iff x <= floor_grid(c).
  return cdf(floor_to_fixed(c));
}

Fixed EmpiricalDistribution::quantile(const Rational& gamma) const {
  if (gamma < 0 || gamma > 1) {
    throw std::invalid_argument("quantile level must lie in [0, 1]");
  }
  if (gamma == 0) return Fixed(0);
  using boost::multiprecision::mpz_int;
  const mpz_int num =
      boost::multiprecision::numerator(gamma) * static_cast<std::int64_t>(size());
  const mpz_int den = boost::multiprecision::denominator(gamma);
  mpz_int k = num / den;
  if (k * den != num) k += 1;  // ceil(gamma * n) >= 1
  return sorted_[k.convert_to<std::size_t>() - 1];
}

Rational EmpiricalDistribution::jump_at(Fixed c) const {
  const auto [lo, hi] = std::equal_range(sorted_.begin(), sorted_.end(), c);
  return Rational(static_cast<std::int64_t>(hi - lo),
                  static_cast<std::int64_t>(size()));
}

Rational EmpiricalDistribution::tail_mean(Fixed c) const {
  const std::size_t count = count_at_least(c);
  if (count == 0) throw EmptyConditioningEvent();
  return Rational(suffix_raw_sum(size() - count)) /
         Rational(static_cast<std::int64_t>(count) * Fixed::kScale);
}

Rational EmpiricalDistribution::expected_excess(const Rational& c) const {
  const Fixed grid = floor_to_fixed(c);
  const std::size_t below = count_at_most(grid);
  const std::size_t above = size() - below;
  if (above == 0) return Rational(0);
  const Rational sum_above = Rational(suffix_raw_sum(below), Fixed::kScale);
  return (sum_above - Rational(static_cast<std::int64_t>(above)) * c) /
         Rational(static_cast<std::int64_t>(size()));
}

JointSample::JointSample(PeakMatrix values) : values_(std::move(values)) {
  for (Eigen::Index c = 0; c < values_.cols(); ++c) {
    for (Eigen::Index r = 0; r < values_.rows(); ++r) {
      if (values_(r, c) < Fixed(0)) {
        throw std::invalid_argument("joint sample holds a negative value");
      }
    }
  }
}

JointSample JointSample::restrict(Coalition s) const {
  require_coalition(s, consumers());
  const auto members = s.members();
  PeakMatrix out(values_.rows(), static_cast<Eigen::Index>(members.size()));
  for (std::size_t k = 0; k < members.size(); ++k) {
    out.col(static_cast<Eigen::Index>(k)) = values_.col(members[k]);
  }
  return JointSample(std::move(out));
}

Fixed JointSample::aggregate_on(Eigen::Index day, Coalition s) const {
  Fixed total;
  for (int i : s.members()) total += values_(day, i);
  return total;
}

std::vector<Fixed> JointSample::aggregate_values(Coalition s) const {
  require_coalition(s, consumers());
  std::vector<Fixed> out(static_cast<std::size_t>(days()));
  for (int i : s.members()) {
    for (Eigen::Index r = 0; r < days(); ++r) {
      out[static_cast<std::size_t>(r)] += values_(r, i);
    }
  }
  return out;
}

EmpiricalDistribution JointSample::marginal(int consumer) const {
  return EmpiricalDistribution(aggregate_values(Coalition::singleton(consumer)));
}

Rational cdf(const EmpiricalDistribution& d, Fixed c) { return d.cdf(c); }

Fixed quantile(const EmpiricalDistribution& d, const Rational& gamma) {
  return d.quantile(gamma);
}

EmpiricalDistribution aggregate(const JointSample& j, Coalition s) {
  return EmpiricalDistribution(j.aggregate_values(s));
}

Rational conditional_mean_given_aggregate(const JointSample& j,
                                          Coalition target, Fixed threshold,
                                          Coalition over) {
  require_coalition(target, j.consumers());
  const std::vector<Fixed> conditioning = j.aggregate_values(over);
  const std::vector<Fixed> values = j.aggregate_values(target);
  std::int64_t sum = 0;
  std::int64_t count = 0;
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (conditioning[r] >= threshold) {
      sum += values[r].raw();
      ++count;
    }
  }
  if (count == 0) throw EmptyConditioningEvent();
  return Rational(sum) / Rational(count * Fixed::kScale);
}

Rational conditional_mean_given_aggregate(const JointSample& j, int consumer,
                                          Fixed threshold) {
  return conditional_mean_given_aggregate(j, Coalition::singleton(consumer),
                                          threshold,
                                          Coalition::grand(j.consumers()));
}

Eigen::MatrixXd correlation_matrix(const PeakMatrix& values) {
  if (values.rows() < 2) {
    throw DimensionMismatch("correlation needs at least two days");
  }
  for (Eigen::Index c = 0; c < values.cols(); ++c) {
    if (values.col(c).minCoeff() == values.col(c).maxCoeff()) {
      throw DegenerateVariance(static_cast<std::size_t>(c));
    }
  }
  const Eigen::MatrixXd x = values.unaryExpr([](Fixed v) { return v.to_double(); });
  const Eigen::MatrixXd centered = x.rowwise() - x.colwise().mean();
  const Eigen::MatrixXd cov = centered.transpose() * centered;
  const Eigen::VectorXd inv_sd = cov.diagonal().cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd corr = inv_sd.asDiagonal() * cov * inv_sd.asDiagonal();
  corr = corr.cwiseMax(-1.0).cwiseMin(1.0);
  corr.diagonal().setOnes();
  return corr;
}

}  // namespace storeshare
