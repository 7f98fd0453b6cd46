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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>

#include <Eigen/Eigenvalues>

#include "storeshare/data.hpp"
#include "storeshare/errors.hpp"

namespace storeshare {

Eigen::MatrixXd household_correlation_targets() {
  Eigen::MatrixXd c(5, 5);
  // clang-format off
  c << 1.000000, 0.363586, 0.297733,  0.292073,  0.486665,
       0.363586, 1.000000, 0.132320,  0.453056,  0.157210,
       0.297733, 0.132320, 1.000000,  0.085868,  0.365212,
       0.292073, 0.453056, 0.085868,  1.000000, -0.056696,
       0.486665, 0.157210, 0.365212, -0.056696,  1.000000;
  // clang-format on
  return c;
}

SynthSpec default_synth_spec() {
  SynthSpec spec;
  spec.means = {23.0, 14.5, 15.5, 13.5, 30.5};
  spec.log_sigmas = {0.30, 0.35, 0.45, 0.35, 0.30};
  spec.correlation = household_correlation_targets();
  return spec;
}

namespace {

constexpr double kUnitTol = 1e-12;

// Latent normal correlation giving lognormal correlation `rho`.
double latent_correlation(double rho, double s1, double s2) {
  const double scale = std::sqrt(std::expm1(s1 * s1) * std::expm1(s2 * s2));
  const double arg = 1.0 + rho * scale;
  if (!(arg > 0)) {
    throw NonPSDCorrelation("correlation " + std::to_string(rho) +
                            " is unreachable with lognormal marginals");
  }
  const double z = std::log(arg) / (s1 * s2);
  if (z > 1.0 + 1e-9 || z < -1.0 - 1e-9) {
    throw NonPSDCorrelation("correlation " + std::to_string(rho) +
                            " is unreachable with lognormal marginals");
  }
  return std::clamp(z, -1.0, 1.0);
}

void require_psd(const Eigen::MatrixXd& m, const char* what) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9) {
    throw NonPSDCorrelation(std::string(what) + " is not positive semidefinite");
  }
}

int find_root(std::vector<int>& parent, int i) {
  while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)];
  return i;
}

}  // namespace

DailyPeakSeries generate_synthetic(const SynthSpec& spec,
                                   const CalendarFilter& calendar) {
  const int n = spec.consumers();
  const Eigen::MatrixXd& target = spec.correlation;
  if (n == 0 || static_cast<int>(spec.log_sigmas.size()) != n ||
      target.rows() != n || target.cols() != n) {
    throw DimensionMismatch("synthetic spec sizes disagree");
  }
  for (int i = 0; i < n; ++i) {
    if (!(spec.means[static_cast<std::size_t>(i)] > 0) ||
        !(spec.log_sigmas[static_cast<std::size_t>(i)] > 0)) {
      throw std::invalid_argument("synthetic means and log-sigmas must be positive");
    }
    if (std::abs(target(i, i) - 1.0) > kUnitTol) {
      throw NonPSDCorrelation("correlation diagonal must be 1");
    }
    for (int k = 0; k < n; ++k) {
      if (std::abs(target(i, k) - target(k, i)) > kUnitTol ||
          std::abs(target(i, k)) > 1.0 + kUnitTol) {
        throw NonPSDCorrelation("correlation matrix must be symmetric with entries in [-1, 1]");
      }
    }
  }
  require_psd(target, "target correlation");

  // Consumers with correlation 1 share one latent driver (comonotone).
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      if (target(i, k) >= 1.0 - kUnitTol) {
        parent[static_cast<std::size_t>(find_root(parent, k))] = find_root(parent, i);
      }
    }
  }
  std::vector<int> driver(static_cast<std::size_t>(n));
  std::vector<int> representative;
  for (int i = 0; i < n; ++i) {
    const int root = find_root(parent, i);
    if (root == i) {
      driver[static_cast<std::size_t>(i)] = static_cast<int>(representative.size());
      representative.push_back(i);
    }
  }
  for (int i = 0; i < n; ++i) {
    driver[static_cast<std::size_t>(i)] =
        driver[static_cast<std::size_t>(find_root(parent, i))];
  }

  const auto m = static_cast<Eigen::Index>(representative.size());
  Eigen::MatrixXd latent = Eigen::MatrixXd::Identity(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = a + 1; b < m; ++b) {
      const int i = representative[static_cast<std::size_t>(a)];
      const int k = representative[static_cast<std::size_t>(b)];
      latent(a, b) = latent(b, a) = latent_correlation(
          target(i, k), spec.log_sigmas[static_cast<std::size_t>(i)],
          spec.log_sigmas[static_cast<std::size_t>(k)]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(latent);
  if (es.eigenvalues().minCoeff() < -1e-9) {
    throw NonPSDCorrelation("latent normal correlation is not positive semidefinite");
  }
  const Eigen::MatrixXd factor =
      es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();

  std::vector<double> log_location(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < log_location.size(); ++i) {
    log_location[i] = std::log(spec.means[i]) - 0.5 * spec.log_sigmas[i] * spec.log_sigmas[i];
  }

  DailyPeakSeries out;
  out.consumers.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.consumers.push_back("h" + std::to_string(i + 1));
  out.values.resize(spec.days, n);
  out.days.reserve(static_cast<std::size_t>(spec.days));

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal;
  std::chrono::sys_days day{spec.start};
  Eigen::VectorXd shocks(m);
  for (int r = 0; r < spec.days; ++r) {
    while (!calendar.includes(Date{day})) day += std::chrono::days{1};
    out.days.emplace_back(day);
    day += std::chrono::days{1};
    for (Eigen::Index a = 0; a < m; ++a) shocks(a) = normal(rng);
    const Eigen::VectorXd z = factor * shocks;
    for (int i = 0; i < n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      out.values(r, i) = Fixed::from_double(
          std::exp(log_location[u] + spec.log_sigmas[u] * z(driver[u])));
    }
  }
  return out;
}

void write_intervals_csv(std::ostream& out, const DailyPeakSeries& series,
                         const PeakWindow& window) {
  const int peak_hours = window.end_hour - window.start_hour;
  out << "timestamp,consumer_id,kwh\n";
  for (Eigen::Index r = 0; r < series.day_count(); ++r) {
    const std::string date = format_date(series.days[static_cast<std::size_t>(r)]);
    for (int c = 0; c < series.consumer_count(); ++c) {
      const std::int64_t total = series.values(r, c).raw();
      const std::int64_t per_hour = total / peak_hours;
      const std::int64_t remainder = total - per_hour * peak_hours;
      const Fixed off_hour = Fixed::from_raw(per_hour / 2);
      for (int h = 0; h < 24; ++h) {
        Fixed kwh = off_hour;
        if (h >= window.start_hour && h < window.end_hour) {
          kwh = Fixed::from_raw(per_hour + (h == window.end_hour - 1 ? remainder : 0));
        }
        char stamp[24];
        std::snprintf(stamp, sizeof stamp, "%sT%02d:00:00", date.c_str(), h);
        out << stamp << ',' << series.consumers[static_cast<std::size_t>(c)] << ','
            << kwh.to_string() << '\n';
      }
    }
  }
}

}  // namespace storeshare
