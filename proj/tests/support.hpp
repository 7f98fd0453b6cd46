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

#ifndef STORESHARE_TESTS_SUPPORT_HPP
#define STORESHARE_TESTS_SUPPORT_HPP

#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "storeshare/empirical.hpp"
#include "storeshare/fixed.hpp"
#include "storeshare/tariff.hpp"

namespace storeshare::testing {

inline Fixed fx(const char* text) { return Fixed::parse(text); }

inline Rational q(const std::string& text) { return Rational(text); }

inline Tariff default_tariff() { return Tariff(55, 20, 15); }

/// Brute-force reference values, produced by tests/oracle/oracle.py.
inline const nlohmann::json& oracle() {
  static const nlohmann::json frozen = [] {
    std::ifstream in(STORESHARE_ORACLE_JSON);
    return nlohmann::json::parse(in);
  }();
  return frozen;
}

inline Rational oracle_q(const nlohmann::json& v) { return q(v.get<std::string>()); }

inline PeakMatrix matrix(std::initializer_list<std::initializer_list<int>> rows) {
  PeakMatrix m(static_cast<Eigen::Index>(rows.size()),
               static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (int v : row) m(r, c++) = Fixed(v);
    ++r;
  }
  return m;
}

/// Every combination of the per-consumer supports, one row each: the
/// empirical measure of independent consumers.
inline PeakMatrix independent(const std::vector<std::vector<int>>& supports) {
  std::vector<std::vector<int>> rows{{}};
  for (const auto& s : supports) {
    std::vector<std::vector<int>> next;
    for (const auto& r : rows)
      for (int v : s) {
        auto e = r;
        e.push_back(v);
        next.push_back(e);
      }
    rows = next;
  }
  PeakMatrix m(static_cast<Eigen::Index>(rows.size()),
               static_cast<Eigen::Index>(supports.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < supports.size(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Fixed(rows[r][c]);
  return m;
}

/// Uniform draw on the 1e-4 grid in [0, hi].
inline Fixed random_fixed(std::mt19937_64& rng, std::int64_t hi_units) {
  std::uniform_int_distribution<std::int64_t> d(0, hi_units * Fixed::kScale);
  return Fixed::from_raw(d(rng));
}

inline PeakMatrix random_matrix(std::mt19937_64& rng, Eigen::Index days, Eigen::Index n,
                                std::int64_t hi_units = 40) {
  PeakMatrix m(days, n);
  for (Eigen::Index r = 0; r < days; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = random_fixed(rng, hi_units);
  return m;
}

}  // namespace storeshare::testing

#endif  // STORESHARE_TESTS_SUPPORT_HPP
