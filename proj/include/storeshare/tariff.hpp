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

#ifndef STORESHARE_TARIFF_HPP
#define STORESHARE_TARIFF_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "storeshare/errors.hpp"
#include "storeshare/fixed.hpp"

namespace storeshare {

/// Peak and off-peak energy prices in a form usable by the templated cost
/// functions.
template <typename Scalar>
struct PriceSet {
  Scalar peak;
  Scalar off_peak;

  Scalar arbitrage() const { return peak - off_peak; }
};

/// Two-period time-of-use tariff plus daily amortized storage capital costs.
///
/// Prices are cents per kWh; capital costs are cents per kWh of capacity per
/// day. A Tariff always satisfies peak > off-peak > 0, nonnegative capital
/// costs and capital cost <= arbitrage price; construction throws otherwise.
/// Immutable after construction.
class Tariff {
 public:
  /// `individual_capital` holds one capital cost per consumer for pooled
  /// pre-owned storage. Left empty, every consumer uses `shared_capital`.
  Tariff(Fixed peak, Fixed off_peak, Fixed shared_capital,
         std::vector<Fixed> individual_capital = {});

  Fixed peak_price() const { return peak_; }
  Fixed off_peak_price() const { return off_peak_; }
  Fixed shared_capital_cost() const { return shared_capital_; }
  Fixed individual_capital_cost(std::size_t consumer) const;
  bool has_individual_capital_costs() const { return !individual_.empty(); }
  const std::vector<Fixed>& individual_capital_costs() const {
    return individual_;
  }

  Fixed arbitrage_price() const { return peak_ - off_peak_; }

  /// (pi_delta - capital) / pi_delta. Throws ViabilityError when capital
  /// exceeds the arbitrage price.
  Rational arbitrage_constant(Fixed capital) const;
  Rational shared_arbitrage_constant() const {
    return arbitrage_constant(shared_capital_);
  }

  template <typename Scalar>
  PriceSet<Scalar> prices() const {
    return {static_cast<Scalar>(peak_), static_cast<Scalar>(off_peak_)};
  }

  /// Lists every violated invariant for the given parameters. The second
  /// list holds only viability failures.
  static void collect_violations(Fixed peak, Fixed off_peak,
                                 Fixed shared_capital,
                                 const std::vector<Fixed>& individual_capital,
                                 std::vector<std::string>& invalid,
                                 std::vector<std::string>& not_viable);

 private:
  Fixed peak_;
  Fixed off_peak_;
  Fixed shared_capital_;
  std::vector<Fixed> individual_;
};

inline Fixed arbitrage_price(const Tariff& t) { return t.arbitrage_price(); }

inline Rational arbitrage_constant(const Tariff& t, Fixed capital_cost) {
  return t.arbitrage_constant(capital_cost);
}

}  // namespace storeshare

#endif  // STORESHARE_TARIFF_HPP
