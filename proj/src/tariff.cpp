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

#include "storeshare/tariff.hpp"

#include <utility>

namespace storeshare {

void Tariff::collect_violations(Fixed peak, Fixed off_peak,
                                Fixed shared_capital,
                                const std::vector<Fixed>& individual_capital,
                                std::vector<std::string>& invalid,
                                std::vector<std::string>& not_viable) {
  if (off_peak < Fixed(0)) {
    invalid.push_back("off-peak price must be nonnegative (got " +
                      off_peak.to_string() + ")");
  }
  if (!(peak > off_peak)) {
    invalid.push_back("peak price " + peak.to_string() +
                      " must exceed off-peak price " + off_peak.to_string());
  }
  const Fixed margin = peak - off_peak;
  auto check_capital = [&](Fixed capital, const std::string& name) {
    if (capital < Fixed(0)) {
      invalid.push_back(name + " must be nonnegative (got " +
                        capital.to_string() + ")");
    } else if (peak > off_peak && capital > margin) {
      not_viable.push_back(name + " " + capital.to_string() +
                           " exceeds arbitrage price " + margin.to_string());
    }
  };
  check_capital(shared_capital, "shared capital cost");
  for (std::size_t i = 0; i < individual_capital.size(); ++i) {
    check_capital(individual_capital[i],
                  "capital cost of consumer " + std::to_string(i));
  }
}

Tariff::Tariff(Fixed peak, Fixed off_peak, Fixed shared_capital,
               std::vector<Fixed> individual_capital)
    : peak_(peak),
      off_peak_(off_peak),
      shared_capital_(shared_capital),
      individual_(std::move(individual_capital)) {
  std::vector<std::string> invalid;
  std::vector<std::string> not_viable;
  collect_violations(peak_, off_peak_, shared_capital_, individual_, invalid,
                     not_viable);
  if (!invalid.empty()) {
    invalid.insert(invalid.end(), not_viable.begin(), not_viable.end());
    throw ValidationError(std::move(invalid));
  }
  if (!not_viable.empty()) throw ViabilityError(std::move(not_viable));
}

Fixed Tariff::individual_capital_cost(std::size_t consumer) const {
  if (individual_.empty()) return shared_capital_;
  if (consumer >= individual_.size()) {
    throw DimensionMismatch("no capital cost for consumer " +
                            std::to_string(consumer));
  }
  return individual_[consumer];
}

Rational Tariff::arbitrage_constant(Fixed capital) const {
  const Fixed margin = arbitrage_price();
  if (capital < Fixed(0)) {
    throw ValidationError({"capital cost must be nonnegative"});
  }
  if (capital > margin) {
    throw ViabilityError({"capital cost " + capital.to_string() +
                          " exceeds arbitrage price " + margin.to_string()});
  }
  return Rational(margin.raw() - capital.raw(), margin.raw());
}

}  // namespace storeshare
