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

#include <random>

#include "doctest.h"
#include "storeshare/errors.hpp"
#include "storeshare/fixed.hpp"
#include "storeshare/tariff.hpp"
#include "support.hpp"

using namespace storeshare;
using namespace storeshare::testing;

TEST_CASE("fixed point parse and format") {
  CHECK(Fixed::parse("12").raw() == 120000);
  CHECK(Fixed::parse("-3.5").raw() == -35000);
  CHECK(Fixed::parse("0.0001").raw() == 1);
  CHECK(Fixed::parse("7.25").to_string() == "7.2500");
  CHECK_THROWS_AS(Fixed::parse("1.00001"), std::invalid_argument);
  CHECK_THROWS_AS(Fixed::parse("1.2x"), std::invalid_argument);
  CHECK_THROWS_AS(Fixed::parse(""), std::invalid_argument);
  CHECK(Fixed::from_double(0.00005).raw() == 1);
  CHECK(Fixed::from_double(-0.00005).raw() == -1);
  CHECK(Fixed::from_double(2.71828).raw() == 27183);
  CHECK(fx("1.5") + fx("2.25") == fx("3.75"));
  CHECK(3 * fx("1.5") == fx("4.5"));
  CHECK(fx("1.5").to_rational() == q("3/2"));
}

TEST_CASE("decimal formatting rounds half away from zero") {
  CHECK(format_decimal(q("1/8"), 2) == "0.13");
  CHECK(format_decimal(q("-1/8"), 2) == "-0.13");
  CHECK(format_decimal(q("2/3"), 4) == "0.6667");
  CHECK(format_decimal(q("5"), 0) == "5");
  CHECK(floor_to_fixed(q("-1/3")) == Fixed::from_raw(-3334));
}

TEST_CASE("fixed point parse/format round trip") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-1'000'000'000, 1'000'000'000);
  for (int k = 0; k < 1000; ++k) {
    const Fixed f = Fixed::from_raw(d(rng));
    CHECK(Fixed::parse(f.to_string()) == f);
  }
}

TEST_CASE("arbitrage price") {
  const auto& o = oracle()["arbitrage"];
  CHECK(Tariff(55, 20, 15).arbitrage_price().to_rational() == oracle_q(o["55-20"]));
  CHECK(Tariff(1, 0, 0).arbitrage_price() == Fixed(1));
  CHECK(Tariff(30, 29, 1).arbitrage_price().to_rational() == oracle_q(o["30-29"]));
}

TEST_CASE("arbitrage constant") {
  const Tariff t = default_tariff();
  CHECK(t.shared_arbitrage_constant() == oracle_q(oracle()["gamma_55_20_15"]));
  CHECK(t.arbitrage_constant(0) == 1);
  CHECK(t.arbitrage_constant(35) == 0);
  CHECK_THROWS_AS(t.arbitrage_constant(36), ViabilityError);
  CHECK_THROWS_AS(t.arbitrage_constant(-1), ValidationError);
  CHECK(arbitrage_constant(t, 15) == q("4/7"));
}

TEST_CASE("tariff validation collects every problem") {
  try {
    Tariff(10, 20, -1);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.issues().size() == 2);
  }
  CHECK_THROWS_AS(Tariff(55, 20, 40), ViabilityError);
  CHECK_THROWS_AS(Tariff(55, 20, 15, {10, 36}), ViabilityError);
  CHECK_THROWS_AS(Tariff(55, -1, 15), ValidationError);
}

TEST_CASE("individual capital costs") {
  const Tariff shared = default_tariff();
  CHECK(shared.individual_capital_cost(3) == Fixed(15));
  const Tariff own(55, 20, 15, {10, 12});
  CHECK(own.individual_capital_cost(1) == Fixed(12));
  CHECK_THROWS_AS(own.individual_capital_cost(2), DimensionMismatch);
}

TEST_CASE("price sets in different scalars agree") {
  const Tariff t(55, 20, 15);
  const auto r = t.prices<Rational>();
  const auto d = t.prices<double>();
  CHECK(r.arbitrage() == 35);
  CHECK(d.arbitrage() == doctest::Approx(35.0));
}
