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

#ifndef STORESHARE_COALITION_HPP
#define STORESHARE_COALITION_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "storeshare/errors.hpp"

namespace storeshare {

/// Subset of consumers {0..n-1}, stored as a bitmask. Supports up to 31
/// consumers; exhaustive game evaluation is limited further (see game.hpp).
class Coalition {
 public:
  static constexpr int kMaxPlayers = 31;

  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}
  Coalition(std::initializer_list<int> members) {
    for (int m : members) mask_ |= bit(m);
  }

  static constexpr Coalition grand(int n) {
    return Coalition(n >= 32 ? ~std::uint32_t{0}
                             : (std::uint32_t{1} << n) - 1u);
  }
  static constexpr Coalition singleton(int i) { return Coalition(bit(i)); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int i) const { return (mask_ & bit(i)) != 0; }
  constexpr bool is_subset_of(Coalition o) const {
    return (mask_ & ~o.mask_) == 0;
  }
  constexpr bool disjoint(Coalition o) const { return (mask_ & o.mask_) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m));
    }
    return out;
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.mask_ | b.mask_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.mask_ & b.mask_);
  }
  friend constexpr bool operator==(Coalition, Coalition) = default;

 private:
  static constexpr std::uint32_t bit(int i) { return std::uint32_t{1} << i; }

  std::uint32_t mask_ = 0;
};

/// Throws EmptyCoalition for the empty set and DimensionMismatch when a
/// member lies outside {0..n-1}.
inline void require_coalition(Coalition s, int n) {
  if (s.empty()) throw EmptyCoalition();
  if (!s.is_subset_of(Coalition::grand(n))) {
    throw DimensionMismatch("coalition has members outside the " +
                            std::to_string(n) + "-player game");
  }
}

/// Calls f(S, T) for every ordered pair of disjoint subsets of {0..n-1},
/// including empty ones: 3^n calls. T runs over the submasks of the
/// complement of S. Returns the number of pairs visited.
template <typename F>
std::uint64_t for_each_disjoint_pair(int n, F&& f) {
  const std::uint32_t full = Coalition::grand(n).mask();
  std::uint64_t count = 0;
  for (std::uint32_t s = 0;; ++s) {
    const std::uint32_t rest = full & ~s;
    for (std::uint32_t t = rest;; t = (t - 1) & rest) {
      f(Coalition(s), Coalition(t));
      ++count;
      if (t == 0) break;
    }
    if (s == full) break;
  }
  return count;
}

}  // namespace storeshare

#endif  // STORESHARE_COALITION_HPP
