// Copyright 2026 The Hardy Bases Authors
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

// Classical-model analysis of the inverted scenario: the entangled-pair
// outcomes (q1, q2) play the role of inputs and the basis-choice registers
// (q3, q4) the role of outputs.

#ifndef HARDY_LHV_HPP_
#define HARDY_LHV_HPP_

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "hardy/protocol.hpp"

namespace hardy::lhv {

inline constexpr double kDefaultTol = 1e-9;

/// Pair index used for both inputs (q1,q2) and outputs (q3,q4):
/// 0 = (+,+), 1 = (+,-), 2 = (-,+), 3 = (-,-).
constexpr std::size_t pair_index(Sign a, Sign b) { return bit(a) << 1 | bit(b); }
constexpr Sign first_of(std::size_t pair) { return sign_of_bit(pair >> 1); }
constexpr Sign second_of(std::size_t pair) { return sign_of_bit(pair & 1U); }

/// P(q3, q4 | q1, q2): entries[input][output].
class ConditionalTable {
 public:
  using Entries = std::array<std::array<double, 4>, 4>;

  /// Throws InvariantViolation on negative entries or rows not summing to 1 within 1e-12.
  explicit ConditionalTable(const Entries& entries);

  double operator()(std::size_t input, std::size_t output) const { return entries_[input][output]; }
  double at(Sign q1, Sign q2, Sign q3, Sign q4) const { return entries_[pair_index(q1, q2)][pair_index(q3, q4)]; }
  const Entries& entries() const { return entries_; }

  /// E(q1,q2) = sum q3*q4 P(q3,q4|q1,q2)
  double correlator(Sign q1, Sign q2) const;

 private:
  Entries entries_;
};

/// Throws MissingSupport if some (q1, q2) has zero probability.
ConditionalTable conditional_table(const Distribution& d);

/// P(q3|q1) P(q4|q2). alice[bit(q1)] = P(q3=+1|q1), bob[bit(q2)] = P(q4=+1|q2).
ConditionalTable product_table(const std::array<double, 2>& alice, const std::array<double, 2>& bob);

/// Outputs anti-correlated iff q1 = q2 = -1, each with probability 1/2.
ConditionalTable pr_box();

struct SignalingReport {
  /// max over q1 of |P(q3=+1|q1,q2=+1) - P(q3=+1|q1,q2=-1)|
  double delta_q3 = 0.0;
  /// max over q2 of |P(q4=+1|q1=+1,q2) - P(q4=+1|q1=-1,q2)|
  double delta_q4 = 0.0;
  bool signaling = false;
  double tol = kDefaultTol;
};

SignalingReport no_signaling_check(const ConditionalTable& t, double tol = kDefaultTol);

struct DeterministicStrategy {
  /// f[bit(q1)] = q3, g[bit(q2)] = q4
  std::array<Sign, 2> f{Sign::Plus, Sign::Plus};
  std::array<Sign, 2> g{Sign::Plus, Sign::Plus};

  ConditionalTable table() const;
  /// E(+,+) + E(+,-) + E(-,+) - E(-,-) with E(q1,q2) = f(q1) g(q2).
  int chsh() const;
  friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;
};

struct StrategyValue {
  DeterministicStrategy strategy;
  int chsh = 0;
};

/// All 16 strategies, f varying slowest, each map enumerated as (+,+), (+,-), (-,+), (-,-).
std::vector<StrategyValue> enumerate_strategies();

/// One of the eight CHSH forms: sign * (sum of the four correlators with the
/// term at `negated` flipped). Correlator k is E(first_of(k), second_of(k)).
struct ChshCombination {
  std::size_t negated = 3;
  int sign = 1;
  double value = 0.0;
};

/// All eight combinations, ordered by sign (+1 first) then negated term.
std::array<ChshCombination, 8> chsh_combinations(const ConditionalTable& t);

enum class Verdict { Local, Signaling, NonlocalNoSignaling };
std::string_view name(Verdict v);

struct PolytopeReport {
  Verdict verdict = Verdict::Local;
  SignalingReport signaling;
  std::array<ChshCombination, 8> combinations{};
  /// The largest combination: the violated one for NonlocalNoSignaling.
  ChshCombination witness;
};

/// Signaling tables are rejected first; otherwise local iff all eight CHSH
/// combinations are <= 2 + tol.
PolytopeReport local_polytope_check(const ConditionalTable& t, double tol = kDefaultTol);

}  // namespace hardy::lhv

#endif  // HARDY_LHV_HPP_
