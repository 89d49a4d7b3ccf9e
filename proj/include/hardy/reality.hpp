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

// EPR-style certainty predictions and the Hardy-style chain showing that the
// basis-choice registers (q3, q4) cannot each depend only on the local outcome.
//
// The chain consists of four conditional probabilities:
//
//   F0 = P(q3=+1, q4=+1 | q1=+1, q2=+1)   the subensemble exists
//   F1 = P(q4=-1 | q1=+1, q3=+1, q2=-1)    certainty: q4(q2=-1) = -1
//   F2 = P(q3=-1 | q2=+1, q4=+1, q1=-1)    certainty: q3(q1=-1) = -1
//   F3 = P(q3=-1, q4=-1 | q1=-1, q2=-1)    the combined prediction is impossible
//
// If q3 depends only on q1 and q4 only on q2, F1 and F2 force (q3,q4) = (-1,-1)
// at (q1,q2) = (-1,-1) within the F0 subensemble, contradicting F3 = 0.

#ifndef HARDY_REALITY_HPP_
#define HARDY_REALITY_HPP_

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "hardy/protocol.hpp"
#include "hardy/stats.hpp"

namespace hardy::reality {

inline constexpr double kDefaultEpsilon = 1e-9;

/// A deterministic value of `variable` (q3 or q4) as a function of the outcome
/// of `conditioner` (q1 or q2).
struct ResponseFunction {
  Var variable = Var::Q3;
  Var conditioner = Var::Q1;
  /// map[bit(input)] is the response to input +1 (index 0) or -1 (index 1).
  std::array<Sign, 2> map{Sign::Plus, Sign::Plus};

  Sign operator()(Sign input) const { return map[bit(input)]; }
  friend bool operator==(const ResponseFunction&, const ResponseFunction&) = default;
};

/// All four maps {+1,-1} -> {+1,-1} for the given variable/conditioner pair.
std::array<ResponseFunction, 4> all_response_functions(Var variable, Var conditioner);

struct CertaintyPrediction {
  stats::EventPredicate given;
  Var predicted_variable = Var::Q1;
  Sign predicted_value = Sign::Plus;
  double confidence = 0.0;
};

/// Every (given, variable, value) where `given` is a partial assignment of the
/// other three registers with nonzero probability and
/// P(variable = value | given) >= 1 - epsilon. Ordered by predicted variable,
/// then by given (enumerated as unconstrained/+1/-1 per register), then value.
/// Throws InvalidArgument unless 0 <= epsilon < 0.5.
std::vector<CertaintyPrediction> certainty_predictions(const Distribution& d, double epsilon = kDefaultEpsilon);

struct HardyReport {
  /// Conditional values F0..F3. A fact whose conditioning event has zero
  /// probability reports 0 and established = false.
  std::array<double, 4> facts{};
  std::array<bool, 4> established{};
  bool contradiction = false;
  double epsilon = kDefaultEpsilon;

  double f0() const { return facts[0]; }
  double f1() const { return facts[1]; }
  double f2() const { return facts[2]; }
  double f3() const { return facts[3]; }
  std::string_view verdict() const { return contradiction ? "CONTRADICTION" : "CONSISTENT"; }
};

/// The (target, given) event pair that defines fact k (0..3).
std::pair<stats::EventPredicate, stats::EventPredicate> hardy_fact_events(std::size_t k);

/// contradiction = F0 > eps, F1 >= 1-eps, F2 >= 1-eps, F3 <= eps, all established.
/// Throws InvalidArgument unless 0 <= epsilon < 0.5.
HardyReport hardy_chain_check(const Distribution& d, double epsilon = kDefaultEpsilon);

using ResponsePair = std::pair<ResponseFunction, ResponseFunction>;

/// Deterministic local-response pairs (f: q1 -> q3, g: q2 -> q4) that never
/// predict an impossible (q3, q4) for a possible (q1, q2). Pairs are listed
/// with f varying slowest. Throws MissingSupport if some (q1, q2) has zero
/// probability.
std::vector<ResponsePair> response_model_refutation(const Distribution& d);

}  // namespace hardy::reality

#endif  // HARDY_REALITY_HPP_
