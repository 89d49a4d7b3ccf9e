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

#include "hardy/reality.hpp"

#include "hardy/error.hpp"

namespace hardy::reality {

using stats::EventPredicate;

namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 0.5)) throw InvalidArgument("epsilon must lie in [0, 0.5)");
}

}  // namespace

std::array<ResponseFunction, 4> all_response_functions(Var variable, Var conditioner) {
  std::array<ResponseFunction, 4> out;
  std::size_t k = 0;
  for (Sign on_plus : kSigns) {
    for (Sign on_minus : kSigns) out[k++] = {variable, conditioner, {on_plus, on_minus}};
  }
  return out;
}

std::vector<CertaintyPrediction> certainty_predictions(const Distribution& d, double epsilon) {
  check_epsilon(epsilon);
  std::vector<CertaintyPrediction> out;
  for (Var predicted : kVars) {
    std::array<Var, 3> others{};
    std::size_t n = 0;
    for (Var v : kVars) {
      if (v != predicted) others[n++] = v;
    }
    // 3^3 partial assignments: digit 0 = unconstrained, 1 = +1, 2 = -1.
    for (int code = 0; code < 27; ++code) {
      EventPredicate given;
      int rest = code;
      for (int k = 2; k >= 0; --k) {
        const int digit = rest % 3;
        rest /= 3;
        if (digit != 0) given.set(others[static_cast<std::size_t>(k)], digit == 1 ? Sign::Plus : Sign::Minus);
      }
      if (stats::prob(d, given) <= stats::kZeroProbability) continue;
      for (Sign s : kSigns) {
        const double c = stats::conditional(d, EventPredicate{{predicted, s}}, given);
        if (c >= 1.0 - epsilon) out.push_back({given, predicted, s, c});
      }
    }
  }
  return out;
}

std::pair<EventPredicate, EventPredicate> hardy_fact_events(std::size_t k) {
  using enum Var;
  constexpr Sign P = Sign::Plus;
  constexpr Sign M = Sign::Minus;
  switch (k) {
    case 0: return {{{Q3, P}, {Q4, P}}, {{Q1, P}, {Q2, P}}};
    case 1: return {{{Q4, M}}, {{Q1, P}, {Q3, P}, {Q2, M}}};
    case 2: return {{{Q3, M}}, {{Q2, P}, {Q4, P}, {Q1, M}}};
    case 3: return {{{Q3, M}, {Q4, M}}, {{Q1, M}, {Q2, M}}};
    default: throw InvalidArgument("hardy_fact_events: fact index out of range");
  }
}

HardyReport hardy_chain_check(const Distribution& d, double epsilon) {
  check_epsilon(epsilon);
  HardyReport r;
  r.epsilon = epsilon;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto [target, given] = hardy_fact_events(k);
    try {
      r.facts[k] = stats::conditional(d, target, given);
      r.established[k] = true;
    } catch (const ZeroConditioning&) {
      r.facts[k] = 0.0;
      r.established[k] = false;
    }
  }
  const bool all_established = r.established[0] && r.established[1] && r.established[2] && r.established[3];
  r.contradiction = all_established && r.f0() > epsilon && r.f1() >= 1.0 - epsilon && r.f2() >= 1.0 - epsilon &&
                    r.f3() <= epsilon;
  return r;
}

std::vector<ResponsePair> response_model_refutation(const Distribution& d) {
  for (Sign q1 : kSigns) {
    for (Sign q2 : kSigns) {
      if (stats::prob(d, {{Var::Q1, q1}, {Var::Q2, q2}}) <= stats::kZeroProbability) {
        throw MissingSupport("response_model_refutation: some (q1, q2) pair has zero probability");
      }
    }
  }
  std::vector<ResponsePair> survivors;
  for (const auto& f : all_response_functions(Var::Q3, Var::Q1)) {
    for (const auto& g : all_response_functions(Var::Q4, Var::Q2)) {
      bool survives = true;
      for (Sign q1 : kSigns) {
        for (Sign q2 : kSigns) {
          const EventPredicate given{{Var::Q1, q1}, {Var::Q2, q2}};
          const EventPredicate predicted{{Var::Q3, f(q1)}, {Var::Q4, g(q2)}};
          if (stats::conditional(d, predicted, given) <= stats::kZeroProbability) survives = false;
        }
      }
      if (survives) survivors.emplace_back(f, g);
    }
  }
  return survivors;
}

}  // namespace hardy::reality
