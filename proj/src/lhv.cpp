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

#include "hardy/lhv.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/error.hpp"
#include "hardy/stats.hpp"

namespace hardy::lhv {

ConditionalTable::ConditionalTable(const Entries& entries) : entries_(entries) {
  for (const auto& row : entries_) {
    double total = 0.0;
    for (double p : row) {
      if (!std::isfinite(p) || p < 0.0) throw InvariantViolation("ConditionalTable: negative or non-finite entry");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) throw InvariantViolation("ConditionalTable: row does not sum to 1");
  }
}

double ConditionalTable::correlator(Sign q1, Sign q2) const {
  const auto& row = entries_[pair_index(q1, q2)];
  double e = 0.0;
  for (std::size_t out = 0; out < 4; ++out) e += value(first_of(out)) * value(second_of(out)) * row[out];
  return e;
}

ConditionalTable conditional_table(const Distribution& d) {
  ConditionalTable::Entries e{};
  for (std::size_t in = 0; in < 4; ++in) {
    const stats::EventPredicate given{{Var::Q1, first_of(in)}, {Var::Q2, second_of(in)}};
    const double pg = stats::prob(d, given);
    if (pg <= stats::kZeroProbability) {
      throw MissingSupport("conditional_table: input " + given.to_string() + " has probability zero");
    }
    for (std::size_t out = 0; out < 4; ++out) {
      OutcomeQuadruple o{{first_of(in), second_of(in), first_of(out), second_of(out)}};
      e[in][out] = d[o] / pg;
    }
  }
  return ConditionalTable(e);
}

ConditionalTable product_table(const std::array<double, 2>& alice, const std::array<double, 2>& bob) {
  ConditionalTable::Entries e{};
  for (std::size_t in = 0; in < 4; ++in) {
    const double pa = alice[bit(first_of(in))];
    const double pb = bob[bit(second_of(in))];
    e[in] = {pa * pb, pa * (1 - pb), (1 - pa) * pb, (1 - pa) * (1 - pb)};
  }
  return ConditionalTable(e);
}

ConditionalTable pr_box() {
  constexpr std::array<double, 4> correlated{0.5, 0.0, 0.0, 0.5};
  constexpr std::array<double, 4> anticorrelated{0.0, 0.5, 0.5, 0.0};
  return ConditionalTable({correlated, correlated, correlated, anticorrelated});
}

SignalingReport no_signaling_check(const ConditionalTable& t, double tol) {
  // P(first output = +1 | input) and P(second output = +1 | input).
  auto p3 = [&](std::size_t in) { return t(in, 0) + t(in, 1); };
  auto p4 = [&](std::size_t in) { return t(in, 0) + t(in, 2); };
  SignalingReport r;
  r.tol = tol;
  for (Sign s : kSigns) {
    r.delta_q3 = std::max(r.delta_q3, std::abs(p3(pair_index(s, Sign::Plus)) - p3(pair_index(s, Sign::Minus))));
    r.delta_q4 = std::max(r.delta_q4, std::abs(p4(pair_index(Sign::Plus, s)) - p4(pair_index(Sign::Minus, s))));
  }
  r.delta_q3 = std::min(r.delta_q3, 1.0);
  r.delta_q4 = std::min(r.delta_q4, 1.0);
  r.signaling = std::max(r.delta_q3, r.delta_q4) > tol;
  return r;
}

ConditionalTable DeterministicStrategy::table() const {
  ConditionalTable::Entries e{};
  for (std::size_t in = 0; in < 4; ++in) {
    e[in][pair_index(f[bit(first_of(in))], g[bit(second_of(in))])] = 1.0;
  }
  return ConditionalTable(e);
}

int DeterministicStrategy::chsh() const {
  auto e = [&](Sign q1, Sign q2) { return value(f[bit(q1)]) * value(g[bit(q2)]); };
  return e(Sign::Plus, Sign::Plus) + e(Sign::Plus, Sign::Minus) + e(Sign::Minus, Sign::Plus) -
         e(Sign::Minus, Sign::Minus);
}

std::vector<StrategyValue> enumerate_strategies() {
  std::vector<StrategyValue> out;
  out.reserve(16);
  for (std::size_t fi = 0; fi < 4; ++fi) {
    for (std::size_t gi = 0; gi < 4; ++gi) {
      DeterministicStrategy s{{first_of(fi), second_of(fi)}, {first_of(gi), second_of(gi)}};
      out.push_back({s, s.chsh()});
    }
  }
  return out;
}

std::array<ChshCombination, 8> chsh_combinations(const ConditionalTable& t) {
  std::array<double, 4> e{};
  for (std::size_t k = 0; k < 4; ++k) e[k] = t.correlator(first_of(k), second_of(k));
  std::array<ChshCombination, 8> out;
  std::size_t n = 0;
  for (int sign : {1, -1}) {
    for (std::size_t negated = 0; negated < 4; ++negated) {
      double v = 0.0;
      for (std::size_t k = 0; k < 4; ++k) v += k == negated ? -e[k] : e[k];
      out[n++] = {negated, sign, sign * v};
    }
  }
  return out;
}

std::string_view name(Verdict v) {
  switch (v) {
    case Verdict::Local: return "LOCAL";
    case Verdict::Signaling: return "SIGNALING";
    case Verdict::NonlocalNoSignaling: return "NONLOCAL_NOSIGNALING";
  }
  return "?";
}

PolytopeReport local_polytope_check(const ConditionalTable& t, double tol) {
  PolytopeReport r;
  r.signaling = no_signaling_check(t, tol);
  r.combinations = chsh_combinations(t);
  r.witness = *std::max_element(r.combinations.begin(), r.combinations.end(),
                                [](const auto& a, const auto& b) { return a.value < b.value; });
  if (r.signaling.signaling) {
    r.verdict = Verdict::Signaling;
  } else if (r.witness.value > 2.0 + tol) {
    r.verdict = Verdict::NonlocalNoSignaling;
  } else {
    r.verdict = Verdict::Local;
  }
  return r;
}

}  // namespace hardy::lhv
