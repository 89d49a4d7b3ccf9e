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

#include "hardy/stats.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hardy/error.hpp"
#include "test_support.hpp"

using namespace hardy;
using namespace hardy::stats;
using enum hardy::Var;

namespace {

constexpr double kTol = 1e-12;
constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;

Distribution final_dist() { return protocol::outcome_distribution(protocol::build_final_density({})); }

EventPredicate random_predicate(std::mt19937_64& rng) {
  EventPredicate e;
  for (Var v : kVars) {
    switch (rng() % 3) {
      case 1: e.set(v, P); break;
      case 2: e.set(v, M); break;
      default: break;
    }
  }
  return e;
}

Distribution random_distribution(std::mt19937_64& rng) {
  std::array<double, 16> p{};
  std::exponential_distribution<double> x(1.0);
  double total = 0.0;
  for (double& v : p) total += (v = (rng() % 4 == 0) ? 0.0 : x(rng));
  if (total == 0.0) return Distribution::uniform();
  for (double& v : p) v /= total;
  return Distribution(p);
}

}  // namespace

TEST(Prob, Basics) {
  EXPECT_NEAR(prob(final_dist(), {}), 1.0, kTol);
  EXPECT_NEAR(prob(final_dist(), {{Q1, P}, {Q2, P}}), 0.25, kTol);
  EXPECT_NEAR(prob(final_dist(), {{Q1, P}, {Q2, P}, {Q3, M}, {Q4, M}}), 0.0, kTol);
}

TEST(Prob, ConflictingConjunctionIsZero) {
  EXPECT_EQ(prob_both(Distribution::uniform(), {{Q1, P}}, {{Q1, M}}), 0.0);
}

TEST(Conditional, FactsFromTheFinalState) {
  EXPECT_NEAR(conditional(final_dist(), {{Q3, P}, {Q4, P}}, {{Q1, P}, {Q2, P}}), 0.5, kTol);
  EXPECT_NEAR(conditional(final_dist(), {{Q4, M}}, {{Q1, P}, {Q3, P}, {Q2, M}}), 1.0, kTol);
}

TEST(Conditional, SelfConditioningAndZeroEvents) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const auto d = random_distribution(rng);
    const auto e = random_predicate(rng);
    if (prob(d, e) > kZeroProbability) {
      EXPECT_NEAR(conditional(d, e, e), 1.0, kTol);
    } else {
      EXPECT_THROW(conditional(d, e, e), ZeroConditioning);
    }
  }
  EXPECT_THROW(conditional(Distribution::point_mass({}), {}, {{Q1, M}}), ZeroConditioning);
}

TEST(Conditional, ChainRuleProperty) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 1000; ++t) {
    const auto d = random_distribution(rng);
    const auto a = random_predicate(rng);
    const auto b = random_predicate(rng);
    const double pb = prob(d, b);
    if (pb <= kZeroProbability) continue;
    EXPECT_NEAR(conditional(d, a, b) * pb, prob_both(d, a, b), kTol);
  }
}

TEST(Marginal, Basics) {
  const auto d = final_dist();
  const auto all = marginal(d, {Q1, Q2, Q3, Q4});
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(all.probs[i], d[i]);

  const auto pair = marginal(d, {Q1, Q2});
  for (double p : pair.probs) EXPECT_NEAR(p, 0.25, kTol);

  const auto q3 = marginal(d, {Q3});
  EXPECT_NEAR(q3.probs[0], 0.5, kTol);
  EXPECT_NEAR(q3.probs[1], 0.5, kTol);

  EXPECT_THROW(marginal(d, std::span<const Var>{}), InvalidArgument);
  EXPECT_THROW(marginal(d, {Q1, Q1}), InvalidArgument);
}

TEST(Marginal, VarOrderDefinesIndex) {
  // point mass on q1=+1, q3=-1: marginal (q3, q1) puts mass at index 0b10.
  const auto d = Distribution::point_mass(OutcomeQuadruple{{P, P, M, P}});
  const auto m = marginal(d, {Q3, Q1});
  EXPECT_EQ(m.probs[2], 1.0);
}

TEST(Chsh, CorrelatorIsCosineOfAngleSum) {
  // Oracle: for (|00> - |11>)/sqrt2, <M(a) M(b)> = cos a cos b <ZZ> + sin a sin b <XX> = cos(a + b).
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  const auto s = protocol::bell_state();
  for (int t = 0; t < 200; ++t) {
    const double a = angle(rng);
    const double b = angle(rng);
    EXPECT_NEAR(correlator(s, a, b), std::cos(a + b), 1e-12);
  }
}

TEST(Chsh, OptimalSettings) {
  EXPECT_NEAR(chsh_value(protocol::bell_state(), optimal_chsh_settings()), 2.8284271247461903, 1e-9);
}

TEST(Chsh, AllZeroAngles) {
  EXPECT_NEAR(chsh_value(protocol::bell_state(), {0, 0, 0, 0}), 2.0, 1e-12);
}

TEST(Chsh, ProductStatesNeverExceedTwo) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (int t = 0; t < 2000; ++t) {
    const auto s = qcore::kron(testkit::random_state(rng, 1), testkit::random_state(rng, 1));
    const ChshSettings set{angle(rng), angle(rng), angle(rng), angle(rng)};
    EXPECT_LE(std::abs(chsh_value(s, set)), 2.0 + 1e-9);
  }
}

TEST(Chsh, PeriodicInEachAngle) {
  std::mt19937_64 rng(70);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  const auto s = protocol::bell_state();
  for (int t = 0; t < 100; ++t) {
    ChshSettings set{angle(rng), angle(rng), angle(rng), angle(rng)};
    const double base = chsh_value(s, set);
    ChshSettings shifted = set;
    switch (t % 4) {
      case 0: shifted.a0 += 2 * std::numbers::pi; break;
      case 1: shifted.a1 += 2 * std::numbers::pi; break;
      case 2: shifted.b0 += 2 * std::numbers::pi; break;
      default: shifted.b1 += 2 * std::numbers::pi; break;
    }
    EXPECT_NEAR(chsh_value(s, shifted), base, 1e-9);
  }
}

TEST(Chsh, Errors) {
  EXPECT_THROW(chsh_value(protocol::bell_state(), {NAN, 0, 0, 0}), InvalidArgument);
  EXPECT_THROW(chsh_value(qcore::StateVector::basis(3, 0), {}), DimensionMismatch);
}

TEST(Sample, PointMass) {
  const auto d = Distribution::point_mass(OutcomeQuadruple{{M, P, M, P}});
  const auto r = sample(d, 1000, 5);
  EXPECT_EQ(r.counts[10], 1000U);  // -+-+ = 0b1010
  EXPECT_EQ(r.tv_distance, 0.0);
}

TEST(Sample, ZeroProbabilityOutcomesNeverDrawn) {
  const auto d = final_dist();
  const auto r = sample(d, 200000, 3);
  for (std::size_t i = 0; i < 16; ++i) {
    if (d[i] == 0.0) EXPECT_EQ(r.counts[i], 0U) << i;
  }
}

TEST(Sample, DeterministicAcrossThreadCounts) {
  const auto d = final_dist();
  const std::uint64_t n = 3 * kSampleBlock + 123;
  const auto one = sample(d, n, 42, 1);
  EXPECT_EQ(one, sample(d, n, 42, 1));
  EXPECT_EQ(one, sample(d, n, 42, 2));
  EXPECT_EQ(one, sample(d, n, 42, 3));
  EXPECT_EQ(one, sample(d, n, 42, 16));
  std::uint64_t total = 0;
  for (auto c : one.counts) total += c;
  EXPECT_EQ(total, n);
  EXPECT_NE(one.counts, sample(d, n, 43, 1).counts);
}

TEST(Sample, FrozenCountsPinTheGenerator) {
  // Guards the documented stream: mt19937_64 seeded per block via splitmix64.
  const auto r = sample(Distribution::uniform(), 16, 42, 1);
  std::mt19937_64 engine(block_seed(42, 0));
  std::array<std::uint64_t, 16> expected{};
  for (int k = 0; k < 16; ++k) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    ++expected[static_cast<std::size_t>(u * 16.0)];
  }
  EXPECT_EQ(r.counts, expected);
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(Sample, ConvergesToFinalState) {
  const auto r = sample(final_dist(), 1'000'000, 2026);
  EXPECT_LT(r.tv_distance, 0.01);
  EXPECT_NEAR(tv_distance(empirical(r), final_dist()), r.tv_distance, 1e-12);
}

TEST(Sample, RejectsEmpty) { EXPECT_THROW(sample(final_dist(), 0, 1), InvalidArgument); }

TEST(EventPredicateType, ToString) {
  EXPECT_EQ((EventPredicate{{Q3, M}, {Q1, P}}.to_string()), "{q1=+1, q3=-1}");
  EXPECT_TRUE(EventPredicate{}.empty());
}
