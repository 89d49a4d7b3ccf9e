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

#ifndef HARDY_STATS_HPP_
#define HARDY_STATS_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hardy/protocol.hpp"
#include "hardy/qcore.hpp"

namespace hardy::stats {

/// Events with probability at or below this are treated as impossible when
/// conditioning. Exact constructions can leave ~1e-33 residue where an
/// amplitude cancels; anything physical here is >= 1e-6.
inline constexpr double kZeroProbability = 1e-14;

/// Partial assignment of values to q1..q4. Unconstrained registers are empty.
class EventPredicate {
 public:
  EventPredicate() = default;
  EventPredicate(std::initializer_list<std::pair<Var, Sign>> constraints);

  EventPredicate& set(Var v, Sign s);
  const std::optional<Sign>& operator[](Var v) const { return constraints_[index(v)]; }
  bool empty() const;
  bool matches(const OutcomeQuadruple& o) const;
  /// "{q1=+1, q3=-1}"
  std::string to_string() const;

  friend bool operator==(const EventPredicate&, const EventPredicate&) = default;

 private:
  std::array<std::optional<Sign>, 4> constraints_{};
};

double prob(const Distribution& d, const EventPredicate& e);

/// P(a and b). Conflicting constraints give 0.
double prob_both(const Distribution& d, const EventPredicate& a, const EventPredicate& b);

/// P(target | given). Throws ZeroConditioning if P(given) <= kZeroProbability.
double conditional(const Distribution& d, const EventPredicate& target, const EventPredicate& given);

/// Distribution over a subset of the registers. probs is indexed with vars[0]
/// as the most significant bit (+1 -> 0, -1 -> 1).
struct MarginalDistribution {
  std::vector<Var> vars;
  std::vector<double> probs;
};

/// Throws InvalidArgument if vars is empty or repeats a register.
MarginalDistribution marginal(const Distribution& d, std::span<const Var> vars);
MarginalDistribution marginal(const Distribution& d, std::initializer_list<Var> vars);

// ---------------------------------------------------------------------------
// CHSH

/// Measurement angles. Each party measures M(theta) = cos(theta) Z + sin(theta) X.
struct ChshSettings {
  double a0 = 0.0;
  double a1 = 0.0;
  double b0 = 0.0;
  double b1 = 0.0;
};

/// Settings reaching 2 sqrt 2 on bell_state().
ChshSettings optimal_chsh_settings();

qcore::Matrix zx_observable(double theta);

/// <M(a) (x) M(b)> on a two-qubit state.
double correlator(const qcore::StateVector& state, double a, double b);

/// S = E(a0,b0) + E(a0,b1) + E(a1,b0) - E(a1,b1).
/// Throws DimensionMismatch for anything but 2 qubits and InvalidArgument for non-finite angles.
double chsh_value(const qcore::StateVector& state, const ChshSettings& s);

// ---------------------------------------------------------------------------
// Sampling
//
// Draws come from std::mt19937_64 (whose output sequence is fixed by the C++
// standard). The stream is split into blocks of kSampleBlock draws; block b is
// seeded with splitmix64(seed ^ splitmix64(b)). Uniform variates are the top
// 53 bits of a 64-bit output scaled by 2^-53. Blocks are independent, so the
// counts do not depend on how many threads process them.

inline constexpr std::uint64_t kSampleBlock = 1U << 16;

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t block_seed(std::uint64_t master_seed, std::uint64_t block);

struct SampleReport {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::array<std::uint64_t, kOutcomes> counts{};
  /// 0.5 * sum |counts/n - d|
  double tv_distance = 0.0;

  friend bool operator==(const SampleReport&, const SampleReport&) = default;
};

/// n inverse-CDF draws over basis_index() order. threads == 0 uses the
/// hardware concurrency. Throws InvalidArgument if n == 0.
SampleReport sample(const Distribution& d, std::uint64_t n, std::uint64_t seed, unsigned threads = 0);

/// counts / n as a Distribution.
Distribution empirical(const SampleReport& r);

double tv_distance(const Distribution& a, const Distribution& b);

}  // namespace hardy::stats

#endif  // HARDY_STATS_HPP_
