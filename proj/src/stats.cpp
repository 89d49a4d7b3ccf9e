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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "hardy/error.hpp"

namespace hardy::stats {

EventPredicate::EventPredicate(std::initializer_list<std::pair<Var, Sign>> constraints) {
  for (const auto& [v, s] : constraints) set(v, s);
}

EventPredicate& EventPredicate::set(Var v, Sign s) {
  constraints_[index(v)] = s;
  return *this;
}

bool EventPredicate::empty() const {
  return std::none_of(constraints_.begin(), constraints_.end(), [](const auto& c) { return c.has_value(); });
}

bool EventPredicate::matches(const OutcomeQuadruple& o) const {
  for (Var v : kVars) {
    const auto& c = constraints_[index(v)];
    if (c && *c != o[v]) return false;
  }
  return true;
}

std::string EventPredicate::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Var v : kVars) {
    const auto& c = constraints_[index(v)];
    if (!c) continue;
    if (!first) out += ", ";
    out += name(v);
    out += value(*c) > 0 ? "=+1" : "=-1";
    first = false;
  }
  return out + "}";
}

double prob(const Distribution& d, const EventPredicate& e) {
  double total = 0.0;
  for (std::size_t i = 0; i < kOutcomes; ++i) {
    if (e.matches(OutcomeQuadruple::from_index(i))) total += d[i];
  }
  return total;
}

double prob_both(const Distribution& d, const EventPredicate& a, const EventPredicate& b) {
  double total = 0.0;
  for (std::size_t i = 0; i < kOutcomes; ++i) {
    const auto o = OutcomeQuadruple::from_index(i);
    if (a.matches(o) && b.matches(o)) total += d[i];
  }
  return total;
}

double conditional(const Distribution& d, const EventPredicate& target, const EventPredicate& given) {
  const double pg = prob(d, given);
  if (pg <= kZeroProbability) {
    throw ZeroConditioning("conditioning event " + given.to_string() + " has probability zero");
  }
  return std::clamp(prob_both(d, target, given) / pg, 0.0, 1.0);
}

MarginalDistribution marginal(const Distribution& d, std::span<const Var> vars) {
  if (vars.empty()) throw InvalidArgument("marginal: no variables");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[i] == vars[j]) throw InvalidArgument("marginal: repeated variable");
    }
  }
  MarginalDistribution m{{vars.begin(), vars.end()}, std::vector<double>(std::size_t{1} << vars.size(), 0.0)};
  for (std::size_t i = 0; i < kOutcomes; ++i) {
    const auto o = OutcomeQuadruple::from_index(i);
    std::size_t k = 0;
    for (Var v : vars) k = (k << 1) | bit(o[v]);
    m.probs[k] += d[i];
  }
  return m;
}

MarginalDistribution marginal(const Distribution& d, std::initializer_list<Var> vars) {
  return marginal(d, std::span<const Var>(vars.begin(), vars.size()));
}

// ---------------------------------------------------------------------------

ChshSettings optimal_chsh_settings() {
  return {0.0, std::numbers::pi / 2, -std::numbers::pi / 4, std::numbers::pi / 4};
}

qcore::Matrix zx_observable(double theta) {
  return std::cos(theta) * qcore::pauli_z().entries() + std::sin(theta) * qcore::pauli_x().entries();
}

double correlator(const qcore::StateVector& state, double a, double b) {
  if (state.n_qubits() != 2) throw DimensionMismatch("correlator: expected a two-qubit state");
  return qcore::expectation(state, qcore::kron(zx_observable(a), zx_observable(b))).real();
}

double chsh_value(const qcore::StateVector& state, const ChshSettings& s) {
  for (double angle : {s.a0, s.a1, s.b0, s.b1}) {
    if (!std::isfinite(angle)) throw InvalidArgument("chsh_value: non-finite angle");
  }
  return correlator(state, s.a0, s.b0) + correlator(state, s.a0, s.b1) + correlator(state, s.a1, s.b0) -
         correlator(state, s.a1, s.b1);
}

// ---------------------------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t block_seed(std::uint64_t master_seed, std::uint64_t block) {
  return splitmix64(master_seed ^ splitmix64(block));
}

namespace {

struct InverseCdf {
  std::array<double, kOutcomes> cdf{};
  std::size_t last_positive = 0;

  explicit InverseCdf(const Distribution& d) {
    double acc = 0.0;
    for (std::size_t i = 0; i < kOutcomes; ++i) {
      acc += d[i];
      cdf[i] = acc;
      if (d[i] > 0.0) last_positive = i;
    }
  }

  // Smallest index with u < cdf[i]. Zero-probability outcomes never win
  // because their cdf equals the previous one.
  std::size_t operator()(double u) const {
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) return last_positive;  // u >= rounded total
    return static_cast<std::size_t>(it - cdf.begin());
  }
};

void sample_blocks(const InverseCdf& icdf, std::uint64_t n, std::uint64_t seed, std::uint64_t first,
                   std::uint64_t stride, std::uint64_t n_blocks, std::array<std::uint64_t, kOutcomes>& counts) {
  for (std::uint64_t b = first; b < n_blocks; b += stride) {
    std::mt19937_64 engine(block_seed(seed, b));
    const std::uint64_t begin = b * kSampleBlock;
    const std::uint64_t end = std::min(n, begin + kSampleBlock);
    for (std::uint64_t k = begin; k < end; ++k) {
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      ++counts[icdf(u)];
    }
  }
}

}  // namespace

SampleReport sample(const Distribution& d, std::uint64_t n, std::uint64_t seed, unsigned threads) {
  if (n == 0) throw InvalidArgument("sample: n must be at least 1");
  const InverseCdf icdf(d);
  const std::uint64_t n_blocks = (n + kSampleBlock - 1) / kSampleBlock;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, n_blocks));

  std::vector<std::array<std::uint64_t, kOutcomes>> partial(workers);
  if (workers == 1) {
    sample_blocks(icdf, n, seed, 0, 1, n_blocks, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { sample_blocks(icdf, n, seed, w, workers, n_blocks, partial[w]); });
    }
  }

  SampleReport report;
  report.n = n;
  report.seed = seed;
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < kOutcomes; ++i) report.counts[i] += p[i];
  }
  double tv = 0.0;
  for (std::size_t i = 0; i < kOutcomes; ++i) {
    tv += std::abs(static_cast<double>(report.counts[i]) / static_cast<double>(n) - d[i]);
  }
  report.tv_distance = std::clamp(0.5 * tv, 0.0, 1.0);
  return report;
}

Distribution empirical(const SampleReport& r) {
  if (r.n == 0) throw InvalidArgument("empirical: empty sample");
  std::array<double, kOutcomes> p{};
  for (std::size_t i = 0; i < kOutcomes; ++i) p[i] = static_cast<double>(r.counts[i]) / static_cast<double>(r.n);
  return Distribution(p);
}

double tv_distance(const Distribution& a, const Distribution& b) {
  double tv = 0.0;
  for (std::size_t i = 0; i < kOutcomes; ++i) tv += std::abs(a[i] - b[i]);
  return 0.5 * tv;
}

}  // namespace hardy::stats
