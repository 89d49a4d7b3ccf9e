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

#include "hardy/protocol.hpp"

#include <cmath>
#include <utility>

#include "hardy/error.hpp"

namespace hardy {

std::string_view name(Var v) {
  switch (v) {
    case Var::Q1: return "q1";
    case Var::Q2: return "q2";
    case Var::Q3: return "q3";
    case Var::Q4: return "q4";
  }
  return "?";
}

std::size_t OutcomeQuadruple::basis_index() const {
  return bit(values[0]) << 3 | bit(values[1]) << 2 | bit(values[2]) << 1 | bit(values[3]);
}

OutcomeQuadruple OutcomeQuadruple::from_index(std::size_t i) {
  if (i >= kOutcomes) throw InvalidArgument("OutcomeQuadruple: index out of range");
  OutcomeQuadruple o;
  for (std::size_t k = 0; k < 4; ++k) o.values[k] = sign_of_bit((i >> (3 - k)) & 1U);
  return o;
}

std::string OutcomeQuadruple::label() const {
  std::string s(4, '+');
  for (std::size_t k = 0; k < 4; ++k) s[k] = symbol(values[k]);
  return s;
}

Distribution::Distribution(std::array<double, kOutcomes> probs) : probs_(probs) {
  double total = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) throw InvariantViolation("Distribution: negative or non-finite entry");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvariantViolation("Distribution: probabilities do not sum to 1");
}

Distribution Distribution::uniform() {
  std::array<double, kOutcomes> p;
  p.fill(1.0 / kOutcomes);
  return Distribution(p);
}

Distribution Distribution::point_mass(const OutcomeQuadruple& o) {
  std::array<double, kOutcomes> p{};
  p[o.basis_index()] = 1.0;
  return Distribution(p);
}

namespace protocol {

using qcore::Complex;
using qcore::DensityMatrix;
using qcore::StateVector;
using qcore::Vector;

std::string_view name(ChoiceMode m) { return m == ChoiceMode::Coherent ? "coherent" : "coin"; }

ChoiceMode parse_choice_mode(std::string_view s) {
  if (s == "coherent") return ChoiceMode::Coherent;
  if (s == "coin") return ChoiceMode::Coin;
  throw InvalidArgument("unknown choice mode '" + std::string(s) + "' (expected coherent or coin)");
}

std::vector<std::string_view> known_states() { return {kDefaultState, "phi-plus", "psi-minus", "product-00"}; }

StateVector initial_state(std::string_view name) {
  const double s = 1.0 / std::sqrt(2.0);
  Vector v = Vector::Zero(4);
  if (name == kDefaultState) {
    v << s, 0, 0, -s;
  } else if (name == "phi-plus") {
    v << s, 0, 0, s;
  } else if (name == "psi-minus") {
    v << 0, s, -s, 0;
  } else if (name == "product-00") {
    v << 1, 0, 0, 0;
  } else {
    throw InvalidArgument("unknown initial state '" + std::string(name) + "'");
  }
  return StateVector(std::move(v));
}

void Scenario::validate() const {
  if (!(choice_prob >= 0.0 && choice_prob <= 1.0)) throw InvalidArgument("choice_prob must lie in [0, 1]");
  (void)protocol::initial_state(initial_state);
}

StateVector bell_state() { return initial_state(kDefaultState); }

namespace {

// One way a party's register can be prepared, with its classical weight.
struct RegisterBranch {
  double weight;
  Vector ket;
};

std::vector<RegisterBranch> register_branches(ChoiceMode mode, double p_z) {
  if (mode == ChoiceMode::Coherent) {
    Vector ket(2);
    ket << std::sqrt(p_z), std::sqrt(1.0 - p_z);
    return {{1.0, ket}};
  }
  std::vector<RegisterBranch> out;
  // Zero-weight branches are skipped so they cannot perturb the mixture.
  if (p_z > 0.0) out.push_back({p_z, Vector::Unit(2, 0)});
  if (p_z < 1.0) out.push_back({1.0 - p_z, Vector::Unit(2, 1)});
  return out;
}

}  // namespace

DensityMatrix build_final_density(const Scenario& s) {
  s.validate();
  const StateVector pair = initial_state(s.initial_state);
  const auto h = qcore::hadamard();
  // Register Q3 (index 2) controls H on Q1 (index 0); Q4 (3) controls H on Q2 (1).
  const auto ch_alice = qcore::controlled_unitary(h, 2, 0, 4);
  const auto ch_bob = qcore::controlled_unitary(h, 3, 1, 4);

  std::vector<std::pair<double, DensityMatrix>> components;
  for (const auto& a : register_branches(s.alice_mode, s.choice_prob)) {
    for (const auto& b : register_branches(s.bob_mode, s.choice_prob)) {
      StateVector psi(qcore::kron(pair.amplitudes(), qcore::kron(a.ket, b.ket)));
      psi = qcore::apply_unitary(psi, ch_alice, {0, 1, 2, 3});
      psi = qcore::apply_unitary(psi, ch_bob, {0, 1, 2, 3});
      components.emplace_back(a.weight * b.weight, qcore::density_from_state(psi));
    }
  }
  return qcore::mix(components);
}

Distribution outcome_distribution(const DensityMatrix& rho) {
  if (rho.n_qubits() != 4) throw DimensionMismatch("outcome_distribution: expected a 4-qubit density matrix");
  const auto diag = qcore::measurement_probs(rho);
  std::array<double, kOutcomes> p{};
  for (std::size_t i = 0; i < kOutcomes; ++i) {
    if (diag[i] < -qcore::kPositivityTol) throw InvariantViolation("outcome_distribution: negative diagonal entry");
    p[i] = diag[i] < 0.0 ? 0.0 : diag[i];
  }
  return Distribution(p);
}

}  // namespace protocol
}  // namespace hardy
