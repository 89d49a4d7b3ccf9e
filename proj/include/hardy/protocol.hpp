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

// The four-qubit "basis choice as a qubit" experiment.
//
// Alice holds Q1 (half of an entangled pair) and Q3 (her basis-choice
// register); Bob holds Q2 and Q4. A choice register reading |0> means the
// Z basis was used, |1> means X (a Hadamard was applied to the partner qubit
// before a Z measurement). Measured values use the sign convention
// +1 <-> |0>, -1 <-> |1>, so for Q3/Q4 +1 means "Z chosen".

#ifndef HARDY_PROTOCOL_HPP_
#define HARDY_PROTOCOL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/qcore.hpp"

namespace hardy {

/// A measured +-1 value.
enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

inline constexpr std::array<Sign, 2> kSigns = {Sign::Plus, Sign::Minus};

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
/// 0 for +1, 1 for -1: the computational-basis bit.
constexpr std::size_t bit(Sign s) { return s == Sign::Plus ? 0U : 1U; }
constexpr Sign sign_of_bit(std::size_t b) { return b == 0 ? Sign::Plus : Sign::Minus; }
constexpr char symbol(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// The four registers, in tensor order.
enum class Var : std::uint8_t { Q1 = 0, Q2 = 1, Q3 = 2, Q4 = 3 };

inline constexpr std::array<Var, 4> kVars = {Var::Q1, Var::Q2, Var::Q3, Var::Q4};

constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }
std::string_view name(Var v);

/// Joint measurement result (q1, q2, q3, q4).
struct OutcomeQuadruple {
  std::array<Sign, 4> values{Sign::Plus, Sign::Plus, Sign::Plus, Sign::Plus};

  Sign operator[](Var v) const { return values[index(v)]; }

  /// Basis index q1*8 + q2*4 + q3*2 + q4 with +1 -> 0, -1 -> 1.
  std::size_t basis_index() const;
  static OutcomeQuadruple from_index(std::size_t i);
  /// "+-+-" style label.
  std::string label() const;

  friend bool operator==(const OutcomeQuadruple&, const OutcomeQuadruple&) = default;
};

inline constexpr std::size_t kOutcomes = 16;

/// Probability table over the 16 outcome quadruples, indexed by basis_index().
class Distribution {
 public:
  /// Throws InvariantViolation if an entry is negative or non-finite, or the
  /// total differs from 1 by more than 1e-12.
  explicit Distribution(std::array<double, kOutcomes> probs);

  static Distribution uniform();
  static Distribution point_mass(const OutcomeQuadruple& o);

  double operator[](std::size_t i) const { return probs_[i]; }
  double operator[](const OutcomeQuadruple& o) const { return probs_[o.basis_index()]; }
  const std::array<double, kOutcomes>& probs() const { return probs_; }

 private:
  std::array<double, kOutcomes> probs_;
};

namespace protocol {

/// How a party picks between Z and X.
enum class ChoiceMode {
  /// Register prepared in sqrt(p)|0> + sqrt(1-p)|1>, gate applied as a
  /// controlled-H, all measurements deferred to the end.
  Coherent,
  /// Classical coin: register set to |0> or |1> and H applied accordingly.
  Coin,
};

std::string_view name(ChoiceMode m);
/// Throws InvalidArgument for anything other than "coherent" / "coin".
ChoiceMode parse_choice_mode(std::string_view s);

/// Named two-qubit states accepted as Scenario::initial_state.
inline constexpr std::string_view kDefaultState = "eq2-singlet-like";
std::vector<std::string_view> known_states();
/// Throws InvalidArgument on an unknown name.
qcore::StateVector initial_state(std::string_view name);

struct Scenario {
  std::string initial_state{kDefaultState};
  ChoiceMode alice_mode = ChoiceMode::Coherent;
  ChoiceMode bob_mode = ChoiceMode::Coherent;
  /// Probability that a party chooses Z. The same for both parties.
  double choice_prob = 0.5;

  /// Throws InvalidArgument if choice_prob is outside [0, 1] or the state is unknown.
  void validate() const;
};

/// (|00> - |11>) / sqrt 2 on Q1 Q2.
qcore::StateVector bell_state();

/// Final Q1 Q2 Q3 Q4 density matrix of the experiment.
qcore::DensityMatrix build_final_density(const Scenario& s);

/// Reads the 16 diagonal entries under the sign encoding. Diagonal entries in
/// [-1e-10, 0) are clamped to zero; larger negative entries throw.
Distribution outcome_distribution(const qcore::DensityMatrix& rho);

}  // namespace protocol
}  // namespace hardy

#endif  // HARDY_PROTOCOL_HPP_
