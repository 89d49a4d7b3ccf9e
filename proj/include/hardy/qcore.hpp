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

// Dense complex linear algebra for registers of 1..4 qubits.
//
// Qubit 0 is the most significant bit of a basis index, so for four qubits
// index = q0*8 + q1*4 + q2*2 + q3 with bit value 0 <-> |0>. This matches the
// left-to-right order of written tensor products.

#ifndef HARDY_QCORE_HPP_
#define HARDY_QCORE_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace hardy::qcore {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 4;

/// Tolerances used to validate the value types below.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;

/// Normalized pure state of 1..4 qubits.
class StateVector {
 public:
  /// Throws InvariantViolation if the length is not 2^n for n in 1..4, if an
  /// amplitude is not finite or if the norm is off by more than kNormTol.
  explicit StateVector(Vector amplitudes);

  /// Computational basis state |index> on n qubits.
  static StateVector basis(int n_qubits, std::size_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

 private:
  int n_qubits_;
  Vector amplitudes_;
};

/// Square unitary of power-of-two dimension.
class UnitaryMatrix {
 public:
  /// Throws InvariantViolation unless U U^dagger = I entrywise within kUnitaryTol.
  explicit UnitaryMatrix(Matrix entries);

  static UnitaryMatrix identity(int n_qubits);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  int n_qubits() const;
  const Matrix& entries() const { return entries_; }

 private:
  Matrix entries_;
};

/// Hermitian, unit-trace, positive semidefinite matrix on 1..4 qubits.
class DensityMatrix {
 public:
  /// Validates Hermiticity, trace and minimum eigenvalue (>= -kPositivityTol).
  explicit DensityMatrix(Matrix entries);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  Complex trace() const { return entries_.trace(); }
  /// trace(rho^2)
  double purity() const;

 private:
  int n_qubits_;
  Matrix entries_;
};

// Checks shared by the constructors above; exposed for property tests.
bool all_finite(const Matrix& m);
double hermitian_error(const Matrix& m);
double unitarity_error(const Matrix& m);
double min_eigenvalue(const Matrix& hermitian);

/// Tensor product a (x) b. Operand order is preserved: a occupies the
/// high-order index bits.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);
StateVector kron(const StateVector& a, const StateVector& b);
UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b);
DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

UnitaryMatrix identity2();
/// (1/sqrt 2) [[1, 1], [1, -1]]
UnitaryMatrix hadamard();
UnitaryMatrix pauli_x();
UnitaryMatrix pauli_z();

/// Full n-qubit unitary acting as `u` on `target` when `control` is |1> and as
/// the identity otherwise. Throws IndexClash if control == target and
/// InvalidArgument if either index is out of range.
UnitaryMatrix controlled_unitary(const UnitaryMatrix& u, int control, int target, int n_qubits);

/// Applies `u` to the listed qubits. targets[0] is the most significant qubit
/// of u's index. Throws DimensionMismatch if u.dim() != 2^targets.size() or
/// the targets are repeated or out of range.
StateVector apply_unitary(const StateVector& s, const UnitaryMatrix& u, std::span<const int> targets);
StateVector apply_unitary(const StateVector& s, const UnitaryMatrix& u, std::initializer_list<int> targets);

/// <s| op |s> for a Hermitian or general operator of matching dimension.
Complex expectation(const StateVector& s, const Matrix& op);

DensityMatrix density_from_state(const StateVector& s);

/// Convex combination. Throws BadWeights on negative weights, weights not
/// summing to one within 1e-12, an empty list or mismatched dimensions.
DensityMatrix mix(std::span<const std::pair<double, DensityMatrix>> components);

/// Reduced state on `keep` (kept qubits retain their relative order). Throws
/// EmptyKeep if keep is empty, InvalidArgument if an index is out of range.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep);

/// Zeroes every entry whose row and column indices differ on any of `qubits`.
DensityMatrix dephase(const DensityMatrix& rho, std::span<const int> qubits);
DensityMatrix dephase(const DensityMatrix& rho, std::initializer_list<int> qubits);

/// Real diagonal of rho: the computational-basis outcome probabilities.
std::vector<double> measurement_probs(const DensityMatrix& rho);

}  // namespace hardy::qcore

#endif  // HARDY_QCORE_HPP_
