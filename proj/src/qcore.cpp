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

#include "hardy/qcore.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "hardy/error.hpp"

namespace hardy::qcore {

namespace {

// Returns n such that dim == 2^n, or -1.
int log2_dim(Eigen::Index dim) {
  if (dim <= 0) return -1;
  const auto u = static_cast<unsigned long long>(dim);
  if (!std::has_single_bit(u)) return -1;
  return std::countr_zero(u);
}

int checked_qubits(Eigen::Index dim, const char* what) {
  const int n = log2_dim(dim);
  if (n < 1 || n > kMaxQubits) {
    std::ostringstream msg;
    msg << what << ": dimension " << dim << " is not 2^n for n in 1.." << kMaxQubits;
    throw InvariantViolation(msg.str());
  }
  return n;
}

bool all_finite(const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) return false;
  }
  return true;
}

// Bit of qubit q within an n-qubit basis index (qubit 0 is most significant).
constexpr std::size_t qubit_shift(int q, int n) { return static_cast<std::size_t>(n - 1 - q); }

void check_qubit_list(std::span<const int> qubits, int n, const char* what) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n) {
      throw InvalidArgument(std::string(what) + ": qubit index out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) throw InvalidArgument(std::string(what) + ": repeated qubit index");
    }
  }
}

}  // namespace

bool all_finite(const Matrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) return false;
    }
  }
  return true;
}

double hermitian_error(const Matrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_error(const Matrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  const Matrix id = Matrix::Identity(m.rows(), m.cols());
  return (m * m.adjoint() - id).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& hermitian) {
  // Symmetrize so the solver only ever sees an exactly Hermitian input.
  const Matrix h = 0.5 * (hermitian + hermitian.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  n_qubits_ = checked_qubits(amplitudes_.size(), "StateVector");
  if (!all_finite(amplitudes_)) throw InvariantViolation("StateVector: non-finite amplitude");
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "StateVector: squared norm " << norm2 << " differs from 1";
    throw InvariantViolation(msg.str());
  }
}

StateVector StateVector::basis(int n_qubits, std::size_t index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw InvalidArgument("StateVector::basis: bad qubit count");
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) throw InvalidArgument("StateVector::basis: index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(v));
}

// ---------------------------------------------------------------------------
// UnitaryMatrix

UnitaryMatrix::UnitaryMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || log2_dim(entries_.rows()) < 0) {
    throw InvariantViolation("UnitaryMatrix: not square with power-of-two dimension");
  }
  if (!all_finite(entries_)) throw InvariantViolation("UnitaryMatrix: non-finite entry");
  if (unitarity_error(entries_) > kUnitaryTol) throw InvariantViolation("UnitaryMatrix: U U^dagger != I");
}

UnitaryMatrix UnitaryMatrix::identity(int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return UnitaryMatrix(Matrix::Identity(dim, dim));
}

int UnitaryMatrix::n_qubits() const { return log2_dim(entries_.rows()); }

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw InvariantViolation("DensityMatrix: not square");
  n_qubits_ = checked_qubits(entries_.rows(), "DensityMatrix");
  if (!all_finite(entries_)) throw InvariantViolation("DensityMatrix: non-finite entry");
  if (hermitian_error(entries_) > kHermitianTol) throw InvariantViolation("DensityMatrix: not Hermitian");
  const Complex tr = entries_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) throw InvariantViolation("DensityMatrix: trace != 1");
  if (min_eigenvalue(entries_) < -kPositivityTol) {
    throw InvariantViolation("DensityMatrix: negative eigenvalue");
  }
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

// ---------------------------------------------------------------------------
// Tensor products

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

StateVector kron(const StateVector& a, const StateVector& b) {
  return StateVector(kron(a.amplitudes(), b.amplitudes()));
}

UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  return UnitaryMatrix(kron(a.entries(), b.entries()));
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.entries(), b.entries()));
}

// ---------------------------------------------------------------------------
// Gates

UnitaryMatrix identity2() { return UnitaryMatrix::identity(1); }

UnitaryMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix h(2, 2);
  h << s, s, s, -s;
  return UnitaryMatrix(std::move(h));
}

UnitaryMatrix pauli_x() {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  return UnitaryMatrix(std::move(x));
}

UnitaryMatrix pauli_z() {
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  return UnitaryMatrix(std::move(z));
}

UnitaryMatrix controlled_unitary(const UnitaryMatrix& u, int control, int target, int n_qubits) {
  if (u.dim() != 2) throw DimensionMismatch("controlled_unitary: u must be 2x2");
  if (n_qubits < 2 || n_qubits > kMaxQubits) throw InvalidArgument("controlled_unitary: bad qubit count");
  if (control == target) throw IndexClash("controlled_unitary: control and target coincide");
  if (control < 0 || control >= n_qubits || target < 0 || target >= n_qubits) {
    throw InvalidArgument("controlled_unitary: qubit index out of range");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t cbit = std::size_t{1} << qubit_shift(control, n_qubits);
  const std::size_t tshift = qubit_shift(target, n_qubits);
  const std::size_t tbit = std::size_t{1} << tshift;
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    if ((col & cbit) == 0) {
      m(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) = 1.0;
      continue;
    }
    const std::size_t in = (col >> tshift) & 1U;
    for (std::size_t out = 0; out < 2; ++out) {
      const std::size_t row = (col & ~tbit) | (out << tshift);
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          u.entries()(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in));
    }
  }
  return UnitaryMatrix(std::move(m));
}

StateVector apply_unitary(const StateVector& s, const UnitaryMatrix& u, std::span<const int> targets) {
  const int n = s.n_qubits();
  const std::size_t k = targets.size();
  if (k == 0 || u.dim() != (std::size_t{1} << k)) {
    throw DimensionMismatch("apply_unitary: unitary dimension does not match target count");
  }
  try {
    check_qubit_list(targets, n, "apply_unitary");
  } catch (const InvalidArgument& e) {
    throw DimensionMismatch(e.what());
  }

  // Local index of a global basis index: targets[0] is the local MSB.
  auto local_of = [&](std::size_t global) {
    std::size_t local = 0;
    for (std::size_t t = 0; t < k; ++t) {
      local = (local << 1) | ((global >> qubit_shift(targets[t], n)) & 1U);
    }
    return local;
  };
  auto with_local = [&](std::size_t global, std::size_t local) {
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t bit = std::size_t{1} << qubit_shift(targets[t], n);
      const std::size_t value = (local >> (k - 1 - t)) & 1U;
      global = value ? (global | bit) : (global & ~bit);
    }
    return global;
  };

  const std::size_t dim = s.dim();
  const std::size_t local_dim = u.dim();
  Vector out = Vector::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t row = local_of(i);
    Complex acc = 0.0;
    for (std::size_t col = 0; col < local_dim; ++col) {
      acc += u.entries()(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) * s[with_local(i, col)];
    }
    out(static_cast<Eigen::Index>(i)) = acc;
  }
  return StateVector(std::move(out));
}

StateVector apply_unitary(const StateVector& s, const UnitaryMatrix& u, std::initializer_list<int> targets) {
  return apply_unitary(s, u, std::span<const int>(targets.begin(), targets.size()));
}

Complex expectation(const StateVector& s, const Matrix& op) {
  if (op.rows() != static_cast<Eigen::Index>(s.dim()) || op.cols() != op.rows()) {
    throw DimensionMismatch("expectation: operator dimension does not match state");
  }
  return s.amplitudes().dot(op * s.amplitudes());
}

// ---------------------------------------------------------------------------
// Density matrices

DensityMatrix density_from_state(const StateVector& s) {
  return DensityMatrix(s.amplitudes() * s.amplitudes().adjoint());
}

DensityMatrix mix(std::span<const std::pair<double, DensityMatrix>> components) {
  if (components.empty()) throw BadWeights("mix: no components");
  const std::size_t dim = components.front().second.dim();
  double total = 0.0;
  for (const auto& [w, rho] : components) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw BadWeights("mix: negative or non-finite weight");
    if (rho.dim() != dim) throw BadWeights("mix: components have different dimensions");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw BadWeights("mix: weights do not sum to 1");
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix acc = Matrix::Zero(d, d);
  for (const auto& [w, rho] : components) acc += w * rho.entries();
  return DensityMatrix(std::move(acc));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  if (keep.empty()) throw EmptyKeep("partial_trace: nothing to keep");
  const int n = rho.n_qubits();
  check_qubit_list(keep, n, "partial_trace");

  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  const int nk = static_cast<int>(kept.size());
  const std::size_t kdim = std::size_t{1} << nk;
  const std::size_t tdim = std::size_t{1} << traced.size();

  // Global index assembled from a kept-register value and a traced-register value.
  auto global = [&](std::size_t kval, std::size_t tval) {
    std::size_t g = 0;
    for (int i = 0; i < nk; ++i) {
      if ((kval >> (nk - 1 - i)) & 1U) g |= std::size_t{1} << qubit_shift(kept[static_cast<std::size_t>(i)], n);
    }
    const int nt = static_cast<int>(traced.size());
    for (int i = 0; i < nt; ++i) {
      if ((tval >> (nt - 1 - i)) & 1U) g |= std::size_t{1} << qubit_shift(traced[static_cast<std::size_t>(i)], n);
    }
    return g;
  };

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(kdim), static_cast<Eigen::Index>(kdim));
  for (std::size_t r = 0; r < kdim; ++r) {
    for (std::size_t c = 0; c < kdim; ++c) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < tdim; ++t) acc += rho(global(r, t), global(c, t));
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

DensityMatrix dephase(const DensityMatrix& rho, std::span<const int> qubits) {
  const int n = rho.n_qubits();
  check_qubit_list(qubits, n, "dephase");
  std::size_t mask = 0;
  for (int q : qubits) mask |= std::size_t{1} << qubit_shift(q, n);
  Matrix out = rho.entries();
  const std::size_t dim = rho.dim();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (((r ^ c) & mask) != 0) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 0.0;
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix dephase(const DensityMatrix& rho, std::initializer_list<int> qubits) {
  return dephase(rho, std::span<const int>(qubits.begin(), qubits.size()));
}

std::vector<double> measurement_probs(const DensityMatrix& rho) {
  std::vector<double> probs(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) probs[i] = rho(i, i).real();
  return probs;
}

}  // namespace hardy::qcore
