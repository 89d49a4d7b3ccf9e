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

// Random instance generators and independent oracles shared by the unit and
// acceptance tests.

#ifndef HARDY_TESTS_TEST_SUPPORT_HPP_
#define HARDY_TESTS_TEST_SUPPORT_HPP_

#include <array>
#include <cmath>
#include <random>

#include <Eigen/QR>

#include "hardy/lhv.hpp"
#include "hardy/protocol.hpp"
#include "hardy/qcore.hpp"

namespace hardy::testkit {

using qcore::Complex;
using qcore::Matrix;
using qcore::Vector;

inline Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng), g(rng)};
}

inline Vector random_unit_vector(std::mt19937_64& rng, int n_qubits) {
  Vector v(Eigen::Index{1} << n_qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = random_complex(rng);
  return v / v.norm();
}

inline qcore::StateVector random_state(std::mt19937_64& rng, int n_qubits) {
  return qcore::StateVector(random_unit_vector(rng, n_qubits));
}

/// Haar-ish unitary: Q factor of a complex Gaussian matrix.
inline qcore::UnitaryMatrix random_unitary(std::mt19937_64& rng, int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix a(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) a(r, c) = random_complex(rng);
  }
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  return qcore::UnitaryMatrix(std::move(q));
}

/// Random mixed state A A^dagger / tr.
inline qcore::DensityMatrix random_density(std::mt19937_64& rng, int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix a(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) a(r, c) = random_complex(rng);
  }
  Matrix rho = a * a.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint());
  return qcore::DensityMatrix(std::move(rho));
}

/// The diagonal of the final state written out from its block
/// structure: prefactor 1/4 per (q1,q2) block times (1/2, 1/4, 1/4, 0) placed
/// per block. Indexed by OutcomeQuadruple::basis_index().
inline std::array<double, 16> frozen_final_diagonal() {
  return {
      0.125, 0.0625, 0.0625, 0.0,    // q1q2 = 00: 1/2 on 00, 1/4 on 01 and 10
      0.0,   0.0625, 0.0625, 0.125,  // q1q2 = 01: 1/2 on 11
      0.0,   0.0625, 0.0625, 0.125,  // q1q2 = 10: 1/2 on 11
      0.125, 0.0625, 0.0625, 0.0,    // q1q2 = 11: 1/2 on 00
  };
}

/// Independent oracle for the outcome distribution: enumerates the four
/// classical basis-choice branches and applies the local Hadamards to the
/// two-qubit amplitudes with hand-written 2x2 arithmetic.
inline std::array<double, 16> branch_oracle_diagonal(const std::array<double, 4>& pair_amps, double p_z) {
  const double s = 1.0 / std::sqrt(2.0);
  std::array<double, 16> out{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double w = (a == 0 ? p_z : 1.0 - p_z) * (b == 0 ? p_z : 1.0 - p_z);
      std::array<double, 4> amp = pair_amps;  // index = q1*2 + q2
      if (a == 1) {  // H on Q1
        const std::array<double, 4> t = amp;
        amp[0] = s * (t[0] + t[2]);
        amp[1] = s * (t[1] + t[3]);
        amp[2] = s * (t[0] - t[2]);
        amp[3] = s * (t[1] - t[3]);
      }
      if (b == 1) {  // H on Q2
        const std::array<double, 4> t = amp;
        amp[0] = s * (t[0] + t[1]);
        amp[1] = s * (t[0] - t[1]);
        amp[2] = s * (t[2] + t[3]);
        amp[3] = s * (t[2] - t[3]);
      }
      for (int q12 = 0; q12 < 4; ++q12) out[static_cast<std::size_t>(q12 * 4 + a * 2 + b)] += w * amp[q12] * amp[q12];
    }
  }
  return out;
}

/// Distribution transcribed from frozen_final_diagonal().
inline Distribution transcribed_final_distribution() { return Distribution(frozen_final_diagonal()); }

/// d(q1,q2,f(q1),g(q2)) = 1/4.
inline Distribution strategy_distribution(const lhv::DeterministicStrategy& s) {
  std::array<double, 16> p{};
  for (Sign q1 : kSigns) {
    for (Sign q2 : kSigns) {
      OutcomeQuadruple o{{q1, q2, s.f[bit(q1)], s.g[bit(q2)]}};
      p[o.basis_index()] += 0.25;
    }
  }
  return Distribution(p);
}

}  // namespace hardy::testkit

#endif  // HARDY_TESTS_TEST_SUPPORT_HPP_
