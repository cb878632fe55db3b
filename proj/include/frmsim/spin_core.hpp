// Copyright 2026 The frmsim Authors
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

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "frmsim/rng.hpp"

// Exact small-dimension complex algebra for polarization qubits.
//
// Basis convention used everywhere in this library:
//   sigma_3 eigenstates: |H> = (1,0), |V> = (0,1)
//   sigma_1 eigenstates: |L+-> = (|H> +- |V>)/sqrt(2)
//   sigma_2 eigenstates: |C+-> = (|H> +- i|V>)/sqrt(2)
// The Poincare sphere of polarization states is the Bloch sphere of this
// encoding; axis i of spin space is the sigma_i axis.

namespace frmsim {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;

/// Tolerance for algebraic identities on 2x2/4x4 double matrices.
inline constexpr double kAlgebraTol = 1e-12;
/// Eigenvalues above this floor count as non-negative.
inline constexpr double kPsdFloor = -1e-10;

/// Pauli matrix sigma_i; index 0 is the identity.
const Mat2& pauli(int i);

Mat4 kron(const Mat2& a, const Mat2& b);

/// Normalized single-photon polarization state.
class PureQubit {
 public:
  /// Amplitudes of |H> and |V>; must already satisfy |h|^2 + |v|^2 = 1.
  PureQubit(Complex amp_h, Complex amp_v);

  /// Builds the state after dividing by the norm; rejects the zero vector.
  static PureQubit normalized(Complex amp_h, Complex amp_v);

  Complex amp_h() const { return h_; }
  Complex amp_v() const { return v_; }
  Eigen::Vector2cd ket() const { return {h_, v_}; }
  Mat2 projector() const;

  /// The unique state orthogonal to this one (up to phase).
  PureQubit orthogonal() const;

  Complex overlap(const PureQubit& other) const;  // <this|other>

 private:
  Complex h_, v_;
};

PureQubit state_h();
PureQubit state_v();
PureQubit state_l(int sign);  // |L+-> for sign = +1 / -1
PureQubit state_c(int sign);  // |C+->

/// Bloch ("Poincare") vector components along sigma_1, sigma_2, sigma_3.
struct BlochVector {
  double r1 = 0.0, r2 = 0.0, r3 = 0.0;
  double norm() const { return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3); }
};

/// 2x2 density operator: Hermitian, unit trace, positive semidefinite.
class DensityMatrix1Q {
 public:
  explicit DensityMatrix1Q(const Mat2& m);

  const Mat2& matrix() const { return m_; }
  BlochVector bloch() const;
  double purity() const;

  static DensityMatrix1Q pure(const PureQubit& psi);
  static DensityMatrix1Q maximally_mixed();

 private:
  Mat2 m_;
};

/// 4x4 density operator for the photon pair; qubit 1 is the slow index.
class TwoQubitDensity {
 public:
  explicit TwoQubitDensity(const Mat4& m);

  const Mat4& matrix() const { return m_; }
  double purity() const;

 private:
  Mat4 m_;
};

/// 2x2 unitary (u dagger u = I within kAlgebraTol).
class Unitary2 {
 public:
  explicit Unitary2(const Mat2& u);

  const Mat2& matrix() const { return u_; }
  Unitary2 adjoint() const;
  friend Unitary2 operator*(const Unitary2& a, const Unitary2& b);

 private:
  Mat2 u_;
};

/// Unit rotation axis in spin space plus rotation angle (radians).
struct AxisAngle {
  AxisAngle(const Vec3& axis, double theta);
  Vec3 axis;
  double theta;
};

/// exp[i (theta/2) (n . sigma)] = cos(theta/2) I + i sin(theta/2) (n . sigma).
Unitary2 axis_angle_unitary(const AxisAngle& aa);

/// rho = (I + r . sigma) / 2; rejects ||r|| > 1.
DensityMatrix1Q density_from_bloch(const BlochVector& r);

/// u rho u^dagger.
DensityMatrix1Q apply_unitary(const DensityMatrix1Q& rho, const Unitary2& u);

/// (I x u) rho (I x u)^dagger — the channel acting on qubit 2 only.
TwoQubitDensity apply_to_qubit2(const TwoQubitDensity& rho, const Unitary2& u);

Mat2 partial_trace_qubit1(const Mat4& m);  // reduced state of qubit 2
Mat2 partial_trace_qubit2(const Mat4& m);  // reduced state of qubit 1

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2 in [0, 1].
double uhlmann_fidelity(const DensityMatrix1Q& a, const DensityMatrix1Q& b);
double uhlmann_fidelity(const TwoQubitDensity& a, const TwoQubitDensity& b);

/// min over phi of max_ij |u_ij - e^{i phi} v_ij|.
double phase_aligned_distance(const Unitary2& u, const Unitary2& v);

/// True iff u = e^{i phi} v for some phase, within tol elementwise.
bool equal_up_to_global_phase(const Unitary2& u, const Unitary2& v,
                              double tol = kAlgebraTol);

/// s(i, j) = Tr[rho (sigma_i x sigma_j)], i, j in 0..3.
Eigen::Matrix4d pauli_expectation_matrix(const TwoQubitDensity& rho);

/// Inverse of pauli_expectation_matrix: rho = (1/4) sum s(i,j) sigma_i x sigma_j.
TwoQubitDensity density_from_pauli_expectations(const Eigen::Matrix4d& s);

// --- sampling -------------------------------------------------------------

PureQubit haar_pure_qubit(Rng& rng);
Vec3 haar_axis(Rng& rng);
/// Haar-distributed SU(2) element (normalized quaternion construction).
Unitary2 haar_su2(Rng& rng);

}  // namespace frmsim
