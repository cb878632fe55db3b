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

#include "frmsim/spin_core.hpp"

#include <cmath>
#include <stdexcept>

namespace frmsim {

namespace {

constexpr Complex kI{0.0, 1.0};

template <typename M>
void check_density(const M& m, const char* what) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol) {
    throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian");
  }
  if (std::abs(m.trace().real() - 1.0) > kAlgebraTol ||
      std::abs(m.trace().imag()) > kAlgebraTol) {
    throw std::invalid_argument(std::string(what) + ": trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<M> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kPsdFloor) {
    throw std::invalid_argument(std::string(what) +
                                ": negative eigenvalue, state is not PSD");
  }
}

// sqrt of a Hermitian PSD matrix; tiny negative eigenvalues are clamped.
template <typename M>
M sqrt_psd(const M& m) {
  Eigen::SelfAdjointEigenSolver<M> es(m);
  auto ev = es.eigenvalues();
  M d = M::Zero();
  for (int k = 0; k < ev.size(); ++k) {
    d(k, k) = std::sqrt(std::max(0.0, ev(k)));
  }
  return es.eigenvectors() * d * es.eigenvectors().adjoint();
}

template <typename M>
double fidelity_impl(const M& a, const M& b) {
  M ra = sqrt_psd(a);
  Eigen::SelfAdjointEigenSolver<M> es(M(ra * b * ra), Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    sum += std::sqrt(std::max(0.0, es.eigenvalues()(k)));
  }
  double f = sum * sum;
  return f < 0.0 ? 0.0 : (f > 1.0 ? 1.0 : f);
}

}  // namespace

const Mat2& pauli(int i) {
  static const Mat2 sigma[4] = {
      (Mat2() << 1, 0, 0, 1).finished(),
      (Mat2() << 0, 1, 1, 0).finished(),
      (Mat2() << 0, -kI, kI, 0).finished(),
      (Mat2() << 1, 0, 0, -1).finished(),
  };
  if (i < 0 || i > 3) throw std::invalid_argument("pauli: index out of range");
  return sigma[i];
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

PureQubit::PureQubit(Complex amp_h, Complex amp_v) : h_(amp_h), v_(amp_v) {
  if (std::abs(std::norm(h_) + std::norm(v_) - 1.0) > kAlgebraTol) {
    throw std::invalid_argument("PureQubit: amplitudes are not normalized");
  }
}

PureQubit PureQubit::normalized(Complex amp_h, Complex amp_v) {
  double n = std::sqrt(std::norm(amp_h) + std::norm(amp_v));
  if (n == 0.0) {
    throw std::invalid_argument("PureQubit: zero vector cannot be normalized");
  }
  return PureQubit(amp_h / n, amp_v / n);
}

Mat2 PureQubit::projector() const {
  Eigen::Vector2cd k = ket();
  return k * k.adjoint();
}

PureQubit PureQubit::orthogonal() const {
  return PureQubit(-std::conj(v_), std::conj(h_));
}

Complex PureQubit::overlap(const PureQubit& other) const {
  return std::conj(h_) * other.h_ + std::conj(v_) * other.v_;
}

PureQubit state_h() { return PureQubit(1.0, 0.0); }
PureQubit state_v() { return PureQubit(0.0, 1.0); }

PureQubit state_l(int sign) {
  return PureQubit::normalized(1.0, sign >= 0 ? 1.0 : -1.0);
}

PureQubit state_c(int sign) {
  return PureQubit::normalized(1.0, sign >= 0 ? kI : -kI);
}

DensityMatrix1Q::DensityMatrix1Q(const Mat2& m) : m_(m) {
  check_density(m_, "DensityMatrix1Q");
}

BlochVector DensityMatrix1Q::bloch() const {
  BlochVector r;
  r.r1 = (m_ * pauli(1)).trace().real();
  r.r2 = (m_ * pauli(2)).trace().real();
  r.r3 = (m_ * pauli(3)).trace().real();
  return r;
}

double DensityMatrix1Q::purity() const { return (m_ * m_).trace().real(); }

DensityMatrix1Q DensityMatrix1Q::pure(const PureQubit& psi) {
  return DensityMatrix1Q(psi.projector());
}

DensityMatrix1Q DensityMatrix1Q::maximally_mixed() {
  return DensityMatrix1Q(0.5 * Mat2::Identity());
}

TwoQubitDensity::TwoQubitDensity(const Mat4& m) : m_(m) {
  check_density(m_, "TwoQubitDensity");
}

double TwoQubitDensity::purity() const { return (m_ * m_).trace().real(); }

Unitary2::Unitary2(const Mat2& u) : u_(u) {
  if ((u_.adjoint() * u_ - Mat2::Identity()).cwiseAbs().maxCoeff() >
      kAlgebraTol) {
    throw std::invalid_argument("Unitary2: matrix is not unitary");
  }
}

Unitary2 Unitary2::adjoint() const { return Unitary2(Mat2(u_.adjoint())); }

Unitary2 operator*(const Unitary2& a, const Unitary2& b) {
  return Unitary2(Mat2(a.u_ * b.u_));
}

AxisAngle::AxisAngle(const Vec3& n, double angle) : axis(n), theta(angle) {
  if (std::abs(axis.norm() - 1.0) > kAlgebraTol) {
    throw std::invalid_argument("AxisAngle: axis is not a unit vector");
  }
}

Unitary2 axis_angle_unitary(const AxisAngle& aa) {
  Mat2 ns = aa.axis(0) * pauli(1) + aa.axis(1) * pauli(2) + aa.axis(2) * pauli(3);
  double half = 0.5 * aa.theta;
  return Unitary2(Mat2(std::cos(half) * Mat2::Identity() +
                       kI * std::sin(half) * ns));
}

DensityMatrix1Q density_from_bloch(const BlochVector& r) {
  if (r.norm() > 1.0 + 1e-10) {
    throw std::invalid_argument(
        "density_from_bloch: vector lies outside the unit sphere");
  }
  Mat2 m = 0.5 * (Mat2::Identity() + r.r1 * pauli(1) + r.r2 * pauli(2) +
                  r.r3 * pauli(3));
  return DensityMatrix1Q(m);
}

DensityMatrix1Q apply_unitary(const DensityMatrix1Q& rho, const Unitary2& u) {
  return DensityMatrix1Q(Mat2(u.matrix() * rho.matrix() * u.matrix().adjoint()));
}

TwoQubitDensity apply_to_qubit2(const TwoQubitDensity& rho, const Unitary2& u) {
  Mat4 big = kron(Mat2::Identity(), u.matrix());
  return TwoQubitDensity(Mat4(big * rho.matrix() * big.adjoint()));
}

Mat2 partial_trace_qubit1(const Mat4& m) {
  Mat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = m(i, j) + m(2 + i, 2 + j);
  return out;
}

Mat2 partial_trace_qubit2(const Mat4& m) {
  Mat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  return out;
}

double uhlmann_fidelity(const DensityMatrix1Q& a, const DensityMatrix1Q& b) {
  return fidelity_impl(a.matrix(), b.matrix());
}

double uhlmann_fidelity(const TwoQubitDensity& a, const TwoQubitDensity& b) {
  return fidelity_impl(a.matrix(), b.matrix());
}

double phase_aligned_distance(const Unitary2& u, const Unitary2& v) {
  Complex z = (v.matrix().adjoint() * u.matrix()).trace();
  if (std::abs(z) < kAlgebraTol) {
    // No preferred phase; any alignment is as good as any other.
    return (u.matrix() - v.matrix()).cwiseAbs().maxCoeff();
  }
  Complex phase = z / std::abs(z);
  return (u.matrix() - phase * v.matrix()).cwiseAbs().maxCoeff();
}

bool equal_up_to_global_phase(const Unitary2& u, const Unitary2& v, double tol) {
  return phase_aligned_distance(u, v) <= tol;
}

Eigen::Matrix4d pauli_expectation_matrix(const TwoQubitDensity& rho) {
  Eigen::Matrix4d s;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      s(i, j) = (rho.matrix() * kron(pauli(i), pauli(j))).trace().real();
  return s;
}

TwoQubitDensity density_from_pauli_expectations(const Eigen::Matrix4d& s) {
  Mat4 m = Mat4::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m += 0.25 * s(i, j) * kron(pauli(i), pauli(j));
  return TwoQubitDensity(m);
}

PureQubit haar_pure_qubit(Rng& rng) {
  for (;;) {
    Complex h{rng.normal(), rng.normal()};
    Complex v{rng.normal(), rng.normal()};
    double n = std::sqrt(std::norm(h) + std::norm(v));
    if (n > 1e-12) return PureQubit(h / n, v / n);
  }
}

Vec3 haar_axis(Rng& rng) {
  for (;;) {
    Vec3 n{rng.normal(), rng.normal(), rng.normal()};
    if (n.norm() > 1e-12) return n / n.norm();
  }
}

Unitary2 haar_su2(Rng& rng) {
  for (;;) {
    double w = rng.normal(), x = rng.normal(), y = rng.normal(), z = rng.normal();
    double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (n <= 1e-12) continue;
    w /= n, x /= n, y /= n, z /= n;
    return Unitary2(Mat2(w * Mat2::Identity() +
                         kI * (x * pauli(1) + y * pauli(2) + z * pauli(3))));
  }
}

}  // namespace frmsim
