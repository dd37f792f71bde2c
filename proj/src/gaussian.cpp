// Copyright 2026 The su11 Authors
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

#include "su11/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace su11 {
namespace {

using Matrix4ld = Eigen::Matrix<long double, 4, 4>;

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be finite");
  }
}

// Two-mode squeezer in extended precision. theta == pi is special-cased so the
// second-OPA matrix has exactly zero off-pattern entries (sin of the rounded pi
// is not zero).
Matrix4ld squeezer_ld(double g, double theta) {
  const long double c = std::cosh(static_cast<long double>(g));
  const long double s = std::sinh(static_cast<long double>(g));
  long double ct = std::cos(static_cast<long double>(theta));
  long double st = std::sin(static_cast<long double>(theta));
  if (theta == std::numbers::pi) {
    ct = -1.0L;
    st = 0.0L;
  }
  Matrix4ld m = Matrix4ld::Identity() * c;
  // Cross blocks couple (x_a, p_a) with (x_b, p_b).
  m(0, 2) = s * ct;
  m(0, 3) = s * st;
  m(1, 2) = s * st;
  m(1, 3) = -s * ct;
  m(2, 0) = s * ct;
  m(2, 1) = s * st;
  m(3, 0) = s * st;
  m(3, 1) = -s * ct;
  return m;
}

Matrix4ld phase_ld(long double phi) {
  const long double c = std::cos(phi / 2);
  const long double s = std::sin(phi / 2);
  Matrix4ld m = Matrix4ld::Zero();
  for (int mode = 0; mode < 2; ++mode) {
    const int k = 2 * mode;
    m(k, k) = c;
    m(k, k + 1) = -s;
    m(k + 1, k) = s;
    m(k + 1, k + 1) = c;
  }
  return m;
}

}  // namespace

template <int Modes>
CovarianceCheck check_covariance(const CovMatrix<Modes>& cov) {
  constexpr int kDim = 2 * Modes;
  CovarianceCheck check;
  check.asymmetry = (cov - cov.transpose()).cwiseAbs().maxCoeff();

  Eigen::SelfAdjointEigenSolver<CovMatrix<Modes>> real_solver(cov, Eigen::EigenvaluesOnly);
  check.min_eigenvalue = real_solver.eigenvalues().minCoeff();

  // [x, p] = 2i, so the bound is cov + i Omega / 2 >= 0 (vacuum saturates it).
  using ComplexMatrix = Eigen::Matrix<std::complex<double>, kDim, kDim>;
  const ComplexMatrix hermitian =
      cov.template cast<std::complex<double>>() +
      std::complex<double>(0.0, 0.5) * symplectic_form<Modes>().template cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> complex_solver(hermitian, Eigen::EigenvaluesOnly);
  check.min_uncertainty = complex_solver.eigenvalues().minCoeff();
  check.uncertainty_tolerance = 1e-9 * std::max(1.0, cov.cwiseAbs().maxCoeff());
  return check;
}

template CovarianceCheck check_covariance<1>(const CovMatrix<1>&);
template CovarianceCheck check_covariance<2>(const CovMatrix<2>&);

template <int Modes>
GaussianState<Modes>::GaussianState(const QuadMean<Modes>& mean, const CovMatrix<Modes>& cov)
    : mean_(mean), cov_(cov) {
  if (!mean_.allFinite() || !cov_.allFinite()) {
    throw InvariantError("Gaussian state has non-finite entries");
  }
  const CovarianceCheck check = check_covariance<Modes>(cov_);
  if (!check.symmetric()) {
    throw InvariantError("covariance matrix is not symmetric");
  }
  if (!check.positive_definite()) {
    throw InvariantError("covariance matrix is not positive definite (min eigenvalue " +
                         std::to_string(check.min_eigenvalue) + ")");
  }
  if (!check.satisfies_uncertainty()) {
    throw InvariantError("covariance matrix violates the uncertainty relation (min eigenvalue " +
                         std::to_string(check.min_uncertainty) + ")");
  }
}

template class GaussianState<1>;
template class GaussianState<2>;

SymplecticMatrix::SymplecticMatrix(const Eigen::Matrix4d& entries) : entries_(entries) {
  if (!entries_.allFinite()) {
    throw InvariantError("symplectic matrix has non-finite entries");
  }
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  if (symplectic_defect() > 1e-12 * scale * scale) {
    throw InvariantError("matrix does not preserve the symplectic form");
  }
  const double det = entries_.determinant();
  if (std::abs(det - 1.0) > 1e-12 * std::pow(scale, 4)) {
    throw InvariantError("symplectic matrix determinant differs from 1");
  }
}

double SymplecticMatrix::symplectic_defect() const {
  const Eigen::Matrix4d omega = symplectic_form<2>();
  return (entries_ * omega * entries_.transpose() - omega).cwiseAbs().maxCoeff();
}

SymplecticMatrix operator*(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs) {
  const Matrix4ld product = lhs.entries_.cast<long double>() * rhs.entries_.cast<long double>();
  return SymplecticMatrix(product.cast<double>());
}

SingleModeState vacuum_state() {
  return SingleModeState(QuadMean<1>::Zero(), CovMatrix<1>::Identity());
}

SingleModeState thermal_state(double n_th) {
  require_finite(n_th, "n_th");
  if (n_th < 0.0) throw DomainError("n_th must be non-negative");
  return SingleModeState(QuadMean<1>::Zero(), CovMatrix<1>::Identity() * (2.0 * n_th + 1.0));
}

SingleModeState squeezed_vacuum_state(double r) {
  require_finite(r, "r");
  if (r < 0.0) throw DomainError("r must be non-negative");
  CovMatrix<1> cov = CovMatrix<1>::Zero();
  cov(0, 0) = std::exp(2.0 * r);
  cov(1, 1) = std::exp(-2.0 * r);
  return SingleModeState(QuadMean<1>::Zero(), cov);
}

TwoModeState tensor(const SingleModeState& mode_a, const SingleModeState& mode_b) {
  QuadMean<2> mean;
  mean << mode_a.mean(), mode_b.mean();
  CovMatrix<2> cov = CovMatrix<2>::Zero();
  cov.topLeftCorner<2, 2>() = mode_a.cov();
  cov.bottomRightCorner<2, 2>() = mode_b.cov();
  return TwoModeState(mean, cov);
}

SymplecticMatrix two_mode_squeezer_symplectic(double g, double theta) {
  require_finite(g, "g");
  require_finite(theta, "theta");
  if (g < 0.0) throw DomainError("g must be non-negative");
  return SymplecticMatrix(squeezer_ld(g, theta).cast<double>());
}

SymplecticMatrix phase_shifter_symplectic(double phi) {
  require_finite(phi, "phi");
  return SymplecticMatrix(phase_ld(phi).cast<double>());
}

SymplecticMatrix full_interferometer_symplectic(double g, double phi) {
  require_finite(g, "g");
  require_finite(phi, "phi");
  if (g < 0.0) throw DomainError("g must be non-negative");
  const Matrix4ld product = squeezer_ld(g, std::numbers::pi) * phase_ld(phi) * squeezer_ld(g, 0.0);
  return SymplecticMatrix(product.cast<double>());
}

TwoModeState apply_symplectic(const SymplecticMatrix& s, const TwoModeState& state) {
  const Matrix4ld sl = s.matrix().cast<long double>();
  const Eigen::Matrix<long double, 4, 1> mean = sl * state.mean().cast<long double>();
  Matrix4ld cov = sl * state.cov().cast<long double>() * sl.transpose();
  cov = (0.5L * (cov + cov.transpose())).eval();
  return TwoModeState(mean.cast<double>(), cov.cast<double>());
}

SingleModeState reduce_to_mode_b(const TwoModeState& state) {
  return SingleModeState(state.mean().tail<2>(), state.cov().bottomRightCorner<2, 2>());
}

double parity_expectation(const SingleModeState& state) {
  const CovMatrix<1>& cov = state.cov();
  const double det = cov.determinant();
  if (!(det > 0.0)) {
    throw NumericalDomainError("singular covariance in parity expectation");
  }
  const QuadMean<1>& m = state.mean();
  const double exponent = m.dot(cov.inverse() * m);
  return std::exp(-exponent) / std::sqrt(det);
}

template <int Modes>
double mean_photon_number(const GaussianState<Modes>& state) {
  double total = 0.0;
  for (int mode = 0; mode < Modes; ++mode) {
    const int k = 2 * mode;
    const double trace = state.cov()(k, k) + state.cov()(k + 1, k + 1);
    const double mean_sq = state.mean().template segment<2>(k).squaredNorm();
    total += trace / 4.0 + mean_sq / 4.0 - 0.5;
  }
  return total;
}

template double mean_photon_number<1>(const GaussianState<1>&);
template double mean_photon_number<2>(const GaussianState<2>&);

double mean_photons_inside(const TwoModeState& input, double g) {
  return mean_photon_number(apply_symplectic(two_mode_squeezer_symplectic(g, 0.0), input));
}

}  // namespace su11
