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

#pragma once

#include <Eigen/Dense>

#include "su11/errors.hpp"

namespace su11 {

// Phase-space conventions: quadratures x = a + a^dagger, p = -i(a - a^dagger),
// ordered (x_a, p_a, x_b, p_b). Vacuum covariance is the identity and the
// per-mode symplectic form is [[0, 2], [-2, 0]].

template <int Modes>
using QuadMean = Eigen::Matrix<double, 2 * Modes, 1>;

template <int Modes>
using CovMatrix = Eigen::Matrix<double, 2 * Modes, 2 * Modes>;

template <int Modes>
CovMatrix<Modes> symplectic_form() {
  CovMatrix<Modes> omega = CovMatrix<Modes>::Zero();
  for (int m = 0; m < Modes; ++m) {
    omega(2 * m, 2 * m + 1) = 2.0;
    omega(2 * m + 1, 2 * m) = -2.0;
  }
  return omega;
}

// Result of the physicality checks on a covariance matrix.
struct CovarianceCheck {
  double asymmetry = 0.0;         // max |G_kl - G_lk|
  double min_eigenvalue = 0.0;    // of G
  double min_uncertainty = 0.0;   // smallest eigenvalue of G + i*Omega
  double uncertainty_tolerance = 0.0;

  bool symmetric() const { return asymmetry == 0.0; }
  bool positive_definite() const { return min_eigenvalue > 1e-12; }
  bool satisfies_uncertainty() const { return min_uncertainty >= -uncertainty_tolerance; }
  bool physical() const { return symmetric() && positive_definite() && satisfies_uncertainty(); }
};

template <int Modes>
CovarianceCheck check_covariance(const CovMatrix<Modes>& cov);

// Gaussian state of one or two optical modes. Construction validates that the
// mean is finite and that the covariance is symmetric, positive definite and
// obeys the uncertainty relation; violations throw InvariantError.
template <int Modes>
class GaussianState {
 public:
  GaussianState(const QuadMean<Modes>& mean, const CovMatrix<Modes>& cov);

  const QuadMean<Modes>& mean() const { return mean_; }
  const CovMatrix<Modes>& cov() const { return cov_; }

 private:
  QuadMean<Modes> mean_;
  CovMatrix<Modes> cov_;
};

using SingleModeState = GaussianState<1>;
using TwoModeState = GaussianState<2>;

extern template class GaussianState<1>;
extern template class GaussianState<2>;

// 4x4 real matrix preserving the two-mode symplectic form. The constructor
// checks S Omega S^T = Omega and det S = 1 with tolerances scaled by the
// matrix magnitude, throwing InvariantError otherwise.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(const Eigen::Matrix4d& entries);

  static SymplecticMatrix identity() { return SymplecticMatrix(Eigen::Matrix4d::Identity()); }

  const Eigen::Matrix4d& matrix() const { return entries_; }
  double operator()(int row, int col) const { return entries_(row, col); }

  // max |S Omega S^T - Omega|
  double symplectic_defect() const;

  friend SymplecticMatrix operator*(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs);

 private:
  Eigen::Matrix4d entries_;
};

SingleModeState vacuum_state();
SingleModeState thermal_state(double n_th);
SingleModeState squeezed_vacuum_state(double r);

// Direct sum: mode a first, mode b second.
TwoModeState tensor(const SingleModeState& mode_a, const SingleModeState& mode_b);

// Two-mode squeezer a -> a cosh g + e^{i theta} sinh g b^dagger. theta = 0 is the
// first OPA of the interferometer, theta = pi the second.
SymplecticMatrix two_mode_squeezer_symplectic(double g, double theta);

// Rotates each mode by phi/2.
SymplecticMatrix phase_shifter_symplectic(double phi);

// S_OPA2(g, pi) * S_phi(phi) * S_OPA1(g, 0), multiplied in extended precision.
SymplecticMatrix full_interferometer_symplectic(double g, double phi);

TwoModeState apply_symplectic(const SymplecticMatrix& s, const TwoModeState& state);

SingleModeState reduce_to_mode_b(const TwoModeState& state);

// exp(-m^T G^{-1} m) / sqrt(det G). Throws NumericalDomainError if det G <= 0.
double parity_expectation(const SingleModeState& state);

// Mean total photon number after the first OPA (theta = 0) acting on `input`.
double mean_photons_inside(const TwoModeState& input, double g);

// tr(G)/4 + |m|^2/4 - 1/2 summed over modes.
template <int Modes>
double mean_photon_number(const GaussianState<Modes>& state);

}  // namespace su11
