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

#include "su11/gaussian.hpp"

namespace su11 {

// Physical knobs of the interferometer. Both OPAs share the gain g, the first
// pumped at theta = 0 and the second at theta = pi; each arm picks up phi/2.
struct InterferometerConfig {
  double g = 0.0;     // parametric strength
  double r = 0.0;     // squeezing of the mode-b input
  double n_th = 0.0;  // thermal photons in the mode-a input
  double phi = 0.0;   // total phase, radians

  // Throws DomainError unless every field is finite and g, r, n_th >= 0.
  void validate() const;
};

// Distinct entries of the symmetric output covariance. gamma_12 is identically
// zero and omitted.
struct GammaEntries {
  double g11 = 0.0;
  double g13 = 0.0;
  double g14 = 0.0;
  double g22 = 0.0;
  double g23 = 0.0;
  double g24 = 0.0;
  double g33 = 0.0;
  double g34 = 0.0;
  double g44 = 0.0;
};

struct SensitivityReport {
  double delta_phi = 0.0;
  double parity = 0.0;
  double delta_parity = 0.0;
  double slope = 0.0;
  double n_bar = 0.0;
  double snl = 0.0;
  double hl = 0.0;
  double n_opa = 0.0;
  double n_s = 0.0;
};

// Spontaneously emitted photons of one OPA, 2 sinh^2 g.
double n_opa(double g);
// Photons in a squeezed vacuum, sinh^2 r.
double n_squeezed(double r);

double n_inside(const InterferometerConfig& cfg);

// Shot-noise and Heisenberg limits; UndefinedLimitError when n_inside is 0.
double snl(const InterferometerConfig& cfg);
double hl(const InterferometerConfig& cfg);

// Closed-form output covariance entries.
GammaEntries gamma_entries(const InterferometerConfig& cfg);

// The same entries obtained by propagating the input covariance through the
// symplectic matrices.
GammaEntries gamma_entries_from_propagation(const InterferometerConfig& cfg);

// Denominator T of the parity signal <Pi_b> = 8 / sqrt(T). Evaluated as
// 64 + (T - 64) with the phi-dependent part in factored form, which keeps full
// relative precision when the large cosh(8g) terms cancel.
double parity_denominator(const InterferometerConfig& cfg);

// T - 64, non-negative; zero at phi = 0 and at g = 0.
double parity_denominator_excess(const InterferometerConfig& cfg);

// T written out term by term. Loses precision for large g near phi = 0; kept as a
// transcription check for parity_denominator.
double parity_denominator_literal(const InterferometerConfig& cfg);

double parity_signal(const InterferometerConfig& cfg);

// 1 / sqrt(det Gamma_22) via propagation of the Gaussian state.
double parity_signal_from_propagation(const InterferometerConfig& cfg);

// sqrt(1 - <Pi_b>^2).
double delta_parity(const InterferometerConfig& cfg);

// d<Pi_b>/dphi, signed.
double signal_derivative(const InterferometerConfig& cfg);

// |d<Pi_b>/dphi|.
double signal_slope(const InterferometerConfig& cfg);

// Phase sensitivity delta_parity / signal_slope. At phi == 0 exactly the 0/0 form
// is replaced by its limit sensitivity_phi0. Throws BlindSpotError when the slope
// vanishes.
double phase_sensitivity(const InterferometerConfig& cfg);

// Closed-form sensitivity at phi = 0 (phi in cfg is ignored). BlindSpotError at g = 0.
double sensitivity_phi0(const InterferometerConfig& cfg);

// Thermal photon number (sinh^2 g - n_s) / cosh^2(2g). May be negative.
double optimal_thermal_photons(double g, double n_s);
double optimal_thermal_photons_clamped(double g, double n_s);

SensitivityReport build_report(const InterferometerConfig& cfg);

}  // namespace su11
