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

#include "su11/model.hpp"

#include <cmath>

namespace su11 {
namespace {

double sq(double x) { return x * x; }

}  // namespace

void InterferometerConfig::validate() const {
  if (!std::isfinite(g) || !std::isfinite(r) || !std::isfinite(n_th) || !std::isfinite(phi)) {
    throw DomainError("interferometer parameters must be finite");
  }
  if (g < 0.0) throw DomainError("g must be non-negative");
  if (r < 0.0) throw DomainError("r must be non-negative");
  if (n_th < 0.0) throw DomainError("n_th must be non-negative");
}

double n_opa(double g) { return 2.0 * sq(std::sinh(g)); }

double n_squeezed(double r) { return sq(std::sinh(r)); }

double n_inside(const InterferometerConfig& cfg) {
  cfg.validate();
  const double amplified = n_opa(cfg.g);
  return (amplified + 1.0) * (cfg.n_th + n_squeezed(cfg.r)) + amplified;
}

double snl(const InterferometerConfig& cfg) {
  const double n = n_inside(cfg);
  if (!(n > 0.0)) throw UndefinedLimitError("shot-noise limit undefined with no photons inside");
  return 1.0 / std::sqrt(n);
}

double hl(const InterferometerConfig& cfg) {
  const double n = n_inside(cfg);
  if (!(n > 0.0)) throw UndefinedLimitError("Heisenberg limit undefined with no photons inside");
  return 1.0 / n;
}

GammaEntries gamma_entries(const InterferometerConfig& cfg) {
  cfg.validate();
  const double g = cfg.g;
  const double r = cfg.r;
  const double n = cfg.n_th;
  const double phi = cfg.phi;

  const double half_sin2 = sq(std::sin(phi / 2.0));
  const double sinh2g_sq = sq(std::sinh(2.0 * g));
  const double thermal = 1.0 + 2.0 * n;
  const double a_block = 0.25 * (3.0 + std::cosh(4.0 * g) - 2.0 * std::cos(phi) * sinh2g_sq) * thermal;

  GammaEntries e;
  e.g11 = std::exp(-2.0 * r) * half_sin2 * sinh2g_sq + a_block;
  e.g13 = half_sin2 * std::sinh(4.0 * g) * (-std::cosh(r) + std::sinh(r)) * (std::cosh(r) + std::exp(r) * n);
  e.g14 = std::exp(-2.0 * r) * std::cosh(g) * std::sin(phi) * std::sinh(g) *
          (1.0 + std::exp(2.0 * r) * thermal);
  e.g22 = std::exp(2.0 * r) * half_sin2 * sinh2g_sq + a_block;
  e.g23 = std::cosh(g) * std::sin(phi) * std::sinh(g) * (1.0 + std::exp(2.0 * r) + 2.0 * n);
  e.g24 = 0.5 * half_sin2 * std::sinh(4.0 * g) * (1.0 + std::exp(2.0 * r) + 2.0 * n);
  e.g33 = 0.5 * std::exp(2.0 * r) * (1.0 + std::cos(phi)) +
          std::exp(-2.0 * r) * sq(std::cosh(2.0 * g)) * half_sin2 + half_sin2 * sinh2g_sq * thermal;
  e.g34 = std::cosh(2.0 * g) * std::sin(phi) * std::sinh(2.0 * r);
  e.g44 = 0.5 * std::exp(-2.0 * r) * (1.0 + std::cos(phi)) +
          std::exp(2.0 * r) * sq(std::cosh(2.0 * g)) * half_sin2 + half_sin2 * sinh2g_sq * thermal;
  return e;
}

namespace {

TwoModeState propagated_state(const InterferometerConfig& cfg) {
  cfg.validate();
  const TwoModeState input = tensor(thermal_state(cfg.n_th), squeezed_vacuum_state(cfg.r));
  return apply_symplectic(full_interferometer_symplectic(cfg.g, cfg.phi), input);
}

}  // namespace

GammaEntries gamma_entries_from_propagation(const InterferometerConfig& cfg) {
  const CovMatrix<2>& cov = propagated_state(cfg).cov();
  GammaEntries e;
  e.g11 = cov(0, 0);
  e.g13 = cov(0, 2);
  e.g14 = cov(0, 3);
  e.g22 = cov(1, 1);
  e.g23 = cov(1, 2);
  e.g24 = cov(1, 3);
  e.g33 = cov(2, 2);
  e.g34 = cov(2, 3);
  e.g44 = cov(3, 3);
  return e;
}

double parity_denominator_excess(const InterferometerConfig& cfg) {
  cfg.validate();
  // With s = sinh^2(2g), h = sin^2(phi/2) the bracket multiplying (1 + e^{2r})^2
  // reduces to 7 + 64 s h (1 + s h), and 3 + cosh 4g - 2 cos(phi) s to 4 (1 + s h).
  const double s = sq(std::sinh(2.0 * cfg.g));
  const double h = sq(std::sin(cfg.phi / 2.0));
  const double sh = s * h;
  const double n = cfg.n_th;
  return 256.0 * sh *
         (sq(std::cosh(cfg.r)) * (1.0 + sh) + n * (std::cosh(2.0 * cfg.r) * (1.0 + sh) + sh * (1.0 + n)));
}

double parity_denominator(const InterferometerConfig& cfg) { return 64.0 + parity_denominator_excess(cfg); }

double parity_denominator_literal(const InterferometerConfig& cfg) {
  cfg.validate();
  const double g = cfg.g;
  const double r = cfg.r;
  const double n = cfg.n_th;
  const double phi = cfg.phi;
  const double e2r = std::exp(2.0 * r);
  const double e4r = std::exp(4.0 * r);
  const double sinh2g_sq = sq(std::sinh(2.0 * g));
  const double half_sin2 = sq(std::sin(phi / 2.0));

  const double bracket = 4.0 * std::cosh(4.0 * g) + 3.0 * std::cosh(8.0 * g) +
                         8.0 * std::cos(2.0 * phi) * sq(sinh2g_sq) -
                         8.0 * std::cos(phi) * sq(std::sinh(4.0 * g));
  const double vacuum_part = std::exp(-2.0 * r) * (-7.0 + 50.0 * e2r - 7.0 * e4r + sq(1.0 + e2r) * bracket);
  const double thermal_part =
      32.0 * std::exp(-2.0 * r) * half_sin2 * sinh2g_sq * n *
      ((1.0 + e4r) * (3.0 + std::cosh(4.0 * g) - 2.0 * std::cos(phi) * sinh2g_sq) +
       8.0 * e2r * half_sin2 * sinh2g_sq * (1.0 + n));
  return vacuum_part + thermal_part;
}

double parity_signal(const InterferometerConfig& cfg) {
  const double t = parity_denominator(cfg);
  if (!(t > 0.0)) throw NumericalDomainError("parity denominator is not positive");
  return 8.0 / std::sqrt(t);
}

double parity_signal_from_propagation(const InterferometerConfig& cfg) {
  return parity_expectation(reduce_to_mode_b(propagated_state(cfg)));
}

double delta_parity(const InterferometerConfig& cfg) {
  // 1 - 64/T written as (T - 64)/T.
  return std::sqrt(parity_denominator_excess(cfg) / parity_denominator(cfg));
}

double signal_derivative(const InterferometerConfig& cfg) {
  cfg.validate();
  const double g = cfg.g;
  const double r = cfg.r;
  const double n = cfg.n_th;
  const double phi = cfg.phi;
  const double sinh2g_sq = sq(std::sinh(2.0 * g));
  const double cosh2g_sq = sq(std::cosh(2.0 * g));
  const double coshr_sq = sq(std::cosh(r));
  const double cosh2r = std::cosh(2.0 * r);

  const double numerator =
      -128.0 * sinh2g_sq *
      (-2.0 * std::sin(2.0 * phi) * sinh2g_sq * (coshr_sq + n * (1.0 + cosh2r + n)) +
       std::sin(phi) * (4.0 * cosh2g_sq * coshr_sq + 4.0 * n * (cosh2g_sq * cosh2r + sinh2g_sq * (1.0 + n))));
  return numerator / std::pow(parity_denominator(cfg), 1.5);
}

double signal_slope(const InterferometerConfig& cfg) { return std::abs(signal_derivative(cfg)); }

double sensitivity_phi0(const InterferometerConfig& cfg) {
  cfg.validate();
  const double amplified = n_opa(cfg.g);
  if (!(amplified > 0.0)) {
    throw BlindSpotError("phase sensitivity undefined without parametric gain (g = 0)");
  }
  const double ns = n_squeezed(cfg.r);
  const double bracket = 1.0 + (1.0 + 2.0 * ns) * (1.0 + 2.0 * cfg.n_th);
  return std::sqrt(2.0 / (amplified * (amplified + 2.0) * bracket));
}

double phase_sensitivity(const InterferometerConfig& cfg) {
  cfg.validate();
  if (cfg.phi == 0.0) return sensitivity_phi0(cfg);
  const double slope = signal_slope(cfg);
  if (!(slope >= 1e-300)) {
    throw BlindSpotError("parity signal slope vanishes; phase sensitivity undefined");
  }
  return delta_parity(cfg) / slope;
}

double optimal_thermal_photons(double g, double n_s) {
  return (sq(std::sinh(g)) - n_s) / sq(std::cosh(2.0 * g));
}

double optimal_thermal_photons_clamped(double g, double n_s) {
  const double raw = optimal_thermal_photons(g, n_s);
  return raw > 0.0 ? raw : 0.0;
}

SensitivityReport build_report(const InterferometerConfig& cfg) {
  SensitivityReport report;
  report.delta_phi = phase_sensitivity(cfg);
  report.parity = parity_signal(cfg);
  report.delta_parity = delta_parity(cfg);
  report.slope = signal_slope(cfg);
  report.n_bar = n_inside(cfg);
  report.snl = snl(cfg);
  report.hl = hl(cfg);
  report.n_opa = n_opa(cfg.g);
  report.n_s = n_squeezed(cfg.r);
  return report;
}

}  // namespace su11
