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

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "su11/model.hpp"

namespace su11::fock {

using Complex = std::complex<double>;

// Amplitudes of a single mode on |0>, ..., |cutoff>.
struct SingleModeVector {
  std::vector<Complex> amplitudes;
  double truncated_mass = 0.0;  // 1 - sum |c_n|^2 of the untruncated state

  int cutoff() const { return static_cast<int>(amplitudes.size()) - 1; }
};

// Two-mode state vector indexed by (n_a, n_b), 0 <= n_a, n_b <= cutoff.
class FockVector {
 public:
  explicit FockVector(int cutoff);

  static FockVector product(const SingleModeVector& mode_a, const SingleModeVector& mode_b);
  static FockVector basis(int cutoff, int n_a, int n_b);

  int cutoff() const { return cutoff_; }
  Complex& operator()(int n_a, int n_b) { return amplitudes_[index(n_a, n_b)]; }
  const Complex& operator()(int n_a, int n_b) const { return amplitudes_[index(n_a, n_b)]; }

  double norm_squared() const;

 private:
  std::size_t index(int n_a, int n_b) const {
    return static_cast<std::size_t>(n_a) * static_cast<std::size_t>(cutoff_ + 1) + static_cast<std::size_t>(n_b);
  }

  int cutoff_;
  std::vector<Complex> amplitudes_;
};

struct FockEnsemble {
  std::vector<double> weights;
  std::vector<FockVector> members;
  double truncated_mass = 0.0;
};

struct Evolved {
  FockVector state;
  double leakage = 0.0;  // norm^2 lost past the cutoff
};

// Geometric photon-number distribution P(n) = n_th^n / (1 + n_th)^{n+1} of the
// thermal state, placed in mode a (mode b empty). Members |n, 0> for
// n = 0..cutoff; a single member |0, 0> when n_th = 0. Throws CutoffError if
// the discarded tail exceeds eps_trunc.
FockEnsemble thermal_ensemble(double n_th, int cutoff, double eps_trunc);

// Squeezed vacuum expanded on even photon numbers. Throws CutoffError if the
// mass beyond the cutoff exceeds eps_trunc.
SingleModeVector squeezed_vacuum_vector(double r, int cutoff, double eps_trunc);

// Thermal photons in mode a and squeezed vacuum in mode b.
FockEnsemble input_ensemble(double n_th, double r, int cutoff, double eps_trunc);

// exp(xi a^dagger b^dagger - xi^* a b), xi = g e^{i theta}, restricted to a
// truncated Fock space. The generator conserves n_a - n_b, so the exponential
// is built once per sector. Evolution runs in a working space `padding` levels
// above the cutoff; whatever ends up above the cutoff is reported as leakage.
class TwoModeSqueezer {
 public:
  TwoModeSqueezer(double g, double theta, int cutoff, int padding = 16);

  int cutoff() const { return cutoff_; }
  // max over sectors of |U^dagger U - I|.
  double unitarity_defect() const { return unitarity_defect_; }

  Evolved apply(const FockVector& state) const;

 private:
  int cutoff_;
  int working_cutoff_;
  double unitarity_defect_ = 0.0;
  // Sector d = n_a - n_b occupies blocks_[d + working_cutoff_].
  std::vector<Eigen::MatrixXcd> blocks_;
};

// Convenience wrapper: builds a squeezer and applies it. Throws CutoffError if
// the leakage exceeds eps_trunc.
FockVector two_mode_squeeze_apply(const FockVector& state, double g, double theta, double eps_trunc = 1e-9);

// Multiplies |n_a, n_b> by e^{i (phi/2)(n_a + n_b)}.
FockVector phase_apply(const FockVector& state, double phi);

// Expectation of (-1)^{n_b} over the ensemble.
double parity_b_fock(const FockEnsemble& ensemble);

struct OracleOptions {
  int cutoff = 48;
  double eps_trunc = 1e-9;
  // When false, stages that exceed eps_trunc are reported in the result
  // instead of thrown, so callers can tabulate them.
  bool enforce_budget = true;
};

struct OracleResult {
  double parity = 0.0;
  double truncated_mass = 0.0;   // thermal tail + squeezed tail
  double leakage_first_opa = 0.0;
  double leakage_second_opa = 0.0;
  double unitarity_defect = 0.0;
};

// Parameter range the oracle is meant for: g, r <= 0.6 and n_th <= 1.
bool is_tractable(const InterferometerConfig& cfg);

// Fock-space interferometer for a fixed gain and cutoff. Reuses the two OPA
// exponentials across (r, n_th, phi).
class FockInterferometer {
 public:
  FockInterferometer(double g, OracleOptions options = {});

  double g() const { return g_; }

  // cfg.g must equal g(). Throws CutoffError naming the stage that exceeded the
  // truncation budget.
  OracleResult parity_signal(const InterferometerConfig& cfg) const;

 private:
  double g_;
  OracleOptions options_;
  TwoModeSqueezer first_opa_;
  TwoModeSqueezer second_opa_;
};

OracleResult oracle_parity_signal(const InterferometerConfig& cfg, OracleOptions options = {});

// Cartesian product of parameter values compared between the Fock oracle and
// the closed-form parity signal.
struct OracleGrid {
  std::vector<double> g;
  std::vector<double> r;
  std::vector<double> n_th;
  std::vector<double> phi;

  std::size_t size() const { return g.size() * r.size() * n_th.size() * phi.size(); }
};

// 5 x 5 x 4 x 5 = 500 points inside the tractable range.
OracleGrid default_oracle_grid();

struct OracleComparison {
  InterferometerConfig cfg;
  double gaussian = 0.0;
  OracleResult fock;

  double discrepancy() const { return std::abs(gaussian - fock.parity); }
};

// Name of the first stage whose lost mass exceeds eps_trunc, if any.
std::optional<std::string> budget_violation(const OracleResult& result, double eps_trunc);

// Evaluates every grid point, building the Fock OPAs once per gain. Throws
// TractabilityError before any work if a point is outside is_tractable.
std::vector<OracleComparison> compare_on_grid(const OracleGrid& grid, OracleOptions options = {});

}  // namespace su11::fock
