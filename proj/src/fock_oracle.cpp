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

#include "su11/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace su11 {

namespace {

std::string short_number(double value) {
  std::ostringstream s;
  s.precision(3);
  s << value;
  return s.str();
}

}  // namespace

CutoffError::CutoffError(std::string stage, double mass, double budget)
    : Error("Fock cutoff too small at stage '" + stage + "': lost mass " + short_number(mass) +
            " exceeds budget " + short_number(budget)),
      stage_(std::move(stage)),
      mass_(mass) {}

namespace fock {
namespace {

void require_cutoff(int cutoff, int minimum) {
  if (cutoff < minimum) {
    throw DomainError("Fock cutoff must be at least " + std::to_string(minimum));
  }
}

}  // namespace

FockVector::FockVector(int cutoff) : cutoff_(cutoff) {
  require_cutoff(cutoff, 0);
  amplitudes_.assign(static_cast<std::size_t>(cutoff + 1) * static_cast<std::size_t>(cutoff + 1), Complex{});
}

FockVector FockVector::product(const SingleModeVector& mode_a, const SingleModeVector& mode_b) {
  const int cutoff = std::max(mode_a.cutoff(), mode_b.cutoff());
  FockVector out(cutoff);
  for (int na = 0; na <= mode_a.cutoff(); ++na) {
    if (mode_a.amplitudes[na] == Complex{}) continue;
    for (int nb = 0; nb <= mode_b.cutoff(); ++nb) {
      out(na, nb) = mode_a.amplitudes[na] * mode_b.amplitudes[nb];
    }
  }
  return out;
}

FockVector FockVector::basis(int cutoff, int n_a, int n_b) {
  FockVector out(cutoff);
  if (n_a < 0 || n_b < 0 || n_a > cutoff || n_b > cutoff) {
    throw DomainError("basis state outside the truncated space");
  }
  out(n_a, n_b) = 1.0;
  return out;
}

double FockVector::norm_squared() const {
  return std::accumulate(amplitudes_.begin(), amplitudes_.end(), 0.0,
                         [](double acc, const Complex& c) { return acc + std::norm(c); });
}

FockEnsemble thermal_ensemble(double n_th, int cutoff, double eps_trunc) {
  if (!std::isfinite(n_th) || n_th < 0.0) throw DomainError("n_th must be finite and non-negative");
  require_cutoff(cutoff, 1);

  FockEnsemble ensemble;
  if (n_th == 0.0) {
    ensemble.weights.push_back(1.0);
    ensemble.members.push_back(FockVector::basis(cutoff, 0, 0));
    return ensemble;
  }
  const double ratio = n_th / (1.0 + n_th);
  double weight = 1.0 / (1.0 + n_th);
  for (int n = 0; n <= cutoff; ++n) {
    ensemble.weights.push_back(weight);
    ensemble.members.push_back(FockVector::basis(cutoff, n, 0));
    weight *= ratio;
  }
  ensemble.truncated_mass = std::pow(ratio, cutoff + 1);
  if (ensemble.truncated_mass > eps_trunc) {
    throw CutoffError("thermal input", ensemble.truncated_mass, eps_trunc);
  }
  return ensemble;
}

SingleModeVector squeezed_vacuum_vector(double r, int cutoff, double eps_trunc) {
  if (!std::isfinite(r) || r < 0.0) throw DomainError("r must be finite and non-negative");
  require_cutoff(cutoff, 2);

  SingleModeVector out;
  out.amplitudes.assign(static_cast<std::size_t>(cutoff + 1), Complex{});
  // c_{2n} = (-tanh r)^n sqrt((2n)!) / (2^n n! sqrt(cosh r)), built by ratios.
  const double t = -std::tanh(r);
  double c = 1.0 / std::sqrt(std::cosh(r));
  double kept = 0.0;
  for (int n = 0; 2 * n <= cutoff; ++n) {
    if (n > 0) {
      c *= t * std::sqrt((2.0 * n - 1.0) * (2.0 * n)) / (2.0 * n);
    }
    out.amplitudes[2 * n] = c;
    kept += c * c;
  }
  out.truncated_mass = std::max(0.0, 1.0 - kept);
  if (out.truncated_mass > eps_trunc) {
    throw CutoffError("squeezed input", out.truncated_mass, eps_trunc);
  }
  return out;
}

FockEnsemble input_ensemble(double n_th, double r, int cutoff, double eps_trunc) {
  FockEnsemble ensemble = thermal_ensemble(n_th, cutoff, eps_trunc);
  const SingleModeVector squeezed = squeezed_vacuum_vector(r, cutoff, eps_trunc);
  SingleModeVector number_state;
  number_state.amplitudes.assign(static_cast<std::size_t>(cutoff + 1), Complex{});
  for (std::size_t k = 0; k < ensemble.members.size(); ++k) {
    std::fill(number_state.amplitudes.begin(), number_state.amplitudes.end(), Complex{});
    number_state.amplitudes[k] = 1.0;
    ensemble.members[k] = FockVector::product(number_state, squeezed);
  }
  ensemble.truncated_mass += squeezed.truncated_mass;
  return ensemble;
}

TwoModeSqueezer::TwoModeSqueezer(double g, double theta, int cutoff, int padding)
    : cutoff_(cutoff), working_cutoff_(cutoff + padding) {
  if (!std::isfinite(g) || g < 0.0 || !std::isfinite(theta)) {
    throw DomainError("squeezer needs finite g >= 0 and finite theta");
  }
  require_cutoff(cutoff, 1);
  if (padding < 0) throw DomainError("padding must be non-negative");

  Complex xi = std::polar(g, theta);
  if (theta == std::numbers::pi) xi = Complex(-g, 0.0);

  const int m = working_cutoff_;
  blocks_.reserve(static_cast<std::size_t>(2 * m + 1));
  for (int d = -m; d <= m; ++d) {
    const int dim = m - std::abs(d) + 1;
    const int offset_a = std::max(d, 0);
    const int offset_b = std::max(-d, 0);
    Eigen::MatrixXcd generator = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k + 1 < dim; ++k) {
      const double na = k + offset_a;
      const double nb = k + offset_b;
      const double coupling = std::sqrt((na + 1.0) * (nb + 1.0));
      generator(k + 1, k) = xi * coupling;
      generator(k, k + 1) = -std::conj(xi) * coupling;
    }
    Eigen::MatrixXcd unitary = generator.exp();
    const double defect =
        (unitary.adjoint() * unitary - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
    unitarity_defect_ = std::max(unitarity_defect_, defect);
    blocks_.push_back(std::move(unitary));
  }
}

Evolved TwoModeSqueezer::apply(const FockVector& state) const {
  if (state.cutoff() != cutoff_) throw DomainError("state cutoff does not match the squeezer");
  Evolved out{FockVector(cutoff_), 0.0};
  const int m = working_cutoff_;
  Eigen::VectorXcd input;
  Eigen::VectorXcd output;
  for (int d = -cutoff_; d <= cutoff_; ++d) {
    const int offset_a = std::max(d, 0);
    const int offset_b = std::max(-d, 0);
    const int populated = cutoff_ - std::abs(d) + 1;
    input.resize(populated);
    bool any = false;
    for (int k = 0; k < populated; ++k) {
      input(k) = state(k + offset_a, k + offset_b);
      any = any || input(k) != Complex{};
    }
    if (!any) continue;
    const Eigen::MatrixXcd& block = blocks_[static_cast<std::size_t>(d + m)];
    output.noalias() = block.leftCols(populated) * input;
    for (int k = 0; k < output.size(); ++k) {
      if (k < populated) {
        out.state(k + offset_a, k + offset_b) = output(k);
      } else {
        out.leakage += std::norm(output(k));
      }
    }
  }
  return out;
}

FockVector two_mode_squeeze_apply(const FockVector& state, double g, double theta, double eps_trunc) {
  Evolved evolved = TwoModeSqueezer(g, theta, state.cutoff()).apply(state);
  if (evolved.leakage > eps_trunc) throw CutoffError("two-mode squeezer", evolved.leakage, eps_trunc);
  return std::move(evolved.state);
}

FockVector phase_apply(const FockVector& state, double phi) {
  if (!std::isfinite(phi)) throw DomainError("phi must be finite");
  FockVector out = state;
  for (int na = 0; na <= state.cutoff(); ++na) {
    for (int nb = 0; nb <= state.cutoff(); ++nb) {
      out(na, nb) *= std::polar(1.0, 0.5 * phi * (na + nb));
    }
  }
  return out;
}

double parity_b_fock(const FockEnsemble& ensemble) {
  double total = 0.0;
  for (std::size_t k = 0; k < ensemble.members.size(); ++k) {
    const FockVector& member = ensemble.members[k];
    double parity = 0.0;
    for (int na = 0; na <= member.cutoff(); ++na) {
      for (int nb = 0; nb <= member.cutoff(); ++nb) {
        const double p = std::norm(member(na, nb));
        parity += (nb % 2 == 0) ? p : -p;
      }
    }
    total += ensemble.weights[k] * parity;
  }
  return total;
}

bool is_tractable(const InterferometerConfig& cfg) {
  cfg.validate();
  return cfg.g <= 0.6 && cfg.r <= 0.6 && cfg.n_th <= 1.0;
}

FockInterferometer::FockInterferometer(double g, OracleOptions options)
    : g_(g),
      options_(options),
      first_opa_(g, 0.0, options.cutoff),
      second_opa_(g, std::numbers::pi, options.cutoff) {}

OracleResult FockInterferometer::parity_signal(const InterferometerConfig& cfg) const {
  cfg.validate();
  if (cfg.g != g_) throw DomainError("configuration gain does not match the Fock interferometer");

  const double eps = options_.eps_trunc;
  FockEnsemble ensemble = input_ensemble(cfg.n_th, cfg.r, options_.cutoff, eps);

  OracleResult result;
  result.truncated_mass = ensemble.truncated_mass;
  result.unitarity_defect = std::max(first_opa_.unitarity_defect(), second_opa_.unitarity_defect());

  // Members beyond this weight tail contribute less than 1e-3 of the budget.
  std::vector<double> tail(ensemble.weights.size() + 1, 0.0);
  for (std::size_t k = ensemble.weights.size(); k-- > 0;) tail[k] = tail[k + 1] + ensemble.weights[k];

  FockEnsemble evolved;
  for (std::size_t k = 0; k < ensemble.members.size(); ++k) {
    if (tail[k] <= 1e-3 * eps) {
      result.truncated_mass += tail[k];
      break;
    }
    const double w = ensemble.weights[k];
    Evolved first = first_opa_.apply(ensemble.members[k]);
    result.leakage_first_opa += w * first.leakage;
    Evolved second = second_opa_.apply(phase_apply(first.state, cfg.phi));
    result.leakage_second_opa += w * second.leakage;
    evolved.weights.push_back(w);
    evolved.members.push_back(std::move(second.state));
  }
  result.parity = parity_b_fock(evolved);
  if (options_.enforce_budget) {
    if (const auto stage = budget_violation(result, eps)) {
      const double mass = *stage == "input truncation" ? result.truncated_mass
                          : *stage == "first OPA"      ? result.leakage_first_opa
                                                       : result.leakage_second_opa;
      throw CutoffError(*stage, mass, eps);
    }
  }
  return result;
}

std::optional<std::string> budget_violation(const OracleResult& result, double eps_trunc) {
  if (result.truncated_mass > eps_trunc) return "input truncation";
  if (result.leakage_first_opa > eps_trunc) return "first OPA";
  if (result.leakage_second_opa > eps_trunc) return "second OPA";
  return std::nullopt;
}

OracleResult oracle_parity_signal(const InterferometerConfig& cfg, OracleOptions options) {
  cfg.validate();
  return FockInterferometer(cfg.g, options).parity_signal(cfg);
}

OracleGrid default_oracle_grid() {
  return OracleGrid{
      .g = {0.1, 0.2, 0.3, 0.4, 0.5},
      .r = {0.0, 0.125, 0.25, 0.375, 0.5},
      .n_th = {0.0, 0.25, 0.5, 0.75},
      .phi = {0.0, 0.3, 0.7, 1.2, 2.0},
  };
}

std::vector<OracleComparison> compare_on_grid(const OracleGrid& grid, OracleOptions options) {
  for (double g : grid.g) {
    for (double r : grid.r) {
      for (double n : grid.n_th) {
        for (double phi : grid.phi) {
          const InterferometerConfig cfg{.g = g, .r = r, .n_th = n, .phi = phi};
          if (!is_tractable(cfg)) {
            throw TractabilityError("configuration outside the Fock oracle range (g, r <= 0.6, n_th <= 1)");
          }
        }
      }
    }
  }

  std::vector<OracleComparison> out;
  out.reserve(grid.size());
  for (double g : grid.g) {
    const FockInterferometer interferometer(g, options);
    for (double r : grid.r) {
      for (double n : grid.n_th) {
        for (double phi : grid.phi) {
          OracleComparison row;
          row.cfg = {.g = g, .r = r, .n_th = n, .phi = phi};
          row.gaussian = su11::parity_signal(row.cfg);
          row.fock = interferometer.parity_signal(row.cfg);
          out.push_back(row);
        }
      }
    }
  }
  return out;
}

}  // namespace fock
}  // namespace su11
