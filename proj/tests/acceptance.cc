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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "su11/errors.hpp"
#include "su11/fock_oracle.hpp"
#include "su11/gaussian.hpp"
#include "su11/model.hpp"
#include "su11/sweep.hpp"

using namespace su11;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr unsigned kSeed = 20181101;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

InterferometerConfig cfg(double g, double r, double n_th, double phi) {
  return InterferometerConfig{.g = g, .r = r, .n_th = n_th, .phi = phi};
}

// Sampling box shared by the random-configuration criteria.
class ConfigSampler {
 public:
  explicit ConfigSampler(unsigned seed) : rng_(seed) {}

  InterferometerConfig next() {
    const double g = gain_(rng_);
    const double r = squeeze_(rng_);
    const double n = photons_(rng_);
    return cfg(g, r, n, angle_(rng_));
  }

  std::vector<InterferometerConfig> take(int count) {
    std::vector<InterferometerConfig> out;
    for (int i = 0; i < count; ++i) out.push_back(next());
    return out;
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> gain_{0.05, 3.0};
  std::uniform_real_distribution<double> squeeze_{0.0, 2.5};
  std::uniform_real_distribution<double> photons_{0.0, 30.0};
  std::uniform_real_distribution<double> angle_{-kPi, kPi};
};

std::string where(const InterferometerConfig& c) {
  return fmt("g=%.6g r=%.6g n_th=%.6g phi=%.6g", c.g, c.r, c.n_th, c.phi);
}

Outcome zero_phase_unity() {
  ConfigSampler sampler(kSeed);
  Outcome o;
  double worst = 0.0;
  int collapsed = 0;
  for (InterferometerConfig c : sampler.take(500)) {
    c.phi = 0.0;
    worst = std::max(worst, std::abs(parity_signal(c) - 1.0));
    collapsed += parity_denominator(c) == 64.0 ? 1 : 0;
  }
  o.pass = worst <= 1e-10 && collapsed == 500;
  o.detail = fmt("500 configs, max |signal - 1| = %.3g, T == 64 exactly in %d/500", worst, collapsed);
  return o;
}

Outcome covariance_routes() {
  ConfigSampler sampler(kSeed + 1);
  Outcome o;
  double worst = 0.0;
  InterferometerConfig worst_cfg;
  for (const InterferometerConfig& c : sampler.take(1000)) {
    const GammaEntries a = gamma_entries(c);
    const GammaEntries b = gamma_entries_from_propagation(c);
    const double pairs[][2] = {{a.g11, b.g11}, {a.g13, b.g13}, {a.g14, b.g14}, {a.g22, b.g22}, {a.g23, b.g23},
                               {a.g24, b.g24}, {a.g33, b.g33}, {a.g34, b.g34}, {a.g44, b.g44}};
    for (const auto& p : pairs) {
      const double err = std::abs(p[0] - p[1]) / std::max(1.0, std::abs(p[1]));
      if (err > worst) {
        worst = err;
        worst_cfg = c;
      }
    }
  }
  o.pass = worst <= 1e-9;
  o.detail = fmt("1000 configs, max scaled entry error = %.3g (at %s)", worst, where(worst_cfg).c_str());
  return o;
}

Outcome signal_routes() {
  ConfigSampler sampler(kSeed + 1);
  Outcome o;
  double worst = 0.0;
  for (const InterferometerConfig& c : sampler.take(1000)) {
    const double matrix = parity_signal_from_propagation(c);
    worst = std::max(worst, std::abs(parity_signal(c) - matrix) / std::abs(matrix));
  }
  o.pass = worst <= 1e-9;
  o.detail = fmt("1000 configs, max relative error = %.3g", worst);
  return o;
}

Outcome derivative() {
  ConfigSampler sampler(kSeed + 2);
  Outcome o;
  int checked = 0;
  int failed = 0;
  double worst = 0.0;
  InterferometerConfig worst_cfg;
  double worst_extrapolated = 0.0;
  const double h = 1e-5;
  auto central = [](InterferometerConfig c, double step) {
    InterferometerConfig plus = c, minus = c;
    plus.phi += step;
    minus.phi -= step;
    return (parity_signal(plus) - parity_signal(minus)) / (2 * step);
  };
  for (const InterferometerConfig& c : sampler.take(1000)) {
    const double slope = signal_derivative(c);
    if (std::abs(slope) <= 1e-8) continue;
    const double fd = central(c, h);
    const double err = std::abs(fd - slope) / std::abs(slope);
    ++checked;
    if (err >= 1e-6) {
      ++failed;
      // Richardson on the same step separates h^2 truncation from a wrong slope.
      const double extrapolated = (4.0 * central(c, h / 2) - fd) / 3.0;
      worst_extrapolated = std::max(worst_extrapolated, std::abs(extrapolated - slope) / std::abs(slope));
    }
    if (err > worst) {
      worst = err;
      worst_cfg = c;
    }
  }
  o.pass = failed == 0;
  o.detail = fmt("%d/%d configs with slope > 1e-8 within 1e-6, worst %.3g (at %s)", checked - failed, checked, worst,
                 where(worst_cfg).c_str());
  if (failed > 0) o.detail += fmt("; Richardson-extrapolated error on those configs %.3g", worst_extrapolated);
  return o;
}

Outcome phi0_limit() {
  ConfigSampler sampler(kSeed + 3);
  Outcome o;
  int failed = 0;
  double worst = 0.0;
  InterferometerConfig worst_cfg;
  const auto configs = sampler.take(200);
  for (InterferometerConfig c : configs) {
    c.phi = 1e-4;
    const double err = std::abs(phase_sensitivity(c) / sensitivity_phi0(c) - 1.0);
    if (err >= 1e-4) ++failed;
    if (err > worst) {
      worst = err;
      worst_cfg = c;
    }
  }
  // Convergence order on the same configs: the gap should shrink as phi^2.
  int quadratic = 0;
  for (InterferometerConfig c : configs) {
    InterferometerConfig coarse = c, fine = c;
    coarse.phi = 1e-6;
    fine.phi = 1e-7;
    const double limit = sensitivity_phi0(c);
    const double ratio = std::abs(phase_sensitivity(coarse) / limit - 1.0) /
                         std::abs(phase_sensitivity(fine) / limit - 1.0);
    quadratic += std::abs(ratio / 100.0 - 1.0) < 0.05 ? 1 : 0;
  }
  o.pass = failed == 0;
  o.detail = fmt("%d/200 configs within 1e-4 at phi=1e-4, worst %.3g (at %s); gap shrinks as phi^2 in %d/200", 200 - failed,
                 worst, where(worst_cfg).c_str(), quadratic);
  return o;
}

Outcome vacuum_benchmark() {
  Outcome o;
  int violations = 0;
  double last_below = 0.0, first_above = 0.0;
  bool seen_above = false;
  const int points = 200;
  for (int i = 0; i < points; ++i) {
    const double g = 0.1 + (3.0 - 0.1) * i / (points - 1);
    const InterferometerConfig c = cfg(g, 0, 0, 0);
    const double n = n_opa(g);
    const double dphi = phase_sensitivity(c);
    const double s = snl(c), h = hl(c);
    if (std::abs(dphi - 1.0 / std::sqrt(n * (n + 2))) > 1e-12 * dphi) ++violations;
    if (!(dphi < s)) ++violations;
    if (n > 1 && !(dphi < h && h < s)) ++violations;
    if ((s < h) != (n_inside(c) < 1)) ++violations;
    if (s < h) {
      last_below = g;
    } else if (!seen_above) {
      first_above = g;
      seen_above = true;
    }
  }
  const double crossover = std::asinh(std::sqrt(0.5));
  const bool bracketed = last_below < crossover && crossover <= first_above;
  const bool exact = std::abs(n_inside(cfg(crossover, 0, 0, 0)) - 1.0) < 1e-14;
  o.pass = violations == 0 && bracketed && exact;
  o.detail = fmt("%d violations over 200 points; SNL<HL up to g=%.4f, crossover %.4f bracketed below g=%.4f", violations,
                 last_below, crossover, first_above);
  return o;
}

Outcome optimal_condition() {
  Outcome o;
  double worst = 0.0;
  double max_nth = 0.0;
  InterferometerConfig worst_cfg;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double g = 0.2 + (3.0 - 0.2) * i / 19.0;
      const double r = 2.0 * j / 19.0;
      const double n_th = optimal_thermal_photons_clamped(g, n_squeezed(r));
      max_nth = std::max(max_nth, n_th);
      const InterferometerConfig c = cfg(g, r, n_th, 0.0);
      const double err = std::abs(sensitivity_phi0(c) / hl(c) - 1.0);
      if (err > worst) {
        worst = err;
        worst_cfg = c;
      }
    }
  }
  // 1-D maximization of the optimum at n_s = 0 by golden-section search.
  double lo = 0.0, hi = 3.0;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int k = 0; k < 200; ++k) {
    const double a = hi - inv_phi * (hi - lo), b = lo + inv_phi * (hi - lo);
    if (optimal_thermal_photons(a, 0.0) < optimal_thermal_photons(b, 0.0)) {
      lo = a;
    } else {
      hi = b;
    }
  }
  const double peak = optimal_thermal_photons(0.5 * (lo + hi), 0.0);
  const bool bound = max_nth <= 1.0 && max_nth <= 0.125 + 1e-15 && std::abs(peak - 0.125) < 1e-12;
  const bool equality = worst < 1e-9;
  o.pass = equality && bound;
  o.detail = fmt("max |Dphi0/HL - 1| = %.3g over 400 points (at %s); max optimal n_th %.6g, 1-D peak %.12g", worst,
                 where(worst_cfg).c_str(), max_nth, peak);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  // Budget overruns are tabulated, not thrown, so every point gets a discrepancy.
  const auto rows = fock::compare_on_grid(fock::default_oracle_grid(),
                                          {.cutoff = 48, .eps_trunc = 1e-9, .enforce_budget = false});
  int off = 0;
  int over_budget = 0;
  double worst = 0.0;
  double worst_leak = 0.0;
  InterferometerConfig worst_leak_cfg;
  for (const auto& row : rows) {
    worst = std::max(worst, row.discrepancy());
    if (row.discrepancy() >= 1e-6) ++off;
    if (fock::budget_violation(row.fock, 1e-9)) {
      ++over_budget;
      const double leak = row.fock.leakage_first_opa + row.fock.leakage_second_opa;
      if (leak > worst_leak) {
        worst_leak = leak;
        worst_leak_cfg = row.cfg;
      }
    }
  }
  o.pass = off == 0 && over_budget == 0 && rows.size() == 500;
  o.detail = fmt("%zu/%zu points within 1e-6 (max discrepancy %.3g); %d points exceed the 1e-9 cutoff budget", rows.size() - off,
                 rows.size(), worst, over_budget);
  if (over_budget > 0) o.detail += fmt(" (worst leakage %.3g at %s)", worst_leak, where(worst_leak_cfg).c_str());
  return o;
}

std::vector<std::string> row_strings(const SweepRow& r) {
  return {format_number(r.delta_phi), format_number(r.snl), format_number(r.hl), format_number(r.parity),
          format_number(r.n_bar)};
}

const SweepRow* find_row(const std::vector<SweepRow>& rows, double axis_value) {
  for (const SweepRow& r : rows)
    if (r.axis_value == axis_value) return &r;
  return nullptr;
}

Outcome figure_anchors() {
  Outcome o;
  const auto fig2 = run_sweep(figure_preset(FigureId::fig2).sweep);
  const auto fig3 = run_sweep(figure_preset(FigureId::fig3).sweep);
  const auto fig4 = run_sweep(figure_preset(FigureId::fig4).sweep);
  const auto fig5 = run_sweep(figure_preset(FigureId::fig5).sweep);
  const auto fig6 = run_sweep(figure_preset(FigureId::fig6).sweep);
  std::vector<std::string> mismatches;
  auto same = [&](const char* label, const SweepRow* a, const SweepRow* b) {
    if (a == nullptr || b == nullptr || row_strings(*a) != row_strings(*b)) mismatches.push_back(label);
  };
  same("fig3(n_th=0)/fig2(g=2)", find_row(fig3, 0.0), find_row(fig2, 2.0));
  // The fig5/fig6 anchor configuration (g=2, r=2, n_th=20) is the fig4 endpoint.
  same("fig5(g=2)/fig4(n_th=20)", find_row(fig5, 2.0), find_row(fig4, 20.0));
  same("fig6(r=2)/fig4(n_th=20)", find_row(fig6, 2.0), find_row(fig4, 20.0));
  o.pass = mismatches.empty();
  o.detail = "3 anchor pairs compared";
  for (const auto& m : mismatches) o.detail += "; mismatch " + m;
  if (const SweepRow* a = find_row(fig4, 20.0)) o.detail += "; anchor Dphi=" + format_number(a->delta_phi);
  return o;
}

Outcome monotonicity() {
  Outcome o;
  std::ostringstream detail;
  for (FigureId id : {FigureId::fig3, FigureId::fig4, FigureId::fig5, FigureId::fig6}) {
    const auto rows = run_sweep(figure_preset(id).sweep);
    int rises = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) rises += rows[i].delta_phi < rows[i - 1].delta_phi ? 0 : 1;
    int outside = 0;
    double first_outside = NAN;
    if (id == FigureId::fig3 || id == FigureId::fig4) {
      for (const SweepRow& r : rows) {
        if (r.delta_phi < std::min(r.snl, r.hl) || r.delta_phi > std::max(r.snl, r.hl)) {
          if (outside++ == 0) first_outside = r.axis_value;
        }
      }
    }
    if (rises > 0 || outside > 0) o.pass = false;
    detail << figure_name(id) << ": " << rises << " non-decreasing steps";
    if (id == FigureId::fig3 || id == FigureId::fig4) {
      detail << ", " << outside << "/" << rows.size() << " rows outside [SNL,HL]";
      if (outside > 0) detail << " (first at n_th=" << format_number(first_outside) << ")";
    }
    detail << "; ";
  }
  o.detail = detail.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {"AC1", "zero-phase unity signal", zero_phase_unity},
      {"AC2", "covariance closed form vs propagation", covariance_routes},
      {"AC3", "parity signal closed form vs determinant", signal_routes},
      {"AC4", "signal derivative vs central difference", derivative},
      {"AC5", "phi -> 0 limit of the sensitivity", phi0_limit},
      {"AC6", "vacuum benchmark", vacuum_benchmark},
      {"AC7", "optimal thermal photon condition", optimal_condition},
      {"AC8", "Fock-space oracle equivalence", oracle_equivalence},
      {"AC9", "figure anchor consistency", figure_anchors},
      {"AC10", "monotone figure sweeps", monotonicity},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %s %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/10 acceptance criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
