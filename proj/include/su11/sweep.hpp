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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "su11/model.hpp"

namespace su11 {

enum class Axis { g, r, n_th, phi };

std::optional<Axis> parse_axis(std::string_view name);
std::string_view axis_name(Axis axis);

// Returns cfg with the swept parameter replaced by value.
InterferometerConfig with_axis(InterferometerConfig cfg, Axis axis, double value);

struct SweepSpec {
  Axis axis = Axis::g;
  double min = 0.0;
  double max = 0.0;
  int steps = 2;
  InterferometerConfig fixed;  // the swept field is ignored
  // Values inserted into the grid exactly (e.g. a reference point that the
  // uniform grid misses). Anchors outside [min, max] are ignored.
  std::vector<double> anchors;

  // Throws DomainError unless min <= max, steps >= 2 and the bounds are finite.
  void validate() const;

  // Ascending axis values: min + i (max - min)/(steps - 1) with the last value
  // exactly max, merged with the anchors.
  std::vector<double> grid() const;
};

struct SweepRow {
  double axis_value = 0.0;
  double delta_phi = 0.0;
  double snl = 0.0;
  double hl = 0.0;
  double parity = 0.0;
  double n_bar = 0.0;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

enum class FigureId { fig2, fig3, fig4, fig5, fig6 };

std::optional<FigureId> parse_figure_id(std::string_view name);
std::string_view figure_name(FigureId id);

enum class Series { delta_phi, snl, hl };

struct FigurePreset {
  FigureId id = FigureId::fig2;
  SweepSpec sweep;
  std::vector<Series> series;
};

FigurePreset figure_preset(FigureId id);

// 12 significant digits; scientific notation below 1e-4 (printf %.12g).
std::string format_number(double value);

// The value a reader of format_number(value) recovers.
double rounded(double value);

inline constexpr std::string_view kSweepCsvHeader = "axis_value,delta_phi,snl,hl,parity,n_bar";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
nlohmann::json sweep_to_json(const SweepSpec& spec, const std::vector<SweepRow>& rows);

void write_report_csv(std::ostream& out, const InterferometerConfig& cfg, const SensitivityReport& report);
nlohmann::json report_to_json(const InterferometerConfig& cfg, const SensitivityReport& report);

}  // namespace su11
