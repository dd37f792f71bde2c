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

#include "su11/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace su11 {

std::optional<Axis> parse_axis(std::string_view name) {
  if (name == "g") return Axis::g;
  if (name == "r") return Axis::r;
  if (name == "n_th" || name == "n-th") return Axis::n_th;
  if (name == "phi") return Axis::phi;
  return std::nullopt;
}

std::string_view axis_name(Axis axis) {
  switch (axis) {
    case Axis::g:
      return "g";
    case Axis::r:
      return "r";
    case Axis::n_th:
      return "n_th";
    case Axis::phi:
      return "phi";
  }
  return "?";
}

InterferometerConfig with_axis(InterferometerConfig cfg, Axis axis, double value) {
  switch (axis) {
    case Axis::g:
      cfg.g = value;
      break;
    case Axis::r:
      cfg.r = value;
      break;
    case Axis::n_th:
      cfg.n_th = value;
      break;
    case Axis::phi:
      cfg.phi = value;
      break;
  }
  return cfg;
}

void SweepSpec::validate() const {
  if (!std::isfinite(min) || !std::isfinite(max)) throw DomainError("sweep bounds must be finite");
  if (min > max) throw DomainError("sweep requires min <= max");
  if (steps < 2) throw DomainError("sweep requires at least 2 steps");
}

std::vector<double> SweepSpec::grid() const {
  validate();
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(steps) + anchors.size());
  const double width = (max - min) / (steps - 1);
  for (int i = 0; i + 1 < steps; ++i) values.push_back(min + i * width);
  values.push_back(max);

  for (double anchor : anchors) {
    if (anchor < min || anchor > max) continue;
    // A grid point within round-off of the anchor is replaced by it.
    auto near = std::find_if(values.begin(), values.end(),
                             [&](double v) { return std::abs(v - anchor) <= 1e-9 * std::max(width, 1e-300); });
    if (near != values.end()) {
      *near = anchor;
    } else {
      values.push_back(anchor);
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  const std::vector<double> axis_values = spec.grid();
  std::vector<SweepRow> rows;
  rows.reserve(axis_values.size());
  for (double value : axis_values) {
    const InterferometerConfig cfg = with_axis(spec.fixed, spec.axis, value);
    SweepRow row;
    row.axis_value = value;
    row.delta_phi = phase_sensitivity(cfg);
    row.snl = snl(cfg);
    row.hl = hl(cfg);
    row.parity = parity_signal(cfg);
    row.n_bar = n_inside(cfg);
    rows.push_back(row);
  }
  return rows;
}

std::optional<FigureId> parse_figure_id(std::string_view name) {
  if (name == "fig2") return FigureId::fig2;
  if (name == "fig3") return FigureId::fig3;
  if (name == "fig4") return FigureId::fig4;
  if (name == "fig5") return FigureId::fig5;
  if (name == "fig6") return FigureId::fig6;
  return std::nullopt;
}

std::string_view figure_name(FigureId id) {
  switch (id) {
    case FigureId::fig2:
      return "fig2";
    case FigureId::fig3:
      return "fig3";
    case FigureId::fig4:
      return "fig4";
    case FigureId::fig5:
      return "fig5";
    case FigureId::fig6:
      return "fig6";
  }
  return "?";
}

FigurePreset figure_preset(FigureId id) {
  constexpr int kSteps = 200;
  FigurePreset preset;
  preset.id = id;
  preset.series = {Series::delta_phi, Series::snl, Series::hl};
  SweepSpec& s = preset.sweep;
  s.steps = kSteps;
  switch (id) {
    case FigureId::fig2:  // vacuum inputs
      s.axis = Axis::g;
      s.min = 0.05;
      s.max = 3.0;
      s.fixed = {.g = 0.0, .r = 0.0, .n_th = 0.0, .phi = 0.0};
      s.anchors = {2.0};
      break;
    case FigureId::fig3:  // thermal + vacuum
      s.axis = Axis::n_th;
      s.min = 0.0;
      s.max = 20.0;
      s.fixed = {.g = 2.0, .r = 0.0, .n_th = 0.0, .phi = 0.0};
      break;
    case FigureId::fig4:  // thermal + squeezed vacuum
      s.axis = Axis::n_th;
      s.min = 0.0;
      s.max = 20.0;
      s.fixed = {.g = 2.0, .r = 2.0, .n_th = 0.0, .phi = 0.0};
      break;
    case FigureId::fig5:
      s.axis = Axis::g;
      s.min = 0.5;
      s.max = 3.0;
      s.fixed = {.g = 0.0, .r = 2.0, .n_th = 20.0, .phi = 0.0};
      s.anchors = {2.0};
      break;
    case FigureId::fig6:
      s.axis = Axis::r;
      s.min = 0.0;
      s.max = 3.0;
      s.fixed = {.g = 2.0, .r = 0.0, .n_th = 20.0, .phi = 0.0};
      s.anchors = {2.0};
      break;
  }
  return preset;
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

double rounded(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    out << format_number(row.axis_value) << ',' << format_number(row.delta_phi) << ','
        << format_number(row.snl) << ',' << format_number(row.hl) << ',' << format_number(row.parity) << ','
        << format_number(row.n_bar) << '\n';
  }
}

nlohmann::json sweep_to_json(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  nlohmann::json out;
  out["axis"] = std::string(axis_name(spec.axis));
  out["fixed"] = {{"g", rounded(spec.fixed.g)},
                  {"r", rounded(spec.fixed.r)},
                  {"n_th", rounded(spec.fixed.n_th)},
                  {"phi", rounded(spec.fixed.phi)}};
  nlohmann::json& list = out["rows"] = nlohmann::json::array();
  for (const SweepRow& row : rows) {
    list.push_back({{"axis_value", rounded(row.axis_value)},
                    {"delta_phi", rounded(row.delta_phi)},
                    {"snl", rounded(row.snl)},
                    {"hl", rounded(row.hl)},
                    {"parity", rounded(row.parity)},
                    {"n_bar", rounded(row.n_bar)}});
  }
  return out;
}

namespace {

// Field order shared by the CSV and JSON report emitters.
std::vector<std::pair<const char*, double>> report_fields(const InterferometerConfig& cfg,
                                                          const SensitivityReport& report) {
  return {{"g", cfg.g},
          {"r", cfg.r},
          {"n_th", cfg.n_th},
          {"phi", cfg.phi},
          {"delta_phi", report.delta_phi},
          {"parity", report.parity},
          {"delta_parity", report.delta_parity},
          {"slope", report.slope},
          {"n_bar", report.n_bar},
          {"snl", report.snl},
          {"hl", report.hl},
          {"n_opa", report.n_opa},
          {"n_s", report.n_s}};
}

}  // namespace

void write_report_csv(std::ostream& out, const InterferometerConfig& cfg, const SensitivityReport& report) {
  const auto fields = report_fields(cfg, report);
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
  out << '\n';
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << format_number(fields[i].second);
  out << '\n';
}

nlohmann::json report_to_json(const InterferometerConfig& cfg, const SensitivityReport& report) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [name, value] : report_fields(cfg, report)) out[name] = rounded(value);
  return out;
}

}  // namespace su11
