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

#include "su11/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "su11/fock_oracle.hpp"
#include "su11/model.hpp"
#include "su11/sweep.hpp"

namespace su11::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double g = 0.0;
  double r = 0.0;
  double n_th = 0.0;
  double phi = 0.0;
  std::string axis;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;
  std::string format = "csv";
  std::string output;
  int cutoff = 48;
  double eps_trunc = 1e-9;
  double tolerance = 1e-6;
  std::string config;
  std::string figure;
};

void add_parameter_flags(CLI::App* sub, Options& o) {
  sub->add_option("--g", o.g, "parametric strength of both OPAs");
  sub->add_option("--r", o.r, "squeezing of the mode-b input");
  sub->add_option("--n-th", o.n_th, "thermal photons of the mode-a input");
  sub->add_option("--phi", o.phi, "total phase (radians)");
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", o.output, "write to PATH instead of stdout");
  sub->add_option("--config", o.config, "JSON file of default flag values");
}

std::string json_to_flag_value(const nlohmann::json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  if (value.is_number()) {
    std::ostringstream s;
    s.precision(17);
    s << value.get<double>();
    return s.str();
  }
  throw UsageError("config values must be strings or numbers");
}

// Fills every option the command line left unset from the flat JSON config.
void apply_config(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  nlohmann::json config;
  try {
    config = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("config file is not valid JSON: " + std::string(e.what()));
  }
  if (!config.is_object()) throw UsageError("config file must hold a JSON object");

  for (const auto& [key, value] : config.items()) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr || key == "config") {
      throw UsageError("unknown config key '" + key + "' for " + sub->get_name());
    }
    if (opt->count() > 0) continue;  // the command line wins
    opt->add_result(json_to_flag_value(value));
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("bad value for config key '" + key + "': " + e.what());
    }
  }
}

// Output sink: the file named by --output, or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::out | std::ios::trunc);
      if (!file_) throw IoError("cannot open output file " + path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

  void finish() {
    stream().flush();
    if (file_.is_open()) {
      file_.close();
      if (file_.fail()) throw IoError("failed writing output file");
    } else if (!fallback_) {
      throw IoError("failed writing output");
    }
  }

 private:
  std::ostream& fallback_;
  std::ofstream file_;
};

InterferometerConfig config_from(const Options& o) {
  return InterferometerConfig{.g = o.g, .r = o.r, .n_th = o.n_th, .phi = o.phi};
}

void emit_sweep(const SweepSpec& spec, const Options& o, std::ostream& out) {
  const std::vector<SweepRow> rows = run_sweep(spec);
  Sink sink(o.output, out);
  if (o.format == "json") {
    sink.stream() << sweep_to_json(spec, rows).dump(2) << '\n';
  } else {
    write_sweep_csv(sink.stream(), rows);
  }
  sink.finish();
}

void cmd_sensitivity(const Options& o, std::ostream& out) {
  const InterferometerConfig cfg = config_from(o);
  const SensitivityReport report = build_report(cfg);
  Sink sink(o.output, out);
  if (o.format == "json") {
    sink.stream() << report_to_json(cfg, report).dump(2) << '\n';
  } else {
    write_report_csv(sink.stream(), cfg, report);
  }
  sink.finish();
}

void cmd_sweep(CLI::App* sub, const Options& o, std::ostream& out) {
  for (const char* flag : {"--axis", "--min", "--max", "--steps"}) {
    if (sub->get_option(flag)->count() == 0) throw UsageError(std::string("sweep requires ") + flag);
  }
  const auto axis = parse_axis(o.axis);
  if (!axis) throw UsageError("unknown axis '" + o.axis + "' (expected g, r, n_th or phi)");
  if (o.steps < 2) throw UsageError("--steps must be at least 2");
  if (o.min > o.max) throw UsageError("--min must not exceed --max");
  SweepSpec spec;
  spec.axis = *axis;
  spec.min = o.min;
  spec.max = o.max;
  spec.steps = o.steps;
  spec.fixed = config_from(o);
  emit_sweep(spec, o, out);
}

void cmd_figure(const Options& o, std::ostream& out) {
  const auto id = parse_figure_id(o.figure);
  if (!id) throw UsageError("unknown figure '" + o.figure + "' (expected fig2..fig6)");
  emit_sweep(figure_preset(*id).sweep, o, out);
}

int cmd_oracle_check(CLI::App* sub, const Options& o, std::ostream& out, std::ostream& err) {
  fock::OracleGrid grid = fock::default_oracle_grid();
  if (sub->get_option("--g")->count() > 0) grid.g = {o.g};
  if (sub->get_option("--r")->count() > 0) grid.r = {o.r};
  if (sub->get_option("--n-th")->count() > 0) grid.n_th = {o.n_th};
  if (sub->get_option("--phi")->count() > 0) grid.phi = {o.phi};
  if (o.cutoff < 2) throw UsageError("--cutoff must be at least 2");
  if (!(o.eps_trunc > 0.0)) throw UsageError("--eps-trunc must be positive");
  if (!(o.tolerance > 0.0)) throw UsageError("--tolerance must be positive");

  // Stages over budget are flagged per row rather than aborting the whole table.
  const auto rows =
      fock::compare_on_grid(grid, {.cutoff = o.cutoff, .eps_trunc = o.eps_trunc, .enforce_budget = false});

  std::size_t passed = 0;
  double worst = 0.0;
  Sink sink(o.output, out);
  std::ostream& s = sink.stream();
  nlohmann::json list = nlohmann::json::array();
  if (o.format != "json") {
    s << "g,r,n_th,phi,gaussian,fock,discrepancy,truncated_mass,leakage,status\n";
  }
  for (const auto& row : rows) {
    const double d = row.discrepancy();
    const auto over_budget = fock::budget_violation(row.fock, o.eps_trunc);
    const bool ok = d < o.tolerance && !over_budget;
    const std::string status = over_budget ? "cutoff:" + *over_budget : ok ? "pass" : "fail";
    passed += ok ? 1 : 0;
    worst = std::max(worst, d);
    const double leakage = row.fock.leakage_first_opa + row.fock.leakage_second_opa;
    if (o.format == "json") {
      list.push_back({{"g", rounded(row.cfg.g)},
                      {"r", rounded(row.cfg.r)},
                      {"n_th", rounded(row.cfg.n_th)},
                      {"phi", rounded(row.cfg.phi)},
                      {"gaussian", rounded(row.gaussian)},
                      {"fock", rounded(row.fock.parity)},
                      {"discrepancy", rounded(d)},
                      {"truncated_mass", rounded(row.fock.truncated_mass)},
                      {"leakage", rounded(leakage)},
                      {"status", status}});
    } else {
      s << format_number(row.cfg.g) << ',' << format_number(row.cfg.r) << ',' << format_number(row.cfg.n_th)
        << ',' << format_number(row.cfg.phi) << ',' << format_number(row.gaussian) << ','
        << format_number(row.fock.parity) << ',' << format_number(d) << ','
        << format_number(row.fock.truncated_mass) << ',' << format_number(leakage) << ','
        << status << '\n';
    }
  }
  if (o.format == "json") {
    s << nlohmann::json{{"tolerance", o.tolerance}, {"rows", list}}.dump(2) << '\n';
  }
  sink.finish();
  err << "oracle-check: " << passed << "/" << rows.size() << " points within tolerance " << format_number(o.tolerance)
      << " (max discrepancy " << format_number(worst) << ")\n";
  return passed == rows.size() ? kSuccess : kNumerical;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phase sensitivity of an SU(1,1) interferometer with thermal and squeezed-vacuum inputs", "su11"};
  app.require_subcommand(1);
  Options o;

  CLI::App* sensitivity = app.add_subcommand("sensitivity", "report for a single configuration");
  add_parameter_flags(sensitivity, o);
  add_output_flags(sensitivity, o);

  CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter and emit CSV rows");
  add_parameter_flags(sweep, o);
  sweep->add_option("--axis", o.axis, "swept parameter: g, r, n_th or phi");
  sweep->add_option("--min", o.min, "first axis value");
  sweep->add_option("--max", o.max, "last axis value");
  sweep->add_option("--steps", o.steps, "number of grid points (>= 2)");
  add_output_flags(sweep, o);

  CLI::App* figure = app.add_subcommand("figure", "regenerate a figure's data (fig2..fig6)");
  figure->add_option("id", o.figure, "figure id")->required();
  add_output_flags(figure, o);

  CLI::App* oracle = app.add_subcommand("oracle-check", "compare the parity signal with the Fock-space oracle");
  add_parameter_flags(oracle, o);
  oracle->add_option("--cutoff", o.cutoff, "Fock cutoff per mode");
  oracle->add_option("--eps-trunc", o.eps_trunc, "truncation budget");
  oracle->add_option("--tolerance", o.tolerance, "maximum allowed |Gaussian - Fock|");
  add_output_flags(oracle, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    if (!o.config.empty()) apply_config(active, o.config);
    if (active == sensitivity) {
      cmd_sensitivity(o, out);
    } else if (active == sweep) {
      cmd_sweep(sweep, o, out);
    } else if (active == figure) {
      cmd_figure(o, out);
    } else {
      return cmd_oracle_check(oracle, o, out, err);
    }
    return kSuccess;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
}

}  // namespace su11::cli
