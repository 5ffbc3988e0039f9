#pragma once

// Experiment orchestration: flat key = value configuration, named scenarios,
// the parallel sweep runner and the CSV / JSON writers.
//
// Config grammar: one `key = value` per line, dotted keys, '#' starts a
// comment, blank lines ignored. Lists are comma-separated. Unknown keys are
// an error. See README.md for the key table.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkdv/evolution.hpp"
#include "gkdv/imethod.hpp"
#include "gkdv/invariants.hpp"

namespace gkdv {

struct InitialSpec {
  // gaussian | sech | soliton | scaled_ground_state | from_file | random
  std::string kind = "gaussian";
  double amplitude = 1.0;
  double width = 1.0;
  double center = 0.0;
  double c = 1.0;      // soliton speed
  double scale = 1.0;  // lambda of the scaling map, scaled_ground_state only
  std::string file;    // checkpoint path, from_file only
  int max_mode = 0;    // random only; 0 means n/8
  double decay = 1.0;  // random only
};

// Parses "kind" or "kind:key=value,key=value" with the InitialSpec keys.
InitialSpec parse_initial_spec(const std::string& text);

struct SimConfig {
  std::string scenario;
  int k = 5;
  int mu = 1;
  int n = 1024;
  double length = 100.0;
  std::optional<double> dt_override;
  double t_final = 1.0;
  int record_every = 10;
  double s_track = 1.0;
  InitialSpec initial;
  std::vector<double> n_list;       // imethod.N_list
  std::optional<double> imethod_s;  // imethod.s
  std::string output_dir = "gkdv-out";
  std::uint64_t seed = 0;
  int workers = 1;

  ModelParams model() const { return {k, mu}; }
  Grid grid() const { return {n, length}; }
};

// Throws std::invalid_argument naming the line on malformed input.
SimConfig parse_config(const std::string& text);
SimConfig load_config(const std::filesystem::path& path);
// Sets one dotted key; used by the parser and for command-line overrides.
void set_config_value(SimConfig& config, const std::string& key, const std::string& value);
std::map<std::string, std::string> config_echo(const SimConfig& config);

Field build_initial(const SimConfig& config);

// output.dir, unless GKDV_OUT is set.
std::filesystem::path resolve_output_dir(const SimConfig& config);

struct Assertion {
  std::string name;
  std::string invariant;  // the property the check stands for
  bool passed;
  std::string detail;
};

struct RunReport {
  std::string scenario;
  std::map<std::string, std::string> config;
  std::string started;
  std::string finished;
  std::vector<std::string> files;
  std::optional<ThresholdReport> threshold;
  std::optional<double> sweep_slope;
  bool under_resolved = false;
  std::vector<Assertion> assertions;
  std::optional<std::string> error;

  // No error and every assertion passed.
  bool passed() const;
};

inline const std::vector<std::string> kScenarios = {"conservation",     "soliton-regression", "threshold-barrier",
                                                    "defocusing-growth", "imethod-sweep",      "gwp-schedule",
                                                    "resonance"};

// Runs the named scenario and writes its artifacts below the output
// directory. Throws std::invalid_argument for an unknown name or a config
// that does not meet the scenario's preconditions.
RunReport run_scenario(const std::string& name, const SimConfig& config);

// Runs every config (scenario taken from config.scenario) on `workers`
// threads. Reports come back in input order; an exception in one run is
// recorded in its report and does not affect the others.
std::vector<RunReport> sweep(const std::vector<SimConfig>& configs, int workers);

// CSV writers; every float is printed with 17 significant digits.
std::string format_real(double v);
void write_series_csv(const std::filesystem::path& path, const InvariantSeries& series);
void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep);
std::string threshold_csv(const ThresholdReport& r);
std::string exponents_csv(const ExponentTable& t);
std::string groundstate_csv_header();
std::string groundstate_csv_row(int k);

std::string report_json(const RunReport& report);
void write_report(const std::filesystem::path& path, const RunReport& report);

}  // namespace gkdv
