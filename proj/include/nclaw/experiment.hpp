#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nclaw/analysis.hpp"
#include "nclaw/glimm.hpp"
#include "nclaw/schemes.hpp"

namespace nclaw {

enum class Preset {
  TestA,
  TestB,
  TestC,
  TestD,
  TestE,
  TestF,
  TestG,
  AdvectionDemo,
  Custom
};

Preset preset_from_name(const std::string& name);  // throws ConfigError
std::string preset_name(Preset p);

// Fully resolved experiment configuration.  Presets fill every field;
// a custom experiment supplies them through a config file and flags.
struct ExperimentSpec {
  Preset preset = Preset::Custom;
  std::string name = "custom";
  std::vector<std::string> schemes = {"reconstruction"};
  std::vector<std::size_t> cell_counts;
  double t_end = 0.1;
  std::vector<double> snapshot_times;  // t_end is always included
  double beta = 0.75;
  double cfl = 0.5;
  double glimm_cfl = 0.45;
  std::uint64_t seq_offset = 1;
  bool fixed_dt = false;
  double domain_lo = -1.0;
  double domain_hi = 1.0;
  Boundary boundary = Boundary::Outflow;
  std::string flux = "cubic_plus";  // cubic_plus | cubic_minus | advection
  double advection_speed = 1.0;
  // step | three_step | ramp | sin | sin_literal with parameters below
  std::string initial = "step";
  double u_left = 4.0;
  double u_right = -3.0;
  double jump_x = 0.0;
  std::string out_dir;  // empty: no files written
  std::vector<std::string> notes;
};

ExperimentSpec preset_spec(Preset p);

FluxSpec make_flux(const ExperimentSpec& spec);
InitialData make_initial(const ExperimentSpec& spec);

// `key = value` lines, '#' comments, comma-separated lists.  Unknown
// keys and malformed values raise ConfigError with the line number.
void apply_config_file(ExperimentSpec& spec, const std::string& path);

struct SnapshotResult {
  double t = 0.0;
  GridState state;
};

struct MeshRunResult {
  std::string scheme;
  std::size_t cells = 0;
  double dx = 0.0;
  std::vector<SnapshotResult> snapshots;  // at spec.snapshot_times
  std::size_t steps = 0;
  double wall_seconds = 0.0;
  double mass_initial = 0.0;
  double mass_final = 0.0;
  double boundary_balance = 0.0;  // influx - outflux time integrals
  double tv_final = 0.0;
  double entropy_initial = 0.0;
  double entropy_final = 0.0;
  std::optional<double> l1_error_final;  // vs. the preset's exact reference
  std::optional<LineFit> scatter;
  std::optional<double> scatter_rms_to_prescribed;
  KineticScatter scatter_pairs;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<MeshRunResult> runs;
  // Per scheme that produced >= 3 nonzero errors.
  std::vector<std::pair<std::string, ConvergenceReport>> convergence;
  std::optional<double> collision_time;  // TestD
  std::vector<std::string> written_files;
};

const MeshRunResult* find_run(const ExperimentReport& report,
                              const std::string& scheme, std::size_t cells);

// Runs every scheme on every mesh, performs the preset's analyses and,
// when out_dir is set, writes snapshot/convergence/scatter CSVs and a
// JSON manifest.
ExperimentReport run_experiment(const ExperimentSpec& spec);

}  // namespace nclaw
