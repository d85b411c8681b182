// nclaw command line runner: named experiment presets and custom
// configurations for the nonclassical-shock finite-volume laboratory.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nclaw/experiment.hpp"

namespace {

void print_summary(const nclaw::ExperimentReport& report) {
  for (const auto& r : report.runs) {
    std::printf("%-16s n=%6zu dx=%-10.3g steps=%-8zu wall=%7.2fs", r.scheme.c_str(),
                r.cells, r.dx, r.steps, r.wall_seconds);
    if (r.l1_error_final) std::printf("  l1=%.6g", *r.l1_error_final);
    if (r.scatter)
      std::printf("  scatter slope=%.4f intercept=%.4f", r.scatter->slope,
                  r.scatter->intercept);
    std::printf("\n");
  }
  for (const auto& [scheme, conv] : report.convergence)
    std::printf("%-16s fitted L1 order = %.4f (residual %.3g)\n",
                scheme.c_str(), conv.fitted_order, conv.fit_residual);
  if (report.collision_time)
    std::printf("collision time = %.6g\n", *report.collision_time);
  if (!report.written_files.empty())
    std::printf("wrote %zu files to %s\n", report.written_files.size(),
                report.spec.out_dir.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-volume laboratory for nonclassical shock waves"};
  app.require_subcommand(1);

  CLI::App* run_cmd = app.add_subcommand("run", "run an experiment");
  std::string preset = "custom";
  std::string config_path;
  std::vector<std::size_t> cells;
  std::vector<double> dx;
  double t_end = -1.0;
  std::vector<std::string> schemes;
  double beta = -1.0;
  double cfl = -1.0;
  double glimm_cfl = -1.0;
  std::string out_dir;
  bool fixed_dt = false;
  std::uint64_t seq_offset = 0;

  run_cmd->add_option("--preset", preset, "testa..testg, advection or custom");
  run_cmd->add_option("--config", config_path, "key = value config file");
  run_cmd->add_option("--cells", cells, "cells per mesh (repeatable)");
  run_cmd->add_option("--dx", dx, "cell width per mesh (repeatable)");
  run_cmd->add_option("--t-end", t_end, "final time");
  run_cmd->add_option("--scheme", schemes,
                      "upwind|reconstruction|variant|glimm (repeatable)");
  run_cmd->add_option("--beta", beta, "kinetic slope in [0.5, 1)");
  run_cmd->add_option("--cfl", cfl, "CFL number in (0, 1]");
  run_cmd->add_option("--glimm-cfl", glimm_cfl, "Glimm CFL number in (0, 0.5]");
  run_cmd->add_option("--out", out_dir, "output directory");
  run_cmd->add_flag("--fixed-dt", fixed_dt, "freeze dt from the initial state");
  run_cmd->add_option("--seq-offset", seq_offset,
                      "first van der Corput index (>= 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    nclaw::ExperimentSpec spec = preset == "custom" && !config_path.empty()
                                     ? nclaw::ExperimentSpec{}
                                     : nclaw::preset_spec(
                                           nclaw::preset_from_name(preset));
    if (!config_path.empty()) nclaw::apply_config_file(spec, config_path);
    if (!schemes.empty()) spec.schemes = schemes;
    if (!cells.empty()) spec.cell_counts = cells;
    if (!dx.empty()) {
      spec.cell_counts.clear();
      for (double h : dx) {
        if (!(h > 0.0)) throw nclaw::ConfigError("--dx must be positive");
        spec.cell_counts.push_back(std::size_t(
            std::llround((spec.domain_hi - spec.domain_lo) / h)));
      }
    }
    if (t_end >= 0.0) spec.t_end = t_end;
    if (beta >= 0.0) spec.beta = beta;
    if (cfl > 0.0) spec.cfl = cfl;
    if (glimm_cfl > 0.0) spec.glimm_cfl = glimm_cfl;
    if (seq_offset > 0) spec.seq_offset = seq_offset;
    if (fixed_dt) spec.fixed_dt = true;
    if (!out_dir.empty()) spec.out_dir = out_dir;

    nclaw::ExperimentReport report = nclaw::run_experiment(spec);
    print_summary(report);
    return 0;
  } catch (const nclaw::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
