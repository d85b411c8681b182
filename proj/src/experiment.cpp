#include "nclaw/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nclaw/kernels.hpp"

namespace nclaw {

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

double cubic_plus_f(double u) { return u * u * u + u; }

}  // namespace

Preset preset_from_name(const std::string& name) {
  std::string s;
  for (char c : name) s += char(std::tolower(static_cast<unsigned char>(c)));
  if (s == "testa") return Preset::TestA;
  if (s == "testb") return Preset::TestB;
  if (s == "testc") return Preset::TestC;
  if (s == "testd") return Preset::TestD;
  if (s == "teste") return Preset::TestE;
  if (s == "testf") return Preset::TestF;
  if (s == "testg") return Preset::TestG;
  if (s == "advection" || s == "advectiondemo") return Preset::AdvectionDemo;
  if (s == "custom") return Preset::Custom;
  throw ConfigError("unknown preset: " + name);
}

std::string preset_name(Preset p) {
  switch (p) {
    case Preset::TestA: return "testa";
    case Preset::TestB: return "testb";
    case Preset::TestC: return "testc";
    case Preset::TestD: return "testd";
    case Preset::TestE: return "teste";
    case Preset::TestF: return "testf";
    case Preset::TestG: return "testg";
    case Preset::AdvectionDemo: return "advection";
    case Preset::Custom: return "custom";
  }
  return "custom";
}

ExperimentSpec preset_spec(Preset p) {
  ExperimentSpec s;
  s.preset = p;
  s.name = preset_name(p);
  switch (p) {
    case Preset::TestA:
      s.schemes = {"reconstruction"};
      s.cell_counts = {30};
      s.domain_lo = -1.0;
      s.domain_hi = 2.0;
      s.t_end = 0.1;
      s.snapshot_times = {0.0, 0.05, 0.1};
      s.initial = "step";
      s.u_left = 4.0;
      s.u_right = -3.0;
      break;
    case Preset::TestB:
      s.schemes = {"reconstruction"};
      s.cell_counts = {200, 400, 800, 1600, 3200};
      s.domain_lo = -1.0;
      s.domain_hi = 1.0;
      s.t_end = 0.012;
      s.snapshot_times = {0.0, 0.012};
      s.initial = "step";
      s.u_left = 4.0;
      s.u_right = -5.0;
      break;
    case Preset::TestC:
      s.schemes = {"reconstruction"};
      s.cell_counts = {200, 400, 800, 1600, 3200};
      s.domain_lo = -1.0;
      s.domain_hi = 1.0;
      s.t_end = 0.012;
      s.snapshot_times = {0.0, 0.012};
      s.initial = "step";
      s.u_left = 4.0;
      s.u_right = -2.0;
      break;
    case Preset::TestD: {
      s.schemes = {"reconstruction"};
      s.cell_counts = {200};
      s.domain_lo = 0.0;
      s.domain_hi = 1.0;
      s.initial = "three_step";
      // Two kinetic shocks from x = 0.1 and 0.2; they meet at t*.
      double s1 = (cubic_plus_f(-3.0) - cubic_plus_f(4.0)) / (-3.0 - 4.0);
      double s2 = (cubic_plus_f(2.25) - cubic_plus_f(-3.0)) / (2.25 + 3.0);
      double t_star = (0.2 - 0.1) / (s1 - s2);
      s.t_end = 1.15 * t_star;
      s.snapshot_times = {0.0, 0.0010, 0.0017, 0.0020, s.t_end};
      s.notes.push_back(
          "collision time computed from the two shock speeds; t_end is "
          "1.15x that");
      break;
    }
    case Preset::TestE:
      s.schemes = {"reconstruction", "glimm"};
      s.cell_counts = {100, 10000};
      s.domain_lo = -0.5;
      s.domain_hi = 0.5;
      s.boundary = Boundary::Periodic;
      s.t_end = 0.5;
      s.snapshot_times = {0.0, 0.25, 0.5};
      s.initial = "sin";
      s.notes.push_back(
          "initial=sin is sin(2*pi*x), spanning both convexity regions; "
          "the low-amplitude variant sin(x/(2*pi)) (max ~0.08, single "
          "region, no nonclassical waves) is available as "
          "initial=sin_literal");
      break;
    case Preset::TestF:
      s.schemes = {"reconstruction"};
      s.cell_counts = {3125, 6250, 12500};
      s.domain_lo = -1.0;
      s.domain_hi = 1.5;
      s.t_end = 0.5;
      s.snapshot_times = {0.0, 0.25, 0.5};
      s.initial = "ramp";
      s.notes.push_back(
          "ramp initial data: 0 below x=-0.5, 1+20(x+0.45) up to 1 on "
          "(-0.5,-0.45), then -0.75; the jump at -0.45 is an exact "
          "kinetic pair for beta=0.75");
      break;
    case Preset::TestG:
      s.schemes = {"reconstruction", "variant"};
      s.cell_counts = {100};
      s.domain_lo = -0.5;
      s.domain_hi = 0.5;
      s.boundary = Boundary::Periodic;
      s.t_end = 0.25;
      s.snapshot_times = {0.0, 0.25};
      s.initial = "sin";
      break;
    case Preset::AdvectionDemo:
      s.schemes = {"upwind", "reconstruction"};
      s.cell_counts = {100};
      s.domain_lo = -0.25;
      s.domain_hi = 0.75;
      s.t_end = 0.25;
      s.snapshot_times = {0.0, 0.25};
      s.flux = "advection";
      s.initial = "step";
      s.u_left = 1.0;
      s.u_right = 0.0;
      break;
    case Preset::Custom:
      break;
  }
  return s;
}

FluxSpec make_flux(const ExperimentSpec& spec) {
  if (spec.flux == "cubic_plus") return FluxSpec::cubic_plus();
  if (spec.flux == "cubic_minus") return FluxSpec::cubic_minus();
  if (spec.flux == "advection")
    return FluxSpec::linear_advection(spec.advection_speed);
  throw ConfigError("unknown flux: " + spec.flux);
}

InitialData make_initial(const ExperimentSpec& spec) {
  if (spec.initial == "step")
    return InitialData::piecewise(
        PiecewiseLinearFn::step(spec.jump_x, spec.u_left, spec.u_right));
  if (spec.initial == "three_step") {
    PiecewiseLinearFn f;
    f.breaks = {0.1, 0.2};
    f.pieces = {{4.0, 0.0}, {-3.0, 0.0}, {2.25, 0.0}};
    return InitialData::piecewise(f);
  }
  if (spec.initial == "ramp") {
    PiecewiseLinearFn f;
    f.breaks = {-0.5, -0.45};
    f.pieces = {{0.0, 0.0}, {10.0, 20.0}, {-0.75, 0.0}};
    return InitialData::piecewise(f);
  }
  if (spec.initial == "sin")
    return InitialData::callable(
        [](double x) { return std::sin(2.0 * kPi * x); });
  if (spec.initial == "sin_literal")
    return InitialData::callable(
        [](double x) { return std::sin(x / (2.0 * kPi)); });
  throw ConfigError("unknown initial data: " + spec.initial);
}

namespace {

Scheme scheme_from_name(const ExperimentSpec& spec, const std::string& name) {
  if (name == "upwind") return Scheme::Upwind;
  if (name == "variant") return Scheme::VariantTestG;
  if (name == "reconstruction")
    return spec.flux == "advection" ? Scheme::AdvectionReconstruction
                                    : Scheme::Reconstruction;
  throw ConfigError("unknown scheme: " + name);
}

void append_history(RunHistory& into, const RunHistory& part) {
  for (std::size_t k = into.steps.empty() ? 0 : 1; k < part.steps.size(); ++k)
    into.steps.push_back(part.steps[k]);
  into.straddle_traces.insert(into.straddle_traces.end(),
                              part.straddle_traces.begin(),
                              part.straddle_traces.end());
  into.influx_integral += part.influx_integral;
  into.outflux_integral += part.outflux_integral;
  into.degenerate_speed_warnings += part.degenerate_speed_warnings;
}

MeshRunResult run_one_mesh(const ExperimentSpec& spec,
                           const std::string& scheme_name, std::size_t cells) {
  MeshRunResult r;
  r.scheme = scheme_name;
  r.cells = cells;

  GridState gs = init_average(make_initial(spec), spec.domain_lo,
                              spec.domain_hi, cells, spec.boundary);
  r.dx = gs.dx;

  std::vector<double> times = spec.snapshot_times;
  times.push_back(spec.t_end);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  times.erase(std::remove_if(times.begin(), times.end(),
                             [&](double t) { return t > spec.t_end; }),
              times.end());

  RunHistory history;
  RunOptions opts;
  opts.fixed_dt = spec.fixed_dt;
  auto start = std::chrono::steady_clock::now();

  if (scheme_name == "glimm") {
    GlimmConfig cfg;
    cfg.cfl = spec.glimm_cfl;
    cfg.flux = make_flux(spec);
    cfg.kinetics = KineticFunction::linear(spec.beta);
    cfg.sequence_offset = spec.seq_offset;
    for (double t : times) {
      if (t > gs.t) {
        RunResult part = glimm_run(cfg, std::move(gs), t, opts);
        gs = std::move(part.state);
        cfg.sequence_offset += part.history.steps.size() - 1;
        append_history(history, part.history);
      }
      r.snapshots.push_back(SnapshotResult{t, gs});
    }
  } else {
    SchemeConfig cfg;
    cfg.scheme = scheme_from_name(spec, scheme_name);
    cfg.cfl = spec.cfl;
    cfg.flux = make_flux(spec);
    cfg.kinetics = KineticFunction::linear(spec.beta);
    for (double t : times) {
      if (t > gs.t) {
        RunResult part = run(cfg, std::move(gs), t, opts);
        gs = std::move(part.state);
        append_history(history, part.history);
      }
      r.snapshots.push_back(SnapshotResult{t, gs});
    }
  }

  auto stop = std::chrono::steady_clock::now();
  r.wall_seconds = std::chrono::duration<double>(stop - start).count();
  r.steps = history.steps.empty() ? 0 : history.steps.size() - 1;
  if (!history.steps.empty()) {
    r.mass_initial = history.steps.front().mass;
    r.mass_final = history.steps.back().mass;
    r.tv_final = history.steps.back().total_variation;
    r.entropy_initial = history.steps.front().entropy;
    r.entropy_final = history.steps.back().entropy;
  }
  r.boundary_balance = history.influx_integral - history.outflux_integral;

  if ((scheme_name == "reconstruction" || scheme_name == "variant") &&
      spec.flux != "advection") {
    r.scatter_pairs = extract_kinetic_pairs(history);
    if (r.scatter_pairs.pairs.size() >= 2) {
      try {
        r.scatter = fit_scatter(r.scatter_pairs);
      } catch (const DegenerateFit&) {
        // single exactly-transported shock: all abscissae coincide
      }
      FluxSpec fs = make_flux(spec);
      double slope = fs.convexity == Convexity::ConcaveConvex
                         ? -spec.beta
                         : -1.0 / spec.beta;
      r.scatter_rms_to_prescribed =
          scatter_rms_to_line(r.scatter_pairs, slope, 0.0);
    }
  }
  return r;
}

std::string format_time_tag(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "t%.6f", t);
  return buf;
}

void write_snapshot_csv(const std::string& path, const SnapshotResult& snap,
                        std::vector<std::string>& written) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << "t,x,u\n";
  char buf[128];
  for (std::size_t j = 0; j < snap.state.size(); ++j) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", snap.t,
                  snap.state.center(j), snap.state.cells[j]);
    out << buf;
  }
  written.push_back(path);
}

json run_to_json(const MeshRunResult& r) {
  json j;
  j["scheme"] = r.scheme;
  j["cells"] = r.cells;
  j["dx"] = r.dx;
  j["steps"] = r.steps;
  j["wall_seconds"] = r.wall_seconds;
  j["mass_initial"] = r.mass_initial;
  j["mass_final"] = r.mass_final;
  j["boundary_balance"] = r.boundary_balance;
  j["mass_conservation_defect"] =
      (r.mass_final - r.mass_initial) - r.boundary_balance;
  j["tv_final"] = r.tv_final;
  j["entropy_initial"] = r.entropy_initial;
  j["entropy_final"] = r.entropy_final;
  if (r.l1_error_final) j["l1_error_final"] = *r.l1_error_final;
  if (r.scatter) {
    j["scatter_slope"] = r.scatter->slope;
    j["scatter_intercept"] = r.scatter->intercept;
  }
  if (!r.scatter_pairs.pairs.empty())
    j["scatter_pairs"] = r.scatter_pairs.pairs.size();
  if (r.scatter_rms_to_prescribed)
    j["scatter_rms_to_prescribed"] = *r.scatter_rms_to_prescribed;
  return j;
}

}  // namespace

const MeshRunResult* find_run(const ExperimentReport& report,
                              const std::string& scheme, std::size_t cells) {
  for (const auto& r : report.runs)
    if (r.scheme == scheme && r.cells == cells) return &r;
  return nullptr;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  if (spec.cell_counts.empty())
    throw ConfigError("experiment needs at least one mesh (cells or dx)");
  if (spec.schemes.empty()) throw ConfigError("experiment needs a scheme");
  if (spec.beta < 0.5 || spec.beta >= 1.0)
    throw ConfigError("beta must lie in [0.5, 1)");
  if (!(spec.cfl > 0.0 && spec.cfl <= 1.0))
    throw ConfigError("cfl must lie in (0, 1]");
  if (!(spec.glimm_cfl > 0.0 && spec.glimm_cfl <= 0.5))
    throw ConfigError("glimm_cfl must lie in (0, 0.5]");

  ExperimentReport report;
  report.spec = spec;

  for (const std::string& scheme : spec.schemes)
    for (std::size_t cells : spec.cell_counts)
      report.runs.push_back(run_one_mesh(spec, scheme, cells));

  // Exact Riemann reference for the step presets.
  std::optional<RiemannExact> exact;
  if (spec.initial == "step" && spec.flux != "advection")
    exact.emplace(make_flux(spec), KineticFunction::linear(spec.beta),
                  spec.u_left, spec.u_right, spec.jump_x, 0.0);

  if (spec.preset == Preset::TestD) {
    FluxSpec fs = make_flux(spec);
    double s1 = shock_speed(fs, 4.0, -3.0);
    double s2 = shock_speed(fs, -3.0, 2.25);
    double t_star = (0.2 - 0.1) / (s1 - s2);
    report.collision_time = t_star;
    double x_star = 0.1 + s1 * t_star;
    exact.emplace(fs, KineticFunction::linear(spec.beta), 4.0, 2.25, x_star,
                  t_star);
  }

  if (exact) {
    for (auto& r : report.runs)
      r.l1_error_final = l1_error(r.snapshots.back().state, exact->averager());
  }

  for (const std::string& scheme : spec.schemes) {
    std::vector<ConvergencePoint> pts;
    for (const auto& r : report.runs)
      if (r.scheme == scheme && r.l1_error_final)
        pts.push_back({r.dx, *r.l1_error_final});
    if (pts.size() >= 3) {
      try {
        report.convergence.emplace_back(scheme, convergence_order(pts));
      } catch (const DegenerateFit&) {
        // exact runs everywhere (Test A): nothing to fit
      }
    }
  }

  if (!spec.out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(spec.out_dir);
    auto path = [&](const std::string& leaf) {
      return (fs::path(spec.out_dir) / leaf).string();
    };

    for (const auto& r : report.runs) {
      for (const auto& snap : r.snapshots) {
        char leaf[256];
        std::snprintf(leaf, sizeof leaf, "%s_%s_n%05zu_%s.csv",
                      spec.name.c_str(), r.scheme.c_str(), r.cells,
                      format_time_tag(snap.t).c_str());
        write_snapshot_csv(path(leaf), snap, report.written_files);
      }
      if (r.scatter) {
        char leaf[256];
        std::snprintf(leaf, sizeof leaf, "%s_%s_n%05zu_scatter.csv",
                      spec.name.c_str(), r.scheme.c_str(), r.cells);
        std::ofstream out(path(leaf));
        if (!out) throw Error(std::string("cannot write ") + leaf);
        out << "uL,uR\n";
        char buf[80];
        for (const TracePair& p : r.scatter_pairs.pairs) {
          std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.u_left, p.u_right);
          out << buf;
        }
        report.written_files.push_back(path(leaf));
      }
    }

    for (const auto& [scheme, conv] : report.convergence) {
      std::string leaf = spec.name + "_" + scheme + "_convergence.csv";
      std::ofstream out(path(leaf));
      if (!out) throw Error("cannot write " + leaf);
      out << "dx,error\n";
      char buf[80];
      for (const auto& p : conv.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.dx, p.error);
        out << buf;
      }
      report.written_files.push_back(path(leaf));
    }

    json manifest;
    manifest["preset"] = preset_name(spec.preset);
    manifest["name"] = spec.name;
    manifest["schemes"] = spec.schemes;
    manifest["cells"] = spec.cell_counts;
    manifest["t_end"] = spec.t_end;
    manifest["snapshot_times"] = spec.snapshot_times;
    manifest["beta"] = spec.beta;
    manifest["cfl"] = spec.cfl;
    manifest["glimm_cfl"] = spec.glimm_cfl;
    manifest["seq_offset"] = spec.seq_offset;
    manifest["fixed_dt"] = spec.fixed_dt;
    manifest["domain"] = {spec.domain_lo, spec.domain_hi};
    manifest["boundary"] =
        spec.boundary == Boundary::Periodic ? "periodic" : "outflow";
    manifest["flux"] = spec.flux;
    if (spec.flux == "advection")
      manifest["advection_speed"] = spec.advection_speed;
    manifest["initial"] = spec.initial;
    if (spec.initial == "step") {
      manifest["u_left"] = spec.u_left;
      manifest["u_right"] = spec.u_right;
      manifest["jump_x"] = spec.jump_x;
    }
    manifest["kernels"] = kernels::active_ops().name;
    manifest["notes"] = spec.notes;
    if (report.collision_time) manifest["collision_time"] = *report.collision_time;
    manifest["runs"] = json::array();
    for (const auto& r : report.runs) manifest["runs"].push_back(run_to_json(r));
    for (const auto& [scheme, conv] : report.convergence) {
      json c;
      c["scheme"] = scheme;
      c["fitted_order"] = conv.fitted_order;
      c["fit_residual"] = conv.fit_residual;
      manifest["convergence"].push_back(c);
    }

    std::string mpath = path(spec.name + "_manifest.json");
    std::ofstream out(mpath);
    if (!out) throw Error("cannot write " + mpath);
    out << manifest.dump(2) << "\n";
    report.written_files.push_back(mpath);
  }

  return report;
}

void apply_config_file(ExperimentSpec& spec, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw ConfigError(path + ":" + std::to_string(lineno) + ": " + what);
  };
  auto parse_double = [&](const std::string& v) {
    try {
      std::size_t pos = 0;
      double d = std::stod(v, &pos);
      if (pos != v.size()) fail("trailing characters in number: " + v);
      return d;
    } catch (const ConfigError&) {
      throw;
    } catch (...) {
      fail("expected a number, got: " + v);
    }
    return 0.0;
  };
  auto not_space = [](char c) {
    return !std::isspace(static_cast<unsigned char>(c));
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string text = line.substr(0, line.find('#'));
    text.erase(text.begin(), std::find_if(text.begin(), text.end(), not_space));
    text.erase(std::find_if(text.rbegin(), text.rend(), not_space).base(),
               text.end());
    if (text.empty()) continue;
    auto eq = text.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    std::string key = text.substr(0, eq);
    std::string value = text.substr(eq + 1);
    key.erase(std::find_if(key.rbegin(), key.rend(), not_space).base(),
              key.end());
    value.erase(value.begin(),
                std::find_if(value.begin(), value.end(), not_space));
    if (key.empty()) fail("empty key");
    if (value.empty()) fail("empty value for key " + key);

    auto split = [&](const std::string& v) {
      std::vector<std::string> parts;
      std::stringstream ss(v);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item.erase(item.begin(),
                   std::find_if(item.begin(), item.end(), not_space));
        item.erase(std::find_if(item.rbegin(), item.rend(), not_space).base(),
                   item.end());
        if (!item.empty()) parts.push_back(item);
      }
      return parts;
    };

    if (key == "preset") {
      ExperimentSpec base = preset_spec(preset_from_name(value));
      base.out_dir = spec.out_dir;
      spec = base;
    } else if (key == "name") {
      spec.name = value;
    } else if (key == "scheme" || key == "schemes") {
      spec.schemes = split(value);
    } else if (key == "cells") {
      spec.cell_counts.clear();
      for (const auto& v : split(value)) {
        double d = parse_double(v);
        if (d < 3 || d != std::floor(d)) fail("cells must be integers >= 3");
        spec.cell_counts.push_back(std::size_t(d));
      }
    } else if (key == "dx") {
      spec.cell_counts.clear();
      for (const auto& v : split(value)) {
        double h = parse_double(v);
        if (!(h > 0)) fail("dx must be positive");
        spec.cell_counts.push_back(
            std::size_t(std::llround((spec.domain_hi - spec.domain_lo) / h)));
      }
    } else if (key == "t_end") {
      spec.t_end = parse_double(value);
    } else if (key == "snapshots") {
      spec.snapshot_times.clear();
      for (const auto& v : split(value))
        spec.snapshot_times.push_back(parse_double(v));
    } else if (key == "beta") {
      spec.beta = parse_double(value);
    } else if (key == "cfl") {
      spec.cfl = parse_double(value);
    } else if (key == "glimm_cfl") {
      spec.glimm_cfl = parse_double(value);
    } else if (key == "seq_offset") {
      spec.seq_offset = std::uint64_t(parse_double(value));
    } else if (key == "fixed_dt") {
      if (value != "true" && value != "false")
        fail("fixed_dt must be true/false");
      spec.fixed_dt = value == "true";
    } else if (key == "domain_lo") {
      spec.domain_lo = parse_double(value);
    } else if (key == "domain_hi") {
      spec.domain_hi = parse_double(value);
    } else if (key == "boundary") {
      if (value == "outflow")
        spec.boundary = Boundary::Outflow;
      else if (value == "periodic")
        spec.boundary = Boundary::Periodic;
      else
        fail("boundary must be outflow or periodic");
    } else if (key == "flux") {
      spec.flux = value;
    } else if (key == "advection_speed") {
      spec.advection_speed = parse_double(value);
    } else if (key == "initial") {
      spec.initial = value;
    } else if (key == "u_left") {
      spec.u_left = parse_double(value);
    } else if (key == "u_right") {
      spec.u_right = parse_double(value);
    } else if (key == "jump_x") {
      spec.jump_x = parse_double(value);
    } else if (key == "out") {
      spec.out_dir = value;
    } else {
      fail("unknown key: " + key);
    }
  }
}

}  // namespace nclaw
