#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "nclaw/errors.hpp"

namespace nclaw {

enum class Boundary { Outflow, Periodic };

// Uniform 1-D mesh of cell averages.  Interface i sits at
// x_left + i*dx, cell j covers [interface j, interface j+1).
struct GridState {
  double x_left = 0.0;
  double dx = 0.0;
  double t = 0.0;
  Boundary boundary = Boundary::Outflow;
  std::vector<double> cells;

  std::size_t size() const { return cells.size(); }
  double interface(std::size_t i) const { return x_left + double(i) * dx; }
  double center(std::size_t j) const { return x_left + (double(j) + 0.5) * dx; }
};

// Piecewise-linear function given by sorted breakpoints and one linear
// piece value = a + b*x per interval (pieces.size() == breaks.size()+1).
// Integrates exactly, which is what keeps interface-aligned step data
// exact at initialization.
struct PiecewiseLinearFn {
  struct Piece {
    double a = 0.0;
    double b = 0.0;
  };
  std::vector<double> breaks;
  std::vector<Piece> pieces;

  static PiecewiseLinearFn constant(double c);
  static PiecewiseLinearFn step(double x0, double left, double right);

  double value(double x) const;
  double integral(double xl, double xr) const;
};

// Initial data: exactly integrable piecewise-linear profiles, or an
// arbitrary callable averaged by 5-point Gauss quadrature per cell.
struct InitialData {
  static InitialData piecewise(PiecewiseLinearFn fn);
  static InitialData callable(std::function<double(double)> fn);

  double value(double x) const;
  double average(double xl, double xr) const;

  bool is_piecewise = false;
  PiecewiseLinearFn pl;
  std::function<double(double)> fn;
};

// Cell averages of u0 over n_cells cells spanning [a, b].
GridState init_average(const InitialData& u0, double a, double b,
                       std::size_t n_cells, Boundary boundary);

}  // namespace nclaw
