#include "nclaw/grid.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace nclaw {

PiecewiseLinearFn PiecewiseLinearFn::constant(double c) {
  PiecewiseLinearFn f;
  f.pieces = {{c, 0.0}};
  return f;
}

PiecewiseLinearFn PiecewiseLinearFn::step(double x0, double left,
                                          double right) {
  PiecewiseLinearFn f;
  f.breaks = {x0};
  f.pieces = {{left, 0.0}, {right, 0.0}};
  return f;
}

double PiecewiseLinearFn::value(double x) const {
  std::size_t i = std::upper_bound(breaks.begin(), breaks.end(), x) -
                  breaks.begin();
  return pieces[i].a + pieces[i].b * x;
}

double PiecewiseLinearFn::integral(double xl, double xr) const {
  double acc = 0.0;
  double cur = xl;
  for (std::size_t i = 0; i <= breaks.size() && cur < xr; ++i) {
    double end = i < breaks.size() ? std::min(breaks[i], xr) : xr;
    if (end > cur) {
      const Piece& p = pieces[i];
      acc += p.a * (end - cur) + 0.5 * p.b * (end * end - cur * cur);
      cur = end;
    }
  }
  return acc;
}

InitialData InitialData::piecewise(PiecewiseLinearFn f) {
  InitialData d;
  d.is_piecewise = true;
  d.pl = std::move(f);
  return d;
}

InitialData InitialData::callable(std::function<double(double)> f) {
  InitialData d;
  d.is_piecewise = false;
  d.fn = std::move(f);
  return d;
}

double InitialData::value(double x) const {
  return is_piecewise ? pl.value(x) : fn(x);
}

double InitialData::average(double xl, double xr) const {
  if (is_piecewise) return pl.integral(xl, xr) / (xr - xl);
  static const double xg[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                               0.5384693101056831, 0.9061798459386640};
  static const double wg[5] = {0.2369268850561891, 0.4786286704993665,
                               0.5688888888888889, 0.4786286704993665,
                               0.2369268850561891};
  double mid = 0.5 * (xl + xr);
  double half = 0.5 * (xr - xl);
  double acc = 0.0;
  for (int k = 0; k < 5; ++k) acc += wg[k] * fn(mid + half * xg[k]);
  return 0.5 * acc;
}

GridState init_average(const InitialData& u0, double a, double b,
                       std::size_t n_cells, Boundary boundary) {
  if (!(b > a)) throw BadDomain("init_average: empty domain interval");
  if (n_cells < 3) throw BadDomain("init_average: need at least 3 cells");
  GridState gs;
  gs.x_left = a;
  gs.dx = (b - a) / double(n_cells);
  gs.t = 0.0;
  gs.boundary = boundary;
  gs.cells.resize(n_cells);
  for (std::size_t j = 0; j < n_cells; ++j)
    gs.cells[j] = u0.average(gs.interface(j), gs.interface(j + 1));
  return gs;
}

}  // namespace nclaw
