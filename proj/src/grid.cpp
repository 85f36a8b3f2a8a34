#include "herzscope/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace herzscope {

Grid Grid::make(int dim, int l_min, int l_max, int points_per_axis) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("Grid: dim must be 1 or 2");
  if (l_min >= l_max) throw std::invalid_argument("Grid: l_min must be < l_max");
  if (points_per_axis < 16 || points_per_axis % 2 != 0)
    throw std::invalid_argument("Grid: points_per_axis must be even and >= 16");
  Grid g;
  g.dim = dim;
  g.l_min = l_min;
  g.l_max = l_max;
  g.points_per_axis = points_per_axis;
  g.spacing = 2.0 * std::exp2(static_cast<double>(l_max)) / points_per_axis;
  g.cell_volume = (dim == 1) ? g.spacing : g.spacing * g.spacing;
  return g;
}

std::size_t Grid::cell_count() const {
  const auto n = static_cast<std::size_t>(points_per_axis);
  return dim == 1 ? n : n * n;
}

double Grid::box_half_width() const { return std::exp2(static_cast<double>(l_max)); }

double Grid::axis_coord(int i) const {
  return -box_half_width() + (i + 0.5) * spacing;
}

double Grid::radius(std::size_t flat) const {
  if (dim == 1) return std::abs(axis_coord(static_cast<int>(flat)));
  const int n = points_per_axis;
  const int iy = static_cast<int>(flat) / n;
  const int ix = static_cast<int>(flat) % n;
  return std::hypot(axis_coord(ix), axis_coord(iy));
}

std::array<double, 2> Grid::point(std::size_t flat) const {
  if (dim == 1) return {axis_coord(static_cast<int>(flat)), 0.0};
  const int n = points_per_axis;
  const int iy = static_cast<int>(flat) / n;
  const int ix = static_cast<int>(flat) % n;
  return {axis_coord(ix), axis_coord(iy)};
}

GridFunction GridFunction::zeros(const Grid& g) {
  return GridFunction{g, std::vector<double>(g.cell_count(), 0.0)};
}

GridFunction ball_mask(const Grid& g, int l) {
  if (l < g.l_min - 1 || l > g.l_max)
    throw std::out_of_range("ball_mask: l = " + std::to_string(l) + " outside [l_min-1, l_max]");
  GridFunction out = GridFunction::zeros(g);
  const double r = std::exp2(static_cast<double>(l));
  for (std::size_t i = 0; i < out.values.size(); ++i)
    if (g.radius(i) <= r) out.values[i] = 1.0;
  return out;
}

GridFunction annulus_mask(const Grid& g, int l) {
  if (l < g.l_min || l > g.l_max)
    throw std::out_of_range("annulus_mask: l = " + std::to_string(l) + " outside [l_min, l_max]");
  GridFunction out = GridFunction::zeros(g);
  const double r_out = std::exp2(static_cast<double>(l));
  const double r_in = std::exp2(static_cast<double>(l - 1));
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const double r = g.radius(i);
    if (r <= r_out && r > r_in) out.values[i] = 1.0;
  }
  return out;
}

GridFunction nonneg_mask(const Grid& g, int m) {
  if (m < 0 || m > g.l_max)
    throw std::out_of_range("nonneg_mask: m = " + std::to_string(m) + " outside [0, l_max]");
  return m == 0 ? ball_mask(g, 0) : annulus_mask(g, m);
}

double stable_sum(std::span<const double> xs) {
  if (xs.size() <= 32) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return stable_sum(xs.first(half)) + stable_sum(xs.subspan(half));
}

double integrate(const GridFunction& f) {
  return f.grid.cell_volume * stable_sum(f.values);
}

}  // namespace herzscope
