#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace herzscope {

/// Uniform cell-centered grid over the closed box [-2^l_max, 2^l_max]^dim.
///
/// The dyadic range [l_min, l_max] indexes the balls B_l = B(0, 2^l) and
/// annuli F_l = B_l \ B_{l-1} that all Herz-type quantities are built from.
/// Cells are indexed in row-major order (x fastest).
struct Grid {
  int dim = 1;
  int l_min = 0;
  int l_max = 1;
  int points_per_axis = 16;
  double spacing = 0.0;      // h = 2 * 2^l_max / points_per_axis
  double cell_volume = 0.0;  // h^dim

  static Grid make(int dim, int l_min, int l_max, int points_per_axis);

  std::size_t cell_count() const;
  double box_half_width() const;  // 2^l_max

  /// Center coordinate of cell i along one axis; strictly inside the box.
  double axis_coord(int i) const;

  /// Euclidean norm of the cell center with flat index `flat`.
  double radius(std::size_t flat) const;

  /// Cell center as a point (y = 0 when dim == 1).
  std::array<double, 2> point(std::size_t flat) const;

  bool operator==(const Grid&) const = default;
};

/// Sampled real-valued function on a Grid (cell-center samples).
struct GridFunction {
  Grid grid;
  std::vector<double> values;

  static GridFunction zeros(const Grid& g);
};

/// Indicator of the closed ball B_l = {|x| <= 2^l} sampled at cell centers.
/// Valid for l_min - 1 <= l <= l_max; ties |x| = 2^l go to the ball.
GridFunction ball_mask(const Grid& g, int l);

/// Indicator of the annulus F_l = B_l \ B_{l-1}; valid for l_min <= l <= l_max.
GridFunction annulus_mask(const Grid& g, int l);

/// chi~_m: annulus_mask(m) for m >= 1, ball_mask(0) for m = 0.
GridFunction nonneg_mask(const Grid& g, int m);

/// Midpoint quadrature: cell_volume * sum of samples (pairwise summation).
double integrate(const GridFunction& f);

/// Pairwise (cascade) summation; deterministic for a fixed input order.
double stable_sum(std::span<const double> xs);

}  // namespace herzscope
