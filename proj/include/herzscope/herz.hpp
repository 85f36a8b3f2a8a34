#pragma once

#include <vector>

#include "herzscope/exponents.hpp"
#include "herzscope/grid.hpp"
#include "herzscope/lebesgue.hpp"

namespace herzscope {

/// Parameters of the homogeneous variable-exponent Herz-Morrey norm:
/// sup_L 2^{-L lambda} ( sum_{l <= L} ||2^{l alpha(.)} f chi_l||_{p(.)}^q )^{1/q},
/// with l and L truncated to the grid's dyadic range [l_min, l_max].
/// q may be infinity (inner sum replaced by a max).
struct HerzParams {
  Exponent alpha;  // Herz-mode weight exponent
  Exponent p;      // Lebesgue-mode integrability exponent
  double q = 1.0;
  double lambda = 0.0;
  double rel_tol = 1e-8;  // Luxemburg solver tolerance for the annulus norms

  static HerzParams make(Exponent alpha, Exponent p, double q, double lambda,
                         double rel_tol = 1e-8);
};

/// Per-annulus norms t_l = ||2^{l alpha(.)} f chi_l||_{p(.)} for
/// l = l_min..l_max (indexed from l_min). For constant alpha the weight is
/// factored out of the solve, which is exact by homogeneity.
std::vector<double> annulus_norms(const GridFunction& f, const HerzParams& hp);

double herz_morrey_norm(const GridFunction& f, const HerzParams& hp);

/// The origin/infinity split form of the norm: weights 2^{l alpha(0)} on
/// negative levels and 2^{l alpha_inf} on nonnegative ones, combined over the
/// two branches L <= 0 and L > 0, then raised to the 1/q. Requires finite q.
double herz_morrey_norm_split(const GridFunction& f, const HerzParams& hp);

/// Herz-Morrey-Hardy norm through the maximal-function proxy.
double herz_morrey_hardy_norm(const GridFunction& f, const HerzParams& hp);

}  // namespace herzscope
