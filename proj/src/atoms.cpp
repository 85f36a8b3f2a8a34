#include "herzscope/atoms.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "herzscope/lebesgue.hpp"

namespace herzscope {
namespace {

// Scaled monomial (x/R)^beta evaluated at a cell center.
double monomial(const std::array<double, 2>& pt, const std::array<int, 2>& beta,
                double inv_radius) {
  double v = 1.0;
  for (int axis = 0; axis < 2; ++axis)
    for (int k = 0; k < beta[axis]; ++k) v *= pt[axis] * inv_radius;
  return v;
}

// Removes the component of `values` (restricted to the listed support cells)
// that has nonzero grid moments against the scaled monomials of degree <= s.
// Returns the largest coefficient magnitude of the removed polynomial.
double project_out_moments(const Grid& grid, std::vector<double>& values,
                           const std::vector<std::size_t>& support, int s,
                           double inv_radius) {
  const auto betas = moment_multi_indices(grid.dim, s);
  const int m = static_cast<int>(betas.size());
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(m, m);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
  std::vector<double> mono(m);
  for (std::size_t cell : support) {
    const auto pt = grid.point(cell);
    for (int k = 0; k < m; ++k) mono[k] = monomial(pt, betas[k], inv_radius);
    for (int k = 0; k < m; ++k) {
      rhs(k) += values[cell] * mono[k];
      for (int l = k; l < m; ++l) gram(k, l) += mono[k] * mono[l];
    }
  }
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < k; ++l) gram(k, l) = gram(l, k);
  const Eigen::VectorXd coef = gram.ldlt().solve(rhs);
  for (std::size_t cell : support) {
    const auto pt = grid.point(cell);
    double correction = 0.0;
    for (int k = 0; k < m; ++k) correction += coef(k) * monomial(pt, betas[k], inv_radius);
    values[cell] -= correction;
  }
  return coef.cwiseAbs().maxCoeff();
}

std::vector<double> moment_residuals_l1(const Grid& grid, const std::vector<double>& values,
                                        const std::vector<std::size_t>& support, int s,
                                        double inv_radius) {
  const auto betas = moment_multi_indices(grid.dim, s);
  double l1 = 0.0;
  for (std::size_t cell : support) l1 += std::abs(values[cell]);
  l1 *= grid.cell_volume;
  std::vector<double> residuals(betas.size(), 0.0);
  if (l1 == 0.0) return residuals;
  for (std::size_t k = 0; k < betas.size(); ++k) {
    double mom = 0.0;
    for (std::size_t cell : support)
      mom += values[cell] * monomial(grid.point(cell), betas[k], inv_radius);
    residuals[k] = std::abs(mom * grid.cell_volume) / l1;
  }
  return residuals;
}

}  // namespace

std::vector<std::array<int, 2>> moment_multi_indices(int dim, int s) {
  std::vector<std::array<int, 2>> betas;
  if (dim == 1) {
    for (int b = 0; b <= s; ++b) betas.push_back({b, 0});
  } else {
    for (int total = 0; total <= s; ++total)
      for (int bx = 0; bx <= total; ++bx) betas.push_back({bx, total - bx});
  }
  return betas;
}

AtomSpec make_central_atom(const Grid& grid, int r, const Exponent& p,
                           const Exponent& alpha, int s, std::uint64_t seed,
                           bool limited_type) {
  if (!(r > grid.l_min && r <= grid.l_max - 1))
    throw std::out_of_range("make_central_atom: r = " + std::to_string(r) +
                            " outside (l_min, l_max-1]");
  if (s < 0) throw std::invalid_argument("make_central_atom: s must be >= 0");
  if (limited_type && r < 1)
    throw std::invalid_argument("make_central_atom: limited-type atoms require r >= 1");
  if (!(p.grid() == grid) || !(alpha.grid() == grid))
    throw std::invalid_argument("make_central_atom: exponents not sampled on this grid");

  const double radius = std::exp2(static_cast<double>(r));
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < grid.cell_count(); ++i)
    if (grid.radius(i) <= radius) support.push_back(i);
  if (support.empty())
    throw std::runtime_error("make_central_atom: support ball contains no cells");

  const double measure = grid.cell_volume * static_cast<double>(support.size());
  const double alpha_r = alpha_at_radius(alpha, static_cast<double>(r));
  const double target_norm = std::pow(measure, -alpha_r / grid.dim);

  const auto poly_betas = moment_multi_indices(grid.dim, s + 1);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> coeffs(poly_betas.size());
    for (double& c : coeffs) c = unif(rng);

    AtomSpec atom;
    atom.r = r;
    atom.s = s;
    atom.limited_type = limited_type;
    atom.alpha_r = alpha_r;
    atom.target_norm = target_norm;
    atom.seed = seed + static_cast<std::uint64_t>(attempt);
    atom.function = GridFunction::zeros(grid);

    const double inv_radius = 1.0 / radius;
    for (std::size_t cell : support) {
      const auto pt = grid.point(cell);
      const double t = grid.radius(cell) * inv_radius;  // in [0, 1]
      const double bump = std::cos(0.5 * M_PI * t);
      double poly = 0.0;
      for (std::size_t k = 0; k < poly_betas.size(); ++k)
        poly += coeffs[k] * monomial(pt, poly_betas[k], inv_radius);
      atom.function.values[cell] = bump * bump * poly;
    }

    const double coeff_scale = project_out_moments(grid, atom.function.values, support, s,
                                                   inv_radius);
    double max_abs = 0.0;
    for (std::size_t cell : support)
      max_abs = std::max(max_abs, std::abs(atom.function.values[cell]));
    if (max_abs <= 1e-14 * (1.0 + coeff_scale)) continue;  // degenerate seed

    const double raw_norm = luxemburg_norm(atom.function, p).value;
    if (raw_norm == 0.0) continue;
    const double scale = target_norm * (1.0 - 1e-9) / raw_norm;
    for (std::size_t cell : support) atom.function.values[cell] *= scale;

    atom.norm_achieved = luxemburg_norm(atom.function, p).value;
    atom.moment_residuals =
        moment_residuals_l1(grid, atom.function.values, support, s, inv_radius);
    return atom;
  }
  throw std::runtime_error("make_central_atom: 8 consecutive degenerate seeds");
}

AtomCheck verify_atom(const AtomSpec& a, const Exponent& p, const Exponent& alpha) {
  const Grid& grid = a.function.grid;
  const double radius = std::exp2(static_cast<double>(a.r));
  AtomCheck check;

  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    if (grid.radius(i) <= radius)
      support.push_back(i);
    else if (a.function.values[i] != 0.0)
      ++check.support_violations;
  }
  check.support_ok = check.support_violations == 0;

  const double measure = grid.cell_volume * static_cast<double>(support.size());
  const double alpha_r = alpha_at_radius(alpha, static_cast<double>(a.r));
  const double target = std::pow(measure, -alpha_r / grid.dim);
  check.norm_ratio = luxemburg_norm(a.function, p).value / target;
  check.norm_ok = check.norm_ratio <= 1.0 + 1e-6;

  const auto residuals =
      moment_residuals_l1(grid, a.function.values, support, a.s, 1.0 / radius);
  check.max_moment_residual = 0.0;
  for (double rres : residuals)
    check.max_moment_residual = std::max(check.max_moment_residual, rres);
  check.moments_ok = check.max_moment_residual <= 1e-8;
  return check;
}

GridFunction synthesize(const Decomposition& d) {
  if (d.atoms.empty()) throw std::invalid_argument("synthesize: empty decomposition");
  if (d.atoms.size() != d.coefficients.size())
    throw std::invalid_argument("synthesize: coefficient/atom count mismatch");
  const Grid& grid = d.atoms.front().function.grid;
  for (std::size_t i = 0; i < d.atoms.size(); ++i) {
    if (!(d.atoms[i].function.grid == grid))
      throw std::invalid_argument("synthesize: atoms live on different grids");
    if (d.atoms[i].r != d.coefficients[i].first)
      throw std::invalid_argument("synthesize: atom " + std::to_string(i) +
                                  " is not supported in B_j of its coefficient");
  }
  std::vector<std::size_t> order(d.atoms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.coefficients[a].first < d.coefficients[b].first;
  });
  GridFunction out = GridFunction::zeros(grid);
  for (std::size_t idx : order) {
    const double lam = d.coefficients[idx].second;
    const auto& vals = d.atoms[idx].function.values;
    for (std::size_t i = 0; i < vals.size(); ++i) out.values[i] += lam * vals[i];
  }
  return out;
}

LambdaResult coefficient_lambda(const Decomposition& d) {
  if (!(d.q1 > 0.0)) throw std::domain_error("coefficient_lambda: q1 must be > 0");
  if (d.atoms.empty()) throw std::invalid_argument("coefficient_lambda: empty decomposition");
  const Grid& grid = d.atoms.front().function.grid;

  LambdaResult res;
  for (int L = grid.l_min; L <= grid.l_max; ++L) {
    double sum = 0.0;
    for (const auto& [j, lam] : d.coefficients)
      if (j <= L) sum += std::pow(std::abs(lam), d.q1);
    const double damp = std::exp2(-L * d.lambda);
    res.lambda_functional = std::max(res.lambda_functional, damp * sum);
    res.quasi_norm = std::max(res.quasi_norm, damp * std::pow(sum, 1.0 / d.q1));
  }
  return res;
}

}  // namespace herzscope
