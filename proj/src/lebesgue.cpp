#include "herzscope/lebesgue.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace herzscope {
namespace {

void require_same_grid(const GridFunction& f, const Exponent& p) {
  if (!(f.grid == p.grid()) || f.values.size() != p.samples().size())
    throw std::invalid_argument("lebesgue: function and exponent live on different grids");
}

// Support of |f| compacted to (log|f_i|, p_i) pairs; zeros contribute nothing
// to the modular for any eta > 0.
struct Support {
  std::vector<double> log_abs;
  std::vector<double> p;
  double max_abs = 0.0;
};

Support compact_support(const GridFunction& f, const Exponent& p) {
  Support s;
  s.log_abs.reserve(f.values.size());
  s.p.reserve(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const double v = f.values[i];
    if (!std::isfinite(v)) throw std::domain_error("luxemburg_norm: non-finite sample in f");
    if (v == 0.0) continue;
    const double a = std::abs(v);
    s.log_abs.push_back(std::log(a));
    s.p.push_back(p.sample(i));
    s.max_abs = std::max(s.max_abs, a);
  }
  return s;
}

// Modular evaluated on the compacted support at eta = exp(log_eta),
// with the exponent argument clamped to avoid overflow to NaN territory.
double modular_on_support(const Support& s, double cell_volume, double log_eta) {
  std::vector<double> terms(s.log_abs.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double arg = std::min(s.p[i] * (s.log_abs[i] - log_eta), 700.0);
    terms[i] = std::exp(arg);
  }
  return cell_volume * stable_sum(terms);
}

}  // namespace

double modular(const GridFunction& f, const Exponent& p, double eta) {
  if (!(eta > 0.0)) throw std::domain_error("modular: eta must be positive");
  require_same_grid(f, p);
  std::vector<double> terms(f.values.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    terms[i] = std::pow(std::abs(f.values[i]) / eta, p.sample(i));
  return f.grid.cell_volume * stable_sum(terms);
}

NormResult luxemburg_norm(const GridFunction& f, const Exponent& p, double rel_tol) {
  if (!(rel_tol > 1e-14 && rel_tol < 1e-2))
    throw std::invalid_argument("luxemburg_norm: rel_tol must lie in (1e-14, 1e-2)");
  require_same_grid(f, p);
  if (p.mode() != ExponentMode::lebesgue)
    throw std::domain_error("luxemburg_norm: exponent must be Lebesgue-mode");

  const Support s = compact_support(f, p);
  NormResult res;
  if (s.log_abs.empty()) {
    res.converged = true;  // the zero function has norm 0
    return res;
  }

  const double cv = f.grid.cell_volume;
  const double box_volume = std::pow(2.0 * f.grid.box_half_width(), f.grid.dim);
  const double lo0 = s.max_abs * 1e-3 *
                     std::min(std::pow(cv, 1.0 / p.min_value()), std::pow(cv, 1.0 / p.max_value()));
  const double hi0 = s.max_abs * (box_volume + 1.0);

  double log_lo = std::log(lo0);
  double log_hi = std::log(hi0);
  int iters = 0;
  constexpr int kMaxPhase = 200;

  // Expand until modular(lo) >= 1 >= modular(hi); the modular is continuous
  // and strictly decreasing in eta, so a bracket always exists for f != 0.
  while (modular_on_support(s, cv, log_lo) < 1.0) {
    log_lo -= std::log(2.0);
    if (++iters > kMaxPhase) throw SolverError("luxemburg_norm: bracket search failed (low side)");
  }
  while (modular_on_support(s, cv, log_hi) > 1.0) {
    log_hi += std::log(2.0);
    if (++iters > kMaxPhase) throw SolverError("luxemburg_norm: bracket search failed (high side)");
  }

  // Bisect in log space; log-width w corresponds to relative width ~ w.
  const double target = 0.25 * rel_tol;
  while (log_hi - log_lo > target) {
    const double mid = 0.5 * (log_lo + log_hi);
    if (modular_on_support(s, cv, mid) > 1.0)
      log_lo = mid;
    else
      log_hi = mid;
    if (++iters > 4 * kMaxPhase) throw SolverError("luxemburg_norm: bisection failed to converge");
  }

  res.value = std::exp(0.5 * (log_lo + log_hi));
  res.eta = res.value;
  res.modular_at_eta = modular(f, p, res.eta);
  res.iterations = iters;
  res.converged = true;
  return res;
}

HolderResult holder_pairing(const GridFunction& f, const GridFunction& g,
                            const Exponent& p, double rel_tol) {
  if (!(f.grid == g.grid))
    throw std::invalid_argument("holder_pairing: f and g live on different grids");
  require_same_grid(f, p);

  GridFunction prod = GridFunction::zeros(f.grid);
  for (std::size_t i = 0; i < prod.values.size(); ++i)
    prod.values[i] = std::abs(f.values[i] * g.values[i]);

  HolderResult h;
  h.lhs = integrate(prod);
  h.r_p = 1.0 + 1.0 / p.min_value() - 1.0 / p.max_value();
  const Exponent q = conjugate(p);
  h.rhs = h.r_p * luxemburg_norm(f, p, rel_tol).value * luxemburg_norm(g, q, rel_tol).value;
  h.holds = h.lhs <= h.rhs * (1.0 + 10.0 * rel_tol);
  return h;
}

}  // namespace herzscope
