#include "herzscope/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace herzscope {
namespace {

double eval_descriptor(const ExponentDescriptor& d, double r) {
  if (const auto* c = std::get_if<ConstantExp>(&d)) return c->value;
  if (const auto* lr = std::get_if<LogRadialExp>(&d))
    return lr->base + lr->amplitude / std::log(std::exp(1.0) + r);
  if (const auto* tl = std::get_if<TwoLevelExp>(&d)) {
    const double lo = tl->radius - 0.5 * tl->width;
    const double hi = tl->radius + 0.5 * tl->width;
    if (r <= lo) return tl->inner;
    if (r >= hi) return tl->outer;
    const double t = (r - lo) / tl->width;  // in (0,1)
    return tl->inner + (tl->outer - tl->inner) * 0.5 * (1.0 - std::cos(M_PI * t));
  }
  throw std::logic_error("eval_descriptor: tabulated descriptor has no closed form");
}

}  // namespace

Exponent Exponent::make(const ExponentDescriptor& descriptor, const Grid& grid,
                        ExponentMode mode) {
  Exponent e;
  e.descriptor_ = descriptor;
  e.mode_ = mode;
  e.grid_ = grid;
  const std::size_t n = grid.cell_count();

  if (const auto* tab = std::get_if<TableExp>(&descriptor)) {
    if (tab->values.size() != n)
      throw std::invalid_argument("Exponent: table length does not match grid cell count");
    e.samples_ = tab->values;
  } else {
    if (const auto* tl = std::get_if<TwoLevelExp>(&descriptor)) {
      if (!(tl->width > 0.0) || !(tl->width < 2.0 * tl->radius))
        throw std::domain_error("Exponent: two_level requires 0 < width < 2*radius");
    }
    e.samples_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      e.samples_[i] = eval_descriptor(descriptor, grid.radius(i));
  }

  double lo = e.samples_[0], hi = e.samples_[0];
  for (double v : e.samples_) {
    if (!std::isfinite(v)) throw std::domain_error("Exponent: non-finite sample");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (mode == ExponentMode::lebesgue && lo < 1.0)
    throw std::domain_error("Exponent: Lebesgue exponent has a sample < 1 (p- = " +
                            std::to_string(lo) + ")");
  e.min_value_ = lo;
  e.max_value_ = hi;

  if (std::holds_alternative<TableExp>(descriptor)) {
    // Nearest sample to the origin; samples on the outermost annulus average
    // to the tail estimate.
    std::size_t best = 0;
    double best_r = grid.radius(0);
    for (std::size_t i = 1; i < n; ++i) {
      const double r = grid.radius(i);
      if (r < best_r) {
        best_r = r;
        best = i;
      }
    }
    e.value_at_origin_ = e.samples_[best];
    const GridFunction outer = annulus_mask(grid, grid.l_max);
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (outer.values[i] != 0.0) {
        sum += e.samples_[i];
        ++count;
      }
    e.value_at_infinity_ = count > 0 ? sum / static_cast<double>(count) : e.samples_[best];
  } else {
    e.value_at_origin_ = eval_descriptor(descriptor, 0.0);
    if (const auto* c = std::get_if<ConstantExp>(&descriptor))
      e.value_at_infinity_ = c->value;
    else if (const auto* lr = std::get_if<LogRadialExp>(&descriptor))
      e.value_at_infinity_ = lr->base;
    else
      e.value_at_infinity_ = std::get<TwoLevelExp>(descriptor).outer;
  }
  return e;
}

Exponent conjugate(const Exponent& p) {
  if (p.mode() != ExponentMode::lebesgue)
    throw std::domain_error("conjugate: exponent must be Lebesgue-mode");
  if (!(p.min_value() > 1.0))
    throw std::domain_error("conjugate: p- = 1 makes the conjugate unbounded");
  TableExp tab;
  tab.values.resize(p.samples().size());
  for (std::size_t i = 0; i < tab.values.size(); ++i) {
    const double v = p.sample(i);
    tab.values[i] = v / (v - 1.0);
  }
  Exponent q = Exponent::make(tab, p.grid(), ExponentMode::lebesgue);
  // The closed-form limits of the conjugate are known from p's limits.
  q.value_at_origin_ = p.value_at_origin() / (p.value_at_origin() - 1.0);
  q.value_at_infinity_ = p.value_at_infinity() / (p.value_at_infinity() - 1.0);
  return q;
}

LogHolderDiagnostics log_holder_diagnostics(const Exponent& alpha, const Grid& grid,
                                            int pair_budget, double cap,
                                            std::uint64_t seed) {
  if (pair_budget < 1000)
    throw std::invalid_argument("log_holder_diagnostics: pair_budget must be >= 1000");
  if (!(alpha.grid() == grid))
    throw std::invalid_argument("log_holder_diagnostics: exponent not sampled on this grid");

  LogHolderDiagnostics d;
  d.cap = cap;
  const std::size_t n = grid.cell_count();
  const double a0 = alpha.value_at_origin();
  const double ainf = alpha.value_at_infinity();

  auto local_ratio = [&](std::size_t i, std::size_t j) {
    const auto pi = grid.point(i);
    const auto pj = grid.point(j);
    const double dist = std::hypot(pi[0] - pj[0], pi[1] - pj[1]);
    if (dist <= 0.0 || dist > 0.5) return 0.0;
    return std::abs(alpha.sample(i) - alpha.sample(j)) * (-std::log(dist));
  };

  // All nearest-neighbor pairs along each axis.
  const int ppa = grid.points_per_axis;
  if (grid.dim == 1) {
    for (int i = 0; i + 1 < ppa; ++i)
      d.c_local = std::max(d.c_local, local_ratio(i, i + 1));
  } else {
    for (int iy = 0; iy < ppa; ++iy)
      for (int ix = 0; ix < ppa; ++ix) {
        const std::size_t flat = static_cast<std::size_t>(iy) * ppa + ix;
        if (ix + 1 < ppa) d.c_local = std::max(d.c_local, local_ratio(flat, flat + 1));
        if (iy + 1 < ppa)
          d.c_local = std::max(d.c_local, local_ratio(flat, flat + static_cast<std::size_t>(ppa)));
      }
  }

  // Plus a seeded batch of random pairs.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int k = 0; k < pair_budget; ++k)
    d.c_local = std::max(d.c_local, local_ratio(pick(rng), pick(rng)));

  for (std::size_t i = 0; i < n; ++i) {
    const double r = grid.radius(i);
    const double ai = alpha.sample(i);
    d.c_infinity = std::max(d.c_infinity, std::abs(ai - ainf) * std::log(std::exp(1.0) + r));
    if (r > 0.0)
      d.c_origin = std::max(d.c_origin, std::abs(ai - a0) * std::log(std::exp(1.0) + 1.0 / r));
  }

  d.pass_local = d.c_local <= cap;
  d.pass_origin = d.c_origin <= cap;
  d.pass_infinity = d.c_infinity <= cap;
  return d;
}

double alpha_at_radius(const Exponent& alpha, double r) {
  return r < 1.0 ? alpha.value_at_origin() : alpha.value_at_infinity();
}

}  // namespace herzscope
