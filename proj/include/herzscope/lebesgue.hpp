#pragma once

#include <stdexcept>

#include "herzscope/exponents.hpp"
#include "herzscope/grid.hpp"

namespace herzscope {

/// Raised when the norm solver exhausts its iteration budget.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Result of a Luxemburg norm solve. `value` is the accepted scaling eta
/// with modular(f, p, eta) <= 1 up to the solver tolerance; it is 0 exactly
/// when f vanishes identically.
struct NormResult {
  double value = 0.0;
  double eta = 0.0;
  double modular_at_eta = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// cell_volume * sum_i (|f_i| / eta)^{p_i}; strictly decreasing in eta
/// whenever f is not identically zero.
double modular(const GridFunction& f, const Exponent& p, double eta);

/// Luxemburg norm inf{eta > 0 : modular(f, p, eta) <= 1}, computed by
/// bracketing and bisection in log(eta) to relative width <= rel_tol.
NormResult luxemburg_norm(const GridFunction& f, const Exponent& p, double rel_tol = 1e-8);

/// Generalized Holder pairing: lhs = integral of |f g|,
/// rhs = r_p * ||f||_p * ||g||_{p'} with r_p = 1 + 1/p- - 1/p+.
struct HolderResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double r_p = 0.0;
  bool holds = false;
};

HolderResult holder_pairing(const GridFunction& f, const GridFunction& g,
                            const Exponent& p, double rel_tol = 1e-8);

}  // namespace herzscope
