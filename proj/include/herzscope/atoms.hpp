#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "herzscope/exponents.hpp"
#include "herzscope/grid.hpp"

namespace herzscope {

/// A constructed central (alpha(.), p(.))-atom: supported in B(0, 2^r), with
/// ||a||_{p(.)} just below |B(0,2^r)|^{-alpha_r/n} (grid measure) and grid
/// moments against x^beta vanishing for all |beta| <= s.
struct AtomSpec {
  int r = 0;                   // support radius exponent
  int s = 0;                   // vanishing-moment order
  bool limited_type = false;   // variant (ii): requires r >= 1
  double alpha_r = 0.0;
  double target_norm = 0.0;
  double norm_achieved = 0.0;
  GridFunction function;
  std::vector<double> moment_residuals;  // per multi-index, L1-normalized
  std::uint64_t seed = 0;
};

/// Deterministic seeded atom: smooth radial bump times a seeded low-order
/// polynomial, moment-projected on the support and rescaled to the norm
/// budget. Degenerate seeds are retried (seed+1, ...) up to 8 times.
AtomSpec make_central_atom(const Grid& grid, int r, const Exponent& p,
                           const Exponent& alpha, int s, std::uint64_t seed,
                           bool limited_type = false);

/// Recomputed checks of the three atom conditions.
struct AtomCheck {
  int support_violations = 0;
  double norm_ratio = 0.0;
  double max_moment_residual = 0.0;
  bool support_ok = false;
  bool norm_ok = false;
  bool moments_ok = false;
  bool all_ok() const { return support_ok && norm_ok && moments_ok; }
};

AtomCheck verify_atom(const AtomSpec& a, const Exponent& p, const Exponent& alpha);

/// Finite atomic decomposition f = sum_j lambda_j a_j with atom j supported
/// in B_j (so atoms[i].r == coefficients[i].first).
struct Decomposition {
  std::vector<std::pair<int, double>> coefficients;  // (j, lambda_j)
  std::vector<AtomSpec> atoms;
  double q1 = 1.0;
  double lambda = 0.0;
};

/// sum_j lambda_j a_j, accumulated in ascending j order.
GridFunction synthesize(const Decomposition& d);

/// The coefficient functional Lambda = sup_L 2^{-L lambda} sum_{j<=L} |lambda_j|^{q1}
/// over the truncated range, plus its quasi-norm variant with the 1/q1 power.
struct LambdaResult {
  double lambda_functional = 0.0;
  double quasi_norm = 0.0;
};

LambdaResult coefficient_lambda(const Decomposition& d);

/// Multi-indices |beta| <= s in ascending degree (used for the moment basis).
std::vector<std::array<int, 2>> moment_multi_indices(int dim, int s);

}  // namespace herzscope
