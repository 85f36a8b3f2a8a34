#pragma once

#include "herzscope/grid.hpp"

namespace herzscope {

enum class RieszMethod { direct, fft };

/// Parameters of the Riesz potential I^beta f(x) = int f(y) |x-y|^{beta-n} dy.
struct RieszParams {
  double beta = 0.5;               // order, 0 < beta < dim
  RieszMethod method = RieszMethod::direct;
  int pad_factor = 2;              // FFT zero-padding multiple, >= 2
};

/// Exact integral of |x-y|^{beta-n} over one grid cell centered at x.
/// Closed form in 1D; high-order radial quadrature over the square cell in 2D.
double riesz_self_cell_weight(const Grid& g, double beta);

/// Direct singular quadrature: midpoint sum over source cells with the
/// self-cell replaced by its exact kernel integral. O(N^2) in the cell count.
GridFunction riesz_direct(const GridFunction& f, const RieszParams& params);

/// Same finite sum evaluated as a zero-padded circular convolution.
GridFunction riesz_fft(const GridFunction& f, const RieszParams& params);

/// Dispatch on params.method.
GridFunction riesz_potential(const GridFunction& f, const RieszParams& params);

/// Hardy-Littlewood maximal operator with the r^{-n} normalization (no
/// ball-volume constant) over the dyadic radius ladder r = h * 2^k.
GridFunction maximal_function(const GridFunction& f);

/// Proxy for the grand maximal function: G_N f <= C * M f at norm level,
/// so the harness uses M f in its place. The smoothness parameter N has no
/// computational effect here.
GridFunction grand_maximal_proxy(const GridFunction& f);

}  // namespace herzscope
