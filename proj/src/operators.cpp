#include "herzscope/operators.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "herzscope/parallel.hpp"

namespace herzscope {
namespace {

void require_order(const Grid& g, double beta) {
  if (!(beta > 0.0 && beta < static_cast<double>(g.dim)))
    throw std::domain_error("riesz: beta must lie strictly in (0, dim)");
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

// Offset weight table. 1D: T[d] for d = 0..N-1.
// 2D: quarter table T[dy * N + dx] for dx, dy = 0..N-1 (even in each axis).
// The zero offset carries the exact self-cell integral.
std::vector<double> kernel_table(const Grid& g, double beta) {
  const int n = g.points_per_axis;
  const double h = g.spacing;
  if (g.dim == 1) {
    std::vector<double> table(n);
    table[0] = riesz_self_cell_weight(g, beta);
    for (int d = 1; d < n; ++d) table[d] = std::pow(d * h, beta - 1.0) * g.cell_volume;
    return table;
  }
  std::vector<double> table(static_cast<std::size_t>(n) * n);
  table[0] = riesz_self_cell_weight(g, beta);
  for (int dy = 0; dy < n; ++dy)
    for (int dx = 0; dx < n; ++dx) {
      if (dx == 0 && dy == 0) continue;
      table[static_cast<std::size_t>(dy) * n + dx] =
          std::pow(std::hypot(dx * h, dy * h), beta - 2.0) * g.cell_volume;
    }
  return table;
}

std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

// In-place forward/backward complex DFT. FFTW plan creation is serialized;
// execution on the caller's array is thread-safe.
void dft(std::vector<std::complex<double>>& data, int rows, int cols, int sign) {
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    plan = (rows == 1)
               ? fftw_plan_dft_1d(cols, ptr, ptr, sign, FFTW_ESTIMATE)
               : fftw_plan_dft_2d(rows, cols, ptr, ptr, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    fftw_destroy_plan(plan);
  }
}

}  // namespace

double riesz_self_cell_weight(const Grid& g, double beta) {
  require_order(g, beta);
  const double half = 0.5 * g.spacing;
  if (g.dim == 1) return 2.0 * std::pow(half, beta) / beta;
  // Integral of |z|^{beta-2} over the square cell, by 8-fold symmetry:
  // 8/beta * int_0^{pi/4} (half / cos t)^beta dt.
  static std::vector<double> nodes, weights;
  if (nodes.empty()) gauss_legendre(64, nodes, weights);
  const double a = 0.0, b = M_PI / 4.0;
  double integral = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double t = 0.5 * (b - a) * nodes[i] + 0.5 * (a + b);
    integral += weights[i] * std::pow(half / std::cos(t), beta);
  }
  integral *= 0.5 * (b - a);
  return 8.0 * integral / beta;
}

GridFunction riesz_direct(const GridFunction& f, const RieszParams& params) {
  const Grid& g = f.grid;
  require_order(g, params.beta);
  const std::vector<double> table = kernel_table(g, params.beta);
  const int n = g.points_per_axis;
  GridFunction out = GridFunction::zeros(g);

  if (g.dim == 1) {
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
      const int ii = static_cast<int>(i);
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += f.values[j] * table[std::abs(ii - j)];
      out.values[i] = acc;
    });
    return out;
  }

  parallel_for(g.cell_count(), [&](std::size_t flat) {
    const int jy = static_cast<int>(flat) / n;
    const int jx = static_cast<int>(flat) % n;
    double acc = 0.0;
    for (int iy = 0; iy < n; ++iy) {
      const double* frow = f.values.data() + static_cast<std::size_t>(iy) * n;
      const double* trow = table.data() + static_cast<std::size_t>(std::abs(jy - iy)) * n;
      for (int ix = 0; ix < n; ++ix) acc += frow[ix] * trow[std::abs(jx - ix)];
    }
    out.values[flat] = acc;
  });
  return out;
}

GridFunction riesz_fft(const GridFunction& f, const RieszParams& params) {
  const Grid& g = f.grid;
  require_order(g, params.beta);
  if (params.pad_factor < 2) throw std::domain_error("riesz_fft: pad_factor must be >= 2");
  const int n = g.points_per_axis;
  const int m = params.pad_factor * n;  // m >= 2n > 2n-1, so no wrap-around
  const std::vector<double> table = kernel_table(g, params.beta);

  if (g.dim == 1) {
    std::vector<std::complex<double>> fh(m), kh(m);
    for (int i = 0; i < n; ++i) fh[i] = f.values[i];
    for (int d = 0; d < n; ++d) {
      kh[d] = table[d];
      if (d > 0) kh[m - d] = table[d];
    }
    dft(fh, 1, m, FFTW_FORWARD);
    dft(kh, 1, m, FFTW_FORWARD);
    for (int i = 0; i < m; ++i) fh[i] *= kh[i];
    dft(fh, 1, m, FFTW_BACKWARD);
    GridFunction out = GridFunction::zeros(g);
    for (int i = 0; i < n; ++i) out.values[i] = fh[i].real() / m;
    return out;
  }

  const std::size_t mm = static_cast<std::size_t>(m) * m;
  std::vector<std::complex<double>> fh(mm), kh(mm);
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix)
      fh[static_cast<std::size_t>(iy) * m + ix] = f.values[static_cast<std::size_t>(iy) * n + ix];
  auto wrap = [m, n](int idx) -> int {
    // circular index -> absolute offset, or -1 outside the kernel footprint
    if (idx < n) return idx;
    if (idx > m - n) return m - idx;
    return -1;
  };
  for (int iy = 0; iy < m; ++iy) {
    const int dy = wrap(iy);
    if (dy < 0) continue;
    for (int ix = 0; ix < m; ++ix) {
      const int dx = wrap(ix);
      if (dx < 0) continue;
      kh[static_cast<std::size_t>(iy) * m + ix] = table[static_cast<std::size_t>(dy) * n + dx];
    }
  }
  dft(fh, m, m, FFTW_FORWARD);
  dft(kh, m, m, FFTW_FORWARD);
  for (std::size_t i = 0; i < mm; ++i) fh[i] *= kh[i];
  dft(fh, m, m, FFTW_BACKWARD);
  GridFunction out = GridFunction::zeros(g);
  const double scale = 1.0 / (static_cast<double>(m) * m);
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix)
      out.values[static_cast<std::size_t>(iy) * n + ix] =
          fh[static_cast<std::size_t>(iy) * m + ix].real() * scale;
  return out;
}

GridFunction riesz_potential(const GridFunction& f, const RieszParams& params) {
  return params.method == RieszMethod::direct ? riesz_direct(f, params) : riesz_fft(f, params);
}

GridFunction maximal_function(const GridFunction& f) {
  const Grid& g = f.grid;
  const int n = g.points_per_axis;
  const int levels = static_cast<int>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
  GridFunction out = GridFunction::zeros(g);

  if (g.dim == 1) {
    // prefix[i] = sum of |f| over cells < i
    std::vector<double> prefix(n + 1, 0.0);
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + std::abs(f.values[i]);
    for (int j = 0; j < n; ++j) {
      double best = 0.0;
      for (int k = 0; k < levels; ++k) {
        const long mrad = 1L << k;  // |i-j| <= mrad-1 means |y-x| < r = h*2^k
        const long lo = std::max(0L, j - mrad + 1);
        const long hi = std::min<long>(n - 1, j + mrad - 1);
        const double avg = (prefix[hi + 1] - prefix[lo]) / static_cast<double>(mrad);
        best = std::max(best, avg);
      }
      out.values[j] = best;
    }
    return out;
  }

  // Row prefix sums, then disc sums assembled row by row.
  std::vector<double> prefix(static_cast<std::size_t>(n) * (n + 1), 0.0);
  for (int iy = 0; iy < n; ++iy) {
    double* row = prefix.data() + static_cast<std::size_t>(iy) * (n + 1);
    const double* frow = f.values.data() + static_cast<std::size_t>(iy) * n;
    for (int ix = 0; ix < n; ++ix) row[ix + 1] = row[ix] + std::abs(frow[ix]);
  }
  // Half-widths of the lattice disc dx^2 + dy^2 <= m^2 - 1 per level.
  std::vector<std::vector<long>> half_width(levels);
  for (int k = 0; k < levels; ++k) {
    const long mrad = 1L << k;
    half_width[k].resize(mrad);
    for (long dy = 0; dy < mrad; ++dy) {
      const long t = mrad * mrad - 1 - dy * dy;
      long w = static_cast<long>(std::sqrt(static_cast<double>(t)));
      while (w * w > t) --w;
      while ((w + 1) * (w + 1) <= t) ++w;
      half_width[k][dy] = w;
    }
  }
  parallel_for(g.cell_count(), [&](std::size_t flat) {
    const int jy = static_cast<int>(flat) / n;
    const int jx = static_cast<int>(flat) % n;
    double best = 0.0;
    for (int k = 0; k < levels; ++k) {
      const long mrad = 1L << k;
      double sum = 0.0;
      for (long dy = -(mrad - 1); dy <= mrad - 1; ++dy) {
        const long iy = jy + dy;
        if (iy < 0 || iy >= n) continue;
        const long w = half_width[k][std::labs(dy)];
        const long lo = std::max(0L, jx - w);
        const long hi = std::min<long>(n - 1, jx + w);
        const double* row = prefix.data() + static_cast<std::size_t>(iy) * (n + 1);
        sum += row[hi + 1] - row[lo];
      }
      best = std::max(best, sum / static_cast<double>(mrad * mrad));
    }
    out.values[flat] = best;
  });
  return out;
}

GridFunction grand_maximal_proxy(const GridFunction& f) { return maximal_function(f); }

}  // namespace herzscope
