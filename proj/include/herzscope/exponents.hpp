#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "herzscope/grid.hpp"

namespace herzscope {

/// Lebesgue exponents p(.) must satisfy 1 <= p- <= p+ < infinity; Herz
/// exponents alpha(.) only need to be bounded.
enum class ExponentMode { lebesgue, herz };

struct ConstantExp {
  double value;
};

/// base + amplitude / log(e + |x|); tends to `base` at infinity and equals
/// base + amplitude at the origin.
struct LogRadialExp {
  double base;
  double amplitude;
};

/// `inner` for |x| <= radius - width/2, `outer` for |x| >= radius + width/2,
/// cosine-blended in between. Requires 0 < width < 2 * radius.
struct TwoLevelExp {
  double inner;
  double outer;
  double radius;
  double width;
};

/// Raw cell-center samples; length must match the grid cell count.
struct TableExp {
  std::vector<double> values;
};

using ExponentDescriptor = std::variant<ConstantExp, LogRadialExp, TwoLevelExp, TableExp>;

/// A variable exponent sampled on a grid, with cached extremes and limits.
/// Immutable after construction.
class Exponent {
 public:
  static Exponent make(const ExponentDescriptor& descriptor, const Grid& grid,
                       ExponentMode mode);

  ExponentMode mode() const { return mode_; }
  const Grid& grid() const { return grid_; }
  std::span<const double> samples() const { return samples_; }
  double sample(std::size_t i) const { return samples_[i]; }

  /// min/max over the sample array (bit-exact).
  double min_value() const { return min_value_; }
  double max_value() const { return max_value_; }
  bool is_constant() const { return min_value_ == max_value_; }

  /// Descriptor value at x = 0 (nearest sample for tabulated data).
  double value_at_origin() const { return value_at_origin_; }
  /// Descriptor limit at infinity (outermost-annulus mean for tabulated data).
  double value_at_infinity() const { return value_at_infinity_; }

  const ExponentDescriptor& descriptor() const { return descriptor_; }

 private:
  Exponent() = default;
  friend Exponent conjugate(const Exponent&);
  friend Exponent sobolev_exponent(const Exponent&, double);

  ExponentDescriptor descriptor_{ConstantExp{2.0}};
  ExponentMode mode_ = ExponentMode::lebesgue;
  Grid grid_;
  std::vector<double> samples_;
  double min_value_ = 0.0;
  double max_value_ = 0.0;
  double value_at_origin_ = 0.0;
  double value_at_infinity_ = 0.0;
};

/// Pointwise conjugate q with 1/p(x) + 1/q(x) = 1. Requires p- > 1.
Exponent conjugate(const Exponent& p);

/// Empirical log-Holder continuity constants and pass flags against a cap.
/// The constants are maxima of the defining ratios over sampled pairs; they
/// cannot certify the continuum conditions, only diagnose them.
struct LogHolderDiagnostics {
  double c_local = 0.0;
  double c_origin = 0.0;
  double c_infinity = 0.0;
  bool pass_local = false;
  bool pass_origin = false;
  bool pass_infinity = false;
  double cap = 0.0;
};

LogHolderDiagnostics log_holder_diagnostics(const Exponent& alpha, const Grid& grid,
                                            int pair_budget, double cap = 10.0,
                                            std::uint64_t seed = 0x9e3779b9u);

/// alpha_r selector: alpha(0) for r < 1, alpha_infinity for r >= 1.
double alpha_at_radius(const Exponent& alpha, double r);

}  // namespace herzscope
