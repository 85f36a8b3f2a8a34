#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "herzscope/exponents.hpp"
#include "herzscope/grid.hpp"

namespace herzscope {

/// Raised on any malformed or rejected configuration; the message names the
/// first violated condition.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  int dim = 1;
  int l_min = -6;
  int l_max = 3;
  int points_per_axis = 2048;
};

struct Tolerances {
  double rel_tol = 1e-8;
  double slope_tol = 0.15;
  double drift_cap = 0.15;
  double log_holder_cap = 10.0;
};

/// Experiment configuration; the JSON schema is versioned and unknown keys
/// are rejected.
struct ExperimentConfig {
  int schema_version = 1;
  GridSpec grid;
  ExponentDescriptor p1 = ConstantExp{2.0};
  ExponentDescriptor alpha = ConstantExp{1.0};
  double beta = 0.25;
  double q1 = 1.0;
  double q2 = 1.0;
  double lambda = 0.25;
  std::uint64_t seed = 2026;
  int grand_maximal_N = 0;  // recorded for provenance only
  Tolerances tolerances;
  std::vector<std::string> families = {"single_atom", "multi_atom", "bumps"};
  std::vector<int> atom_js = {-2, -1, 0, 1};

  Grid make_grid(int points_override = 0) const;
  Exponent make_p1(const Grid& g) const;
  Exponent make_alpha(const Grid& g) const;

  /// Structural validation (grid sanity, beta range, q/lambda signs, the
  /// innermost-ball cell count rule). Throws ConfigError naming the first
  /// violated condition.
  void validate_structure() const;

  /// Main-theorem hypothesis validation given the fitted delta2; throws
  /// ConfigError naming the first violated hypothesis.
  void validate_theorem_hypotheses(double delta2) const;
};

ExperimentConfig parse_config_json(const std::string& json_text);
ExperimentConfig load_config_file(const std::string& path);

/// Descriptor of a test function for the norm/riesz commands.
/// Kinds: zero | ball(l) | annulus(l) | bump(width, amplitude, shift) |
/// atom(r, s, seed) | random(seed).
struct FunctionSpec {
  std::string kind = "zero";
  int l = 0;
  int r = 0;
  int s = 0;
  std::uint64_t seed = 1;
  double width = 1.0;
  double amplitude = 1.0;
  double shift = 0.0;  // radial offset of the bump center along the first axis
};

FunctionSpec parse_function_json(const std::string& json_text);
GridFunction realize_function(const FunctionSpec& spec, const ExperimentConfig& cfg,
                              const Grid& g);

/// Smooth seeded bump: amplitude * exp(-(|x - c|/width)^2) with c on the
/// first axis; evaluable at any resolution (used by refinement experiments).
GridFunction gaussian_bump(const Grid& g, double width, double amplitude, double shift);

}  // namespace herzscope
