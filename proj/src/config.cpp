#include "herzscope/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "herzscope/atoms.hpp"

namespace herzscope {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& item : obj.items())
    if (!allowed.count(item.key()))
      throw ConfigError("unknown key \"" + item.key() + "\" in " + where);
}

ExponentDescriptor parse_descriptor(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind"))
    throw ConfigError(where + ": exponent descriptor must be an object with a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") {
    reject_unknown_keys(j, {"kind", "value"}, where);
    return ConstantExp{j.at("value").get<double>()};
  }
  if (kind == "log_radial") {
    reject_unknown_keys(j, {"kind", "base", "amplitude"}, where);
    return LogRadialExp{j.at("base").get<double>(), j.at("amplitude").get<double>()};
  }
  if (kind == "two_level") {
    reject_unknown_keys(j, {"kind", "inner", "outer", "radius", "width"}, where);
    return TwoLevelExp{j.at("inner").get<double>(), j.at("outer").get<double>(),
                       j.at("radius").get<double>(), j.at("width").get<double>()};
  }
  if (kind == "table") {
    reject_unknown_keys(j, {"kind", "values"}, where);
    return TableExp{j.at("values").get<std::vector<double>>()};
  }
  throw ConfigError(where + ": unknown exponent kind \"" + kind + "\"");
}

}  // namespace

Grid ExperimentConfig::make_grid(int points_override) const {
  const int pts = points_override > 0 ? points_override : grid.points_per_axis;
  return Grid::make(grid.dim, grid.l_min, grid.l_max, pts);
}

Exponent ExperimentConfig::make_p1(const Grid& g) const {
  return Exponent::make(p1, g, ExponentMode::lebesgue);
}

Exponent ExperimentConfig::make_alpha(const Grid& g) const {
  return Exponent::make(alpha, g, ExponentMode::herz);
}

void ExperimentConfig::validate_structure() const {
  if (schema_version != 1)
    throw ConfigError("schema_version must be 1, got " + std::to_string(schema_version));
  if (grid.dim != 1 && grid.dim != 2) throw ConfigError("grid.dim must be 1 or 2");
  if (grid.l_min >= grid.l_max) throw ConfigError("grid.l_min must be < grid.l_max");
  if (grid.points_per_axis < 16 || grid.points_per_axis % 2 != 0)
    throw ConfigError("grid.points_per_axis must be even and >= 16");
  if (!(beta > 0.0 && beta < static_cast<double>(grid.dim)))
    throw ConfigError("beta must lie strictly in (0, dim)");
  if (!(q1 > 0.0) || !std::isfinite(q1)) throw ConfigError("q1 must be finite and > 0");
  if (!(q2 > 0.0) || !std::isfinite(q2)) throw ConfigError("q2 must be finite and > 0");
  if (!(lambda >= 0.0)) throw ConfigError("lambda must be >= 0");
  for (const auto& fam : families)
    if (fam != "single_atom" && fam != "multi_atom" && fam != "bumps")
      throw ConfigError("unknown family \"" + fam + "\"");
  if (!(tolerances.rel_tol > 1e-14 && tolerances.rel_tol < 1e-2))
    throw ConfigError("tolerances.rel_tol must lie in (1e-14, 1e-2)");
  // Innermost ball must hold at least 4^dim cells so annulus masks are
  // quadrature-worthy.
  const Grid g = make_grid();
  const GridFunction inner = ball_mask(g, g.l_min);
  const double cells = stable_sum(inner.values);
  const double needed = std::pow(4.0, grid.dim);
  if (cells < needed)
    throw ConfigError("B_{l_min} contains " + std::to_string(static_cast<long>(cells)) +
                      " cells; need >= " + std::to_string(static_cast<long>(needed)) +
                      " (raise l_min or points_per_axis)");
}

void ExperimentConfig::validate_theorem_hypotheses(double delta2) const {
  const Grid g = make_grid();
  const Exponent ep1 = make_p1(g);
  const Exponent ea = make_alpha(g);
  if (!(q1 <= q2))
    throw ConfigError("hypothesis violated: q1 <= q2 (got q1 = " + std::to_string(q1) +
                      ", q2 = " + std::to_string(q2) + ")");
  if (!(lambda > 0.0)) throw ConfigError("hypothesis violated: 0 < lambda");
  const double n = static_cast<double>(grid.dim);
  if (!(beta < n / ep1.max_value()))
    throw ConfigError("hypothesis violated: beta < n/p1+ (Sobolev exponent degenerate)");
  if (!(2.0 * lambda <= ea.min_value()))
    throw ConfigError("hypothesis violated: 2*lambda <= alpha(.) (min alpha = " +
                      std::to_string(ea.min_value()) + ")");
  if (!(beta - n * delta2 < ea.value_at_origin()))
    throw ConfigError("hypothesis violated: beta - n*delta2 < alpha(0)");
  if (!std::isfinite(ea.value_at_infinity()))
    throw ConfigError("hypothesis violated: alpha_infinity < infinity");
}

ExperimentConfig parse_config_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  reject_unknown_keys(j,
                      {"schema_version", "grid", "p1", "alpha", "beta", "q1", "q2", "lambda",
                       "seed", "grand_maximal_N", "tolerances", "families", "atom_js"},
                      "config");

  ExperimentConfig cfg;
  try {
    cfg.schema_version = j.at("schema_version").get<int>();
    const json& jg = j.at("grid");
    reject_unknown_keys(jg, {"dim", "l_min", "l_max", "points_per_axis"}, "config.grid");
    cfg.grid.dim = jg.at("dim").get<int>();
    cfg.grid.l_min = jg.at("l_min").get<int>();
    cfg.grid.l_max = jg.at("l_max").get<int>();
    cfg.grid.points_per_axis = jg.at("points_per_axis").get<int>();
    cfg.p1 = parse_descriptor(j.at("p1"), "config.p1");
    cfg.alpha = parse_descriptor(j.at("alpha"), "config.alpha");
    cfg.beta = j.at("beta").get<double>();
    cfg.q1 = j.at("q1").get<double>();
    cfg.q2 = j.at("q2").get<double>();
    cfg.lambda = j.at("lambda").get<double>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("grand_maximal_N")) cfg.grand_maximal_N = j.at("grand_maximal_N").get<int>();
    if (j.contains("tolerances")) {
      const json& jt = j.at("tolerances");
      reject_unknown_keys(jt, {"rel_tol", "slope_tol", "drift_cap", "log_holder_cap"},
                          "config.tolerances");
      if (jt.contains("rel_tol")) cfg.tolerances.rel_tol = jt.at("rel_tol").get<double>();
      if (jt.contains("slope_tol")) cfg.tolerances.slope_tol = jt.at("slope_tol").get<double>();
      if (jt.contains("drift_cap")) cfg.tolerances.drift_cap = jt.at("drift_cap").get<double>();
      if (jt.contains("log_holder_cap"))
        cfg.tolerances.log_holder_cap = jt.at("log_holder_cap").get<double>();
    }
    if (j.contains("families")) cfg.families = j.at("families").get<std::vector<std::string>>();
    if (j.contains("atom_js")) cfg.atom_js = j.at("atom_js").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  cfg.validate_structure();
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_json(buf.str());
}

FunctionSpec parse_function_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("function spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind"))
    throw ConfigError("function spec must be an object with a \"kind\"");
  FunctionSpec spec;
  spec.kind = j.at("kind").get<std::string>();
  try {
    if (spec.kind == "zero") {
      reject_unknown_keys(j, {"kind"}, "function");
    } else if (spec.kind == "ball" || spec.kind == "annulus") {
      reject_unknown_keys(j, {"kind", "l"}, "function");
      spec.l = j.at("l").get<int>();
    } else if (spec.kind == "bump") {
      reject_unknown_keys(j, {"kind", "width", "amplitude", "shift"}, "function");
      if (j.contains("width")) spec.width = j.at("width").get<double>();
      if (j.contains("amplitude")) spec.amplitude = j.at("amplitude").get<double>();
      if (j.contains("shift")) spec.shift = j.at("shift").get<double>();
    } else if (spec.kind == "atom") {
      reject_unknown_keys(j, {"kind", "r", "s", "seed"}, "function");
      spec.r = j.at("r").get<int>();
      spec.s = j.at("s").get<int>();
      if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    } else if (spec.kind == "random") {
      reject_unknown_keys(j, {"kind", "seed"}, "function");
      if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    } else {
      throw ConfigError("unknown function kind \"" + spec.kind + "\"");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed function spec: ") + e.what());
  }
  if (spec.kind == "bump" && !(spec.width > 0.0))
    throw ConfigError("bump width must be > 0");
  return spec;
}

GridFunction gaussian_bump(const Grid& g, double width, double amplitude, double shift) {
  GridFunction f = GridFunction::zeros(g);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const auto pt = g.point(i);
    const double dx = pt[0] - shift;
    const double rr = dx * dx + pt[1] * pt[1];
    f.values[i] = amplitude * std::exp(-rr / (width * width));
  }
  return f;
}

GridFunction realize_function(const FunctionSpec& spec, const ExperimentConfig& cfg,
                              const Grid& g) {
  if (spec.kind == "zero") return GridFunction::zeros(g);
  if (spec.kind == "ball") return ball_mask(g, spec.l);
  if (spec.kind == "annulus") return annulus_mask(g, spec.l);
  if (spec.kind == "bump") return gaussian_bump(g, spec.width, spec.amplitude, spec.shift);
  if (spec.kind == "atom") {
    const Exponent p = cfg.make_p1(g);
    const Exponent a = cfg.make_alpha(g);
    return make_central_atom(g, spec.r, p, a, spec.s, spec.seed).function;
  }
  if (spec.kind == "random") {
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    GridFunction f = GridFunction::zeros(g);
    for (double& v : f.values) v = unif(rng);
    return f;
  }
  throw ConfigError("unknown function kind \"" + spec.kind + "\"");
}

}  // namespace herzscope
