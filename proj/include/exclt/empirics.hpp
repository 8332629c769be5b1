#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "exclt/criteria.hpp"
#include "exclt/directing.hpp"
#include "exclt/mixtures.hpp"
#include "exclt/stable.hpp"

namespace exclt {

struct TGrid {
  std::vector<double> points;

  /// -5, -4.75, ..., 5.
  static TGrid standard() { return range(-5.0, 5.0, 0.25); }
  /// start, start + step, ... up to stop inclusive (within step/1e6).
  static TGrid range(double start, double stop, double step);
  /// Throws std::invalid_argument unless finite and containing 0.
  void validate() const;
};

/// (1/N) sum exp(i t x_j) on the grid; exactly 1 at t = 0.
std::vector<cplx> empirical_cf(std::span<const double> samples, const TGrid& grid,
                               int threads = 0);

/// (1/R) sum over replicates of exp(i (t S_1 + s S_2)) using rows 0 and 1.
/// Throws std::invalid_argument if the array has fewer than two rows.
std::vector<cplx> empirical_joint_cf(const RowSums& sums,
                                     std::span<const std::pair<double, double>> points);

/// Analytic limit registered with a scenario.
struct TargetLaw {
  enum class Kind { stable, stable_mixture, gaussian_exponential_variance };
  Kind kind = Kind::stable;
  StableParams stable;
  MixingMeasure mixture;
  /// Rate of the exponential law of the variance.
  double rate = 1.0;

  cplx cf(double t) const;
  /// Joint c.f. of two rows of the limiting array.
  cplx joint_cf(double t, double s) const;
  std::string describe() const;
};

struct ScenarioConfig {
  std::string name;
  std::string description;
  DirectingLaw law;
  NormingSequence norming;
  std::vector<std::int64_t> n_grid;
  std::size_t replicates = 2000;
  std::size_t rows = 2;
  TGrid t_grid = TGrid::standard();
  std::vector<std::pair<double, double>> joint_points{{1.0, 1.0}};
  double tau = 1.0;
  /// Stable index handed to the alpha-specific checkers.
  std::optional<double> alpha;
  std::vector<std::string> criteria;
  NGrid criteria_grid;
  StatTestConfig stat;
  std::vector<double> tail_ratio_x{1e2, 1e3, 1e4};
  std::optional<TargetLaw> target;
  /// Also run the Gaussian scale-mixture identity check.
  bool identity_check = false;
  /// Draws whose characteristic quantities are tabulated per n.
  std::size_t quantity_draws = 5;
  std::optional<std::uint64_t> seed;
  /// Normalized configuration, echoed into the report.
  nlohmann::json source;

  /// Throws ConfigError on inconsistent settings.
  void validate() const;
};

struct IdentityResult {
  std::vector<double> t;
  std::vector<double> residual;
  double max_residual = 0.0;
  double tolerance = 1e-8;
  bool passed = false;
};

/// Gaussian scale-mixture identity over t = 0, 0.25, ..., 5.
IdentityResult verify_identity(double tolerance = 1e-8, double constant_scale = 1.0);

struct CfTable {
  std::int64_t n = 0;
  std::vector<double> t;
  std::vector<cplx> empirical;
  std::vector<cplx> target;  ///< empty without a target law
  std::optional<double> sup_distance;
};

struct JointCfRow {
  double t = 0.0, s = 0.0;
  cplx joint;
  cplx product;  ///< product of the two marginal empirical c.f.'s
  double gap = 0.0;  ///< |joint - product|
  std::optional<cplx> target;
};

struct JointCfTable {
  std::int64_t n = 0;
  std::vector<JointCfRow> rows;
};

struct QuantityRow {
  std::int64_t n = 0;
  std::size_t draw = 0;
  CharQuantities q;
};

struct ScenarioReport {
  std::string scenario;
  std::uint64_t seed = 0;
  nlohmann::json config;
  std::optional<IdentityResult> identity;
  std::vector<CfTable> cf;
  std::vector<JointCfTable> joint_cf;
  std::vector<QuantityRow> quantities;
  std::vector<CriterionVerdict> verdicts;
  /// Wall-clock milliseconds per stage; not part of the deterministic payload.
  std::vector<std::pair<std::string, double>> timings_ms;
  int threads = 0;
};

/// Seed of the Monte Carlo arrays at grid point n.
std::uint64_t array_seed(std::uint64_t seed, std::int64_t n);

/// Runs one named checker (uan, gaussian_mixture, degenerate,
/// stable_mixture, cauchy_mixture, wlln, row_gaussian, row_stable,
/// row_cauchy, sec5). Throws ConfigError for an unknown name or a missing alpha.
CriterionVerdict run_criterion(const ScenarioConfig& cfg, const std::string& criterion,
                               std::uint64_t seed, int threads);

const std::vector<std::string>& criterion_names();

ScenarioReport run_scenario(const ScenarioConfig& cfg, std::uint64_t seed, int threads = 0);

}  // namespace exclt
