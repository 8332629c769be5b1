#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exclt/characteristics.hpp"
#include "exclt/directing.hpp"
#include "exclt/mixtures.hpp"

namespace exclt {

struct NGrid {
  std::vector<std::int64_t> values{100, 1000, 10000, 100000};
  std::size_t replicates = 200;

  /// Throws std::invalid_argument unless values increase and replicates >= 100.
  void validate() const;
};

/// Thresholds for the statistical reading of the limit statements. All of
/// them are calibration choices.
struct StatTestConfig {
  /// Exceedance threshold for convergence in probability.
  double delta = 0.05;
  /// Pass needs P(|Z_n - z| > delta) <= prob_bound at the largest n.
  double prob_bound = 0.05;
  /// Fail needs that fraction >= fail_fraction at the largest n.
  double fail_fraction = 0.5;
  /// Distance between empirical laws at consecutive grid points.
  double ks_tol = 0.1;
  /// Slack for monotonicity of exceedance fractions, and the band between
  /// pass and fail for the nondegeneracy test.
  double margin = 0.02;
  /// d# threshold for classifying lambda_n* as null or as a member of the
  /// fitted Lambda_alpha family.
  double dsharp_tol = 0.02;
  double fit_min = 1.0 / 512.0;
  double fit_max = 8.0;
  /// |c+ - c-| <= symmetry_tol (c+ + c-) counts as symmetric.
  double symmetry_tol = 0.1;
  std::vector<double> eps{0.1, 1.0};
  /// Number of log-spaced points from n/10 to n in the sigma-bar window.
  std::size_t window_points = 5;
  std::uint64_t seed = 0;
  int threads = 0;
};

enum class Verdict { pass, fail, inconclusive };
const char* to_string(Verdict v) noexcept;

struct Evidence {
  std::string statistic;
  std::int64_t n = 0;
  double value = 0.0;
};

struct SubCheck {
  std::string name;
  Verdict verdict = Verdict::inconclusive;
  std::string detail;
};

struct EstimatedLimit {
  std::optional<double> gamma;
  std::optional<MixingMeasure> mixing;
  /// Which case of a dichotomy was identified, when the checker has one.
  std::string branch;
  std::vector<std::pair<std::string, double>> summary;
};

struct CriterionVerdict {
  std::string name;
  Verdict holds = Verdict::inconclusive;
  bool hypothesis_violated = false;
  std::string hypothesis_note;
  bool experimental = false;
  std::vector<SubCheck> subchecks;
  std::vector<Evidence> evidence;
  EstimatedLimit estimate;

  bool passed() const noexcept { return holds == Verdict::pass; }
};

/// Uniform asymptotic negligibility: q*(eps b_n) ->P 0 for each eps.
CriterionVerdict check_uan(const DirectingLaw& law, const NormingSequence& norming,
                           const NGrid& grid, const StatTestConfig& cfg);

/// Gaussian mixture limit: m_n*(tau) - c_n ->P gamma, sigma_n*(tau)^2
/// converges weakly to a law other than delta_0, q_n(eps) ->P 0.
CriterionVerdict check_gaussian_mixture(const DirectingLaw& law, const NormingSequence& norming,
                                        const NGrid& grid, double tau, const StatTestConfig& cfg);

/// Degenerate limit: m_n*(tau) - c_n ->P gamma, sigma_n*(tau)^2 ->P 0, q_n(eps) ->P 0.
CriterionVerdict check_degenerate(const DirectingLaw& law, const NormingSequence& norming,
                                  const NGrid& grid, double tau, const StatTestConfig& cfg);

/// Mixture of alpha-stable laws, alpha in (0,1) or (1,2).
CriterionVerdict check_stable_mixture(const DirectingLaw& law, const NormingSequence& norming,
                                      const NGrid& grid, double alpha, const StatTestConfig& cfg);

/// Mixture of Cauchy laws (alpha = 1) with the symmetry requirement.
CriterionVerdict check_cauchy_mixture(const DirectingLaw& law, const NormingSequence& norming,
                                      const NGrid& grid, const StatTestConfig& cfg);

/// Weak law of large numbers. The second-moment condition is taken as
/// (n/b_n^2) int_{|x|<tau b_n} x^2 dp* - c_n^2 / n ->P 0.
CriterionVerdict check_wlln(const DirectingLaw& law, const NormingSequence& norming,
                            const NGrid& grid, double tau, const StatTestConfig& cfg);

/// Single-row Gaussian dichotomy: after the tail hypothesis, either the
/// mean part concentrates and the variance part has a nondegenerate limit
/// (branch "variance"), or the variance part vanishes (branch "location").
CriterionVerdict check_single_row_gaussian(const DirectingLaw& law,
                                           const NormingSequence& norming, const NGrid& grid,
                                           double tau, const StatTestConfig& cfg);

/// Single-row stable criterion (symmetric spectral limits).
CriterionVerdict check_single_row_stable(const DirectingLaw& law, const NormingSequence& norming,
                                         const NGrid& grid, double alpha,
                                         const StatTestConfig& cfg);

/// Single-row Cauchy criterion.
CriterionVerdict check_single_row_cauchy(const DirectingLaw& law, const NormingSequence& norming,
                                         const NGrid& grid, const StatTestConfig& cfg);

/// x^2 q*(x) / int_{-x}^{x} y^2 p*(dy).
double sec5_ratio(const Law& p, double x);

/// Experimental tail-ratio criterion for alpha in (0,1) or (1,2): the ratio
/// above tends to (2 - alpha)/alpha on x_grid, n q*(b_n) has a limit law
/// that is not delta_0, the tail imbalance over q*(b_n) ->P 0, and
/// m_1n* - c_n ->P gamma.
CriterionVerdict check_sec5_conditions(const DirectingLaw& law, const NormingSequence& norming,
                                       const NGrid& grid, double alpha,
                                       std::span<const double> x_grid, const StatTestConfig& cfg);

/// The same conditions with alpha = 1 (target ratio 1).
CriterionVerdict check_sec5_conditions_alpha_one(const DirectingLaw& law,
                                                 const NormingSequence& norming,
                                                 const NGrid& grid,
                                                 std::span<const double> x_grid,
                                                 const StatTestConfig& cfg);

/// Distance between empirical laws that tolerates shifts up to `slack`:
/// sup_x max(F(x - slack) - G(x), G(x - slack) - F(x)), clipped at 0.
/// With slack = 0 this is the Kolmogorov-Smirnov distance.
double ks_distance(std::span<const double> a, std::span<const double> b, double slack = 0.0);

/// Log-spaced window of `points` integers from max(1, n/10) to n.
std::vector<std::int64_t> sigma_bar_window(std::int64_t n, std::size_t points);

}  // namespace exclt
