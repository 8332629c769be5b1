#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "exclt/directing.hpp"
#include "exclt/measure.hpp"
#include "exclt/mixtures.hpp"
#include "exclt/stable.hpp"

namespace exclt {

/// Spectral function Lambda_alpha(x) = -c_minus |x|^alpha on x < 0 and
/// c_plus x^alpha on x > 0. c_minus = c_plus = 0 is the null measure.
struct SpectralParams {
  double alpha = 1.0;
  double c_minus = 0.0;
  double c_plus = 0.0;

  bool is_null() const noexcept { return c_minus == 0.0 && c_plus == 0.0; }
};

/// Throws std::domain_error at x = 0.
double spectral_cdf(const SpectralParams& params, double x);

/// Grid -2^9, ..., -2^-9, 2^-9, ..., 2^9 (sorted, no zero).
std::vector<double> default_lambda_grid();

/// The measure of Lambda_alpha discretized on `grid` the same way as
/// spectral_measure_lambda: positive cells (g_{i-1}, g_i] put their mass at
/// g_i, negative cells mirror that, and mass beyond the outermost points is
/// dropped.
AtomicMeasure discretize_spectral(const SpectralParams& params, std::span<const double> grid);

/// m_n*(tau) = (n / b_n) * integral of x over |x| < tau b_n.
double trunc_mean(const Law& p, const NormingSequence& norming, std::int64_t n, double tau);
/// m_1n* = n * integral of b_n x / (b_n^2 + x^2).
double smooth_mean(const Law& p, const NormingSequence& norming, std::int64_t n);
/// sigma_n*(eta)^2 = (n / b_n^2) [integral x^2 - (integral x)^2] over |x| < eta b_n.
double trunc_variance(const Law& p, const NormingSequence& norming, std::int64_t n, double eta);
/// max over m in `window` of trunc_variance(p, norming, m, 1 / max(window)).
double sigma_bar_proxy(const Law& p, const NormingSequence& norming,
                       std::span<const std::int64_t> window);
/// L_n*(x); throws std::domain_error at x = 0.
double tail_function_L(const Law& p, const NormingSequence& norming, std::int64_t n, double x);
/// q_n(eps) = L_n*(-eps) - L_n*(eps) = n q*(eps b_n).
double tail_mass_q(const Law& p, const NormingSequence& norming, std::int64_t n, double eps);

/// Discretized lambda_n*, so that lambda((0, g]) = n p*((b_n / g, inf)) and
/// lambda([-g, 0)) = n p*((-inf, -b_n / g]) at every grid point g. Throws
/// std::logic_error if an increment is below -1e-12 (relative to n).
AtomicMeasure spectral_measure_lambda(const Law& p, const NormingSequence& norming,
                                      std::int64_t n, std::span<const double> grid);

/// lambda((0, x]) and lambda([-x, 0)) read off an atomic measure.
double positive_mass_upto(const AtomicMeasure& m, double x);
double negative_mass_upto(const AtomicMeasure& m, double x);

struct SpectralFit {
  SpectralParams params;
  /// RMS residual of the log-linear fit over the used grid points (0 when
  /// no point carried mass).
  double log_residual = 0.0;
};

/// Least squares of log lambda((0, x]) against log c_plus + alpha log x with
/// alpha fixed, over grid points x in [fit_min, fit_max]; mirrored for c_minus.
SpectralFit fit_spectral(const AtomicMeasure& lambda, double alpha, std::span<const double> grid,
                         double fit_min, double fit_max);

/// pi csc(pi alpha / 2) / (2 Gamma(alpha)).
double stable_spectral_constant(double alpha);

/// One atom of the joint limit of (m_1n* - c_n, lambda_n*).
struct Nu12Atom {
  double eta = 0.0;
  SpectralParams spectral;
  double weight = 1.0;
};

struct PushforwardResult {
  MixingMeasure mixing;
  bool gamma_constant = true;
  /// max gamma - min gamma over the atoms.
  double gamma_spread = 0.0;
};

/// Image of nu12 atoms under (eta, lambda) -> (gamma, c, beta) for
/// alpha in (0, 1) or (1, 2), |alpha - 1| >= 1e-3. Throws
/// std::invalid_argument on a bad alpha or on atoms of another alpha.
PushforwardResult pushforward_alpha(std::span<const Nu12Atom> atoms, double alpha);

/// Image for alpha = 1: c = (pi/2)(c_minus + c_plus), beta = 0, gamma = eta.
/// Throws std::invalid_argument naming the first atom with
/// |c_plus - c_minus| > tolerance (c_plus + c_minus).
MixingMeasure pushforward_one(std::span<const Nu12Atom> atoms, double tolerance);

/// (mu_n(tau), psi_n(tau)) of the accompanying infinitely divisible law for
/// one realization of p*. psi is discretized on `grid`: the cell around zero
/// goes to an atom at 0, other cells to their outer endpoint, and mass
/// beyond the grid to the outermost points.
LevyKhintchinePair accompanying_pair(const Law& p, const NormingSequence& norming,
                                     std::int64_t n, double tau, std::span<const double> grid);

struct CharQuantities {
  std::int64_t n = 0;
  double tau = 1.0;
  double m_trunc = 0.0;
  double m_smooth = 0.0;
  double sigma2_trunc = 0.0;
  double sigma2_bar_proxy = 0.0;
  AtomicMeasure lambda_n;
  double q_eps = 0.0;
};

/// All quantities at once; q_eps uses `eps`, the proxy uses `window`.
CharQuantities char_quantities(const Law& p, const NormingSequence& norming, std::int64_t n,
                               double tau, double eps, std::span<const double> grid,
                               std::span<const std::int64_t> window);

}  // namespace exclt
