#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "exclt/measure.hpp"
#include "exclt/seeding.hpp"

namespace exclt {

using cplx = std::complex<double>;

/// Canonical parameters (alpha, gamma, c, beta) of a stable law with
/// characteristic function exp{ i t gamma - c |t|^alpha [1 + i beta w(t, alpha) sgn t] }.
///
/// A zero scale means the point mass at gamma, stored as (1, gamma, 0, 0).
struct StableParams {
  double alpha = 2.0;
  double gamma = 0.0;
  double c = 1.0;
  double beta = 0.0;

  /// Validates and canonicalizes; throws std::invalid_argument.
  static StableParams make(double alpha, double gamma, double c, double beta);
  static StableParams point_mass(double at) { return {1.0, at, 0.0, 0.0}; }

  bool degenerate() const noexcept { return c == 0.0; }
  bool operator==(const StableParams&) const = default;
};

/// w(t, alpha): tan(pi alpha / 2) for alpha != 1 and (2/pi) log|t| for
/// alpha = 1. Throws std::domain_error for alpha = 1, t = 0.
double eval_w(double t, double alpha);

/// Exponent g_alpha(t; gamma, c, beta). Exactly 0 at t = 0.
cplx eval_g(double t, const StableParams& p);

cplx stable_cf(double t, const StableParams& p);

/// Centering and spectral measure of an infinitely divisible law in the
/// Levy-Khintchine form with kernel (e^{itx} - 1 - itx/(1+x^2)) (1+x^2)/x^2.
struct LevyKhintchinePair {
  double mu = 0.0;
  AtomicMeasure rho;
};

/// The kernel above, with its continuous extension -t^2/2 at x = 0.
cplx levy_khintchine_kernel(double t, double x);

/// psi(t; mu, rho). Throws std::invalid_argument if rho charges +/- infinity.
cplx levy_khintchine_psi(double t, const LevyKhintchinePair& pair);

/// One exact stable variate (trigonometric transformation method).
double draw_stable(const StableParams& p, Rng& rng);

/// `count` i.i.d. variates from the stream split_seed(seed, 0, 1).
std::vector<double> sample_stable(const StableParams& p, std::size_t count, std::uint64_t seed);

enum class SlowKind { constant, log_power, loglog_power };

/// Centering sequence a_n.
struct Centering {
  enum class Kind { zero, n_times_mean, n_times_truncated_mean };
  Kind kind = Kind::zero;
  double mean = 0.0;  ///< a_n = n * mean
  double tau = 1.0;   ///< a_n = n * truncated_mean(tau * b_n)
  /// T -> integral of x over |x| < T under a fixed reference law.
  std::function<double(double)> truncated_mean;

  static Centering zero() { return {}; }
  static Centering n_times_mean(double mean) { return {Kind::n_times_mean, mean, 1.0, {}}; }
  static Centering n_times_truncated_mean(double tau, std::function<double(double)> tm) {
    return {Kind::n_times_truncated_mean, 0.0, tau, std::move(tm)};
  }
};

/// b_n = scale * n^{1/alpha} * h(n) with h(n) = 1, (1 + log n)^p or
/// (1 + log(1 + log n))^p, and c_n = a_n / b_n.
class NormingSequence {
 public:
  NormingSequence() = default;
  NormingSequence(double alpha, double scale = 1.0, SlowKind kind = SlowKind::constant,
                  double slow_power = 0.0, Centering centering = {});

  /// b_n identically equal to `b` (violates b_n -> infinity; test use only).
  static NormingSequence fixed(double b, Centering centering = {});

  double alpha() const noexcept { return alpha_; }
  double scale() const noexcept { return scale_; }
  SlowKind slow_kind() const noexcept { return slow_; }
  double slow_power() const noexcept { return power_; }
  bool is_fixed() const noexcept { return fixed_; }
  const Centering& centering() const noexcept { return centering_; }

  double slowly_varying(double n) const;
  double b(double n) const;
  double a(double n) const;
  double c(double n) const { return a(n) / b(n); }

 private:
  double alpha_ = 2.0;
  double scale_ = 1.0;
  SlowKind slow_ = SlowKind::constant;
  double power_ = 0.0;
  Centering centering_{};
  bool fixed_ = false;
};

struct NormingValues {
  double b;
  double c;
};

/// (b_n, c_n); throws std::invalid_argument for n < 1.
NormingValues norming_values(const NormingSequence& seq, std::int64_t n);

}  // namespace exclt
