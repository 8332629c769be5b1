#include "exclt/stable.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace exclt {

using std::numbers::pi;

StableParams StableParams::make(double alpha, double gamma, double c, double beta) {
  if (!(alpha > 0.0 && alpha <= 2.0))
    throw std::invalid_argument("stable: alpha must lie in (0, 2], got " + std::to_string(alpha));
  if (!(c >= 0.0) || !std::isfinite(c))
    throw std::invalid_argument("stable: scale c must be finite and nonnegative");
  if (!(beta >= -1.0 && beta <= 1.0))
    throw std::invalid_argument("stable: beta must lie in [-1, 1]");
  if (!std::isfinite(gamma)) throw std::invalid_argument("stable: gamma must be finite");
  if (c == 0.0) return point_mass(gamma);
  return {alpha, gamma, c, beta};
}

double eval_w(double t, double alpha) {
  if (alpha != 1.0) return std::tan(pi * alpha / 2.0);
  if (t == 0.0) throw std::domain_error("w(t, 1) is singular at t = 0");
  return (2.0 / pi) * std::log(std::abs(t));
}

cplx eval_g(double t, const StableParams& p) {
  if (t == 0.0) return {0.0, 0.0};
  const double mod = p.c * std::pow(std::abs(t), p.alpha);
  // At alpha = 2 the skew term multiplies tan(pi) which is only ~1e-16.
  const double skew = (p.alpha == 2.0 || p.beta == 0.0)
                          ? 0.0
                          : p.beta * eval_w(t, p.alpha) * (t > 0 ? 1.0 : -1.0);
  return {-mod, t * p.gamma - mod * skew};
}

cplx stable_cf(double t, const StableParams& p) { return std::exp(eval_g(t, p)); }

cplx levy_khintchine_kernel(double t, double x) {
  if (x == 0.0) return {-0.5 * t * t, 0.0};
  const double u = t * x;
  const double x2 = x * x;
  const double s = std::sin(0.5 * u);
  const double re = -2.0 * s * s * (1.0 + x2) / x2;
  // (sin u - u)/x^2 computed as t^2 (sin u - u)/u^2 to avoid cancellation.
  double sin_minus_u_over_u2;
  if (std::abs(u) < 1e-2) {
    const double u2 = u * u;
    sin_minus_u_over_u2 = -u / 6.0 * (1.0 - u2 / 20.0 * (1.0 - u2 / 42.0));
  } else {
    sin_minus_u_over_u2 = (std::sin(u) - u) / (u * u);
  }
  const double im = std::sin(u) + t * t * sin_minus_u_over_u2;
  return {re, im};
}

cplx levy_khintchine_psi(double t, const LevyKhintchinePair& pair) {
  if (pair.rho.has_mass_at_infinity())
    throw std::invalid_argument("Levy-Khintchine measure must not charge +/- infinity");
  cplx acc{0.0, pair.mu * t};
  for (const Atom& a : pair.rho.atoms()) acc += a.mass * levy_khintchine_kernel(t, a.location);
  return acc;
}

double draw_stable(const StableParams& p, Rng& rng) {
  if (p.c == 0.0) return p.gamma;
  if (p.alpha == 2.0) return p.gamma + std::sqrt(2.0 * p.c) * standard_normal(rng);

  const double v = pi * (open_unit(rng) - 0.5);
  const double w = standard_exponential(rng);
  if (p.alpha == 1.0) {
    // Scale sigma = c and the same skewness sign as the 1-parametrization.
    const double b = p.beta;
    const double h = 0.5 * pi + b * v;
    const double x = (2.0 / pi) * (h * std::tan(v) - b * std::log(0.5 * pi * w * std::cos(v) / h));
    return p.c * x + (2.0 / pi) * b * p.c * std::log(p.c) + p.gamma;
  }
  // The canonical form here carries +i beta tan(pi alpha/2); the usual
  // sampler parametrization carries -i beta tan(...), hence the sign flip.
  const double a = p.alpha;
  const double b = -p.beta;
  const double tan_term = b * std::tan(0.5 * pi * a);
  const double shift = std::atan(tan_term) / a;
  const double scale_fac = std::pow(1.0 + tan_term * tan_term, 1.0 / (2.0 * a));
  const double x = scale_fac * std::sin(a * (v + shift)) / std::pow(std::cos(v), 1.0 / a) *
                   std::pow(std::cos(v - a * (v + shift)) / w, (1.0 - a) / a);
  return std::pow(p.c, 1.0 / a) * x + p.gamma;
}

std::vector<double> sample_stable(const StableParams& p, std::size_t count, std::uint64_t seed) {
  Rng rng(split_seed(seed, 0, 1));
  std::vector<double> out(count);
  for (double& x : out) x = draw_stable(p, rng);
  return out;
}

NormingSequence::NormingSequence(double alpha, double scale, SlowKind kind, double slow_power,
                                 Centering centering)
    : alpha_(alpha), scale_(scale), slow_(kind), power_(slow_power), centering_(std::move(centering)) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw std::invalid_argument("norming: alpha must lie in (0, 2]");
  if (!(scale > 0.0)) throw std::invalid_argument("norming: scale must be positive");
  if (kind != SlowKind::constant && !(slow_power >= 0.0))
    throw std::invalid_argument("norming: slowly varying power must be nonnegative");
  if (centering_.kind == Centering::Kind::n_times_truncated_mean &&
      (!centering_.truncated_mean || !(centering_.tau > 0.0)))
    throw std::invalid_argument("norming: truncated-mean centering needs tau > 0 and a reference law");
}

NormingSequence NormingSequence::fixed(double b, Centering centering) {
  NormingSequence s(2.0, b, SlowKind::constant, 0.0, std::move(centering));
  s.fixed_ = true;
  return s;
}

double NormingSequence::slowly_varying(double n) const {
  switch (slow_) {
    case SlowKind::constant: return 1.0;
    case SlowKind::log_power: return std::pow(1.0 + std::log(n), power_);
    case SlowKind::loglog_power: return std::pow(1.0 + std::log1p(std::log(n)), power_);
  }
  return 1.0;
}

double NormingSequence::b(double n) const {
  if (fixed_) return scale_;
  return scale_ * std::pow(n, 1.0 / alpha_) * slowly_varying(n);
}

double NormingSequence::a(double n) const {
  switch (centering_.kind) {
    case Centering::Kind::zero: return 0.0;
    case Centering::Kind::n_times_mean: return n * centering_.mean;
    case Centering::Kind::n_times_truncated_mean:
      return n * centering_.truncated_mean(centering_.tau * b(n));
  }
  return 0.0;
}

NormingValues norming_values(const NormingSequence& seq, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("norming: n must be >= 1");
  const double nd = static_cast<double>(n);
  return {seq.b(nd), seq.c(nd)};
}

}  // namespace exclt
