#include "exclt/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace exclt {

using std::numbers::pi;

namespace {

double nd(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return static_cast<double>(n);
}

void require_grid(std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("grid must not be empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == 0.0 || !std::isfinite(grid[i])) throw std::invalid_argument("grid must exclude 0");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw std::invalid_argument("grid must be increasing");
  }
}

// Builds atoms from a function F(g) giving lambda((0, g]) for g > 0 and
// lambda([g, 0)) for g < 0. Returns atoms at grid points.
template <class F>
AtomicMeasure discretize(std::span<const double> grid, F cumulative, double negative_tol) {
  require_grid(grid);
  std::vector<Atom> atoms;
  // positive side, walking outwards
  double prev = 0.0;
  for (double g : grid) {
    if (g < 0) continue;
    const double cur = cumulative(g);
    double mass = cur - prev;
    if (mass < -negative_tol) {
      std::ostringstream os;
      os << "spectral measure: negative increment " << mass << " at " << g;
      throw std::logic_error(os.str());
    }
    if (mass > 0) atoms.push_back({g, mass});
    prev = cur;
  }
  prev = 0.0;
  for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
    const double g = *it;
    if (g > 0) continue;
    const double cur = cumulative(g);
    double mass = cur - prev;
    if (mass < -negative_tol) {
      std::ostringstream os;
      os << "spectral measure: negative increment " << mass << " at " << g;
      throw std::logic_error(os.str());
    }
    if (mass > 0) atoms.push_back({g, mass});
    prev = cur;
  }
  return AtomicMeasure(std::move(atoms));
}

}  // namespace

double spectral_cdf(const SpectralParams& params, double x) {
  if (x == 0.0) throw std::domain_error("spectral_cdf: x must be nonzero");
  if (x > 0) return params.c_plus * std::pow(x, params.alpha);
  return -params.c_minus * std::pow(-x, params.alpha);
}

std::vector<double> default_lambda_grid() {
  std::vector<double> g;
  for (int k = 9; k >= -9; --k) g.push_back(-std::ldexp(1.0, k));
  for (int k = -9; k <= 9; ++k) g.push_back(std::ldexp(1.0, k));
  return g;
}

AtomicMeasure discretize_spectral(const SpectralParams& params, std::span<const double> grid) {
  return discretize(
      grid, [&](double g) { return std::abs(spectral_cdf(params, g)); }, 0.0);
}

double trunc_mean(const Law& p, const NormingSequence& norming, std::int64_t n, double tau) {
  if (!(tau > 0)) throw std::invalid_argument("trunc_mean: tau must be positive");
  const double b = norming.b(nd(n));
  return nd(n) / b * p.truncated_mean(tau * b);
}

double smooth_mean(const Law& p, const NormingSequence& norming, std::int64_t n) {
  return nd(n) * p.smoothed_mean(norming.b(nd(n)));
}

double trunc_variance(const Law& p, const NormingSequence& norming, std::int64_t n, double eta) {
  if (!(eta > 0)) throw std::invalid_argument("trunc_variance: eta must be positive");
  const double b = norming.b(nd(n));
  const double T = eta * b;
  const double m1 = p.truncated_mean(T);
  const double m2 = p.truncated_second(T);
  return std::max(0.0, nd(n) / (b * b) * (m2 - m1 * m1));
}

double sigma_bar_proxy(const Law& p, const NormingSequence& norming,
                       std::span<const std::int64_t> window) {
  if (window.empty()) throw std::invalid_argument("sigma_bar_proxy: empty window");
  for (std::size_t i = 1; i < window.size(); ++i)
    if (!(window[i] > window[i - 1])) throw std::invalid_argument("sigma_bar_proxy: window must increase");
  const double eta = 1.0 / static_cast<double>(window.back());
  double best = 0.0;
  for (std::int64_t m : window) best = std::max(best, trunc_variance(p, norming, m, eta));
  return best;
}

double tail_function_L(const Law& p, const NormingSequence& norming, std::int64_t n, double x) {
  if (x == 0.0) throw std::domain_error("tail_function_L: x must be nonzero");
  const double b = norming.b(nd(n));
  if (x < 0) return nd(n) * p.cdf(x * b);
  return -nd(n) * p.right_tail(x * b);
}

double tail_mass_q(const Law& p, const NormingSequence& norming, std::int64_t n, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("tail_mass_q: eps must be positive");
  return nd(n) * p.tail(eps * norming.b(nd(n)));
}

AtomicMeasure spectral_measure_lambda(const Law& p, const NormingSequence& norming,
                                      std::int64_t n, std::span<const double> grid) {
  const double n_ = nd(n);
  const double b = norming.b(n_);
  return discretize(
      grid,
      [&](double g) {
        return g > 0 ? n_ * p.right_tail(b / g) : n_ * p.left_tail(b / -g);
      },
      1e-12 * std::max(1.0, n_));
}

double positive_mass_upto(const AtomicMeasure& m, double x) { return m.mass_left_open(0.0, x); }

double negative_mass_upto(const AtomicMeasure& m, double x) {
  double total = 0.0;
  for (const Atom& a : m.atoms())
    if (a.location < 0 && a.location >= -x) total += a.mass;
  return total;
}

SpectralFit fit_spectral(const AtomicMeasure& lambda, double alpha, std::span<const double> grid,
                         double fit_min, double fit_max) {
  SpectralFit fit;
  fit.params.alpha = alpha;
  double sq = 0.0;
  std::size_t used = 0;
  auto side = [&](bool positive) {
    double acc = 0.0;
    std::size_t k = 0;
    std::vector<double> logs;
    for (double g : grid) {
      const double x = std::abs(g);
      if ((g > 0) != positive || x < fit_min || x > fit_max) continue;
      const double mass = positive ? positive_mass_upto(lambda, x) : negative_mass_upto(lambda, x);
      if (!(mass > 0)) continue;
      logs.push_back(std::log(mass) - alpha * std::log(x));
      acc += logs.back();
      ++k;
    }
    if (k == 0) return 0.0;
    const double mean = acc / static_cast<double>(k);
    for (double v : logs) sq += (v - mean) * (v - mean);
    used += k;
    return std::exp(mean);
  };
  fit.params.c_plus = side(true);
  fit.params.c_minus = side(false);
  fit.log_residual = used > 0 ? std::sqrt(sq / static_cast<double>(used)) : 0.0;
  return fit;
}

double stable_spectral_constant(double alpha) {
  return pi / (std::sin(pi * alpha / 2.0) * 2.0 * std::tgamma(alpha));
}

PushforwardResult pushforward_alpha(std::span<const Nu12Atom> atoms, double alpha) {
  if (!(alpha > 0 && alpha < 2) || std::abs(alpha - 1.0) < 1e-3)
    throw std::invalid_argument("pushforward_alpha: alpha must lie in (0,1) or (1,2), away from 1");
  if (atoms.empty()) throw std::invalid_argument("pushforward_alpha: no atoms");
  const double K = stable_spectral_constant(alpha);
  std::vector<StableAtom> out;
  double gmin = std::numeric_limits<double>::infinity(), gmax = -gmin;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const Nu12Atom& a = atoms[i];
    const SpectralParams& s = a.spectral;
    if (!s.is_null() && s.alpha != alpha) {
      std::ostringstream os;
      os << "pushforward_alpha: atom " << i << " has alpha " << s.alpha << ", expected " << alpha;
      throw std::invalid_argument(os.str());
    }
    const double total = s.c_plus + s.c_minus;
    const double beta = total > 0 ? (s.c_plus - s.c_minus) / total : 0.0;
    const double gamma = a.eta - (s.c_plus - s.c_minus) / (1.0 - alpha);
    gmin = std::min(gmin, gamma);
    gmax = std::max(gmax, gamma);
    out.push_back({StableParams::make(alpha, gamma, K * total, beta), a.weight});
  }
  PushforwardResult r{MixingMeasure::normalized(std::move(out)), true, gmax - gmin};
  r.gamma_constant = r.gamma_spread <= 1e-9 * std::max(1.0, std::max(std::abs(gmin), std::abs(gmax)));
  return r;
}

MixingMeasure pushforward_one(std::span<const Nu12Atom> atoms, double tolerance) {
  if (atoms.empty()) throw std::invalid_argument("pushforward_one: no atoms");
  std::vector<StableAtom> out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const Nu12Atom& a = atoms[i];
    const SpectralParams& s = a.spectral;
    if (!s.is_null() && s.alpha != 1.0) {
      std::ostringstream os;
      os << "pushforward_one: atom " << i << " has alpha " << s.alpha;
      throw std::invalid_argument(os.str());
    }
    const double total = s.c_plus + s.c_minus;
    if (std::abs(s.c_plus - s.c_minus) > tolerance * total) {
      std::ostringstream os;
      os << "pushforward_one: atom " << i << " is asymmetric (c+ = " << s.c_plus
         << ", c- = " << s.c_minus << ")";
      throw std::invalid_argument(os.str());
    }
    out.push_back({StableParams::make(1.0, a.eta, pi / 2.0 * total, 0.0), a.weight});
  }
  return MixingMeasure::normalized(std::move(out));
}

LevyKhintchinePair accompanying_pair(const Law& p, const NormingSequence& norming,
                                     std::int64_t n, double tau, std::span<const double> grid) {
  if (!(tau > 0)) throw std::invalid_argument("accompanying_pair: tau must be positive");
  require_grid(grid);
  const double n_ = nd(n);
  const double b = norming.b(n_);
  const double m = p.truncated_mean(tau * b) / b;
  // Y = X / b - m, so Y in (lo, hi] iff X in (b (m + lo), b (m + hi)].
  auto expect_y = [&](auto&& f, double lo, double hi) {
    const double xlo = std::isinf(lo) ? lo : b * (m + lo);
    const double xhi = std::isinf(hi) ? hi : b * (m + hi);
    return p.expect([&](double x) { return f(x / b - m); }, xlo, xhi);
  };
  const double inf = std::numeric_limits<double>::infinity();
  LevyKhintchinePair pair;
  const double smooth = expect_y([](double y) { return y / (1.0 + y * y); }, -inf, inf);
  pair.mu = n_ * (m + smooth) - norming.c(n_);

  const auto weight = [](double y) { return y * y / (1.0 + y * y); };
  std::vector<double> neg, pos;
  for (double g : grid) (g < 0 ? neg : pos).push_back(g);
  std::vector<Atom> atoms;
  // central cell (largest negative, smallest positive]
  const double c_lo = neg.empty() ? -inf : neg.back();
  const double c_hi = pos.empty() ? inf : pos.front();
  atoms.push_back({0.0, n_ * expect_y(weight, c_lo, c_hi)});
  for (std::size_t i = 1; i < pos.size(); ++i) {
    const double hi = i + 1 == pos.size() ? inf : pos[i];
    atoms.push_back({pos[i], n_ * expect_y(weight, pos[i - 1], hi)});
  }
  // negative cells (neg[i-1], neg[i]] carry their mass at neg[i-1]
  for (std::size_t i = 1; i < neg.size(); ++i) {
    const double lo = i == 1 ? -inf : neg[i - 1];
    atoms.push_back({neg[i - 1], n_ * expect_y(weight, lo, neg[i])});
  }
  pair.rho = AtomicMeasure(std::move(atoms));
  return pair;
}

CharQuantities char_quantities(const Law& p, const NormingSequence& norming, std::int64_t n,
                               double tau, double eps, std::span<const double> grid,
                               std::span<const std::int64_t> window) {
  CharQuantities q;
  q.n = n;
  q.tau = tau;
  q.m_trunc = trunc_mean(p, norming, n, tau);
  q.m_smooth = smooth_mean(p, norming, n);
  q.sigma2_trunc = trunc_variance(p, norming, n, tau);
  q.sigma2_bar_proxy = sigma_bar_proxy(p, norming, window);
  q.lambda_n = spectral_measure_lambda(p, norming, n, grid);
  q.q_eps = tail_mass_q(p, norming, n, eps);
  return q;
}

}  // namespace exclt
