#include "exclt/empirics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "exclt/config.hpp"
#include "exclt/kernels.hpp"

namespace exclt {

TGrid TGrid::range(double start, double stop, double step) {
  if (!(step > 0) || !(stop >= start) || !std::isfinite(start) || !std::isfinite(stop))
    throw std::invalid_argument("t-grid range needs start <= stop and step > 0");
  TGrid g;
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-6)) + 1;
  for (std::size_t i = 0; i < count; ++i) {
    double t = start + static_cast<double>(i) * step;
    if (std::abs(t) < 1e-9 * step) t = 0.0;
    g.points.push_back(t);
  }
  return g;
}

void TGrid::validate() const {
  if (points.empty()) throw std::invalid_argument("t-grid must not be empty");
  bool zero = false;
  for (double t : points) {
    if (!std::isfinite(t)) throw std::invalid_argument("t-grid points must be finite");
    zero = zero || t == 0.0;
  }
  if (!zero) throw std::invalid_argument("t-grid must include 0");
}

std::vector<cplx> empirical_cf(std::span<const double> samples, const TGrid& grid, int threads) {
  return kernels::empirical_cf(samples, grid.points, threads);
}

std::vector<cplx> empirical_joint_cf(const RowSums& sums,
                                     std::span<const std::pair<double, double>> points) {
  if (sums.rows < 2) throw std::invalid_argument("empirical_joint_cf: needs at least two rows");
  std::vector<cplx> out;
  for (auto [t, s] : points) {
    double re = 0.0, im = 0.0;
    for (std::size_t r = 0; r < sums.replicates; ++r) {
      const double arg = t * sums.at(r, 0) + s * sums.at(r, 1);
      re += std::cos(arg);
      im += std::sin(arg);
    }
    const double R = static_cast<double>(sums.replicates);
    out.emplace_back(re / R, im / R);
  }
  return out;
}

cplx TargetLaw::cf(double t) const {
  switch (kind) {
    case Kind::stable: return stable_cf(t, stable);
    case Kind::stable_mixture: return mixture_cf(t, mixture);
    case Kind::gaussian_exponential_variance: return rate / (rate + 0.5 * t * t);
  }
  return 0.0;
}

cplx TargetLaw::joint_cf(double t, double s) const {
  switch (kind) {
    case Kind::stable: return stable_cf(t, stable) * stable_cf(s, stable);
    case Kind::stable_mixture: {
      const double ts[] = {t, s};
      return joint_mixture_cf(ts, mixture);
    }
    case Kind::gaussian_exponential_variance: return rate / (rate + 0.5 * (t * t + s * s));
  }
  return 0.0;
}

std::string TargetLaw::describe() const {
  switch (kind) {
    case Kind::stable: return "stable";
    case Kind::stable_mixture: return "stable_mixture";
    case Kind::gaussian_exponential_variance: return "gaussian_exponential_variance";
  }
  return "";
}

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names{"uan",        "gaussian_mixture", "degenerate",
                                              "stable_mixture", "cauchy_mixture", "wlln",
                                              "row_gaussian", "row_stable",     "row_cauchy",
                                              "sec5"};
  return names;
}

namespace {

bool needs_alpha(const std::string& c) {
  return c == "stable_mixture" || c == "row_stable" || c == "sec5";
}

}  // namespace

void ScenarioConfig::validate() const {
  if (n_grid.empty()) throw ConfigError("/n_grid", "must not be empty");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1) throw ConfigError("/n_grid", "values must be >= 1");
    if (i > 0 && n_grid[i] <= n_grid[i - 1]) throw ConfigError("/n_grid", "values must increase");
  }
  if (replicates < 1) throw ConfigError("/replicates", "must be >= 1");
  if (rows < 1) throw ConfigError("/rows", "must be >= 1");
  try {
    t_grid.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("/t_grid", e.what());
  }
  for (const std::string& c : criteria) {
    if (needs_alpha(c) && !alpha) throw ConfigError("/alpha", "criterion '" + c + "' needs alpha");
  }
  if (alpha) {
    const double a = *alpha;
    if (!(a > 0 && a < 2)) throw ConfigError("/alpha", "must lie in (0, 2)");
    for (const std::string& c : criteria)
      if ((c == "stable_mixture" || c == "row_stable") && a == 1.0)
        throw ConfigError("/alpha", "criterion '" + c + "' needs alpha != 1; use the Cauchy checkers");
  }
  if (!criteria.empty()) {
    try {
      criteria_grid.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError("/criteria_grid", e.what());
    }
  }
}

IdentityResult verify_identity(double tolerance, double constant_scale) {
  IdentityResult r;
  r.tolerance = tolerance;
  for (int k = 0; k <= 20; ++k) {
    const double t = 0.25 * k;
    const double v = example1_gaussian_mixture(t, tolerance, constant_scale);
    r.t.push_back(t);
    r.residual.push_back(std::abs(v - std::exp(-t)));
    r.max_residual = std::max(r.max_residual, r.residual.back());
  }
  r.passed = r.max_residual <= tolerance;
  return r;
}

std::uint64_t array_seed(std::uint64_t seed, std::int64_t n) {
  return splitmix64(splitmix64(seed) + static_cast<std::uint64_t>(n));
}

CriterionVerdict run_criterion(const ScenarioConfig& cfg, const std::string& criterion,
                               std::uint64_t seed, int threads) {
  const auto& known = criterion_names();
  if (std::find(known.begin(), known.end(), criterion) == known.end())
    throw ConfigError("criterion", "unknown criterion '" + criterion + "'");
  if (needs_alpha(criterion) && !cfg.alpha)
    throw ConfigError("/alpha", "criterion '" + criterion + "' needs alpha");
  StatTestConfig st = cfg.stat;
  st.seed = seed;
  st.threads = threads;
  const auto& law = cfg.law;
  const auto& nm = cfg.norming;
  const auto& g = cfg.criteria_grid;
  if (criterion == "uan") return check_uan(law, nm, g, st);
  if (criterion == "gaussian_mixture") return check_gaussian_mixture(law, nm, g, cfg.tau, st);
  if (criterion == "degenerate") return check_degenerate(law, nm, g, cfg.tau, st);
  if (criterion == "stable_mixture") return check_stable_mixture(law, nm, g, *cfg.alpha, st);
  if (criterion == "cauchy_mixture") return check_cauchy_mixture(law, nm, g, st);
  if (criterion == "wlln") return check_wlln(law, nm, g, cfg.tau, st);
  if (criterion == "row_gaussian") return check_single_row_gaussian(law, nm, g, cfg.tau, st);
  if (criterion == "row_stable") return check_single_row_stable(law, nm, g, *cfg.alpha, st);
  if (criterion == "row_cauchy") return check_single_row_cauchy(law, nm, g, st);
  if (*cfg.alpha == 1.0) return check_sec5_conditions_alpha_one(law, nm, g, cfg.tail_ratio_x, st);
  return check_sec5_conditions(law, nm, g, *cfg.alpha, cfg.tail_ratio_x, st);
}

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

ScenarioReport run_scenario(const ScenarioConfig& cfg, std::uint64_t seed, int threads) {
  cfg.validate();
  ScenarioReport rep;
  rep.scenario = cfg.name;
  rep.seed = seed;
  rep.config = cfg.source;
  rep.threads = threads;
  const Stopwatch total;

  if (cfg.identity_check) {
    const Stopwatch sw;
    rep.identity = verify_identity();
    rep.timings_ms.push_back({"identity", sw.ms()});
  }

  for (std::int64_t n : cfg.n_grid) {
    const Stopwatch sw;
    const RowSums sums = sample_array_sums(cfg.law, cfg.norming, n, cfg.rows, array_seed(seed, n),
                                           cfg.replicates, threads);
    const std::vector<double> row0 = sums.row(0);
    CfTable tab;
    tab.n = n;
    tab.t = cfg.t_grid.points;
    tab.empirical = empirical_cf(row0, cfg.t_grid, threads);
    if (cfg.target) {
      double sup = 0.0;
      for (std::size_t k = 0; k < tab.t.size(); ++k) {
        tab.target.push_back(cfg.target->cf(tab.t[k]));
        sup = std::max(sup, std::abs(tab.empirical[k] - tab.target.back()));
      }
      tab.sup_distance = sup;
    }
    rep.cf.push_back(std::move(tab));

    if (cfg.rows >= 2 && !cfg.joint_points.empty()) {
      JointCfTable jt;
      jt.n = n;
      const std::vector<double> row1 = sums.row(1);
      const auto joint = empirical_joint_cf(sums, cfg.joint_points);
      for (std::size_t k = 0; k < cfg.joint_points.size(); ++k) {
        const auto [t, s] = cfg.joint_points[k];
        const double tt[] = {t}, ss[] = {s};
        const cplx m1 = kernels::empirical_cf(row0, tt, threads).front();
        const cplx m2 = kernels::empirical_cf(row1, ss, threads).front();
        JointCfRow row{t, s, joint[k], m1 * m2, std::abs(joint[k] - m1 * m2), std::nullopt};
        if (cfg.target) row.target = cfg.target->joint_cf(t, s);
        jt.rows.push_back(row);
      }
      rep.joint_cf.push_back(std::move(jt));
    }
    rep.timings_ms.push_back({"arrays n=" + std::to_string(n), sw.ms()});
  }

  {
    const Stopwatch sw;
    const auto grid = default_lambda_grid();
    const std::size_t draws = std::min(cfg.quantity_draws, cfg.replicates);
    for (std::size_t d = 0; d < draws; ++d) {
      const Law p = draw_directing(cfg.law, seed, d);
      for (std::int64_t n : cfg.n_grid) {
        const auto window = sigma_bar_window(n, cfg.stat.window_points);
        rep.quantities.push_back(
            {n, d, char_quantities(p, cfg.norming, n, cfg.tau, cfg.stat.eps.front(), grid, window)});
      }
    }
    rep.timings_ms.push_back({"quantities", sw.ms()});
  }

  for (const std::string& c : cfg.criteria) {
    const Stopwatch sw;
    rep.verdicts.push_back(run_criterion(cfg, c, seed, threads));
    rep.timings_ms.push_back({"criterion " + c, sw.ms()});
  }
  rep.timings_ms.push_back({"total", total.ms()});
  return rep;
}

}  // namespace exclt
