// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "exclt/characteristics.hpp"
#include "exclt/config.hpp"
#include "exclt/criteria.hpp"
#include "exclt/empirics.hpp"
#include "exclt/prokhorov.hpp"

using namespace exclt;
using std::numbers::pi;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool ok;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Criteria 3 and 4 are stated at 2000 replicates; the checkers use the same count.
NGrid replicated_grid() {
  NGrid g;
  g.replicates = 2000;
  return g;
}

StatTestConfig stat() {
  StatTestConfig c;
  c.seed = kSeed;
  return c;
}

double sup_distance(const std::vector<double>& xs, const TGrid& grid, const std::function<cplx(double)>& target) {
  const auto cf = empirical_cf(xs, grid);
  double sup = 0.0;
  for (std::size_t k = 0; k < grid.points.size(); ++k) sup = std::max(sup, std::abs(cf[k] - target(grid.points[k])));
  return sup;
}

// |joint - product of marginals| at (1, 1) from the first two rows.
double factorization_gap(const RowSums& rs) {
  const std::vector<std::pair<double, double>> pt{{1.0, 1.0}};
  const cplx joint = empirical_joint_cf(rs, pt)[0];
  const TGrid one{{0.0, 1.0}};
  const cplx m0 = empirical_cf(rs.row(0), one)[1], m1 = empirical_cf(rs.row(1), one)[1];
  return std::abs(joint - m0 * m1);
}

Outcome identity() {
  const Clock clock;
  const IdentityResult r = verify_identity(1e-8);
  const double s = clock.seconds();
  return {r.passed && r.max_residual <= 1e-8 && s < 1.0,
          fmt("max residual %.2e (<= 1e-8) over t = 0..5, %.3f s (< 1 s)", r.max_residual, s)};
}

Outcome sampler() {
  const Clock clock;
  const TGrid grid = TGrid::standard();
  double worst = 0.0;
  std::string where;
  std::uint64_t stream = 0;
  for (double alpha : {0.7, 1.0, 1.5, 2.0})
    for (double beta : {0.0, 0.5}) {
      const StableParams p = StableParams::make(alpha, 0.0, 1.0, beta);
      const auto xs = sample_stable(p, 200000, kSeed + ++stream);
      const double d = sup_distance(xs, grid, [&](double t) { return stable_cf(t, p); });
      if (d > worst) {
        worst = d;
        where = fmt("alpha=%g beta=%g", alpha, beta);
      }
    }
  const double s = clock.seconds();
  return {worst <= 0.02 && s < 30.0,
          fmt("worst sup|cf - target| %.4f (<= 0.02) at %s, %.1f s (< 30 s)", worst, where.c_str(), s)};
}

DirectingLaw scenario_law(const std::string& name) { return parse_scenario({{"scenario", name}}).law; }

Outcome gaussian_mixture_clt() {
  const DirectingLaw law = scenario_law("gauss-expmix");
  const NormingSequence nb(2.0);
  const RowSums rs = sample_array_sums(law, nb, 4096, 1, kSeed, 2000);
  const double sup = sup_distance(rs.values, TGrid::range(-3.0, 3.0, 0.25),
                                  [](double t) { return cplx(1.0 / (1.0 + t * t / 2.0), 0.0); });
  const CriterionVerdict v = check_gaussian_mixture(law, nb, replicated_grid(), 1.0, stat());
  const double g = v.estimate.gamma.value_or(NAN);
  return {sup <= 0.05 && v.passed() && std::abs(g) <= 0.05,
          fmt("sup|cf - (1+t^2/2)^-1| on [-3,3] %.4f (<= 0.05); gaussian_mixture %s, gamma %.4f (|.| <= 0.05)", sup,
              to_string(v.holds), g)};
}

Outcome cauchy_mixture_clt() {
  const DirectingLaw law = scenario_law("cauchy-mix");
  const NormingSequence nb(1.0);
  const RowSums rs = sample_array_sums(law, nb, 4096, 1, kSeed, 2000);
  const double sup = sup_distance(rs.values, TGrid::standard(), [](double t) {
    return cplx(0.5 * (std::exp(-std::abs(t)) + std::exp(-2.0 * std::abs(t))), 0.0);
  });
  const CriterionVerdict mix = check_cauchy_mixture(law, nb, replicated_grid(), stat());
  const CriterionVerdict row = check_single_row_cauchy(law, nb, replicated_grid(), stat());
  bool atoms_ok = false;
  std::string atoms = "none";
  if (mix.estimate.mixing) {
    const auto& a = mix.estimate.mixing->atoms();
    atoms.clear();
    for (const StableAtom& x : a) atoms += fmt("{c=%.3f w=%.3f}", x.params.c, x.weight);
    atoms_ok = a.size() == 2 && std::abs(a[0].params.c - 1.0) <= 0.1 && std::abs(a[1].params.c / 2.0 - 1.0) <= 0.1 &&
               std::abs(a[0].weight - 0.5) <= 0.05 && std::abs(a[1].weight - 0.5) <= 0.05;
  }
  return {sup <= 0.05 && mix.passed() && row.passed() && atoms_ok,
          fmt("sup|cf - target| %.4f (<= 0.05); cauchy_mixture %s, single_row_cauchy %s; atoms %s", sup,
              to_string(mix.holds), to_string(row.holds), atoms.c_str())};
}

Outcome uniqueness() {
  const NormingSequence nb(1.0);
  const double iid = factorization_gap(sample_array_sums(scenario_law("cauchy-iid"), nb, 4096, 2, kSeed, 2000));
  const double mix = factorization_gap(sample_array_sums(scenario_law("cauchy-mix"), nb, 4096, 2, kSeed, 2000));
  return {iid <= 0.05 && mix >= 0.013 - 0.01,
          fmt("joint/product gap at (1,1): i.i.d. %.4f (<= 0.05), scale mixture %.4f (>= 0.003)", iid, mix)};
}

SpectralParams cauchy_fit(std::int64_t n) {
  const auto grid = default_lambda_grid();
  const AtomicMeasure lam = spectral_measure_lambda(Law(family::Cauchy{}), NormingSequence(1.0), n, grid);
  return fit_spectral(lam, 1.0, grid, 1.0 / 512, 8.0).params;
}

Outcome spectral_chain() {
  const SpectralParams fit = cauchy_fit(100000);
  const std::vector<Nu12Atom> atoms{{0.0, fit, 1.0}};
  const double c = pushforward_one(atoms, 0.1).atoms()[0].params.c;
  const bool ok = std::abs(fit.c_plus - 1 / pi) <= 0.05 && std::abs(fit.c_minus - 1 / pi) <= 0.05 &&
                  std::abs(c - 1.0) <= 0.05;
  return {ok, fmt("fitted c+ %.5f, c- %.5f (1/pi = %.5f, tol 0.05); pushed-forward c %.5f (tol 0.05 of 1)",
                  fit.c_plus, fit.c_minus, 1 / pi, c)};
}

Outcome pushforward_constants() {
  const double lo = stable_spectral_constant(1.0 - 1e-6) / (pi / 2) - 1.0;
  const double hi = stable_spectral_constant(1.0 + 1e-6) / (pi / 2) - 1.0;
  bool exact = true;
  for (double alpha : {0.5, 1.5}) {
    const std::vector<Nu12Atom> atoms{{0.37, {alpha, 0.2, 0.2}, 0.25}, {0.37, {alpha, 1.3, 1.3}, 0.75}};
    const PushforwardResult r = pushforward_alpha(atoms, alpha);
    for (const StableAtom& a : r.mixing.atoms()) exact &= a.params.gamma == 0.37;
  }
  return {std::abs(lo) <= 1e-4 && std::abs(hi) <= 1e-4 && exact,
          fmt("relative deviation from pi/2: %.2e at 1-1e-6, %.2e at 1+1e-6 (<= 1e-4); gamma == eta exactly: %s", lo,
              hi, exact ? "yes" : "no")};
}

Outcome tail_ratio() {
  const double p = sec5_ratio(Law(family::Pareto{1.5, 1.0}), 1e4);
  const double c = sec5_ratio(Law(family::Cauchy{}), 1e4);
  return {std::abs(p - 1.0 / 3.0) <= 0.05 && std::abs(c - 1.0) <= 0.05,
          fmt("Pareto(1.5) ratio %.5f (1/3 +- 0.05), Cauchy ratio %.5f (1 +- 0.05) at x = 1e4", p, c)};
}

Outcome cross_exclusivity() {
  const Clock clock;
  struct Case {
    const char* scenario;
    const char* designed;
  };
  const Case corpus[] = {
      {"point-mass", "degenerate"},        {"uniform-fixed", "gaussian_mixture"},
      {"gaussian-fixed", "gaussian_mixture"}, {"gauss-expmix", "gaussian_mixture"},
      {"cauchy-iid", "cauchy_mixture"},     {"cauchy-mix", "cauchy_mixture"},
      {"pareto-mix", "stable_mixture"},     {"pareto-asym", "stable_mixture"},
  };
  const char* checkers[] = {"gaussian_mixture", "degenerate", "stable_mixture", "cauchy_mixture"};
  bool ok = true;
  std::string bad;
  int cells = 0;
  for (const Case& c : corpus) {
    const ScenarioConfig cfg = parse_scenario({{"scenario", c.scenario}});
    const NGrid grid;
    for (const std::string name : checkers) {
      CriterionVerdict v;
      if (name == "gaussian_mixture") v = check_gaussian_mixture(cfg.law, cfg.norming, grid, 1.0, stat());
      else if (name == "degenerate") v = check_degenerate(cfg.law, cfg.norming, grid, 1.0, stat());
      else if (name == "stable_mixture") v = check_stable_mixture(cfg.law, cfg.norming, grid, 1.5, stat());
      else v = check_cauchy_mixture(cfg.law, cfg.norming, grid, stat());
      const bool good = name == c.designed ? v.passed()
                                          : v.holds == Verdict::fail || v.hypothesis_violated;
      ++cells;
      if (!good) {
        ok = false;
        bad += fmt(" %s/%s=%s", c.scenario, name.c_str(), to_string(v.holds));
      }
    }
  }
  const double s = clock.seconds();
  return {ok && s < 600.0, fmt("%d cells, %s; %.1f s (< 600 s)", cells, ok ? "all as designed" : ("mismatch:" + bad).c_str(), s)};
}

Outcome dsharp_suite() {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_real_distribution<double> loc(-4.0, 4.0), mass(0.05, 1.0);
  const auto draw = [&] {
    std::vector<Atom> atoms;
    for (int k = count(rng); k > 0; --k) atoms.push_back({loc(rng), mass(rng)});
    return AtomicMeasure(std::move(atoms));
  };
  bool metric = true;
  double worst_triangle = -INFINITY;
  for (int k = 0; k < 100; ++k) {
    const AtomicMeasure a = draw(), b = draw(), c = draw();
    metric &= dsharp(a, a) == 0.0 && dsharp(a, b) == dsharp(b, a);
    worst_triangle = std::max(worst_triangle, dsharp(a, c) - dsharp(a, b) - dsharp(b, c));
  }
  const auto grid = default_lambda_grid();
  const AtomicMeasure limit = discretize_spectral(cauchy_fit(100000), grid);
  std::vector<double> d;
  for (std::int64_t n : {100, 1000, 10000})
    d.push_back(dsharp(spectral_measure_lambda(Law(family::Cauchy{}), NormingSequence(1.0), n, grid), limit));
  const bool decreasing = d[0] > d[1] && d[1] > d[2];
  return {metric && worst_triangle <= 1e-6 && decreasing,
          fmt("identity/symmetry exact: %s; max triangle excess %.2e (<= 1e-6); d#(lambda_n, fit) = %.3e, %.3e, %.3e "
              "at n = 1e2, 1e3, 1e4",
              metric ? "yes" : "no", worst_triangle, d[0], d[1], d[2])};
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"Gaussian scale-mixture identity", identity},
      {"stable sampler fidelity", sampler},
      {"Gaussian-mixture CLT", gaussian_mixture_clt},
      {"Cauchy-mixture CLT", cauchy_mixture_clt},
      {"uniqueness of representation", uniqueness},
      {"spectral chain", spectral_chain},
      {"pushforward constants", pushforward_constants},
      {"tail ratio", tail_ratio},
      {"criteria cross-exclusivity", cross_exclusivity},
      {"d# metric suite", dsharp_suite},
  };
  int failures = 0, k = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.ok;
    std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", ++k, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", k - failures, k);
  return failures == 0 ? 0 : 1;
}
