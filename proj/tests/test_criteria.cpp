#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "exclt/criteria.hpp"

using namespace exclt;
using std::numbers::pi;

namespace {

StatTestConfig stat(std::uint64_t seed = 1) {
  StatTestConfig c;
  c.seed = seed;
  return c;
}

const NGrid kGrid;

DirectingLaw fixed(BaseFamily f) { return {f, {}}; }

DirectingLaw cauchy_scales() {
  return {family::Cauchy{}, ScalePrior{PositivePrior::from_atoms({{1.0, 0.5}, {2.0, 0.5}}), false}};
}

DirectingLaw pareto_scales() {
  return {family::Pareto{1.5, 1.0}, ScalePrior{PositivePrior::from_atoms({{1.0, 0.5}, {2.0, 0.5}}), false}};
}

DirectingLaw gauss_exp() {
  return {family::Gaussian{}, ScalePrior{PositivePrior::exponential(1.0), true}};
}

NormingSequence centred(double alpha, double mean) {
  return NormingSequence(alpha, 1.0, SlowKind::constant, 0.0, Centering::n_times_mean(mean));
}

void check_atoms(const CriterionVerdict& v, std::vector<std::pair<double, double>> want) {
  REQUIRE(v.estimate.mixing.has_value());
  const auto& atoms = v.estimate.mixing->atoms();
  REQUIRE(atoms.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    CHECK(std::abs(atoms[k].params.c / want[k].first - 1.0) <= 0.1);
    CHECK(std::abs(atoms[k].weight - want[k].second) <= 0.05);
  }
}

}  // namespace

TEST_SUITE("criteria") {
  TEST_CASE("grid validation and helpers") {
    CHECK_NOTHROW(kGrid.validate());
    CHECK_THROWS_AS((NGrid{{100, 100}, 200}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((NGrid{{100, 1000}, 50}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((NGrid{{}, 200}.validate()), std::invalid_argument);
    const std::vector<double> a{0.0, 1.0, 2.0, 3.0}, b{0.5, 1.5, 2.5, 3.5};
    CHECK(ks_distance(a, b) == doctest::Approx(0.25));
    CHECK(ks_distance(a, b, 0.5) == 0.0);
    CHECK(ks_distance(a, a) == 0.0);
    CHECK(std::string(to_string(Verdict::inconclusive)) == "inconclusive");
  }

  TEST_CASE("uniform asymptotic negligibility") {
    CHECK(check_uan(fixed(family::PointMass{0.0}), NormingSequence(2.0), kGrid, stat()).holds == Verdict::pass);
    CHECK(check_uan(fixed(family::Cauchy{}), NormingSequence(1.0), kGrid, stat()).holds == Verdict::pass);
    CHECK(check_uan(fixed(family::Cauchy{}), NormingSequence::fixed(1.0), kGrid, stat()).holds == Verdict::fail);
  }

  TEST_CASE("Gaussian mixture") {
    const CriterionVerdict g = check_gaussian_mixture(gauss_exp(), NormingSequence(2.0), kGrid, 1.0, stat());
    CHECK(g.holds == Verdict::pass);
    REQUIRE(g.estimate.gamma.has_value());
    CHECK(std::abs(*g.estimate.gamma) <= 0.05);
    CHECK(check_gaussian_mixture(fixed(family::Uniform{}), NormingSequence(2.0), kGrid, 1.0, stat()).holds ==
          Verdict::pass);
    CHECK(check_gaussian_mixture(fixed(family::Cauchy{}), NormingSequence(2.0), kGrid, 1.0, stat()).holds ==
          Verdict::fail);
  }

  TEST_CASE("degenerate limit") {
    CHECK(check_degenerate(fixed(family::PointMass{0.5}), centred(1.0, 0.5), kGrid, 1.0, stat()).holds ==
          Verdict::pass);
    const CriterionVerdict u = check_degenerate(fixed(family::Uniform{}), NormingSequence(1.0), kGrid, 1.0, stat());
    CHECK(u.holds == Verdict::pass);
    CHECK(*u.estimate.gamma == doctest::Approx(0.0));
    CHECK(check_degenerate(fixed(family::Cauchy{}), NormingSequence(1.0), kGrid, 1.0, stat()).holds == Verdict::fail);
  }

  TEST_CASE("stable mixture") {
    const CriterionVerdict p = check_stable_mixture(pareto_scales(), NormingSequence(1.5), kGrid, 1.5, stat());
    CHECK(p.holds == Verdict::pass);
    // Symmetric Pareto(1.5) with scale s has c+ = c- = s^1.5 / 2.
    const double K = stable_spectral_constant(1.5);
    check_atoms(p, {{K, 0.5}, {K * std::pow(2.0, 1.5), 0.5}});
    for (const StableAtom& a : p.estimate.mixing->atoms()) CHECK(std::abs(a.params.beta) < 0.05);
    CHECK(check_stable_mixture(fixed(family::Gaussian{}), NormingSequence(2.0), kGrid, 1.5, stat()).holds ==
          Verdict::fail);
    CHECK(check_stable_mixture(fixed(family::Cauchy{}), NormingSequence(1.0), kGrid, 1.5, stat()).holds ==
          Verdict::fail);
    CHECK_THROWS_AS(check_stable_mixture(pareto_scales(), NormingSequence(1.5), kGrid, 1.0, stat()),
                    std::invalid_argument);
  }

  TEST_CASE("Cauchy mixture") {
    const CriterionVerdict c = check_cauchy_mixture(cauchy_scales(), NormingSequence(1.0), kGrid, stat());
    CHECK(c.holds == Verdict::pass);
    check_atoms(c, {{1.0, 0.5}, {2.0, 0.5}});
    CHECK(check_cauchy_mixture(fixed(family::PointMass{0.5}), centred(1.0, 0.5), kGrid, stat()).holds ==
          Verdict::fail);
    const DirectingLaw one_sided = fixed(family::Pareto{1.0, 1.0, 1.0});
    const CriterionVerdict a = check_cauchy_mixture(one_sided, NormingSequence(1.0), kGrid, stat());
    CHECK(a.holds == Verdict::fail);
  }

  TEST_CASE("weak law of large numbers") {
    CHECK(check_wlln(fixed(family::PointMass{0.5}), centred(1.0, 0.5), kGrid, 1.0, stat()).holds == Verdict::pass);
    CHECK(check_wlln(fixed(family::Uniform{}), NormingSequence(1.0), kGrid, 1.0, stat()).holds == Verdict::pass);
    const DirectingLaw shifted{family::Gaussian{}, LocationPrior::from_atoms({{-1.0, 0.5}, {2.0, 0.5}})};
    CHECK(check_wlln(shifted, NormingSequence(1.0), kGrid, 1.0, stat()).holds == Verdict::fail);
  }

  TEST_CASE("single-row Gaussian dichotomy") {
    const CriterionVerdict v = check_single_row_gaussian(gauss_exp(), NormingSequence(2.0), kGrid, 1.0, stat());
    CHECK(v.holds == Verdict::pass);
    CHECK(v.estimate.branch == "variance");
    const DirectingLaw loc{family::PointMass{0.0}, LocationPrior::gaussian(0.0, 1.0)};
    const CriterionVerdict l = check_single_row_gaussian(loc, NormingSequence(1.0), kGrid, 1.0, stat());
    CHECK(l.holds == Verdict::pass);
    CHECK(l.estimate.branch == "location");
    const CriterionVerdict c = check_single_row_gaussian(fixed(family::Cauchy{}), NormingSequence(1.0), kGrid, 1.0, stat());
    CHECK(c.hypothesis_violated);
    CHECK(c.estimate.branch.empty());
  }

  TEST_CASE("single-row stable") {
    const CriterionVerdict p = check_single_row_stable(pareto_scales(), NormingSequence(1.5), kGrid, 1.5, stat());
    CHECK(p.holds == Verdict::pass);
    const double K = stable_spectral_constant(1.5);
    check_atoms(p, {{K, 0.5}, {K * std::pow(2.0, 1.5), 0.5}});
    CHECK(check_single_row_stable(pareto_scales(), NormingSequence(2.0), kGrid, 1.5, stat()).holds != Verdict::pass);
    const DirectingLaw asym = fixed(family::Pareto{1.5, 1.0, 0.8});
    const CriterionVerdict a = check_single_row_stable(asym, centred(1.5, 1.8), kGrid, 1.5, stat());
    CHECK(a.hypothesis_violated);
  }

  TEST_CASE("single-row Cauchy") {
    const CriterionVerdict c = check_single_row_cauchy(cauchy_scales(), NormingSequence(1.0), kGrid, stat());
    CHECK(c.holds == Verdict::pass);
    check_atoms(c, {{1.0, 0.5}, {2.0, 0.5}});
    const DirectingLaw loc{family::Cauchy{}, LocationPrior::gaussian(0.0, 1.0)};
    CHECK(check_single_row_cauchy(loc, NormingSequence(1.0), kGrid, stat()).hypothesis_violated);
    CHECK(check_single_row_cauchy(fixed(family::Gaussian{}), NormingSequence(1.0), kGrid, stat()).hypothesis_violated);
  }

  TEST_CASE("tail-ratio conditions") {
    CHECK(std::abs(sec5_ratio(Law(family::Pareto{1.5, 1.0}), 1e4) - 1.0 / 3.0) <= 0.05);
    CHECK(std::abs(sec5_ratio(Law(family::Cauchy{}), 1e4) - 1.0) <= 0.05);
    // Closed form for symmetric Pareto(a, 1): x^2 x^-a / (a/(2-a) (x^(2-a) - 1)).
    const double x = 50.0, a = 1.5;
    CHECK(sec5_ratio(Law(family::Pareto{a, 1.0}), x) ==
          doctest::Approx(x * x * std::pow(x, -a) / (a / (2 - a) * (std::pow(x, 2 - a) - 1))).epsilon(1e-10));
    const std::vector<double> xs{1e2, 1e3, 1e4};
    const CriterionVerdict v = check_sec5_conditions(pareto_scales(), NormingSequence(1.5), kGrid, 1.5, xs, stat());
    CHECK(v.experimental);
    CHECK(v.holds == Verdict::pass);
    const CriterionVerdict w = check_sec5_conditions_alpha_one(cauchy_scales(), NormingSequence(1.0), kGrid, xs, stat());
    CHECK(w.experimental);
    CHECK(w.holds == Verdict::pass);
  }

  TEST_CASE("verdicts are stable across disjoint seeds") {
    for (std::uint64_t s : {11u, 12u}) {
      CHECK(check_cauchy_mixture(cauchy_scales(), NormingSequence(1.0), kGrid, stat(s)).holds == Verdict::pass);
      CHECK(check_gaussian_mixture(gauss_exp(), NormingSequence(2.0), kGrid, 1.0, stat(s)).holds == Verdict::pass);
    }
  }
}
