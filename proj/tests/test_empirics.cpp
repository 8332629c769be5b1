#include <cmath>
#include <vector>

#include "doctest.h"
#include "exclt/config.hpp"
#include "exclt/empirics.hpp"
#include "exclt/report.hpp"
#include "support.hpp"

using namespace exclt;

TEST_SUITE("empirics") {
  TEST_CASE("grids") {
    const TGrid g = TGrid::standard();
    REQUIRE(g.points.size() == 41);
    CHECK(g.points.front() == -5.0);
    CHECK(g.points[20] == 0.0);
    CHECK(g.points.back() == 5.0);
    CHECK_THROWS_AS(TGrid::range(0.5, 2.0, 0.5).validate(), std::invalid_argument);
    CHECK_THROWS_AS((TGrid{{0.0, NAN}}.validate()), std::invalid_argument);
  }

  TEST_CASE("empirical characteristic function") {
    const std::vector<double> zeros(100, 0.0);
    for (const cplx& v : empirical_cf(zeros, TGrid::standard())) CHECK(v == cplx(1.0, 0.0));

    const auto xs = sample_stable(StableParams::make(1.0, 0.0, 1.0, 0.0), 200000, 31);
    const TGrid g = TGrid::standard();
    const auto cf = empirical_cf(xs, g);
    double sup = 0.0;
    for (std::size_t k = 0; k < g.points.size(); ++k) {
      sup = std::max(sup, std::abs(cf[k] - std::exp(-std::abs(g.points[k]))));
      CHECK(std::abs(cf[k]) <= 1.0 + 1e-12);
      CHECK(cf[k] == std::conj(cf[g.points.size() - 1 - k]));
    }
    CHECK(sup <= 0.02);
    CHECK(cf[20] == cplx(1.0, 0.0));

    std::vector<double> even, odd;
    for (std::size_t i = 0; i < xs.size(); ++i) (i % 2 ? odd : even).push_back(xs[i]);
    const auto ce = empirical_cf(even, g), co = empirical_cf(odd, g);
    const double bound = 2.0 * 3.0 / std::sqrt(xs.size() / 2.0);
    for (std::size_t k = 0; k < g.points.size(); ++k) CHECK(std::abs(ce[k] - co[k]) <= bound);
    CHECK(empirical_cf(xs, g, 1) == empirical_cf(xs, g, 4));
  }

  TEST_CASE("joint characteristic function") {
    const std::vector<std::pair<double, double>> pts{{1.0, 1.0}, {0.0, 0.0}};
    const DirectingLaw iid{family::Cauchy{}, {}};
    // 0.05 is about three standard errors of |joint - target| at 2000 replicates.
    const RowSums a = sample_array_sums(iid, NormingSequence(1.0), 256, 2, 4, 2000);
    const auto ja = empirical_joint_cf(a, pts);
    CHECK(std::abs(ja[0] - std::exp(-2.0)) <= 0.05);
    CHECK(ja[1] == cplx(1.0, 0.0));

    const DirectingLaw mix{family::Cauchy{},
                           ScalePrior{PositivePrior::from_atoms({{1.0, 0.5}, {2.0, 0.5}}), false}};
    const RowSums b = sample_array_sums(mix, NormingSequence(1.0), 256, 2, 3, 2000);
    const cplx jb = empirical_joint_cf(b, pts)[0];
    CHECK(std::abs(jb - 0.5 * (std::exp(-2.0) + std::exp(-4.0))) <= 0.05);
    const cplx m0 = testing_support::naive_cf(b.row(0), 1.0), m1 = testing_support::naive_cf(b.row(1), 1.0);
    CHECK(std::abs(jb - m0 * m1) >= 0.013 - 0.01);

    const RowSums single = sample_array_sums(iid, NormingSequence(1.0), 16, 1, 3, 10);
    CHECK_THROWS_AS(empirical_joint_cf(single, pts), std::invalid_argument);
  }

  TEST_CASE("target laws") {
    TargetLaw ge;
    ge.kind = TargetLaw::Kind::gaussian_exponential_variance;
    for (double t : {0.0, 1.0, -2.5}) CHECK(ge.cf(t).real() == doctest::Approx(1.0 / (1.0 + t * t / 2.0)));
    // Joint: E exp(-(t^2 + s^2) V / 2) with V ~ Exp(1).
    CHECK(ge.joint_cf(1.0, 2.0).real() == doctest::Approx(1.0 / (1.0 + 2.5)));
    TargetLaw mix;
    mix.kind = TargetLaw::Kind::stable_mixture;
    mix.mixture = MixingMeasure({{StableParams::make(1.0, 0.0, 1.0, 0.0), 0.5},
                                 {StableParams::make(1.0, 0.0, 2.0, 0.0), 0.5}});
    CHECK(mix.joint_cf(1.0, 1.0).real() == doctest::Approx(0.5 * (std::exp(-2.0) + std::exp(-4.0))).epsilon(1e-14));
    CHECK_FALSE(mix.describe().empty());
  }

  TEST_CASE("identity check") {
    const IdentityResult r = verify_identity();
    CHECK(r.passed);
    CHECK(r.t.size() == 21);
    CHECK(r.max_residual <= 1e-8);
    CHECK_FALSE(verify_identity(1e-8, 1.01).passed);
    CHECK(verify_identity(1e-12).passed);
  }

  TEST_CASE("builtin scenarios") {
    const ScenarioConfig ex = parse_scenario({{"scenario", "example1"}, {"replicates", 500}});
    const ScenarioReport r = run_scenario(ex, 5, 1);
    REQUIRE(r.identity.has_value());
    CHECK(r.identity->passed);
    REQUIRE(r.joint_cf.size() == ex.n_grid.size());
    CHECK(r.joint_cf.back().rows.size() == 3);

    const ScenarioConfig g = parse_scenario({{"scenario", "gauss-expmix"}, {"criteria", nlohmann::json::array()}});
    const ScenarioReport gr = run_scenario(g, 5);
    REQUIRE(gr.cf.back().sup_distance.has_value());
    CHECK(*gr.cf.back().sup_distance <= 0.05);
    int inversions = 0;
    for (std::size_t k = 1; k < gr.cf.size(); ++k) inversions += *gr.cf[k].sup_distance > *gr.cf[k - 1].sup_distance;
    CHECK(inversions <= 1);
  }

  TEST_CASE("report payload does not depend on the thread count") {
    const ScenarioConfig c = parse_scenario({{"scenario", "cauchy-mix"}, {"replicates", 300},
                                             {"criteria_grid", {{"values", {100, 1000}}, {"replicates", 100}}}});
    const std::string one = report_payload(run_scenario(c, 9, 1)).dump();
    CHECK(one == report_payload(run_scenario(c, 9, 3)).dump());
    CHECK(one != report_payload(run_scenario(c, 10, 1)).dump());
  }
}
