#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "exclt/stable.hpp"
#include "support.hpp"

using namespace exclt;
using std::numbers::pi;

TEST_SUITE("stable") {
  TEST_CASE("w constant") {
    CHECK(eval_w(2.0, 1.5) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(eval_w(1.0, 1.0) == 0.0);
    CHECK(eval_w(std::exp(1.0), 1.0) == doctest::Approx(2.0 / pi).epsilon(1e-14));
    CHECK(eval_w(-std::exp(1.0), 1.0) == doctest::Approx(2.0 / pi).epsilon(1e-14));
    CHECK_THROWS_AS(eval_w(0.0, 1.0), std::domain_error);
  }

  TEST_CASE("exponent g") {
    const cplx g2 = eval_g(1.0, StableParams::make(2.0, 0.0, 1.0, 0.7));
    CHECK(g2.real() == doctest::Approx(-1.0));
    CHECK(g2.imag() == doctest::Approx(0.0));
    CHECK(eval_g(0.0, StableParams::make(1.0, 3.0, 2.0, 0.5)) == cplx(0.0, 0.0));
    CHECK(eval_g(1.0, StableParams::make(1.0, 0.0, 1.0, 0.0)) == cplx(-1.0, 0.0));
    // Hand expansion for alpha = 1 with skew: -c|t|(1 + i beta (2/pi) log|t| sgn t) + i t gamma.
    const double t = -2.5;
    const cplx want(-0.8 * 2.5, t * 0.3 - 0.8 * 2.5 * 0.4 * (2.0 / pi) * std::log(2.5) * -1.0);
    const cplx got = eval_g(t, StableParams::make(1.0, 0.3, 0.8, 0.4));
    CHECK(got.real() == doctest::Approx(want.real()).epsilon(1e-13));
    CHECK(got.imag() == doctest::Approx(want.imag()).epsilon(1e-13));
  }

  TEST_CASE("characteristic function values") {
    CHECK(std::abs(stable_cf(1.0, StableParams::make(1.0, 0.0, 1.0, 0.0)) - std::exp(-1.0)) < 1e-15);
    CHECK(std::abs(stable_cf(2.0, StableParams::make(2.0, 0.0, 1.0, 0.0)) - std::exp(-4.0)) < 1e-15);
    const cplx want = std::exp(-1.0) * cplx(std::cos(0.5), std::sin(0.5));
    CHECK(std::abs(stable_cf(1.0, StableParams::make(1.5, 0.0, 1.0, 0.5)) - want) < 1e-14);
  }

  TEST_CASE("characteristic function invariants") {
    for (double alpha : {0.3, 0.7, 1.0, 1.5, 2.0})
      for (double beta : {-1.0, 0.0, 0.5}) {
        const StableParams p = StableParams::make(alpha, 0.4, 1.3, beta);
        CHECK(stable_cf(0.0, p) == cplx(1.0, 0.0));
        for (double t = -6.0; t <= 6.0; t += 0.37) {
          const cplx f = stable_cf(t, p);
          CHECK(std::abs(f) <= 1.0 + 1e-15);
          CHECK(std::abs(stable_cf(-t, p) - std::conj(f)) < 1e-15);
        }
      }
    // The skewness is irrelevant at alpha = 2.
    for (double t : {-2.0, 0.5, 3.0}) {
      const cplx want = std::exp(cplx(-0.7 * t * t, 0.2 * t));
      CHECK(std::abs(stable_cf(t, StableParams::make(2.0, 0.2, 0.7, 1.0)) - want) < 1e-15);
    }
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(StableParams::make(0.0, 0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(StableParams::make(2.1, 0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(StableParams::make(1.0, 0.0, -1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(StableParams::make(1.0, 0.0, 1.0, 1.5), std::invalid_argument);
    const StableParams pm = StableParams::make(1.7, 2.0, 0.0, 0.9);
    CHECK(pm == StableParams::point_mass(2.0));
  }

  TEST_CASE("Levy-Khintchine exponent") {
    CHECK(std::abs(levy_khintchine_psi(2.0, {0.0, AtomicMeasure{{0.0, 1.0}}}) - cplx(-2.0, 0.0)) < 1e-15);
    CHECK(std::abs(levy_khintchine_psi(1.7, {3.0, AtomicMeasure{}}) - cplx(0.0, 3.0 * 1.7)) < 1e-15);
    const cplx i(0.0, 1.0);
    const cplx want = (std::exp(i) - 1.0 - i / 2.0) * 2.0;
    CHECK(std::abs(levy_khintchine_psi(1.0, {0.0, AtomicMeasure{{1.0, 1.0}}}) - want) < 1e-15);
    // Continuity of the kernel at the origin.
    for (double t : {0.5, 2.0})
      CHECK(std::abs(levy_khintchine_kernel(t, 1e-5) - levy_khintchine_kernel(t, 0.0)) < 1e-4);
    for (double t : {-3.0, 0.7, 4.0}) {
      const cplx got = levy_khintchine_psi(t, {0.5, AtomicMeasure{{0.0, 1.3}}});
      CHECK(std::abs(got - cplx(-1.3 * t * t / 2.0, 0.5 * t)) < 1e-14);
    }
    CHECK_THROWS_AS(levy_khintchine_psi(1.0, {0.0, AtomicMeasure{{INFINITY, 1.0}}}),
                    std::invalid_argument);
  }

  TEST_CASE("sampler") {
    const auto g = sample_stable(StableParams::make(2.0, 0.0, 1.0, 0.0), 100000, 11);
    double m = 0.0, s2 = 0.0;
    for (double x : g) m += x;
    m /= g.size();
    for (double x : g) s2 += (x - m) * (x - m);
    s2 /= g.size() - 1;
    CHECK(s2 >= 1.9);
    CHECK(s2 <= 2.1);

    for (double x : sample_stable(StableParams::make(1.0, 5.0, 0.0, 0.0), 100, 3)) CHECK(x == 5.0);

    const StableParams cauchy = StableParams::make(1.0, 0.0, 1.0, 0.0);
    const auto xs = sample_stable(cauchy, 200000, 5);
    double sup = 0.0;
    for (double t = -5.0; t <= 5.0 + 1e-9; t += 0.25)
      sup = std::max(sup, std::abs(testing_support::naive_cf(xs, t) - stable_cf(t, cauchy)));
    CHECK(sup <= 0.02);

    CHECK(sample_stable(cauchy, 50, 9) == sample_stable(cauchy, 50, 9));
    CHECK(sample_stable(cauchy, 50, 9) != sample_stable(cauchy, 50, 10));
  }

  TEST_CASE("norming sequences") {
    const NormingSequence sq(2.0);
    CHECK(norming_values(sq, 4).b / norming_values(sq, 1).b == doctest::Approx(2.0));
    const NormingSequence lin(1.0);
    for (std::int64_t n : {10, 1000})
      CHECK(norming_values(lin, 7 * n).b / norming_values(lin, n).b == doctest::Approx(7.0));
    CHECK(norming_values(lin, 123).b == doctest::Approx(123.0));
    CHECK_THROWS_AS(norming_values(lin, 0), std::invalid_argument);

    // n^{1/alpha} (1 + log n)^p evaluated by hand.
    const NormingSequence lp(0.5, 2.0, SlowKind::log_power, 1.0);
    const double n = 1000.0;
    CHECK(lp.b(n) == doctest::Approx(2.0 * n * n * (1.0 + std::log(n))).epsilon(1e-13));
    const NormingSequence ll(1.0, 1.0, SlowKind::loglog_power, 2.0);
    CHECK(ll.b(n) == doctest::Approx(n * std::pow(1.0 + std::log(1.0 + std::log(n)), 2.0)));

    // b_{mn}/b_n -> m^{1/alpha}; exact for constant h, slow convergence otherwise.
    for (std::int64_t k : {1000, 10000, 100000}) {
      const NormingSequence c15(1.5, 3.0);
      CHECK(c15.b(4.0 * k) / c15.b(k) == doctest::Approx(std::pow(4.0, 1.0 / 1.5)).epsilon(1e-2));
      const double r = lp.b(4.0 * k) / lp.b(k);
      CHECK(r > 16.0);
      CHECK(r / 16.0 < 1.0 + std::log(4.0) / (1.0 + std::log(double(k))) + 1e-12);
    }

    const NormingSequence centred(1.0, 1.0, SlowKind::constant, 0.0, Centering::n_times_mean(0.5));
    CHECK(norming_values(centred, 40).c == doctest::Approx(0.5));
    const NormingSequence fixed = NormingSequence::fixed(3.0);
    CHECK(fixed.b(1e6) == 3.0);
  }
}
