#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "exclt/quadrature.hpp"

using namespace exclt;

TEST_SUITE("quadrature") {
  TEST_CASE("finite range") {
    const QuadResult r = integrate([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::cos(x); }, 0.0, std::numbers::pi / 2).value ==
          doctest::Approx(1.0).epsilon(1e-13));
  }

  TEST_CASE("infinite ranges") {
    const auto gauss = [](double x) { return std::exp(-x * x); };
    CHECK(integrate(gauss, -INFINITY, INFINITY).value ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
    CHECK(integrate(gauss, 0.0, INFINITY).value ==
          doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-12));
    CHECK(integrate([](double x) { return 1.0 / (1.0 + x * x); }, -INFINITY, 0.0).value ==
          doctest::Approx(std::numbers::pi / 2).epsilon(1e-11));
  }

  TEST_CASE("breakpoints and kinks") {
    const std::vector<double> br{0.3};
    const double v = integrate_checked([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, br);
    CHECK(v == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-14));
  }

  TEST_CASE("endpoint singularity") {
    const QuadResult r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
  }

  TEST_CASE("non-convergence is reported with the estimate") {
    QuadOptions opt;
    opt.max_intervals = 3;
    const auto osc = [](double x) { return std::sin(500.0 * x) * std::exp(x); };
    const QuadResult r = integrate(osc, 0.0, 10.0, opt);
    CHECK_FALSE(r.converged);
    try {
      integrate_checked(osc, 0.0, 10.0, {}, opt);
      FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
      CHECK(e.estimate() == r.value);
      CHECK(e.error() > 0.0);
    }
  }
}
