#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "exclt/measure.hpp"
#include "exclt/prokhorov.hpp"

using namespace exclt;

namespace {

// Subset enumeration over the atoms of `a`, closed eps-neighbourhoods.
bool brute_one_way(const AtomicMeasure& a, const AtomicMeasure& b, double eps) {
  const auto& xs = a.atoms();
  const std::size_t k = xs.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) ma += xs[i].mass;
    for (const Atom& y : b.atoms())
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i & 1) && std::abs(y.location - xs[i].location) <= eps) {
          mb += y.mass;
          break;
        }
    if (ma > mb + eps + 1e-15) return false;
  }
  return true;
}

double brute_prokhorov(const AtomicMeasure& a, const AtomicMeasure& b) {
  double lo = 0.0, hi = std::max(a.total_mass(), b.total_mass()) + 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (brute_one_way(a, b, mid) && brute_one_way(b, a, mid) ? hi : lo) = mid;
  }
  return hi;
}

AtomicMeasure random_measure(std::mt19937_64& rng, int max_atoms, double spread) {
  std::uniform_int_distribution<int> count(0, max_atoms);
  std::uniform_real_distribution<double> loc(-spread, spread), mass(0.05, 0.6);
  std::vector<Atom> atoms;
  for (int k = count(rng); k > 0; --k) atoms.push_back({loc(rng), mass(rng)});
  return AtomicMeasure(std::move(atoms));
}

}  // namespace

TEST_SUITE("prokhorov") {
  TEST_CASE("atomic measure bookkeeping") {
    const AtomicMeasure m{{1.0, 0.5}, {-2.0, 0.25}, {1.0, 0.25}, {3.0, 0.0}};
    REQUIRE(m.size() == 2);
    CHECK(m.atoms()[0].location == -2.0);
    CHECK(m.atoms()[1].mass == 0.75);
    CHECK(m.total_mass() == 1.0);
    CHECK(m.mass_open(-2.0, 1.0) == 0.0);
    CHECK(m.mass_left_open(-2.0, 1.0) == 0.75);
    CHECK(m.restrict_open(2.0).total_mass() == 0.75);
    CHECK_THROWS_AS(AtomicMeasure({{0.0, -1.0}}), std::invalid_argument);
    CHECK(AtomicMeasure{{INFINITY, 1.0}}.has_mass_at_infinity());
  }

  TEST_CASE("Prokhorov distance against subset enumeration") {
    CHECK(prokhorov_distance(AtomicMeasure{{0.0, 1.0}}, AtomicMeasure{{0.3, 1.0}}) ==
          doctest::Approx(0.3).epsilon(1e-12));
    CHECK(prokhorov_distance(AtomicMeasure{{0.0, 1.0}}, AtomicMeasure{{5.0, 1.0}}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(prokhorov_distance(AtomicMeasure{}, AtomicMeasure{{0.0, 2.5}}) == 2.5);
    CHECK(prokhorov_distance(AtomicMeasure{}, AtomicMeasure{}) == 0.0);
    std::mt19937_64 rng(17);
    for (int k = 0; k < 200; ++k) {
      const AtomicMeasure a = random_measure(rng, 6, 1.5), b = random_measure(rng, 6, 1.5);
      CHECK(prokhorov_distance(a, b) == doctest::Approx(brute_prokhorov(a, b)).epsilon(1e-9));
    }
  }

  TEST_CASE("d# values") {
    const AtomicMeasure a{{0.5, 1.0}};
    CHECK(dsharp(a, a) == 0.0);
    CHECK(dsharp(AtomicMeasure{}, a) == doctest::Approx(0.5 * (std::exp(-0.5) - std::exp(-20.0))).epsilon(1e-12));
    CHECK(dsharp(AtomicMeasure{}, a) == doctest::Approx(0.3033).epsilon(1e-4));
    CHECK(dsharp(AtomicMeasure{}, AtomicMeasure{}) == 0.0);
    // Atoms beyond r_max are invisible.
    CHECK(dsharp(AtomicMeasure{}, AtomicMeasure{{25.0, 1.0}}) == 0.0);
  }

  TEST_CASE("d# against a fine Riemann sum of the restricted distances") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) {
      const AtomicMeasure a = random_measure(rng, 5, 4.0), b = random_measure(rng, 5, 4.0);
      const int cells = 4000;
      const double h = 8.0 / cells;
      double sum = 0.0;
      for (int i = 0; i < cells; ++i) {
        const double r = (i + 0.5) * h;
        const double d = prokhorov_distance(a.restrict_open(r), b.restrict_open(r));
        sum += d / (1.0 + d) * (std::exp(-i * h) - std::exp(-(i + 1) * h));
      }
      const double tail = [&] {
        const double d = prokhorov_distance(a, b);
        return d / (1.0 + d) * (std::exp(-8.0) - std::exp(-20.0));
      }();
      CHECK(dsharp(a, b) == doctest::Approx(sum + tail).epsilon(5e-3));
    }
  }

  TEST_CASE("d# is a metric on random triples") {
    std::mt19937_64 rng(29);
    for (int k = 0; k < 100; ++k) {
      const AtomicMeasure a = random_measure(rng, 5, 3.0), b = random_measure(rng, 5, 3.0),
                          c = random_measure(rng, 5, 3.0);
      CHECK(dsharp(a, b) == dsharp(b, a));
      CHECK(dsharp(a, c) <= dsharp(a, b) + dsharp(b, c) + 1e-6);
      CHECK(dsharp(a, a) == 0.0);
    }
  }
}
