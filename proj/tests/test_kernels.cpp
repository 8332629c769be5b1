#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "exclt/directing.hpp"
#include "exclt/kernels.hpp"
#include "support.hpp"

using namespace exclt;

TEST_SUITE("kernels") {
  TEST_CASE("array sums: serial and OpenMP agree bit for bit") {
    const DirectingLaw law{family::Cauchy{},
                           ScalePrior{PositivePrior::from_atoms({{1.0, 0.5}, {2.0, 0.5}}), false}};
    const NormingSequence nb(1.0);
    const auto ref = kernels::serial::array_sums(law, nb, 500, 2, 37, 7);
    for (int threads : {1, 2, 3, 8})
      CHECK(kernels::omp::array_sums(law, nb, 500, 2, 37, 7, threads) == ref);
    CHECK(kernels::array_sums(law, nb, 500, 2, 37, 7, 4, kernels::Backend::serial) == ref);
  }

  TEST_CASE("empirical c.f.: chunked sum is schedule independent and accurate") {
    const auto xs = sample_stable(StableParams::make(1.0, 0.0, 1.0, 0.0), 3 * kernels::kChunk + 123, 4);
    std::vector<double> ts;
    for (double t = -5.0; t <= 5.0; t += 0.5) ts.push_back(t);
    const auto ref = kernels::serial::empirical_cf(xs, ts);
    for (int threads : {1, 2, 5}) CHECK(kernels::omp::empirical_cf(xs, ts, threads) == ref);
    for (std::size_t k = 0; k < ts.size(); ++k)
      CHECK(std::abs(ref[k] - testing_support::naive_cf(xs, ts[k])) < 1e-12);
  }

  TEST_CASE("for_each_index visits every slot and rethrows") {
    std::vector<int> hit(1000, 0);
    kernels::for_each_index(hit.size(), [&](std::size_t k) { hit[k] += 1; }, 4);
    for (int h : hit) CHECK(h == 1);
    CHECK_THROWS_AS(kernels::for_each_index(
                        100,
                        [](std::size_t k) {
                          if (k == 57) throw std::runtime_error("boom");
                        },
                        3),
                    std::runtime_error);
  }
}
