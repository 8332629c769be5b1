#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace testing_support {

/// Composite Simpson rule with `panels` (even) subintervals; deliberately
/// independent of the library quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int k = 1; k < panels; ++k) s += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

/// Plain-loop empirical characteristic function.
inline std::complex<double> naive_cf(const std::vector<double>& xs, double t) {
  double re = 0.0, im = 0.0;
  for (double x : xs) {
    re += std::cos(t * x);
    im += std::sin(t * x);
  }
  return {re / xs.size(), im / xs.size()};
}

}  // namespace testing_support
