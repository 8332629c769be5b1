#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace exclt {

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_intervals = 4000;
  /// Length scale used when mapping an infinite range onto a finite one.
  double scale = 1.0;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
  bool converged = false;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}
  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [a, b]; either
/// endpoint may be infinite. Never throws; check `converged`.
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opt = {});

/// Same, but splits at the given interior breakpoints first (points outside
/// (a, b) are ignored).
QuadResult integrate(const Integrand& f, double a, double b, std::span<const double> breaks,
                     const QuadOptions& opt = {});

/// Throws QuadratureError carrying the achieved estimate when the tolerance
/// is not met.
double integrate_checked(const Integrand& f, double a, double b, std::span<const double> breaks,
                         const QuadOptions& opt = {});

}  // namespace exclt
