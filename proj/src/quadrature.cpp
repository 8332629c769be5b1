#include "exclt/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace exclt {
namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  double err = std::abs(kronrod - gauss);
  if (!std::isfinite(kronrod)) err = std::numeric_limits<double>::infinity();
  return {a, b, kronrod, err};
}

// Maps t in a finite interval onto the (possibly infinite) x range.
struct RangeMap {
  enum class Kind { finite, upper_infinite, lower_infinite, both_infinite } kind;
  double a, b, scale;

  static RangeMap make(double a, double b, double scale) {
    const bool ia = std::isinf(a), ib = std::isinf(b);
    if (!ia && !ib) return {Kind::finite, a, b, scale};
    if (!ia) return {Kind::upper_infinite, a, b, scale};
    if (!ib) return {Kind::lower_infinite, a, b, scale};
    return {Kind::both_infinite, a, b, scale};
  }

  double t_lo() const { return kind == Kind::finite ? a : (kind == Kind::both_infinite ? -1.0 : 0.0); }
  double t_hi() const { return kind == Kind::finite ? b : 1.0; }

  double to_t(double x) const {
    switch (kind) {
      case Kind::finite: return x;
      case Kind::upper_infinite: return (x - a) / (scale + x - a);
      case Kind::lower_infinite: return (b - x) / (scale + b - x);
      case Kind::both_infinite:
        if (x == 0.0) return 0.0;
        return (-scale + std::sqrt(scale * scale + 4.0 * x * x)) / (2.0 * x);
    }
    return x;
  }

  // f(x(t)) * x'(t)
  double eval(const Integrand& f, double t) const {
    switch (kind) {
      case Kind::finite: return f(t);
      case Kind::upper_infinite: {
        const double u = 1.0 - t;
        return f(a + scale * t / u) * scale / (u * u);
      }
      case Kind::lower_infinite: {
        const double u = 1.0 - t;
        return f(b - scale * t / u) * scale / (u * u);
      }
      case Kind::both_infinite: {
        const double u = 1.0 - t * t;
        return f(scale * t / u) * scale * (1.0 + t * t) / (u * u);
      }
    }
    return 0.0;
  }
};

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, std::span<const double> breaks,
                     const QuadOptions& opt) {
  if (a == b) return {0.0, 0.0, 0, true};
  if (a > b) {
    QuadResult r = integrate(f, b, a, breaks, opt);
    r.value = -r.value;
    return r;
  }
  const RangeMap map = RangeMap::make(a, b, opt.scale > 0 ? opt.scale : 1.0);
  const Integrand g = [&](double t) { return map.eval(f, t); };

  std::vector<double> cuts{map.t_lo()};
  std::vector<double> inner;
  for (double x : breaks)
    if (x > a && x < b) inner.push_back(map.to_t(x));
  std::sort(inner.begin(), inner.end());
  for (double t : inner)
    if (t > cuts.back()) cuts.push_back(t);
  if (map.t_hi() > cuts.back()) cuts.push_back(map.t_hi());

  std::priority_queue<Panel> heap;
  double total = 0.0, total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Panel p = gk15(g, cuts[i], cuts[i + 1]);
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }

  int count = static_cast<int>(heap.size());
  auto done = [&] { return total_err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };
  while (!done() && count < opt.max_intervals) {
    Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // no room left to bisect
    heap.pop();
    Panel left = gk15(g, worst.a, mid);
    Panel right = gk15(g, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }

  // Re-sum from the panels to shed accumulated rounding from the updates.
  double value = 0.0, err = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  QuadResult r{value, err, count, false};
  r.converged = std::isfinite(value) && err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(value));
  return r;
}

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opt) {
  return integrate(f, a, b, std::span<const double>{}, opt);
}

double integrate_checked(const Integrand& f, double a, double b, std::span<const double> breaks,
                         const QuadOptions& opt) {
  const QuadResult r = integrate(f, a, b, breaks, opt);
  if (!r.converged) {
    throw QuadratureError("quadrature did not reach tolerance: estimate " + std::to_string(r.value) +
                              ", error estimate " + std::to_string(r.abs_error),
                          r.value, r.abs_error);
  }
  return r.value;
}

}  // namespace exclt
