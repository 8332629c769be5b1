#include "exclt/prokhorov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace exclt {

namespace {

class IntervalMass {
 public:
  explicit IntervalMass(const AtomicMeasure& m) {
    for (const Atom& a : m.atoms()) {
      loc_.push_back(a.location);
      prefix_.push_back((prefix_.empty() ? 0.0 : prefix_.back()) + a.mass);
    }
  }
  // mass of [lo, hi]
  double closed(double lo, double hi) const { return upto_incl(hi) - upto_excl(lo); }
  // mass of (lo, hi]
  double left_open(double lo, double hi) const { return upto_incl(hi) - upto_incl(lo); }

 private:
  double upto_incl(double x) const {
    const auto k = std::upper_bound(loc_.begin(), loc_.end(), x) - loc_.begin();
    return k == 0 ? 0.0 : prefix_[static_cast<std::size_t>(k - 1)];
  }
  double upto_excl(double x) const {
    const auto k = std::lower_bound(loc_.begin(), loc_.end(), x) - loc_.begin();
    return k == 0 ? 0.0 : prefix_[static_cast<std::size_t>(k - 1)];
  }
  std::vector<double> loc_;
  std::vector<double> prefix_;
};

// sup over sets A of mu(A) - nu(A^eps). Only subsets of mu's atoms matter;
// over sorted atoms the neighbourhood of a chosen set is a union of equal
// width intervals, so the new nu-mass from adding atom j depends only on the
// previously chosen atom.
double max_excess(const AtomicMeasure& mu, const IntervalMass& nu, double eps) {
  const auto& a = mu.atoms();
  const std::size_t k = a.size();
  std::vector<double> best(k);
  double sup = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    const double xj = a[j].location;
    double v = -nu.closed(xj - eps, xj + eps);
    for (std::size_t i = 0; i < j; ++i) {
      const double xi = a[i].location;
      const double added = (xj - eps <= xi + eps) ? nu.left_open(xi + eps, xj + eps)
                                                  : nu.closed(xj - eps, xj + eps);
      v = std::max(v, best[i] - added);
    }
    best[j] = a[j].mass + v;
    sup = std::max(sup, best[j]);
  }
  return sup;
}

bool feasible(const AtomicMeasure& mu, const IntervalMass& mu_i, const AtomicMeasure& nu,
              const IntervalMass& nu_i, double eps) {
  constexpr double slack = 1e-15;
  return max_excess(mu, nu_i, eps) <= eps + slack && max_excess(nu, mu_i, eps) <= eps + slack;
}

AtomicMeasure restrict_radius(const AtomicMeasure& m, double r) { return m.restrict_open(r); }

}  // namespace

double prokhorov_distance(const AtomicMeasure& mu, const AtomicMeasure& nu) {
  if (mu.has_mass_at_infinity() || nu.has_mass_at_infinity())
    throw std::invalid_argument("prokhorov_distance: atoms must be finite");
  if (mu.empty()) return nu.total_mass();
  if (nu.empty()) return mu.total_mass();
  const IntervalMass mu_i(mu), nu_i(nu);
  double lo = 0.0, hi = std::max(mu.total_mass(), nu.total_mass());
  if (feasible(mu, mu_i, nu, nu_i, 0.0)) return 0.0;
  while (hi - lo > 1e-13 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mu, mu_i, nu, nu_i, mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

double dsharp(const AtomicMeasure& mu, const AtomicMeasure& nu, double r_max) {
  if (!(r_max > 0)) throw std::invalid_argument("dsharp: r_max must be positive");
  std::vector<double> radii{0.0, r_max};
  for (const auto* m : {&mu, &nu})
    for (const Atom& a : m->atoms())
      if (std::abs(a.location) < r_max) radii.push_back(std::abs(a.location));
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < radii.size(); ++k) {
    // on (radii[k], radii[k+1]] the restriction keeps atoms with |x| <= radii[k]
    const double r = std::nextafter(radii[k], radii[k + 1]);
    const double d = prokhorov_distance(restrict_radius(mu, r), restrict_radius(nu, r));
    if (d > 0) total += d / (1.0 + d) * (std::exp(-radii[k]) - std::exp(-radii[k + 1]));
  }
  return total;
}

}  // namespace exclt
