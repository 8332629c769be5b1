#include "exclt/mixtures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace exclt {
namespace {

void check_weights(double sum) {
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("mixing weights must sum to 1 within 1e-12");
}

}  // namespace

MixingMeasure::MixingMeasure(std::vector<StableAtom> atoms, bool heterogeneous)
    : atoms_(std::move(atoms)), heterogeneous_(heterogeneous) {
  if (atoms_.empty()) throw std::invalid_argument("mixing measure needs at least one atom");
  double sum = 0.0;
  for (StableAtom& a : atoms_) {
    if (!(a.weight > 0.0)) throw std::invalid_argument("mixing weights must be positive");
    a.params = StableParams::make(a.params.alpha, a.params.gamma, a.params.c, a.params.beta);
    sum += a.weight;
  }
  check_weights(sum);
  if (!heterogeneous_) {
    double common = -1.0;
    for (const StableAtom& a : atoms_) {
      if (a.params.degenerate()) continue;
      if (common < 0) common = a.params.alpha;
      else if (a.params.alpha != common)
        throw std::invalid_argument("mixing atoms have different alpha; build it as heterogeneous");
    }
  }
}

MixingMeasure MixingMeasure::normalized(std::vector<StableAtom> atoms, bool heterogeneous) {
  double sum = 0.0;
  for (const StableAtom& a : atoms) sum += a.weight;
  if (!(sum > 0.0)) throw std::invalid_argument("mixing weights must be positive");
  for (StableAtom& a : atoms) a.weight /= sum;
  // Renormalizing can leave a residual of a few ulps; absorb it in the last atom.
  double partial = 0.0;
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) partial += atoms[i].weight;
  if (!atoms.empty()) atoms.back().weight = 1.0 - partial;
  return MixingMeasure(std::move(atoms), heterogeneous);
}

double MixingMeasure::alpha() const {
  if (heterogeneous_) throw std::logic_error("heterogeneous mixing measure has no single alpha");
  for (const StableAtom& a : atoms_)
    if (!a.params.degenerate()) return a.params.alpha;
  return 1.0;
}

IDMixingMeasure::IDMixingMeasure(std::vector<IDAtom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("mixing measure needs at least one atom");
  double sum = 0.0;
  for (const IDAtom& a : atoms_) {
    if (!(a.weight > 0.0)) throw std::invalid_argument("mixing weights must be positive");
    if (a.pair.rho.has_mass_at_infinity())
      throw std::invalid_argument("Levy-Khintchine measure must not charge +/- infinity");
    sum += a.weight;
  }
  check_weights(sum);
}

cplx mixture_cf(double t, const MixingMeasure& mix) {
  cplx acc{0.0, 0.0};
  for (const StableAtom& a : mix.atoms()) acc += a.weight * stable_cf(t, a.params);
  return acc;
}

cplx joint_mixture_cf(std::span<const double> ts, const MixingMeasure& mix) {
  cplx acc{0.0, 0.0};
  for (const StableAtom& a : mix.atoms()) {
    cplx exponent{0.0, 0.0};
    for (double t : ts) exponent += eval_g(t, a.params);
    acc += a.weight * std::exp(exponent);
  }
  return acc;
}

cplx id_mixture_cf(std::span<const double> ts, const IDMixingMeasure& mix) {
  cplx acc{0.0, 0.0};
  for (const IDAtom& a : mix.atoms()) {
    cplx exponent{0.0, 0.0};
    for (double t : ts) exponent += levy_khintchine_psi(t, a.pair);
    acc += a.weight * std::exp(exponent);
  }
  return acc;
}

double example1_gaussian_mixture(double t, double quadrature_tol, double constant_scale) {
  if (!(quadrature_tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  const double k = constant_scale * std::sqrt(2.0 / std::numbers::pi);
  const double half_t2 = 0.5 * t * t;
  // With u = 1/s the integrand becomes k exp(-u^2/2 - t^2/(2 u^2)) on (0, inf).
  const Integrand f = [k, half_t2](double u) {
    if (u <= 0.0) return 0.0;
    return k * std::exp(-0.5 * u * u - half_t2 / (u * u));
  };
  QuadOptions opt;
  opt.abs_tol = 0.1 * quadrature_tol;
  opt.rel_tol = 0.0;
  // exp(-u^2/2) < 1e-300 beyond u = 38; the mode sits at u = sqrt|t|.
  const double peak = std::sqrt(std::abs(t));
  const double breaks[] = {0.5 * peak, peak, 2.0 * peak + 1.0, 8.0};
  return integrate_checked(f, 0.0, 40.0, breaks, opt);
}

}  // namespace exclt
