#pragma once

#include <span>
#include <vector>

#include "exclt/quadrature.hpp"
#include "exclt/stable.hpp"

namespace exclt {

struct StableAtom {
  StableParams params;
  double weight;
};

/// Finite de Finetti measure over stable parameters. All nondegenerate atoms
/// share one alpha unless the measure is built as heterogeneous (allowed
/// only as a counterexample input; the criteria refuse it).
class MixingMeasure {
 public:
  MixingMeasure() = default;
  /// Throws std::invalid_argument unless weights are positive and sum to 1
  /// within 1e-12, and alphas agree (when not heterogeneous).
  explicit MixingMeasure(std::vector<StableAtom> atoms, bool heterogeneous = false);

  /// Rescales positive weights to sum to one before validating.
  static MixingMeasure normalized(std::vector<StableAtom> atoms, bool heterogeneous = false);

  const std::vector<StableAtom>& atoms() const noexcept { return atoms_; }
  bool heterogeneous() const noexcept { return heterogeneous_; }
  /// Common alpha of the nondegenerate atoms (1 if all atoms are point masses).
  double alpha() const;

 private:
  std::vector<StableAtom> atoms_;
  bool heterogeneous_ = false;
};

struct IDAtom {
  LevyKhintchinePair pair;
  double weight;
};

class IDMixingMeasure {
 public:
  IDMixingMeasure() = default;
  explicit IDMixingMeasure(std::vector<IDAtom> atoms);
  const std::vector<IDAtom>& atoms() const noexcept { return atoms_; }

 private:
  std::vector<IDAtom> atoms_;
};

cplx mixture_cf(double t, const MixingMeasure& mix);

/// Mixture of products: sum_atoms w * prod_k phi(t_k), the joint
/// characteristic function of (S_1, ..., S_m) in the limit.
cplx joint_mixture_cf(std::span<const double> ts, const MixingMeasure& mix);

cplx id_mixture_cf(std::span<const double> ts, const IDMixingMeasure& mix);

/// Gaussian scale-mixture representation of exp(-|t|): quadrature of
///   int_0^inf exp(-t^2 s^2 / 2) sqrt(2/pi) exp(-1/(2 s^2)) / s^2 ds
/// after substituting u = 1/s. `constant_scale` multiplies the density
/// constant (1 = exact; anything else is a negative control).
/// Throws QuadratureError on non-convergence.
double example1_gaussian_mixture(double t, double quadrature_tol, double constant_scale = 1.0);

}  // namespace exclt
