#pragma once

#include "exclt/measure.hpp"

namespace exclt {

/// Levy-Prokhorov distance between two finite atomic measures:
///   inf { eps : mu(A) <= nu(A^eps) + eps and nu(A) <= mu(A^eps) + eps for all A }
/// with closed eps-neighbourhoods. Exact up to the bisection tolerance 1e-13.
/// Throws std::invalid_argument for atoms at infinity.
double prokhorov_distance(const AtomicMeasure& mu, const AtomicMeasure& nu);

/// d#(mu, nu) = integral over (0, r_max] of d_r / (1 + d_r) e^{-r} dr, where
/// d_r is the Prokhorov distance of the restrictions to (-r, r). d_r is
/// piecewise constant between the atom radii, so the integral is summed
/// exactly piece by piece.
double dsharp(const AtomicMeasure& mu, const AtomicMeasure& nu, double r_max = 20.0);

}  // namespace exclt
