#include "exclt/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace exclt {

AtomicMeasure::AtomicMeasure(std::initializer_list<Atom> atoms)
    : AtomicMeasure(std::vector<Atom>(atoms)) {}

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) {
  for (const Atom& a : atoms) {
    if (!(a.mass >= 0.0) || !std::isfinite(a.mass))
      throw std::invalid_argument("atomic measure: masses must be finite and nonnegative");
    if (std::isnan(a.location)) throw std::invalid_argument("atomic measure: NaN location");
  }
  std::erase_if(atoms, [](const Atom& a) { return a.mass == 0.0; });
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.location < y.location; });
  for (const Atom& a : atoms) {
    if (!atoms_.empty() && atoms_.back().location == a.location)
      atoms_.back().mass += a.mass;
    else
      atoms_.push_back(a);
  }
}

double AtomicMeasure::total_mass() const noexcept {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.mass;
  return s;
}

double AtomicMeasure::mass_open(double lo, double hi) const noexcept {
  double s = 0.0;
  for (const Atom& a : atoms_)
    if (a.location > lo && a.location < hi) s += a.mass;
  return s;
}

double AtomicMeasure::mass_left_open(double lo, double hi) const noexcept {
  double s = 0.0;
  for (const Atom& a : atoms_)
    if (a.location > lo && a.location <= hi) s += a.mass;
  return s;
}

AtomicMeasure AtomicMeasure::restrict_open(double r) const {
  AtomicMeasure out;
  for (const Atom& a : atoms_)
    if (std::abs(a.location) < r) out.atoms_.push_back(a);
  return out;
}

bool AtomicMeasure::has_mass_at_infinity() const noexcept {
  return std::any_of(atoms_.begin(), atoms_.end(),
                     [](const Atom& a) { return std::isinf(a.location); });
}

}  // namespace exclt
