#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace exclt {

struct Atom {
  double location;
  double mass;
};

/// Finite positive measure on the real line given as weighted atoms, kept
/// sorted by location with coincident atoms merged. Zero masses are dropped
/// on construction; negative or non-finite masses are rejected.
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  AtomicMeasure(std::initializer_list<Atom> atoms);
  explicit AtomicMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

  double total_mass() const noexcept;

  /// Mass of the open interval (lo, hi).
  double mass_open(double lo, double hi) const noexcept;
  /// Mass of the half-open interval (lo, hi].
  double mass_left_open(double lo, double hi) const noexcept;

  /// Restriction to the open interval (-r, r).
  AtomicMeasure restrict_open(double r) const;

  /// True if some atom sits at +/- infinity (outside the real line).
  bool has_mass_at_infinity() const noexcept;

 private:
  std::vector<Atom> atoms_;
};

}  // namespace exclt
