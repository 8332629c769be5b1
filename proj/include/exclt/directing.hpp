#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "exclt/quadrature.hpp"
#include "exclt/seeding.hpp"
#include "exclt/stable.hpp"

namespace exclt {

namespace family {

struct Gaussian {
  double mean = 0.0;
  double sd = 1.0;
};
struct Cauchy {
  double location = 0.0;
  double scale = 1.0;
};
struct Uniform {
  double lo = -1.0;
  double hi = 1.0;
};
/// Density proportional to |x - location|^{-(tail_index + 1)} for
/// |x - location| >= scale, with mass right_weight on the right branch.
/// right_weight = 1/2 is the symmetric Pareto law.
struct Pareto {
  double tail_index = 1.5;
  double scale = 1.0;
  double right_weight = 0.5;
  double location = 0.0;
};
struct Stable {
  StableParams params;
};
struct PointMass {
  double at = 0.0;
};

}  // namespace family

using BaseFamily = std::variant<family::Gaussian, family::Cauchy, family::Uniform, family::Pareto,
                                family::Stable, family::PointMass>;

/// One realization of the random directing measure p*: a fully specified
/// probability law on the real line with the functionals the criteria use.
/// Closed forms are used where the family has them; otherwise adaptive
/// quadrature to 1e-10 (QuadratureError on failure).
class Law {
 public:
  explicit Law(BaseFamily f);

  const BaseFamily& family() const noexcept { return family_; }
  std::string name() const;
  std::vector<std::pair<std::string, double>> parameters() const;

  bool is_point_mass() const noexcept;
  bool is_continuous() const noexcept { return !is_point_mass(); }
  /// Symmetric about zero (odd functionals vanish exactly).
  bool symmetric() const noexcept;

  double cdf(double x) const;
  /// p*((y, +inf))
  double right_tail(double y) const;
  /// p*((-inf, -y])
  double left_tail(double y) const;
  /// q*(y) = p*((-inf, -y]) + p*((y, +inf))
  double tail(double y) const { return left_tail(y) + right_tail(y); }
  double density(double x) const;

  /// Integral of x over |x| < T.
  double truncated_mean(double T) const;
  /// Integral of x^2 over |x| < T.
  double truncated_second(double T) const;
  /// Integral of b x / (b^2 + x^2).
  double smoothed_mean(double b) const;
  /// Integral of f over the half-open interval (lo, hi].
  double expect(const Integrand& f, double lo, double hi) const;
  /// Throws std::domain_error when the mean does not exist.
  double mean() const;

  double sample(Rng& rng) const;

 private:
  BaseFamily family_;
  // General stable laws are handled numerically; the special cases map onto
  // the closed-form families.
  BaseFamily reduced_;
};

struct PositivePrior {
  enum class Kind { atoms, exponential, lognormal };
  Kind kind = Kind::atoms;
  std::vector<std::pair<double, double>> atoms;  ///< (value, weight)
  double rate = 1.0;
  double log_mean = 0.0;
  double log_sd = 1.0;

  static PositivePrior from_atoms(std::vector<std::pair<double, double>> a) {
    PositivePrior p;
    p.atoms = std::move(a);
    return p;
  }
  static PositivePrior exponential(double rate) {
    PositivePrior p;
    p.kind = Kind::exponential;
    p.rate = rate;
    return p;
  }
  static PositivePrior lognormal(double m, double s) {
    PositivePrior p;
    p.kind = Kind::lognormal;
    p.log_mean = m;
    p.log_sd = s;
    return p;
  }
};

/// Random scale parameter. With on_variance the drawn value is the variance
/// (the family scale becomes its square root). For stable bases the scale
/// parameter is c.
struct ScalePrior {
  PositivePrior prior;
  bool on_variance = false;
};

/// Random location parameter (Gaussian mean, Cauchy location, Uniform
/// center, Pareto location, stable gamma, point-mass position).
struct LocationPrior {
  enum class Kind { atoms, gaussian };
  Kind kind = Kind::atoms;
  std::vector<std::pair<double, double>> atoms;
  double mean = 0.0;
  double sd = 1.0;

  static LocationPrior from_atoms(std::vector<std::pair<double, double>> a) {
    LocationPrior p;
    p.atoms = std::move(a);
    return p;
  }
  static LocationPrior gaussian(double m, double s) {
    LocationPrior p;
    p.kind = Kind::gaussian;
    p.mean = m;
    p.sd = s;
    return p;
  }
};

using Randomizer = std::variant<std::monostate, ScalePrior, LocationPrior>;

/// Parametric random probability measure: a base family whose scale or
/// location parameter is drawn from a prior.
struct DirectingLaw {
  BaseFamily base;
  Randomizer randomizer;

  /// Throws std::invalid_argument on bad parameters.
  void validate() const;
  bool is_random() const noexcept { return !std::holds_alternative<std::monostate>(randomizer); }
};

/// Realizes p* from the stream split_seed(seed, replicate, 0).
Law draw_directing(const DirectingLaw& law, std::uint64_t seed, std::uint64_t replicate = 0);

/// Normed row sums S_in - c_n for `replicates` independent arrays. Within a
/// replicate every row and column shares one draw of p*; rows are
/// conditionally i.i.d. given that draw. Row-major: values[r * rows + i].
struct RowSums {
  std::int64_t n = 0;
  std::size_t rows = 0;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
  std::vector<double> values;

  double at(std::size_t replicate, std::size_t row) const { return values[replicate * rows + row]; }
  /// Column of row i across replicates.
  std::vector<double> row(std::size_t i) const;
};

RowSums sample_array_sums(const DirectingLaw& law, const NormingSequence& norming, std::int64_t n,
                          std::size_t rows, std::uint64_t seed, std::size_t replicates = 1,
                          int threads = 0);

struct ReplicateSum {
  std::uint64_t draw_id;
  double value;
};

/// Single-row law: each replicate draws its own p* and returns T_n - c_n.
std::vector<ReplicateSum> replicate_sums(const DirectingLaw& law, const NormingSequence& norming,
                                         std::int64_t n, std::size_t replicates, std::uint64_t seed,
                                         int threads = 0);

/// Sum of n draws from `p` (compensated), minus a_n, over b_n.
double normed_row_sum(const Law& p, const NormingSequence& norming, std::int64_t n, Rng& rng);

}  // namespace exclt
