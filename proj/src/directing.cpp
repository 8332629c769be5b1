#include "exclt/directing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "exclt/kernels.hpp"

namespace exclt {

using std::numbers::pi;
using namespace family;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

QuadOptions law_quad_options(double scale) {
  QuadOptions o;
  o.abs_tol = 1e-13;
  o.rel_tol = 1e-11;
  o.max_intervals = 20000;
  o.scale = scale;
  return o;
}

// Pieces of the support and interior breakpoints for density quadrature.
struct Support {
  std::vector<std::pair<double, double>> pieces;
  std::vector<double> breaks;
  double scale = 1.0;
};

Support support_of(const Gaussian& g) {
  return {{{g.mean - 40 * g.sd, g.mean + 40 * g.sd}},
          {g.mean - 8 * g.sd, g.mean - g.sd, g.mean, g.mean + g.sd, g.mean + 8 * g.sd},
          g.sd};
}
Support support_of(const Cauchy& c) {
  return {{{-kInf, kInf}}, {c.location - c.scale, c.location, c.location + c.scale}, c.scale};
}
Support support_of(const Uniform& u) { return {{{u.lo, u.hi}}, {}, u.hi - u.lo}; }
Support support_of(const Pareto& p) {
  std::vector<std::pair<double, double>> pieces;
  if (p.right_weight < 1.0) pieces.push_back({-kInf, p.location - p.scale});
  if (p.right_weight > 0.0) pieces.push_back({p.location + p.scale, kInf});
  return {pieces, {p.location - 4 * p.scale, p.location + 4 * p.scale}, p.scale};
}
Support support_of(const Stable& s) {
  const double width = std::pow(s.params.c, 1.0 / s.params.alpha);
  return {{{-kInf, kInf}}, {s.params.gamma - width, s.params.gamma, s.params.gamma + width}, width};
}

// ---- Gaussian ----
double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }
double std_normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * pi); }

double cdf_of(const Gaussian& g, double x) { return std_normal_cdf((x - g.mean) / g.sd); }
double right_tail_of(const Gaussian& g, double y) { return std_normal_cdf(-(y - g.mean) / g.sd); }
double left_tail_of(const Gaussian& g, double y) { return std_normal_cdf((-y - g.mean) / g.sd); }
double density_of(const Gaussian& g, double x) { return std_normal_pdf((x - g.mean) / g.sd) / g.sd; }

std::pair<double, double> truncated_of(const Gaussian& g, double T) {
  if (!(T > 0)) return {0.0, 0.0};
  const double a = (-T - g.mean) / g.sd;
  const double b = (T - g.mean) / g.sd;
  const double dphi = 0.5 * (std::erf(b / std::numbers::sqrt2) - std::erf(a / std::numbers::sqrt2));
  const double pa = std_normal_pdf(a), pb = std_normal_pdf(b);
  const double m = g.mean, s = g.sd;
  const double first = m * dphi + s * (pa - pb);
  const double second = m * m * dphi + 2 * m * s * (pa - pb) + s * s * (dphi + a * pa - b * pb);
  return {first, second};
}

// ---- Cauchy ----
double cdf_of(const Cauchy& c, double x) { return std::atan2(c.scale, c.location - x) / pi; }
double right_tail_of(const Cauchy& c, double y) { return std::atan2(c.scale, y - c.location) / pi; }
double left_tail_of(const Cauchy& c, double y) { return std::atan2(c.scale, y + c.location) / pi; }
double density_of(const Cauchy& c, double x) {
  const double z = (x - c.location) / c.scale;
  return 1.0 / (pi * c.scale * (1.0 + z * z));
}
std::pair<double, double> truncated_of(const Cauchy& c, double T) {
  if (!(T > 0)) return {0.0, 0.0};
  const double l = c.location, s = c.scale;
  const double a = (-T - l) / s, b = (T - l) / s;
  const double datan = std::atan(b) - std::atan(a);
  const double dlog = std::log1p(b * b) - std::log1p(a * a);
  const double first = (l * datan + 0.5 * s * dlog) / pi;
  const double second = ((l * l - s * s) * datan + l * s * dlog + s * s * (b - a)) / pi;
  return {first, second};
}

// ---- Uniform ----
double cdf_of(const Uniform& u, double x) { return std::clamp((x - u.lo) / (u.hi - u.lo), 0.0, 1.0); }
double right_tail_of(const Uniform& u, double y) {
  return std::clamp((u.hi - y) / (u.hi - u.lo), 0.0, 1.0);
}
double left_tail_of(const Uniform& u, double y) {
  return std::clamp((-y - u.lo) / (u.hi - u.lo), 0.0, 1.0);
}
double density_of(const Uniform& u, double x) {
  return (x >= u.lo && x <= u.hi) ? 1.0 / (u.hi - u.lo) : 0.0;
}
std::pair<double, double> truncated_of(const Uniform& u, double T) {
  const double lo = std::max(u.lo, -T), hi = std::min(u.hi, T);
  if (!(hi > lo)) return {0.0, 0.0};
  const double w = u.hi - u.lo;
  return {(hi * hi - lo * lo) / (2 * w), (hi * hi * hi - lo * lo * lo) / (3 * w)};
}

// ---- Pareto ----
// Tail of |Y| on one branch: min(1, (s/y)^a) for y > 0.
double pareto_branch_tail(const Pareto& p, double y) {
  if (y <= p.scale) return 1.0;
  return std::pow(p.scale / y, p.tail_index);
}
// P(Y > z), Y = X - location.
double pareto_upper(const Pareto& p, double z) {
  if (z >= 0) return p.right_weight * pareto_branch_tail(p, z);
  return 1.0 - (1.0 - p.right_weight) * pareto_branch_tail(p, -z);
}
// P(Y <= z)
double pareto_lower(const Pareto& p, double z) {
  if (z < 0) return (1.0 - p.right_weight) * pareto_branch_tail(p, -z);
  return 1.0 - p.right_weight * pareto_branch_tail(p, z);
}
double cdf_of(const Pareto& p, double x) { return pareto_lower(p, x - p.location); }
double right_tail_of(const Pareto& p, double y) { return pareto_upper(p, y - p.location); }
double left_tail_of(const Pareto& p, double y) { return pareto_lower(p, -y - p.location); }
double density_of(const Pareto& p, double x) {
  const double y = x - p.location;
  if (std::abs(y) < p.scale) return 0.0;
  const double side = y > 0 ? p.right_weight : 1.0 - p.right_weight;
  return side * p.tail_index * std::pow(p.scale, p.tail_index) *
         std::pow(std::abs(y), -p.tail_index - 1.0);
}
// alpha s^alpha * int_s^T y^{k - alpha - 1} dy
double pareto_branch_moment(const Pareto& p, int k, double T) {
  if (T <= p.scale) return 0.0;
  const double a = p.tail_index, s = p.scale;
  const double e = k - a;
  if (std::abs(e) < 1e-12) return a * std::pow(s, a) * std::log(T / s);
  return a * std::pow(s, a) * (std::pow(T, e) - std::pow(s, e)) / e;
}

// ---- Stable (general case, numeric) ----
double stable_phase(const StableParams& p, double t, double x) {
  double skew = 0.0;
  if (p.beta != 0.0) skew = p.c * p.beta * std::pow(t, p.alpha) * eval_w(t, p.alpha);
  return t * (p.gamma - x) - skew;
}
double stable_tmax(const StableParams& p) { return std::pow(60.0 / p.c, 1.0 / p.alpha); }

double density_of(const Stable& s, double x) {
  const StableParams& p = s.params;
  const Integrand f = [&](double t) {
    return std::exp(-p.c * std::pow(t, p.alpha)) * std::cos(stable_phase(p, t, x));
  };
  QuadOptions o;
  o.abs_tol = 1e-12;
  o.rel_tol = 1e-10;
  o.max_intervals = 20000;
  return std::max(0.0, integrate_checked(f, 0.0, stable_tmax(p), {}, o) / pi);
}
double cdf_of(const Stable& s, double x) {
  const StableParams& p = s.params;
  const Integrand f = [&](double t) {
    return std::exp(-p.c * std::pow(t, p.alpha)) * std::sin(stable_phase(p, t, x)) / t;
  };
  QuadOptions o;
  o.abs_tol = 1e-12;
  o.rel_tol = 1e-10;
  o.max_intervals = 20000;
  return std::clamp(0.5 - integrate_checked(f, 0.0, stable_tmax(p), {}, o) / pi, 0.0, 1.0);
}
double right_tail_of(const Stable& s, double y) { return 1.0 - cdf_of(s, y); }
double left_tail_of(const Stable& s, double y) { return cdf_of(s, -y); }

// ---- Point mass ----
double cdf_of(const PointMass& m, double x) { return m.at <= x ? 1.0 : 0.0; }
double right_tail_of(const PointMass& m, double y) { return m.at > y ? 1.0 : 0.0; }
double left_tail_of(const PointMass& m, double y) { return m.at <= -y ? 1.0 : 0.0; }

BaseFamily reduce(const BaseFamily& f) {
  if (const auto* s = std::get_if<Stable>(&f)) {
    const StableParams& p = s->params;
    if (p.c == 0.0) return PointMass{p.gamma};
    if (p.alpha == 2.0) return Gaussian{p.gamma, std::sqrt(2.0 * p.c)};
    if (p.alpha == 1.0 && p.beta == 0.0) return Cauchy{p.gamma, p.c};
  }
  return f;
}

void validate_family(const BaseFamily& f) {
  std::visit(overloaded{
                 [](const Gaussian& g) {
                   if (!(g.sd > 0) || !std::isfinite(g.mean))
                     throw std::invalid_argument("gaussian: sd must be positive");
                 },
                 [](const Cauchy& c) {
                   if (!(c.scale > 0) || !std::isfinite(c.location))
                     throw std::invalid_argument("cauchy: scale must be positive");
                 },
                 [](const Uniform& u) {
                   if (!(u.hi > u.lo)) throw std::invalid_argument("uniform: need lo < hi");
                 },
                 [](const Pareto& p) {
                   if (!(p.tail_index > 0)) throw std::invalid_argument("pareto: tail index must be positive");
                   if (!(p.scale > 0)) throw std::invalid_argument("pareto: scale must be positive");
                   if (!(p.right_weight >= 0 && p.right_weight <= 1))
                     throw std::invalid_argument("pareto: right weight must lie in [0, 1]");
                 },
                 [](const Stable& s) {
                   (void)StableParams::make(s.params.alpha, s.params.gamma, s.params.c, s.params.beta);
                 },
                 [](const PointMass& m) {
                   if (!std::isfinite(m.at)) throw std::invalid_argument("point mass must be finite");
                 },
             },
             f);
}

}  // namespace

Law::Law(BaseFamily f) : family_(std::move(f)) {
  validate_family(family_);
  if (auto* s = std::get_if<Stable>(&family_))
    s->params = StableParams::make(s->params.alpha, s->params.gamma, s->params.c, s->params.beta);
  reduced_ = reduce(family_);
}

std::string Law::name() const {
  return std::visit(overloaded{
                        [](const Gaussian&) { return std::string("gaussian"); },
                        [](const Cauchy&) { return std::string("cauchy"); },
                        [](const Uniform&) { return std::string("uniform"); },
                        [](const Pareto&) { return std::string("pareto"); },
                        [](const Stable&) { return std::string("stable"); },
                        [](const PointMass&) { return std::string("point_mass"); },
                    },
                    family_);
}

std::vector<std::pair<std::string, double>> Law::parameters() const {
  return std::visit(
      overloaded{
          [](const Gaussian& g) -> std::vector<std::pair<std::string, double>> {
            return {{"mean", g.mean}, {"sd", g.sd}};
          },
          [](const Cauchy& c) -> std::vector<std::pair<std::string, double>> {
            return {{"location", c.location}, {"scale", c.scale}};
          },
          [](const Uniform& u) -> std::vector<std::pair<std::string, double>> {
            return {{"lo", u.lo}, {"hi", u.hi}};
          },
          [](const Pareto& p) -> std::vector<std::pair<std::string, double>> {
            return {{"tail_index", p.tail_index},
                    {"scale", p.scale},
                    {"right_weight", p.right_weight},
                    {"location", p.location}};
          },
          [](const Stable& s) -> std::vector<std::pair<std::string, double>> {
            return {{"alpha", s.params.alpha}, {"gamma", s.params.gamma}, {"c", s.params.c},
                    {"beta", s.params.beta}};
          },
          [](const PointMass& m) -> std::vector<std::pair<std::string, double>> {
            return {{"at", m.at}};
          },
      },
      family_);
}

bool Law::is_point_mass() const noexcept { return std::holds_alternative<PointMass>(reduced_); }

bool Law::symmetric() const noexcept {
  return std::visit(overloaded{
                        [](const Gaussian& g) { return g.mean == 0.0; },
                        [](const Cauchy& c) { return c.location == 0.0; },
                        [](const Uniform& u) { return u.lo == -u.hi; },
                        [](const Pareto& p) { return p.location == 0.0 && p.right_weight == 0.5; },
                        [](const Stable& s) { return s.params.gamma == 0.0 && s.params.beta == 0.0; },
                        [](const PointMass& m) { return m.at == 0.0; },
                    },
                    reduced_);
}

double Law::cdf(double x) const {
  return std::visit([x](const auto& f) { return cdf_of(f, x); }, reduced_);
}
double Law::right_tail(double y) const {
  return std::visit([y](const auto& f) { return right_tail_of(f, y); }, reduced_);
}
double Law::left_tail(double y) const {
  return std::visit([y](const auto& f) { return left_tail_of(f, y); }, reduced_);
}

double Law::density(double x) const {
  return std::visit(overloaded{
                        [](const PointMass&) -> double {
                          throw std::domain_error("point mass has no density");
                        },
                        [x](const auto& f) -> double { return density_of(f, x); },
                    },
                    reduced_);
}

double Law::expect(const Integrand& fn, double lo, double hi) const {
  if (!(hi > lo)) return 0.0;
  return std::visit(
      overloaded{
          [&](const PointMass& m) { return (m.at > lo && m.at <= hi) ? fn(m.at) : 0.0; },
          [&](const auto& f) {
            const Support sup = support_of(f);
            const Integrand g = [&](double x) {
              const double d = density_of(f, x);
              return d == 0.0 ? 0.0 : fn(x) * d;
            };
            double total = 0.0;
            for (auto [a, b] : sup.pieces) {
              const double l = std::max(a, lo), h = std::min(b, hi);
              if (h > l) total += integrate_checked(g, l, h, sup.breaks, law_quad_options(sup.scale));
            }
            return total;
          },
      },
      reduced_);
}

double Law::truncated_mean(double T) const {
  if (!(T > 0)) return 0.0;
  return std::visit(
      overloaded{
          [&](const Gaussian& g) { return truncated_of(g, T).first; },
          [&](const Cauchy& c) { return truncated_of(c, T).first; },
          [&](const Uniform& u) { return truncated_of(u, T).first; },
          [&](const Pareto& p) {
            if (p.location == 0.0)
              return (2.0 * p.right_weight - 1.0) * pareto_branch_moment(p, 1, T);
            return expect([](double x) { return x; }, -T, T);
          },
          [&](const Stable& s) {
            if (s.params.gamma == 0.0 && s.params.beta == 0.0) return 0.0;
            return expect([](double x) { return x; }, -T, T);
          },
          [&](const PointMass& m) { return std::abs(m.at) < T ? m.at : 0.0; },
      },
      reduced_);
}

double Law::truncated_second(double T) const {
  if (!(T > 0)) return 0.0;
  return std::visit(
      overloaded{
          [&](const Gaussian& g) { return truncated_of(g, T).second; },
          [&](const Cauchy& c) { return truncated_of(c, T).second; },
          [&](const Uniform& u) { return truncated_of(u, T).second; },
          [&](const Pareto& p) {
            if (p.location == 0.0) return pareto_branch_moment(p, 2, T);
            return expect([](double x) { return x * x; }, -T, T);
          },
          [&](const Stable&) { return expect([](double x) { return x * x; }, -T, T); },
          [&](const PointMass& m) { return std::abs(m.at) < T ? m.at * m.at : 0.0; },
      },
      reduced_);
}

double Law::smoothed_mean(double b) const {
  if (symmetric()) return 0.0;
  const Integrand kernel = [b](double x) { return b * x / (b * b + x * x); };
  return std::visit(
      overloaded{
          [&](const Cauchy& c) {
            const double s = b + c.scale;
            return b * c.location / (s * s + c.location * c.location);
          },
          [&](const Uniform& u) {
            return b / (2.0 * (u.hi - u.lo)) * std::log((b * b + u.hi * u.hi) / (b * b + u.lo * u.lo));
          },
          [&](const PointMass& m) { return b * m.at / (b * b + m.at * m.at); },
          [&](const auto&) { return expect(kernel, -kInf, kInf); },
      },
      reduced_);
}

double Law::mean() const {
  return std::visit(
      overloaded{
          [](const Gaussian& g) { return g.mean; },
          [](const Cauchy&) -> double { throw std::domain_error("cauchy law has no mean"); },
          [](const Uniform& u) { return 0.5 * (u.lo + u.hi); },
          [](const Pareto& p) -> double {
            if (p.tail_index <= 1.0) throw std::domain_error("pareto law with tail index <= 1 has no mean");
            return p.location +
                   (2.0 * p.right_weight - 1.0) * p.tail_index * p.scale / (p.tail_index - 1.0);
          },
          [](const Stable& s) -> double {
            if (s.params.alpha <= 1.0) throw std::domain_error("stable law with alpha <= 1 has no mean");
            return s.params.gamma;
          },
          [](const PointMass& m) { return m.at; },
      },
      reduced_);
}

double Law::sample(Rng& rng) const {
  return std::visit(
      overloaded{
          [&](const Gaussian& g) { return g.mean + g.sd * standard_normal(rng); },
          [&](const Cauchy& c) { return c.location + c.scale * std::tan(pi * (open_unit(rng) - 0.5)); },
          [&](const Uniform& u) { return u.lo + (u.hi - u.lo) * open_unit(rng); },
          [&](const Pareto& p) {
            const double side = open_unit(rng) < p.right_weight ? 1.0 : -1.0;
            return p.location + side * p.scale * std::pow(open_unit(rng), -1.0 / p.tail_index);
          },
          [&](const Stable& s) { return draw_stable(s.params, rng); },
          [&](const PointMass& m) { return m.at; },
      },
      reduced_);
}

// ---- Directing laws ----

namespace {

void validate_atoms(const std::vector<std::pair<double, double>>& atoms, bool positive_values) {
  if (atoms.empty()) throw std::invalid_argument("prior atoms must not be empty");
  double sum = 0.0;
  for (auto [v, w] : atoms) {
    if (!(w > 0)) throw std::invalid_argument("prior atom weights must be positive");
    if (positive_values && !(v > 0)) throw std::invalid_argument("scale prior atoms must be positive");
    if (!std::isfinite(v)) throw std::invalid_argument("prior atoms must be finite");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("prior atom weights must sum to 1");
}

double draw_atom(const std::vector<std::pair<double, double>>& atoms, Rng& rng) {
  const double u = open_unit(rng);
  double acc = 0.0;
  for (auto [v, w] : atoms) {
    acc += w;
    if (u < acc) return v;
  }
  return atoms.back().first;
}

double draw_positive(const PositivePrior& p, Rng& rng) {
  switch (p.kind) {
    case PositivePrior::Kind::atoms: return draw_atom(p.atoms, rng);
    case PositivePrior::Kind::exponential: return standard_exponential(rng) / p.rate;
    case PositivePrior::Kind::lognormal: return std::exp(p.log_mean + p.log_sd * standard_normal(rng));
  }
  return 1.0;
}

BaseFamily with_scale(BaseFamily f, double v) {
  std::visit(overloaded{
                 [v](Gaussian& g) { g.sd = v; },
                 [v](Cauchy& c) { c.scale = v; },
                 [v](Uniform& u) {
                   const double mid = 0.5 * (u.lo + u.hi);
                   u.lo = mid - v;
                   u.hi = mid + v;
                 },
                 [v](Pareto& p) { p.scale = v; },
                 [v](Stable& s) { s.params.c = v; },
                 [](PointMass&) { throw std::invalid_argument("point mass has no scale"); },
             },
             f);
  return f;
}

BaseFamily with_location(BaseFamily f, double m) {
  std::visit(overloaded{
                 [m](Gaussian& g) { g.mean = m; },
                 [m](Cauchy& c) { c.location = m; },
                 [m](Uniform& u) {
                   const double half = 0.5 * (u.hi - u.lo);
                   u.lo = m - half;
                   u.hi = m + half;
                 },
                 [m](Pareto& p) { p.location = m; },
                 [m](Stable& s) { s.params.gamma = m; },
                 [m](PointMass& pm) { pm.at = m; },
             },
             f);
  return f;
}

}  // namespace

void DirectingLaw::validate() const {
  validate_family(base);
  std::visit(overloaded{
                 [](const std::monostate&) {},
                 [this](const ScalePrior& s) {
                   if (std::holds_alternative<PointMass>(base))
                     throw std::invalid_argument("scale prior on a point mass");
                   switch (s.prior.kind) {
                     case PositivePrior::Kind::atoms: validate_atoms(s.prior.atoms, true); break;
                     case PositivePrior::Kind::exponential:
                       if (!(s.prior.rate > 0)) throw std::invalid_argument("exponential rate must be positive");
                       break;
                     case PositivePrior::Kind::lognormal:
                       if (!(s.prior.log_sd > 0)) throw std::invalid_argument("lognormal sd must be positive");
                       break;
                   }
                 },
                 [](const LocationPrior& l) {
                   if (l.kind == LocationPrior::Kind::atoms) validate_atoms(l.atoms, false);
                   else if (!(l.sd > 0)) throw std::invalid_argument("location prior sd must be positive");
                 },
             },
             randomizer);
}

Law draw_directing(const DirectingLaw& law, std::uint64_t seed, std::uint64_t replicate) {
  Rng rng(split_seed(seed, replicate, kDirectingRow));
  return std::visit(overloaded{
                        [&](const std::monostate&) { return Law(law.base); },
                        [&](const ScalePrior& s) {
                          double v = draw_positive(s.prior, rng);
                          if (s.on_variance) v = std::sqrt(v);
                          return Law(with_scale(law.base, v));
                        },
                        [&](const LocationPrior& l) {
                          const double m = l.kind == LocationPrior::Kind::atoms
                                               ? draw_atom(l.atoms, rng)
                                               : l.mean + l.sd * standard_normal(rng);
                          return Law(with_location(law.base, m));
                        },
                    },
                    law.randomizer);
}

std::vector<double> RowSums::row(std::size_t i) const {
  std::vector<double> out(replicates);
  for (std::size_t r = 0; r < replicates; ++r) out[r] = at(r, i);
  return out;
}

double normed_row_sum(const Law& p, const NormingSequence& norming, std::int64_t n, Rng& rng) {
  const double nd = static_cast<double>(n);
  const double an = norming.a(nd);
  const double bn = norming.b(nd);
  if (p.is_point_mass()) {
    // n copies of the atom, computed exactly as a_n = n * mean is.
    return (nd * p.sample(rng) - an) / bn;
  }
  double sum = 0.0, comp = 0.0;  // Neumaier
  for (std::int64_t j = 0; j < n; ++j) {
    const double x = p.sample(rng);
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) comp += (sum - t) + x;
    else comp += (x - t) + sum;
    sum = t;
  }
  return ((sum - an) + comp) / bn;
}

RowSums sample_array_sums(const DirectingLaw& law, const NormingSequence& norming, std::int64_t n,
                          std::size_t rows, std::uint64_t seed, std::size_t replicates, int threads) {
  if (n < 1) throw std::invalid_argument("array sums: n must be >= 1");
  if (rows < 1) throw std::invalid_argument("array sums: rows must be >= 1");
  if (replicates < 1) throw std::invalid_argument("array sums: replicates must be >= 1");
  law.validate();
  RowSums out;
  out.n = n;
  out.rows = rows;
  out.replicates = replicates;
  out.seed = seed;
  out.values = kernels::array_sums(law, norming, n, rows, replicates, seed, threads);
  return out;
}

std::vector<ReplicateSum> replicate_sums(const DirectingLaw& law, const NormingSequence& norming,
                                         std::int64_t n, std::size_t replicates, std::uint64_t seed,
                                         int threads) {
  const RowSums sums = sample_array_sums(law, norming, n, 1, seed, replicates, threads);
  std::vector<ReplicateSum> out(replicates);
  for (std::size_t r = 0; r < replicates; ++r) out[r] = {r, sums.values[r]};
  return out;
}

}  // namespace exclt
