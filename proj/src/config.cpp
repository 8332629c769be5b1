#include "exclt/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace exclt {

using nlohmann::json;

ConfigError::ConfigError(std::string field, const std::string& message, int line)
    : std::runtime_error([&] {
        std::ostringstream os;
        if (line > 0) os << "line " << line << ": ";
        if (!field.empty()) os << field << ": ";
        os << message;
        return os.str();
      }()),
      field_(std::move(field)),
      line_(line) {}

json load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min(e.byte, text.size());
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n'));
    throw ConfigError("", e.what(), line);
  }
}

namespace {

// A JSON object being read field by field; finish() rejects leftovers.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_.empty() ? "/" : path_, "expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  std::string field(const std::string& key) const { return path_ + "/" + key; }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    if (!j_.contains(key)) throw ConfigError(field(key), "required field is missing");
    return j_.at(key);
  }

  double number(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number()) throw ConfigError(field(key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(field(key), "expected a finite number");
    return d;
  }
  double number(const std::string& key, double fallback) { return has(key) ? number(key) : mark(key, fallback); }

  double positive(const std::string& key, double fallback) {
    const double v = number(key, fallback);
    if (!(v > 0)) throw ConfigError(field(key), "must be positive");
    return v;
  }

  std::int64_t integer(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number_integer()) throw ConfigError(field(key), "expected an integer");
    return v.get<std::int64_t>();
  }
  std::int64_t integer(const std::string& key, std::int64_t fallback) {
    return has(key) ? integer(key) : mark(key, fallback);
  }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return mark(key, fallback);
    const json& v = raw(key);
    if (!v.is_boolean()) throw ConfigError(field(key), "expected true or false");
    return v.get<bool>();
  }

  std::string string(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_string()) throw ConfigError(field(key), "expected a string");
    return v.get<std::string>();
  }
  std::string string(const std::string& key, const std::string& fallback) {
    return has(key) ? string(key) : mark(key, fallback);
  }

  std::vector<double> numbers(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_array()) throw ConfigError(field(key), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) throw ConfigError(field(key) + "/" + std::to_string(i), "expected a number");
      out.push_back(v[i].get<double>());
    }
    return out;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key())) throw ConfigError(field(it.key()), "unknown key");
  }

 private:
  template <class T>
  T mark(const std::string& key, T v) {
    seen_.insert(key);
    return v;
  }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

std::vector<std::pair<double, double>> parse_atoms(Reader& r, const std::string& key) {
  const json& v = r.raw(key);
  const std::string f = r.field(key);
  if (!v.is_array() || v.empty()) throw ConfigError(f, "expected a nonempty array of [value, weight] pairs");
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& a = v[i];
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
      throw ConfigError(f + "/" + std::to_string(i), "expected [value, weight]");
    out.emplace_back(a[0].get<double>(), a[1].get<double>());
  }
  return out;
}

ScalePrior parse_scale_prior(const json& j, const std::string& path) {
  Reader r(j, path);
  ScalePrior p;
  const std::string kind = r.string("kind");
  if (kind == "atoms") p.prior = PositivePrior::from_atoms(parse_atoms(r, "atoms"));
  else if (kind == "exponential") p.prior = PositivePrior::exponential(r.positive("rate", 1.0));
  else if (kind == "lognormal") p.prior = PositivePrior::lognormal(r.number("log_mean", 0.0), r.positive("log_sd", 1.0));
  else throw ConfigError(r.field("kind"), "expected atoms, exponential or lognormal");
  p.on_variance = r.boolean("on_variance", false);
  r.finish();
  return p;
}

LocationPrior parse_location_prior(const json& j, const std::string& path) {
  Reader r(j, path);
  LocationPrior p;
  const std::string kind = r.string("kind");
  if (kind == "atoms") p = LocationPrior::from_atoms(parse_atoms(r, "atoms"));
  else if (kind == "gaussian") p = LocationPrior::gaussian(r.number("mean", 0.0), r.positive("sd", 1.0));
  else throw ConfigError(r.field("kind"), "expected atoms or gaussian");
  r.finish();
  return p;
}

// Reads the family fields of `r`; other keys are left for the caller.
BaseFamily parse_family(Reader& r) {
  const std::string fam = r.string("family");
  if (fam == "gaussian") return family::Gaussian{r.number("mean", 0.0), r.positive("sd", 1.0)};
  if (fam == "cauchy") return family::Cauchy{r.number("location", 0.0), r.positive("scale", 1.0)};
  if (fam == "uniform") return family::Uniform{r.number("lo", -1.0), r.number("hi", 1.0)};
  if (fam == "pareto")
    return family::Pareto{r.positive("tail_index", 1.5), r.positive("scale", 1.0), r.number("right_weight", 0.5),
                          r.number("location", 0.0)};
  if (fam == "stable")
    return family::Stable{{r.number("alpha"), r.number("gamma", 0.0), r.number("c", 1.0), r.number("beta", 0.0)}};
  if (fam == "point_mass") return family::PointMass{r.number("at", 0.0)};
  throw ConfigError(r.field("family"), "unknown family '" + fam + "'");
}

DirectingLaw parse_directing(const json& j, const std::string& path) {
  Reader r(j, path);
  DirectingLaw law;
  law.base = parse_family(r);
  if (r.has("scale_prior") && r.has("location_prior"))
    throw ConfigError(path, "give at most one of scale_prior and location_prior");
  if (r.has("scale_prior")) law.randomizer = parse_scale_prior(r.raw("scale_prior"), r.field("scale_prior"));
  if (r.has("location_prior"))
    law.randomizer = parse_location_prior(r.raw("location_prior"), r.field("location_prior"));
  r.finish();
  try {
    law.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
  return law;
}

NormingSequence parse_norming(const json& j, const std::string& path) {
  Reader r(j, path);
  Centering centering;
  if (r.has("centering")) {
    Reader c(r.raw("centering"), r.field("centering"));
    const std::string kind = c.string("kind", "zero");
    if (kind == "zero") {
    } else if (kind == "n_times_mean") {
      centering = Centering::n_times_mean(c.number("mean"));
    } else if (kind == "n_times_truncated_mean") {
      const double tau = c.positive("tau", 1.0);
      Reader ref(c.raw("reference"), c.field("reference"));
      const Law law(parse_family(ref));
      ref.finish();
      centering = Centering::n_times_truncated_mean(tau, [law](double T) { return law.truncated_mean(T); });
    } else {
      throw ConfigError(c.field("kind"), "expected zero, n_times_mean or n_times_truncated_mean");
    }
    c.finish();
  }
  NormingSequence seq;
  try {
    if (r.has("fixed_b")) {
      seq = NormingSequence::fixed(r.positive("fixed_b", 1.0), centering);
    } else {
      const double alpha = r.number("alpha");
      const double scale = r.positive("scale", 1.0);
      const std::string slow = r.string("slow", "constant");
      SlowKind kind;
      if (slow == "constant") kind = SlowKind::constant;
      else if (slow == "log_power") kind = SlowKind::log_power;
      else if (slow == "loglog_power") kind = SlowKind::loglog_power;
      else throw ConfigError(r.field("slow"), "expected constant, log_power or loglog_power");
      seq = NormingSequence(alpha, scale, kind, r.number("slow_power", 0.0), centering);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
  r.finish();
  return seq;
}

StableParams parse_stable(Reader& r) {
  try {
    return StableParams::make(r.number("alpha"), r.number("gamma", 0.0), r.number("c", 1.0), r.number("beta", 0.0));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(r.field("alpha"), e.what());
  }
}

TargetLaw parse_target(const json& j, const std::string& path) {
  Reader r(j, path);
  TargetLaw t;
  const std::string kind = r.string("kind");
  if (kind == "stable") {
    t.kind = TargetLaw::Kind::stable;
    t.stable = parse_stable(r);
  } else if (kind == "stable_mixture") {
    t.kind = TargetLaw::Kind::stable_mixture;
    const json& atoms = r.raw("atoms");
    if (!atoms.is_array() || atoms.empty()) throw ConfigError(r.field("atoms"), "expected a nonempty array");
    std::vector<StableAtom> out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      Reader a(atoms[i], r.field("atoms") + "/" + std::to_string(i));
      const StableParams p = parse_stable(a);
      out.push_back({p, a.positive("weight", 1.0)});
      a.finish();
    }
    try {
      t.mixture = MixingMeasure(std::move(out));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(r.field("atoms"), e.what());
    }
  } else if (kind == "gaussian_exponential_variance") {
    t.kind = TargetLaw::Kind::gaussian_exponential_variance;
    t.rate = r.positive("rate", 1.0);
  } else {
    throw ConfigError(r.field("kind"), "expected stable, stable_mixture or gaussian_exponential_variance");
  }
  r.finish();
  return t;
}

StatTestConfig parse_stat(const json& j, const std::string& path) {
  Reader r(j, path);
  StatTestConfig s;
  s.delta = r.positive("delta", s.delta);
  s.prob_bound = r.positive("prob_bound", s.prob_bound);
  s.fail_fraction = r.positive("fail_fraction", s.fail_fraction);
  s.ks_tol = r.positive("ks_tol", s.ks_tol);
  s.margin = r.positive("margin", s.margin);
  s.dsharp_tol = r.positive("dsharp_tol", s.dsharp_tol);
  s.fit_min = r.positive("fit_min", s.fit_min);
  s.fit_max = r.positive("fit_max", s.fit_max);
  s.symmetry_tol = r.positive("symmetry_tol", s.symmetry_tol);
  if (r.has("eps")) {
    s.eps = r.numbers("eps");
    for (double e : s.eps)
      if (!(e > 0)) throw ConfigError(r.field("eps"), "values must be positive");
  }
  s.window_points = static_cast<std::size_t>(r.integer("window_points", 5));
  if (s.window_points < 1) throw ConfigError(r.field("window_points"), "must be >= 1");
  r.finish();
  return s;
}

std::vector<std::int64_t> parse_ngrid_values(Reader& r, const std::string& key) {
  const json& v = r.raw(key);
  const std::string f = r.field(key);
  if (!v.is_array() || v.empty()) throw ConfigError(f, "expected a nonempty array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer() || v[i].get<std::int64_t>() < 1)
      throw ConfigError(f + "/" + std::to_string(i), "expected an integer >= 1");
    out.push_back(v[i].get<std::int64_t>());
    if (i > 0 && out[i] <= out[i - 1]) throw ConfigError(f, "values must increase");
  }
  return out;
}

}  // namespace

ScenarioConfig parse_scenario(const json& input) {
  if (!input.is_object()) throw ConfigError("/", "expected an object");
  json doc = input;
  if (doc.contains("scenario")) {
    if (!doc["scenario"].is_string()) throw ConfigError("/scenario", "expected a string");
    json base = builtin_scenario(doc["scenario"].get<std::string>());
    doc.erase("scenario");
    base.merge_patch(doc);
    doc = std::move(base);
  }
  ScenarioConfig cfg;
  Reader r(doc, "");
  cfg.name = r.string("name", "custom");
  if (cfg.name.empty() || cfg.name.find_first_of("/\\") != std::string::npos)
    throw ConfigError("/name", "must be a nonempty file-name-safe string");
  cfg.description = r.string("description", "");
  if (r.has("seed")) {
    const json& s = r.raw("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0))
      throw ConfigError("/seed", "expected a nonnegative integer");
    cfg.seed = s.get<std::uint64_t>();
  }
  cfg.law = parse_directing(r.raw("directing"), "/directing");
  cfg.norming = parse_norming(r.raw("norming"), "/norming");
  cfg.n_grid = parse_ngrid_values(r, "n_grid");
  const std::int64_t reps = r.integer("replicates", 2000);
  if (reps < 1) throw ConfigError("/replicates", "must be >= 1");
  cfg.replicates = static_cast<std::size_t>(reps);
  const std::int64_t rows = r.integer("rows", 2);
  if (rows < 1) throw ConfigError("/rows", "must be >= 1");
  cfg.rows = static_cast<std::size_t>(rows);
  if (r.has("t_grid")) {
    const json& g = r.raw("t_grid");
    if (g.is_array()) {
      cfg.t_grid.points = r.numbers("t_grid");
    } else {
      Reader gr(g, "/t_grid");
      try {
        cfg.t_grid = TGrid::range(gr.number("start"), gr.number("stop"), gr.positive("step", 0.25));
      } catch (const std::invalid_argument& e) {
        throw ConfigError("/t_grid", e.what());
      }
      gr.finish();
    }
    try {
      cfg.t_grid.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError("/t_grid", e.what());
    }
  }
  if (r.has("joint_points")) {
    const json& jp = r.raw("joint_points");
    if (!jp.is_array()) throw ConfigError("/joint_points", "expected an array of [t, s] pairs");
    cfg.joint_points.clear();
    for (std::size_t i = 0; i < jp.size(); ++i) {
      if (!jp[i].is_array() || jp[i].size() != 2 || !jp[i][0].is_number() || !jp[i][1].is_number())
        throw ConfigError("/joint_points/" + std::to_string(i), "expected [t, s]");
      cfg.joint_points.emplace_back(jp[i][0].get<double>(), jp[i][1].get<double>());
    }
  }
  cfg.tau = r.positive("tau", 1.0);
  if (r.has("alpha")) cfg.alpha = r.number("alpha");
  if (r.has("criteria")) {
    const json& c = r.raw("criteria");
    if (!c.is_array()) throw ConfigError("/criteria", "expected an array of names");
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_string()) throw ConfigError("/criteria/" + std::to_string(i), "expected a string");
      const std::string name = c[i].get<std::string>();
      const auto& known = criterion_names();
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw ConfigError("/criteria/" + std::to_string(i), "unknown criterion '" + name + "'");
      cfg.criteria.push_back(name);
    }
  }
  if (r.has("criteria_grid")) {
    Reader g(r.raw("criteria_grid"), "/criteria_grid");
    if (g.has("values")) cfg.criteria_grid.values = parse_ngrid_values(g, "values");
    const std::int64_t rr = g.integer("replicates", static_cast<std::int64_t>(cfg.criteria_grid.replicates));
    if (rr < 1) throw ConfigError("/criteria_grid/replicates", "must be >= 1");
    cfg.criteria_grid.replicates = static_cast<std::size_t>(rr);
    g.finish();
  }
  if (r.has("stat_test")) cfg.stat = parse_stat(r.raw("stat_test"), "/stat_test");
  if (r.has("tail_ratio_x")) {
    cfg.tail_ratio_x = r.numbers("tail_ratio_x");
    if (cfg.tail_ratio_x.empty()) throw ConfigError("/tail_ratio_x", "must not be empty");
  }
  if (r.has("target")) cfg.target = parse_target(r.raw("target"), "/target");
  cfg.identity_check = r.boolean("identity_check", false);
  const std::int64_t qd = r.integer("quantity_draws", 5);
  if (qd < 0) throw ConfigError("/quantity_draws", "must be >= 0");
  cfg.quantity_draws = static_cast<std::size_t>(qd);
  r.finish();
  cfg.source = doc;
  cfg.validate();
  return cfg;
}

}  // namespace exclt
