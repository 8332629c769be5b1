#include <map>

#include "exclt/config.hpp"

namespace exclt {

namespace {

struct Builtin {
  const char* description;
  const char* json;
};

// Corpus defaults shared by the checker-driven scenarios.
const std::map<std::string, Builtin>& registry() {
  static const std::map<std::string, Builtin> r{
      {"example1",
       {"i.i.d. standard Cauchy array plus the Gaussian scale-mixture identity for exp(-|t|)",
        R"({
          "directing": {"family": "cauchy", "location": 0, "scale": 1},
          "norming": {"alpha": 1},
          "n_grid": [256, 1024, 4096],
          "replicates": 2000,
          "rows": 2,
          "joint_points": [[1, 1], [0.5, 1], [0, 0]],
          "target": {"kind": "stable", "alpha": 1, "gamma": 0, "c": 1, "beta": 0},
          "identity_check": true
        })"}},
      {"gauss-expmix",
       {"Gaussian rows with variance drawn from Exp(1), b_n = sqrt(n)",
        R"({
          "directing": {"family": "gaussian", "mean": 0, "sd": 1,
                        "scale_prior": {"kind": "exponential", "rate": 1, "on_variance": true}},
          "norming": {"alpha": 2},
          "n_grid": [256, 1024, 4096],
          "replicates": 2000,
          "t_grid": {"start": -3, "stop": 3, "step": 0.25},
          "target": {"kind": "gaussian_exponential_variance", "rate": 1},
          "criteria": ["gaussian_mixture", "row_gaussian"]
        })"}},
      {"cauchy-mix",
       {"Cauchy rows with scale 1 or 2 (probability 1/2 each), b_n = n",
        R"({
          "directing": {"family": "cauchy", "location": 0, "scale": 1,
                        "scale_prior": {"kind": "atoms", "atoms": [[1, 0.5], [2, 0.5]]}},
          "norming": {"alpha": 1},
          "n_grid": [256, 1024, 4096],
          "replicates": 2000,
          "target": {"kind": "stable_mixture", "atoms": [
            {"alpha": 1, "gamma": 0, "c": 1, "beta": 0, "weight": 0.5},
            {"alpha": 1, "gamma": 0, "c": 2, "beta": 0, "weight": 0.5}]},
          "criteria": ["cauchy_mixture", "row_cauchy"]
        })"}},
      {"cauchy-iid",
       {"standard Cauchy rows, b_n = n",
        R"({
          "directing": {"family": "cauchy", "location": 0, "scale": 1},
          "norming": {"alpha": 1},
          "n_grid": [256, 1024, 4096],
          "replicates": 2000,
          "target": {"kind": "stable", "alpha": 1, "gamma": 0, "c": 1, "beta": 0},
          "criteria": ["cauchy_mixture", "row_cauchy"]
        })"}},
      {"point-mass",
       {"point mass at 0.5 centred by n * 0.5, b_n = n",
        R"({
          "directing": {"family": "point_mass", "at": 0.5},
          "norming": {"alpha": 1, "centering": {"kind": "n_times_mean", "mean": 0.5}},
          "n_grid": [256, 1024, 4096],
          "replicates": 200,
          "target": {"kind": "stable", "alpha": 1, "gamma": 0, "c": 0, "beta": 0},
          "criteria": ["degenerate", "wlln"]
        })"}},
      {"uniform-fixed",
       {"uniform(-1, 1) rows, b_n = sqrt(n)",
        R"({
          "directing": {"family": "uniform", "lo": -1, "hi": 1},
          "norming": {"alpha": 2},
          "n_grid": [256, 1024, 4096],
          "replicates": 2000,
          "target": {"kind": "stable", "alpha": 2, "gamma": 0, "c": 0.16666666666666666, "beta": 0},
          "criteria": ["gaussian_mixture"]
        })"}},
      {"gaussian-fixed",
       {"standard Gaussian rows, b_n = sqrt(n)",
        R"({
          "directing": {"family": "gaussian", "mean": 0, "sd": 1},
          "norming": {"alpha": 2},
          "n_grid": [256, 1024, 4096],
          "replicates": 2000,
          "target": {"kind": "stable", "alpha": 2, "gamma": 0, "c": 0.5, "beta": 0},
          "criteria": ["gaussian_mixture"]
        })"}},
      {"pareto-mix",
       {"symmetric Pareto(1.5) rows with scale 1 or 2, b_n = n^(2/3)",
        R"({
          "directing": {"family": "pareto", "tail_index": 1.5, "scale": 1,
                        "scale_prior": {"kind": "atoms", "atoms": [[1, 0.5], [2, 0.5]]}},
          "norming": {"alpha": 1.5},
          "alpha": 1.5,
          "n_grid": [1024, 4096, 16384],
          "replicates": 2000,
          "target": {"kind": "stable_mixture", "atoms": [
            {"alpha": 1.5, "gamma": 0, "c": 2.5066282746310002, "beta": 0, "weight": 0.5},
            {"alpha": 1.5, "gamma": 0, "c": 7.0898154036220641, "beta": 0, "weight": 0.5}]},
          "criteria": ["stable_mixture", "row_stable", "sec5"]
        })"}},
      {"pareto-asym",
       {"Pareto(1.5) rows with right-tail weight 0.8, centred by n * 1.8, b_n = n^(2/3)",
        R"({
          "directing": {"family": "pareto", "tail_index": 1.5, "scale": 1, "right_weight": 0.8},
          "norming": {"alpha": 1.5, "centering": {"kind": "n_times_mean", "mean": 1.8}},
          "alpha": 1.5,
          "n_grid": [1024, 4096, 16384],
          "replicates": 2000,
          "target": {"kind": "stable", "alpha": 1.5, "gamma": 0, "c": 2.5066282746310002, "beta": -0.6},
          "criteria": ["stable_mixture", "row_stable"]
        })"}},
  };
  return r;
}

}  // namespace

std::vector<std::string> builtin_scenario_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : registry()) names.push_back(k);
  return names;
}

nlohmann::json builtin_scenario(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw ConfigError("/scenario", "unknown builtin scenario '" + name + "'");
  nlohmann::json j = nlohmann::json::parse(it->second.json);
  j["name"] = name;
  j["description"] = it->second.description;
  return j;
}

std::string builtin_description(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw ConfigError("/scenario", "unknown builtin scenario '" + name + "'");
  return it->second.description;
}

}  // namespace exclt
