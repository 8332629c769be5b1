#include "exclt/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "exclt/config.hpp"
#include "exclt/empirics.hpp"
#include "exclt/quadrature.hpp"
#include "exclt/report.hpp"

namespace exclt::cli {

namespace {

struct Common {
  std::string config_path;
  std::string scenario;
  std::optional<std::uint64_t> seed;
  int threads = 0;
  std::string out_dir = ".";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path, "Scenario configuration file (JSON)");
  cmd->add_option("--scenario", c.scenario, "Builtin scenario name (see list-scenarios)");
  cmd->add_option("--seed", c.seed, "RNG seed (overrides EXCLT_SEED and the config)");
  cmd->add_option("--threads", c.threads, "Worker threads; 0 = all available")->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", c.out_dir, "Output directory");
}

std::uint64_t parse_seed_text(const std::string& text, const std::string& where) {
  try {
    std::size_t used = 0;
    if (text.empty() || text[0] == '-') throw std::invalid_argument("negative");
    const unsigned long long v = std::stoull(text, &used, 10);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(where, "seed must be a nonnegative integer, got '" + text + "'");
  }
}

ScenarioConfig load(const Common& c) {
  if (c.config_path.empty() == c.scenario.empty())
    throw ConfigError("", "give exactly one of --config PATH and --scenario NAME");
  nlohmann::json doc = c.config_path.empty() ? nlohmann::json{{"scenario", c.scenario}}
                                             : load_config_file(c.config_path);
  return parse_scenario(doc);
}

std::uint64_t resolve_seed(const Common& c, const ScenarioConfig& cfg) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("EXCLT_SEED"); env && *env) return parse_seed_text(env, "EXCLT_SEED");
  if (cfg.seed) return *cfg.seed;
  throw ConfigError("/seed", "no seed given (use --seed, EXCLT_SEED or a \"seed\" field)");
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::pass: return kPass;
    case Verdict::fail: return kFail;
    case Verdict::inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int cmd_simulate(const Common& c, std::ostream& out) {
  const ScenarioConfig cfg = load(c);
  const std::uint64_t seed = resolve_seed(c, cfg);
  const ScenarioReport rep = run_scenario(cfg, seed, c.threads);
  for (const auto& p : write_report(rep, c.out_dir)) out << "wrote " << p.string() << "\n";
  for (const CfTable& t : rep.cf)
    if (t.sup_distance) out << "n=" << t.n << " sup|cf - target| = " << *t.sup_distance << "\n";
  for (const CriterionVerdict& v : rep.verdicts) out << v.name << ": " << to_string(v.holds) << "\n";
  return kPass;
}

int cmd_check(const Common& c, const std::string& criterion, std::ostream& out) {
  const auto& known = criterion_names();
  if (std::find(known.begin(), known.end(), criterion) == known.end())
    throw ConfigError("criterion", "unknown criterion '" + criterion + "'");
  const ScenarioConfig cfg = load(c);
  const std::uint64_t seed = resolve_seed(c, cfg);
  const CriterionVerdict v = run_criterion(cfg, criterion, seed, c.threads);
  nlohmann::json j = verdict_json(v);
  j["schema_version"] = kReportSchemaVersion;
  j["scenario"] = cfg.name;
  j["seed"] = seed;
  std::filesystem::create_directories(c.out_dir);
  const auto path = std::filesystem::path(c.out_dir) / (cfg.name + "." + criterion + ".verdict.json");
  write_text(path, j.dump(2) + "\n");
  out << criterion << " on " << cfg.name << ": " << to_string(v.holds);
  if (v.hypothesis_violated) out << " (hypothesis violated: " << v.hypothesis_note << ")";
  out << "\nwrote " << path.string() << "\n";
  return verdict_exit(v.holds);
}

int cmd_verify_identity(double tol, double constant_scale, std::ostream& out) {
  const IdentityResult r = verify_identity(tol, constant_scale);
  out << std::setprecision(3) << "max residual " << r.max_residual << " over t = 0, 0.25, ..., 5 (tolerance "
      << tol << "): " << (r.passed ? "pass" : "fail") << "\n";
  return r.passed ? kPass : kRuntimeError;
}

int cmd_list(std::ostream& out) {
  for (const std::string& name : builtin_scenario_names())
    out << std::left << std::setw(16) << name << builtin_description(name) << "\n";
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Limit laws of normed row sums of exchangeable arrays", "exclt"};
  app.require_subcommand(1);

  Common sim, chk;
  auto* simulate = app.add_subcommand("simulate", "Run a scenario and write the JSON report and CSV tables");
  add_common(simulate, sim);

  std::string criterion;
  auto* check = app.add_subcommand("check", "Run one criterion checker (exit 0 pass, 3 fail, 4 inconclusive)");
  check->add_option("criterion", criterion, "Criterion name")->required();
  add_common(check, chk);

  double tol = 1e-8, constant_scale = 1.0;
  auto* verify = app.add_subcommand("verify-identity", "Check the Gaussian scale-mixture identity for exp(-|t|)");
  verify->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--constant-scale", constant_scale, "Multiplies the mixing density constant (test hook)")
      ->group("");

  auto* list = app.add_subcommand("list-scenarios", "List builtin scenarios");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (*simulate) return cmd_simulate(sim, out);
    if (*check) return cmd_check(chk, criterion, out);
    if (*verify) return cmd_verify_identity(tol, constant_scale, out);
    if (*list) return cmd_list(out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const QuadratureError& e) {
    err << "quadrature error: " << e.what() << "\n";
    return kRuntimeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kConfigError;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace exclt::cli
