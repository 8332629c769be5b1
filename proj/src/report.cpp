#include "exclt/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace exclt {

using nlohmann::json;

namespace {

json mixing_json(const MixingMeasure& m) {
  json atoms = json::array();
  for (const StableAtom& a : m.atoms())
    atoms.push_back({{"alpha", a.params.alpha},
                     {"gamma", a.params.gamma},
                     {"c", a.params.c},
                     {"beta", a.params.beta},
                     {"weight", a.weight}});
  return atoms;
}

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

const char* const kCrlf = "\r\n";

}  // namespace

json verdict_json(const CriterionVerdict& v) {
  json j;
  j["name"] = v.name;
  j["verdict"] = to_string(v.holds);
  j["hypothesis_violated"] = v.hypothesis_violated;
  j["hypothesis_note"] = v.hypothesis_note;
  j["experimental"] = v.experimental;
  json subs = json::array();
  for (const SubCheck& s : v.subchecks)
    subs.push_back({{"name", s.name}, {"verdict", to_string(s.verdict)}, {"detail", s.detail}});
  j["subchecks"] = subs;
  json ev = json::array();
  for (const Evidence& e : v.evidence) ev.push_back({{"statistic", e.statistic}, {"n", e.n}, {"value", e.value}});
  j["evidence"] = ev;
  json est = json::object();
  est["gamma"] = v.estimate.gamma ? json(*v.estimate.gamma) : json(nullptr);
  est["branch"] = v.estimate.branch;
  est["mixing"] = v.estimate.mixing ? mixing_json(*v.estimate.mixing) : json(nullptr);
  json summary = json::object();
  for (const auto& [k, val] : v.estimate.summary) summary[k] = val;
  est["summary"] = summary;
  j["estimate"] = est;
  return j;
}

json report_payload(const ScenarioReport& rep) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["scenario"] = rep.scenario;
  j["seed"] = rep.seed;
  j["config"] = rep.config;
  if (rep.identity) {
    const IdentityResult& id = *rep.identity;
    json pts = json::array();
    for (std::size_t k = 0; k < id.t.size(); ++k) pts.push_back({{"t", id.t[k]}, {"residual", id.residual[k]}});
    j["identity"] = {{"tolerance", id.tolerance},
                     {"max_residual", id.max_residual},
                     {"passed", id.passed},
                     {"points", pts}};
  } else {
    j["identity"] = nullptr;
  }
  json cf = json::array();
  for (const CfTable& t : rep.cf) {
    json pts = json::array();
    for (std::size_t k = 0; k < t.t.size(); ++k) {
      json p = {{"t", t.t[k]}, {"empirical", complex_json(t.empirical[k])}};
      p["target"] = t.target.empty() ? json(nullptr) : complex_json(t.target[k]);
      pts.push_back(p);
    }
    cf.push_back({{"n", t.n},
                  {"sup_distance", t.sup_distance ? json(*t.sup_distance) : json(nullptr)},
                  {"points", pts}});
  }
  j["cf"] = cf;
  json joint = json::array();
  for (const JointCfTable& t : rep.joint_cf) {
    json rows = json::array();
    for (const JointCfRow& r : t.rows)
      rows.push_back({{"t", r.t},
                      {"s", r.s},
                      {"joint", complex_json(r.joint)},
                      {"product_of_marginals", complex_json(r.product)},
                      {"gap", r.gap},
                      {"target", r.target ? complex_json(*r.target) : json(nullptr)}});
    joint.push_back({{"n", t.n}, {"points", rows}});
  }
  j["joint_cf"] = joint;
  json q = json::array();
  for (const QuantityRow& r : rep.quantities)
    q.push_back({{"n", r.n},
                 {"draw", r.draw},
                 {"tau", r.q.tau},
                 {"m_trunc", r.q.m_trunc},
                 {"m_smooth", r.q.m_smooth},
                 {"sigma2_trunc", r.q.sigma2_trunc},
                 {"sigma2_bar_proxy", r.q.sigma2_bar_proxy},
                 {"q_eps", r.q.q_eps},
                 {"lambda_total_mass", r.q.lambda_n.total_mass()}});
  j["quantities"] = q;
  json verdicts = json::array();
  for (const CriterionVerdict& v : rep.verdicts) verdicts.push_back(verdict_json(v));
  j["criteria"] = verdicts;
  return j;
}

json report_json(const ScenarioReport& rep) {
  json j = report_payload(rep);
  json timings = json::object();
  for (const auto& [k, v] : rep.timings_ms) timings[k] = v;
  j["runtime"] = {{"threads", rep.threads}, {"timings_ms", timings}};
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string cf_csv(const ScenarioReport& rep) {
  std::ostringstream os;
  os << "n,t,re,im,target_re,target_im,abs_error" << kCrlf;
  for (const CfTable& t : rep.cf) {
    for (std::size_t k = 0; k < t.t.size(); ++k) {
      os << t.n << ',' << csv_number(t.t[k]) << ',' << csv_number(t.empirical[k].real()) << ','
         << csv_number(t.empirical[k].imag());
      if (t.target.empty()) {
        os << ",,,";
      } else {
        os << ',' << csv_number(t.target[k].real()) << ',' << csv_number(t.target[k].imag()) << ','
           << csv_number(std::abs(t.empirical[k] - t.target[k]));
      }
      os << kCrlf;
    }
  }
  return os.str();
}

std::string joint_cf_csv(const ScenarioReport& rep) {
  std::ostringstream os;
  os << "n,t,s,joint_re,joint_im,product_re,product_im,gap,target_re,target_im" << kCrlf;
  for (const JointCfTable& t : rep.joint_cf) {
    for (const JointCfRow& r : t.rows) {
      os << t.n << ',' << csv_number(r.t) << ',' << csv_number(r.s) << ',' << csv_number(r.joint.real()) << ','
         << csv_number(r.joint.imag()) << ',' << csv_number(r.product.real()) << ','
         << csv_number(r.product.imag()) << ',' << csv_number(r.gap) << ',';
      if (r.target) os << csv_number(r.target->real()) << ',' << csv_number(r.target->imag());
      else os << ',';
      os << kCrlf;
    }
  }
  return os.str();
}

std::string quantities_csv(const ScenarioReport& rep) {
  std::ostringstream os;
  os << "n,draw,tau,m_trunc,m_smooth,sigma2_trunc,sigma2_bar_proxy,q_eps,lambda_total_mass" << kCrlf;
  for (const QuantityRow& r : rep.quantities) {
    os << r.n << ',' << r.draw << ',' << csv_number(r.q.tau) << ',' << csv_number(r.q.m_trunc) << ','
       << csv_number(r.q.m_smooth) << ',' << csv_number(r.q.sigma2_trunc) << ','
       << csv_number(r.q.sigma2_bar_proxy) << ',' << csv_number(r.q.q_eps) << ','
       << csv_number(r.q.lambda_n.total_mass()) << kCrlf;
  }
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::vector<std::filesystem::path> write_report(const ScenarioReport& rep,
                                                const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  const auto emit = [&](const std::string& suffix, const std::string& text) {
    paths.push_back(dir / (rep.scenario + suffix));
    write_text(paths.back(), text);
  };
  emit(".report.json", report_json(rep).dump(2) + "\n");
  emit(".cf.csv", cf_csv(rep));
  emit(".quantities.csv", quantities_csv(rep));
  if (!rep.joint_cf.empty()) emit(".joint_cf.csv", joint_cf_csv(rep));
  return paths;
}

}  // namespace exclt
