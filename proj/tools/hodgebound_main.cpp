// Command-line front end: verification suites, bound evaluation on
// user-supplied second-fundamental-form data, and the model tables.
//
// Exit codes: 0 success, 1 at least one failed check, 2 usage/parse error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hodgebound/bounds.hpp"
#include "hodgebound/io.hpp"
#include "hodgebound/models.hpp"
#include "hodgebound/report.hpp"
#include "hodgebound/submanifold.hpp"
#include "hodgebound/suites.hpp"
#include "hodgebound/version.hpp"

namespace {

using hodgebound::CheckRecord;
using hodgebound::CheckStatus;
using hodgebound::Json;
using hodgebound::NamedValues;

constexpr int kJsonDigits = 17;
constexpr int kCsvDigits = 12;

Json named_values_to_json(const NamedValues& vals) {
  Json obj = Json::object();
  for (const auto& [k, v] : vals) obj[k] = v;
  return obj;
}

Json records_to_json(const std::vector<CheckRecord>& records, std::uint64_t seed) {
  Json doc = Json::object();
  doc["tool"] = hodgebound::kToolName;
  doc["version"] = hodgebound::kToolVersion;
  doc["seed"] = seed;
  Json arr = Json::array();
  for (const auto& r : records) {
    Json rec = Json::object();
    rec["name"] = r.name;
    rec["inputs"] = named_values_to_json(r.inputs);
    rec["values"] = named_values_to_json(r.values);
    rec["status"] = hodgebound::to_string(r.status);
    rec["residual"] = r.residual;
    rec["note"] = r.note;
    arr.push_back(std::move(rec));
  }
  doc["records"] = std::move(arr);
  const hodgebound::ReportSummary s = hodgebound::summarize_records(records);
  Json summary = Json::object();
  summary["pass"] = s.pass;
  summary["fail"] = s.fail;
  summary["not_applicable"] = s.not_applicable;
  summary["total"] = s.total();
  doc["summary"] = std::move(summary);
  return doc;
}

std::string records_to_csv(const std::vector<CheckRecord>& records) {
  std::string out = "name,status,residual,note\n";
  for (const auto& r : records) {
    out += hodgebound::csv_escape(r.name);
    out += ',';
    out += hodgebound::to_string(r.status);
    out += ',';
    out += hodgebound::format_double(r.residual, kCsvDigits);
    out += ',';
    out += hodgebound::csv_escape(r.note);
    out += '\n';
  }
  return out;
}

void emit_records(const std::vector<CheckRecord>& records, const std::string& format,
                  std::uint64_t seed) {
  if (format == "csv") std::cout << records_to_csv(records);
  else std::cout << hodgebound::serialize_json(records_to_json(records, seed), kJsonDigits);
}

// Reads HODGEBOUND_TOL; returns false (usage error) on an unparsable or
// nonpositive override.
bool read_tolerance(double& tol) {
  const char* env = std::getenv("HODGEBOUND_TOL");
  if (env == nullptr || *env == '\0') return true;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == nullptr || *end != '\0' || !(v > 0.0)) return false;
  tol = v;
  return true;
}

CheckRecord bound_to_record(const hodgebound::BoundReport& b) {
  CheckRecord r;
  r.name = b.name;
  r.inputs = b.inputs;
  if (b.applicable) {
    r.values.push_back({"value", b.value});
    r.values.push_back({"duality_reduced", b.duality_reduced ? 1.0 : 0.0});
    r.status = CheckStatus::pass;
    if (b.holds.has_value() && !*b.holds) r.status = CheckStatus::fail;
  } else {
    r.status = CheckStatus::not_applicable;
  }
  r.note = b.note;
  return r;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials,
               const std::string& format, double tol) {
  hodgebound::SuiteConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.tol = tol;
  std::vector<CheckRecord> records;
  try {
    records = hodgebound::run_suites(suite, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  emit_records(records, format, seed);
  return hodgebound::summarize_records(records).fail == 0 ? 0 : 1;
}

int cmd_bounds(const std::string& input_path, int p, const std::string& format,
               std::uint64_t seed) {
  Json j;
  hodgebound::InputDocument doc;
  try {
    std::ifstream in(input_path);
    if (!in) throw std::invalid_argument("cannot open input file: " + input_path);
    j = Json::parse(in);
    doc = hodgebound::parse_input_document(j);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  // Absent ambient data means a flat target space: c = 0.
  double c_lower = 0.0, c_upper = 0.0;
  if (doc.ambient) {
    c_lower = doc.ambient->c_lower;
    c_upper = doc.ambient->c_upper;
  }
  const bool single_c = (c_lower == c_upper);
  const hodgebound::ExtrinsicSummary<double> s = hodgebound::summarize(doc.B);
  const int n = doc.n;

  std::vector<hodgebound::BoundReport> rows;
  if (single_c) {
    rows.push_back(hodgebound::thm11_report(n, p, c_lower, doc.B));
    for (auto& b : hodgebound::cor12_reports(n, p, c_lower, doc.B)) rows.push_back(b);
    rows.push_back(hodgebound::alpha_report(n, p, c_lower, std::sqrt(s.Hnorm2)));
  } else {
    NamedValues in{{"n", double(n)}, {"p", double(p)}};
    rows.push_back(hodgebound::not_applicable_report(
        "thm11", in, "requires a single ambient constant"));
    for (const char* name : {"cor12-i", "cor12-ii", "cor12-iii", "cor12-eps"})
      rows.push_back(hodgebound::not_applicable_report(
          name, in, "requires a single ambient constant"));
    rows.push_back(hodgebound::not_applicable_report(
        "alpha-threshold", in, "requires a single ambient constant"));
  }
  if (doc.ric_min) {
    rows.push_back(
        hodgebound::thm15_report(n, p, c_lower, c_upper, *doc.ric_min, s.Hnorm2));
  } else {
    rows.push_back(hodgebound::not_applicable_report(
        "thm15", {{"n", double(n)}, {"p", double(p)}}, "ric_min not supplied"));
  }
  for (auto& b : hodgebound::sphere_theorem_thresholds(n, p, c_lower, c_upper, s.Hnorm2))
    rows.push_back(b);

  std::vector<CheckRecord> records;
  for (const auto& b : rows) records.push_back(bound_to_record(b));
  emit_records(records, format, seed);
  return hodgebound::summarize_records(records).fail == 0 ? 0 : 1;
}

bool parse_sweep(const std::string& spec, double& lo, double& hi, int& steps) {
  int consumed = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d%n", &lo, &hi, &steps, &consumed) != 3)
    return false;
  if (consumed != int(spec.size())) return false;
  return lo > 0.0 && hi >= lo && steps >= 1 && steps <= 100000;
}

int cmd_clifford(int n, int p, std::optional<double> mu, const std::string& sweep,
                 const std::string& format, double tol, std::uint64_t seed) {
  std::vector<std::pair<double, bool>> mus;  // (mu, critical-ratio flag)
  if (!sweep.empty()) {
    double lo = 0, hi = 0;
    int steps = 0;
    if (!parse_sweep(sweep, lo, hi, steps)) {
      std::cerr << "error: bad sweep syntax (expected lo:hi:steps with 0 < lo <= hi)\n";
      return 2;
    }
    for (int k = 0; k < steps; ++k) {
      const double t = steps == 1 ? 0.0 : double(k) / (steps - 1);
      mus.push_back({lo * std::pow(hi / lo, t), false});
    }
    if (p >= 2 && p <= n - 2) {
      const double crit = hodgebound::clifford_critical_mu<double>(n, p);
      if (crit >= lo && crit <= hi) mus.push_back({crit, true});
    }
  } else if (mu) {
    mus.push_back({*mu, false});
    if (p >= 2 && p <= n - 2 &&
        std::abs(*mu - hodgebound::clifford_critical_mu<double>(n, p)) < 1e-12)
      mus.back().second = true;
  } else {
    std::cerr << "error: clifford requires --mu or --sweep\n";
    return 2;
  }

  std::vector<CheckRecord> records;
  try {
    for (auto [muv, critical] : mus) {
      const hodgebound::ModelSpaced M = hodgebound::clifford_torus<double>(n, p, muv);
      const hodgebound::ExtrinsicSummary<double> s = hodgebound::summarize(M.B);
      Eigen::VectorXd k(n);
      k.head(p).setConstant(1.0 / muv);
      k.tail(n - p).setConstant(-muv);

      CheckRecord r;
      r.name = "clifford-row";
      r.inputs = {{"n", double(n)}, {"p", double(p)}, {"mu", muv}};
      const double closed = hodgebound::detail::torus_closed_form_residual(M);
      const double rmin = hodgebound::ricci_min(M.intrinsic);
      const double cond = (n - 2 * p) * (p / muv - (n - p) * muv);
      r.values = {
          {"H", s.H[0]},
          {"B2", s.B2},
          {"Bring2", s.Bring2},
          {"gamma_p", hodgebound::gamma_p(M.B, p)},
          {"beta_p", hodgebound::p_curvature_beta(k, p)},
          {"thm11", hodgebound::thm11_bound(n, p, 1.0, M.B)},
          {"alpha", hodgebound::alpha_threshold(n, p, 1.0, std::sqrt(s.Hnorm2))},
          {"ric_min", rmin},
          {"ejiri", hodgebound::ejiri_threshold(n, p, 1.0, 1.0, s.Hnorm2)},
          {"equality_regime", cond <= 1e-12 ? 1.0 : 0.0},
          {"critical_ratio", critical ? 1.0 : 0.0},
      };
      r.residual = closed;
      r.status = closed <= tol ? CheckStatus::pass : CheckStatus::fail;
      if (critical) r.note = "critical ratio: Ricci is the constant n-2";
      records.push_back(std::move(r));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (format == "csv") {
    std::string out =
        "n,p,mu,H,B2,Bring2,gamma_p,beta_p,thm11,alpha,ric_min,ejiri,"
        "equality_regime,critical_ratio,residual,status\n";
    for (const auto& r : records) {
      std::ostringstream line;
      line << n << ',' << p;
      line << ',' << hodgebound::format_double(r.inputs[2].second, kCsvDigits);
      for (size_t i = 0; i + 2 < r.values.size(); ++i)
        line << ',' << hodgebound::format_double(r.values[i].second, kCsvDigits);
      line << ',' << hodgebound::format_double(r.values[r.values.size() - 2].second, 1);
      line << ',' << hodgebound::format_double(r.values[r.values.size() - 1].second, 1);
      line << ',' << hodgebound::format_double(r.residual, kCsvDigits);
      line << ',' << hodgebound::to_string(r.status);
      out += line.str();
      out += '\n';
    }
    std::cout << out;
  } else {
    std::cout << hodgebound::serialize_json(records_to_json(records, seed), kJsonDigits);
  }
  return hodgebound::summarize_records(records).fail == 0 ? 0 : 1;
}

int cmd_sphere(int n, int m, double c, double hnorm, const std::string& format,
               std::uint64_t seed) {
  std::optional<hodgebound::ModelSpaced> model;
  try {
    model = hodgebound::geodesic_sphere<double>(n, m, c, hnorm);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const hodgebound::ModelSpaced& M = *model;
  std::vector<CheckRecord> records;
  for (const auto& e : M.spectrum) {
    CheckRecord r;
    r.name = "sphere-spectrum";
    r.inputs = {{"n", double(n)}, {"m", double(m)}, {"c", c}, {"hnorm", hnorm},
                {"q", double(e.q)}};
    if (e.lambda_exact) r.values.push_back({"lambda_exact", *e.lambda_exact});
    if (e.lambda_coexact) r.values.push_back({"lambda_coexact", *e.lambda_coexact});
    r.values.push_back({"lambda_first", *e.lambda_first});
    // table duality: lambda_{1,q} = lambda_{1,n-q}
    r.residual = std::abs(*e.lambda_first - *M.spectrum[n - e.q].lambda_first);
    r.status = r.residual <= 1e-12 ? CheckStatus::pass : CheckStatus::fail;
    records.push_back(std::move(r));
  }
  if (format == "csv") {
    std::string out = "q,lambda_exact,lambda_coexact,lambda_first\n";
    for (const auto& e : M.spectrum) {
      out += std::to_string(e.q);
      out += ',';
      out += e.lambda_exact ? hodgebound::format_double(*e.lambda_exact, kCsvDigits) : "";
      out += ',';
      out += e.lambda_coexact ? hodgebound::format_double(*e.lambda_coexact, kCsvDigits) : "";
      out += ',';
      out += hodgebound::format_double(*e.lambda_first, kCsvDigits);
      out += '\n';
    }
    std::cout << out;
  } else {
    std::cout << hodgebound::serialize_json(records_to_json(records, seed), kJsonDigits);
  }
  return hodgebound::summarize_records(records).fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verifier for Hodge-Laplacian eigenvalue lower bounds"};
  app.require_subcommand(1);

  double tol = 1e-9;
  if (!read_tolerance(tol)) {
    std::cerr << "error: HODGEBOUND_TOL must be a positive number\n";
    return 2;
  }

  std::string format = "json";
  std::uint64_t seed = 0;
  int trials = 200;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", seed, "Deterministic seed");
    cmd->add_option("--trials", trials, "Randomized trial count")->check(CLI::PositiveNumber);
  };

  // verify
  auto* verify = app.add_subcommand("verify", "Run a named property suite");
  std::string suite = "all";
  verify->add_option("--suite", suite, "all|algebra|curvature|identities|inequalities|models");
  add_common(verify);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate bounds on an input document");
  std::string input_path;
  int p_bounds = 1;
  bounds->add_option("--input", input_path, "Input JSON document")->required();
  bounds->add_option("--p", p_bounds, "Form degree")->required();
  add_common(bounds);

  // clifford
  auto* clifford = app.add_subcommand("clifford", "Emit the torus table");
  int n_cliff = 4, p_cliff = 2;
  std::optional<double> mu;
  std::string sweep;
  clifford->add_option("--n", n_cliff, "Dimension")->required();
  clifford->add_option("--p", p_cliff, "Split")->required();
  clifford->add_option("--mu", mu, "Curvature ratio");
  clifford->add_option("--sweep", sweep, "Log-uniform mu sweep lo:hi:steps");
  add_common(clifford);

  // sphere
  auto* sphere = app.add_subcommand("sphere", "Emit the geodesic-sphere spectrum table");
  int n_sph = 4, m_sph = 1;
  double c_sph = 1.0, hnorm_sph = 0.0;
  sphere->add_option("--n", n_sph, "Dimension")->required();
  sphere->add_option("--m", m_sph, "Codimension");
  sphere->add_option("--c", c_sph, "Ambient constant curvature");
  sphere->add_option("--hnorm", hnorm_sph, "Mean curvature norm");
  add_common(sphere);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (verify->parsed()) return cmd_verify(suite, seed, trials, format, tol);
  if (bounds->parsed()) return cmd_bounds(input_path, p_bounds, format, seed);
  if (clifford->parsed()) return cmd_clifford(n_cliff, p_cliff, mu, sweep, format, tol, seed);
  if (sphere->parsed()) return cmd_sphere(n_sph, m_sph, c_sph, hnorm_sph, format, seed);
  return 2;
}
