#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mct/campanato.hpp"
#include "mct/constructions.hpp"
#include "mct/functionals.hpp"
#include "mct/norms.hpp"
#include "mct/report.hpp"
#include "mct/step_io.hpp"
#include "mct/suites.hpp"

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

// "pow:-0.25" or "table:path.csv" with lines "k,w(2^k)".
mct::Weight parse_weight(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw mct::config_error("weight spec must be pow:EXPO or table:PATH");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "pow") {
    try {
      return mct::Weight::power(std::stod(rest));
    } catch (const std::logic_error&) {
      throw mct::config_error("weight spec: bad exponent '" + rest + "'");
    }
  }
  if (kind == "table") {
    std::ifstream in(rest);
    if (!in) throw mct::config_error("cannot open weight table: " + rest);
    std::map<int, double> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream ss(line);
      int k;
      double w;
      if (!(ss >> k >> w)) {
        if (lineno == 1) continue;  // tolerate a header line
        throw mct::config_error("weight table: cannot parse line " +
                                std::to_string(lineno));
      }
      values[k] = w;
    }
    if (values.empty()) throw mct::config_error("weight table: no entries");
    return mct::Weight::table(std::move(values));
  }
  throw mct::config_error("unknown weight kind '" + kind + "'");
}

// q arrives as a string so "inf" stays representable.
double parse_q(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return kInf;
  try {
    return std::stod(text);
  } catch (const std::logic_error&) {
    throw mct::config_error("bad q value '" + text + "'");
  }
}

json result_json(const mct::NormResult& r) {
  json j;
  if (r.infinite)
    j["value"] = nullptr;
  else
    j["value"] = r.value;
  j["infinite"] = r.infinite;
  j["lower_bound_only"] = r.lower_bound_only;
  j["tail_estimate"] = r.tail_estimate;
  if (r.refinement_delta > 0) j["refinement_delta"] = r.refinement_delta;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

int cmd_norm(const std::string& input, const std::string& space, double p,
             const std::string& q_text, double lambda,
             const std::string& weight_spec) {
  mct::StepFunction f = mct::load_step(input);
  double q = parse_q(q_text);
  json out;
  if (space == "lorentz") {
    auto r = mct::lorentz_norm(f, p, q);
    out["value"] = r.infinite ? json(nullptr) : json(r.value);
    out["infinite"] = r.infinite;
  } else if (space == "morrey") {
    mct::NormResult r = weight_spec.empty()
                            ? mct::morrey_norm(f, p, q, lambda)
                            : mct::morrey_norm(f, p, q,
                                               parse_weight(weight_spec));
    out = result_json(r);
  } else if (space == "local-morrey") {
    out = result_json(mct::local_morrey_norm(f, p, q, lambda));
  } else if (space == "truncated") {
    out = result_json(mct::truncated_norm(f, lambda, q, p));
  } else if (space == "campanato") {
    mct::NormResult r =
        weight_spec.empty()
            ? mct::campanato_seminorm(f, p, q, lambda)
            : mct::campanato_seminorm(f, p, q, parse_weight(weight_spec));
    out = result_json(r);
  } else if (space == "gamma") {
    mct::LorentzResult r;
    if (weight_spec.empty())
      r = mct::gamma_norm(f, lambda, q);  // lambda doubles as the exponent
    else
      r = mct::gamma_norm_weighted(f, parse_weight(weight_spec), q);
    out["value"] = r.infinite ? json(nullptr) : json(r.value);
    out["infinite"] = r.infinite;
  } else {
    throw mct::config_error(
        "unknown space '" + space +
        "'; choose lorentz, morrey, local-morrey, truncated, campanato or "
        "gamma");
  }
  out["space"] = space;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_fourier_norm(const std::string& input, const std::string& space,
                     double p, const std::string& q_text, double lambda,
                     int m_lo, int m_hi, int resolution, double radius,
                     double weight_expo, double freq) {
  if (space != "morrey")
    throw mct::config_error("fourier-norm supports only --space morrey");
  mct::StepFunction f = mct::load_step(input);
  mct::StepFT g(std::move(f), {freq, 0.0});
  mct::FtNormOpts opts;
  opts.m_lo = m_lo;
  opts.m_hi = m_hi;
  opts.resolution = resolution;
  opts.search_radius = radius;
  opts.weight_expo = weight_expo;
  mct::NormResult r = mct::morrey_norm_ft(g, p, parse_q(q_text), lambda, opts);
  json out = result_json(r);
  out["space"] = space;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_d(const std::string& input, double p, const std::string& q_text,
          double lambda, const std::string& weight_spec,
          const std::string& profile_out) {
  mct::StepFunction f = mct::load_step(input);
  double q = parse_q(q_text);
  mct::DResult r = weight_spec.empty()
                       ? mct::d_functional(f, p, q, lambda)
                       : mct::d_functional_weighted(f, p, q,
                                                    parse_weight(weight_spec));
  if (!profile_out.empty())
    mct::write_text_file(profile_out, r.profile.to_csv());
  json out;
  out["value"] = r.value;
  out["tail_estimate"] = r.tail_estimate;
  out["lower_bound_only"] = r.lower_bound_only;
  if (!r.note.empty()) out["note"] = r.note;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_family(const std::string& name,
               const std::vector<std::string>& param_kvs,
               const std::string& out_path) {
  std::map<std::string, double> params;
  for (const std::string& kv : param_kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw mct::config_error("--param expects K=V, got '" + kv + "'");
    try {
      params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw mct::config_error("--param: bad value in '" + kv + "'");
    }
  }
  mct::StepFunction f = mct::make_family(name, params);
  mct::save_step(f, out_path);
  std::cout << "wrote " << out_path << " (" << f.cells().size() << " cells)\n";
  return 0;
}

int cmd_suite(const std::string& name, const std::string& config_path,
              std::uint64_t seed, bool seed_given, int count, bool count_given,
              const std::string& out_path) {
  mct::ExperimentConfig cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw mct::config_error("cannot open config: " + config_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    cfg = mct::ExperimentConfig::from_json(ss.str());
  }
  if (!name.empty()) cfg.suite = name;
  if (seed_given) cfg.seed = seed;
  if (count_given) cfg.count = count;
  if (cfg.suite.empty())
    throw mct::config_error("suite name required (--name or config file)");
  mct::ExperimentReport rep = mct::run_suite(cfg);
  if (!out_path.empty()) {
    mct::write_text_file(out_path, rep.csv());
    mct::write_text_file(out_path + ".summary.json", rep.summary_json());
  }
  std::cout << rep.summary_json() << "\n";
  return rep.summary.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for Fourier inequalities between step "
               "functions and their transforms"};
  app.require_subcommand(1);

  std::string input, space = "morrey", q_text = "inf", weight_spec;
  double p = 2.0, lambda = 0.25;

  auto* norm = app.add_subcommand("norm", "Evaluate a space norm of f");
  norm->add_option("--input", input, "step function JSON")->required();
  norm->add_option("--space", space,
                   "lorentz|morrey|local-morrey|truncated|campanato|gamma");
  norm->add_option("--p", p, "integrability exponent");
  norm->add_option("--q", q_text, "aggregation exponent, or inf");
  norm->add_option("--lambda", lambda,
                   "scale exponent (gamma space: weight exponent)");
  norm->add_option("--weight", weight_spec, "pow:EXPO or table:PATH");

  int m_lo = -6, m_hi = 6, resolution = 64;
  double radius = 8.0, weight_expo = 0.0, freq = 0.0;
  auto* fnorm = app.add_subcommand(
      "fourier-norm", "Evaluate a certified-lower transform norm");
  fnorm->add_option("--input", input, "step function JSON")->required();
  fnorm->add_option("--space", space, "only morrey");
  fnorm->add_option("--p", p, "integrability exponent");
  fnorm->add_option("--q", q_text, "aggregation exponent, or inf");
  fnorm->add_option("--lambda", lambda, "scale exponent");
  fnorm->add_option("--m-lo", m_lo, "finest dyadic level");
  fnorm->add_option("--m-hi", m_hi, "coarsest dyadic level");
  fnorm->add_option("--resolution", resolution, "quadrature points per axis");
  fnorm->add_option("--radius", radius, "cube search radius");
  fnorm->add_option("--weight-expo", weight_expo,
                    "integrand carries |y|^expo");
  fnorm->add_option("--freq", freq, "modulation frequency of the input");

  std::string profile_out;
  auto* dcmd = app.add_subcommand("d", "Evaluate the cube-union functional");
  dcmd->add_option("--input", input, "step function JSON")->required();
  dcmd->add_option("--p", p, "integrability exponent");
  dcmd->add_option("--q", q_text, "aggregation exponent, or inf");
  dcmd->add_option("--lambda", lambda, "scale exponent");
  dcmd->add_option("--weight", weight_spec, "pow:EXPO or table:PATH");
  dcmd->add_option("--profile-out", profile_out, "per-level CSV path");

  std::string fam_name, fam_out = "family.json";
  std::vector<std::string> fam_params;
  auto* fam = app.add_subcommand("family", "Materialize a named example");
  fam->add_option("--name", fam_name, "family name")->required();
  fam->add_option("--param", fam_params, "K=V, repeatable");
  fam->add_option("--out", fam_out, "output JSON path");

  std::string suite_name, suite_config, suite_out;
  std::uint64_t seed = 1;
  int count = 50;
  auto* suite = app.add_subcommand("suite", "Run an experiment suite");
  suite->add_option("--name", suite_name, "suite name");
  suite->add_option("--config", suite_config, "ExperimentConfig JSON path");
  auto* seed_opt = suite->add_option("--seed", seed, "corpus seed");
  auto* count_opt = suite->add_option("--count", count, "cases per suite");
  suite->add_option("--out", suite_out, "row CSV path");

  try {
    app.parse(argc, argv);
    if (norm->parsed())
      return cmd_norm(input, space, p, q_text, lambda, weight_spec);
    if (fnorm->parsed())
      return cmd_fourier_norm(input, space, p, q_text, lambda, m_lo, m_hi,
                              resolution, radius, weight_expo, freq);
    if (dcmd->parsed())
      return cmd_d(input, p, q_text, lambda, weight_spec, profile_out);
    if (fam->parsed()) return cmd_family(fam_name, fam_params, fam_out);
    if (suite->parsed())
      return cmd_suite(suite_name, suite_config, seed, seed_opt->count() > 0,
                       count, count_opt->count() > 0, suite_out);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const mct::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
