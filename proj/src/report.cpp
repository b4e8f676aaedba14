#include "mct/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace mct {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw config_error("fit_loglog: length mismatch");
  if (x.size() < 3) throw config_error("fit_loglog: need at least 3 points");
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw config_error("fit_loglog: coordinates must be positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  return fit_line(lx, ly);
}

CaseRow make_row(const std::string& id, double lhs, double rhs,
                 const std::string& diag) {
  CaseRow row;
  row.id = id;
  row.lhs = lhs;
  row.rhs = rhs;
  if (rhs > 0.0)
    row.ratio = lhs / rhs;
  else
    row.ratio = lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  row.diag = diag;
  return row;
}

void ExperimentReport::tally() {
  summary.cases = int(rows.size());
  double mx = 0.0;
  double mn = std::numeric_limits<double>::infinity();
  for (const CaseRow& r : rows) {
    mx = std::max(mx, r.ratio);
    mn = std::min(mn, r.ratio);
  }
  summary.max_ratio = mx;
  summary.min_ratio = rows.empty() ? 0.0 : mn;
}

std::string ExperimentReport::csv() const {
  std::ostringstream out;
  out << "id,lhs,rhs,ratio,diag\n";
  for (const CaseRow& r : rows) {
    // ids and diags are plain identifiers; no quoting needed
    out << r.id << ',' << fmt_double(r.lhs) << ',' << fmt_double(r.rhs) << ','
        << fmt_double(r.ratio) << ',' << r.diag << '\n';
  }
  return out.str();
}

std::string ExperimentReport::summary_json() const {
  json j;
  j["suite"] = suite;
  j["cases"] = summary.cases;
  j["max_ratio"] = summary.max_ratio;
  j["min_ratio"] = summary.min_ratio;
  if (summary.has_slope) {
    j["slope"] = summary.slope.slope;
    j["slope_stderr"] = summary.slope.stderr_slope;
  }
  j["pass"] = summary.pass;
  j["verdict"] = summary.verdict;
  j["notes"] = summary.notes;
  return j.dump(2);
}

double ExperimentConfig::param(const std::string& key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::string ExperimentConfig::to_json() const {
  json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["count"] = count;
  j["params"] = json::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  return j.dump(2);
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("invalid experiment config JSON: ") +
                       e.what());
  }
  if (!j.is_object()) throw config_error("experiment config must be an object");
  ExperimentConfig cfg;
  cfg.suite = j.value("suite", std::string());
  cfg.seed = j.value("seed", std::uint64_t(1));
  cfg.count = j.value("count", 50);
  if (j.contains("params")) {
    if (!j.at("params").is_object())
      throw config_error("experiment config: params must be an object");
    for (const auto& [k, v] : j.at("params").items()) {
      if (!v.is_number())
        throw config_error("experiment config: param " + k +
                           " must be numeric");
      cfg.params[k] = v.get<double>();
    }
  }
  return cfg;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw config_error("cannot open output file: " + path);
  out << text;
  if (!out) throw config_error("write failed: " + path);
}

}  // namespace mct
