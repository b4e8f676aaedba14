#ifndef MCT_REPORT_HPP
#define MCT_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mct/mathutil.hpp"

namespace mct {

// One inequality instance: ratio = lhs / rhs, with rhs == 0 recorded as an
// infinite ratio unless lhs is also 0.  diag carries per-case notes such as
// quadrature refinement flags.
struct CaseRow {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  std::string diag;
};

CaseRow make_row(const std::string& id, double lhs, double rhs,
                 const std::string& diag = "");

struct ExperimentSummary {
  int cases = 0;
  double max_ratio = 0.0;
  double min_ratio = 0.0;
  SlopeFit slope;          // meaningful only when the suite fits one
  bool has_slope = false;
  bool pass = false;
  std::string verdict;     // one line, e.g. "pass: max ratio 1.37 <= 2"
  std::vector<std::string> notes;
};

struct ExperimentReport {
  std::string suite;
  std::vector<CaseRow> rows;
  ExperimentSummary summary;

  // Fills cases / max_ratio / min_ratio from the rows (notes untouched).
  void tally();

  std::string csv() const;           // id,lhs,rhs,ratio,diag
  std::string summary_json() const;  // summary plus echo of the suite name
};

// Suite invocation parameters.  params holds numeric overrides consumed by
// individual suites (unknown keys are ignored); the JSON form round-trips.
struct ExperimentConfig {
  std::string suite;
  std::uint64_t seed = 1;
  int count = 50;
  std::map<std::string, double> params;

  double param(const std::string& key, double fallback) const;

  std::string to_json() const;
  static ExperimentConfig from_json(const std::string& text);
};

// Least-squares slope of log y against log x with its standard error;
// needs at least 3 points and strictly positive coordinates.
SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

// Shortest decimal form that round-trips a double.
std::string fmt_double(double v);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace mct

#endif
