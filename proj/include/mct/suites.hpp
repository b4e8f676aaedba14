#ifndef MCT_SUITES_HPP
#define MCT_SUITES_HPP

#include "mct/report.hpp"

namespace mct {

// Named experiment suites behind the command line.  Each one evaluates a
// family of inequality instances, records per-case rows, and derives its
// verdict only from the recorded numbers.  Brackets and bounds live in the
// per-suite defaults and can be overridden through cfg.params.
std::vector<std::string> suite_names();

ExperimentReport run_suite(const ExperimentConfig& cfg);

}  // namespace mct

#endif
