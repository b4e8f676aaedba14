#ifndef MCT_STEP_IO_HPP
#define MCT_STEP_IO_HPP

#include <string>

#include "mct/dyadic.hpp"

namespace mct {

// File format:
//   {"dim": n, "level": m, "cells": [{"k": [k_1, ..., k_n], "re": a, "im": b}]}
// "im" may be omitted for real cells.  Duplicate indices are rejected.
StepFunction load_step(const std::string& path);
StepFunction parse_step(const std::string& json_text);
std::string step_to_json(const StepFunction& f);
void save_step(const StepFunction& f, const std::string& path);

}  // namespace mct

#endif
