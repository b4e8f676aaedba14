#include "mct/step_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mct {

using nlohmann::json;

StepFunction parse_step(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("invalid step function JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("level") ||
      !j.contains("cells"))
    throw config_error("step function JSON needs dim, level and cells");
  int dim = j.at("dim").get<int>();
  int level = j.at("level").get<int>();
  if (dim != 1 && dim != 2)
    throw config_error("dim must be 1 or 2");
  std::vector<Cell> cells;
  for (const auto& jc : j.at("cells")) {
    if (!jc.contains("k")) throw config_error("cell without index");
    const auto& jk = jc.at("k");
    if (!jk.is_array() || int(jk.size()) != dim)
      throw config_error("cell index arity does not match dim");
    Cell cell;
    for (int d = 0; d < dim; ++d) cell.k[d] = jk.at(d).get<std::int64_t>();
    double re = jc.value("re", 0.0);
    double im = jc.value("im", 0.0);
    cell.c = cplx(re, im);
    cells.push_back(cell);
  }
  return StepFunction::from_cells(dim, level, std::move(cells));
}

StepFunction load_step(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_step(ss.str());
}

std::string step_to_json(const StepFunction& f) {
  json j;
  j["dim"] = f.dim();
  j["level"] = f.level();
  json cells = json::array();
  for (const auto& cell : f.cells()) {
    json jc;
    json jk = json::array();
    for (int d = 0; d < f.dim(); ++d) jk.push_back(cell.k[d]);
    jc["k"] = jk;
    jc["re"] = cell.c.real();
    jc["im"] = cell.c.imag();
    cells.push_back(jc);
  }
  j["cells"] = cells;
  return j.dump(2);
}

void save_step(const StepFunction& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw config_error("cannot open output file: " + path);
  out << step_to_json(f) << "\n";
}

}  // namespace mct
