#include "mct/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mct {

namespace {

void check_dim(int dim) {
  if (dim != 1 && dim != 2)
    throw config_error("dimension must be 1 or 2, got " + std::to_string(dim));
}

void check_level(int level) {
  if (level < -512 || level > 512)
    throw config_error("grid level out of range: " + std::to_string(level));
}

bool index_less(const Cell& a, const Cell& b) { return a.k < b.k; }

// Guard index arithmetic: shifting k by s bits must stay inside int64.
void check_shift(std::int64_t k, int s) {
  if (s >= 62 || std::llabs(k) > (std::int64_t(1) << (62 - s)))
    throw config_error("index overflow while changing grid level");
}

}  // namespace

StepFunction StepFunction::from_cells(int dim, int level,
                                      std::vector<Cell> cells) {
  check_dim(dim);
  check_level(level);
  std::vector<Cell> kept;
  kept.reserve(cells.size());
  for (auto& cell : cells) {
    if (dim == 1) cell.k[1] = 0;
    if (!std::isfinite(cell.c.real()) || !std::isfinite(cell.c.imag()))
      throw config_error("non-finite cell coefficient");
    if (cell.c != 0.0) kept.push_back(cell);
  }
  std::sort(kept.begin(), kept.end(), index_less);
  for (std::size_t i = 1; i < kept.size(); ++i)
    if (kept[i].k == kept[i - 1].k)
      throw config_error("duplicate cell index in step function");
  StepFunction f;
  f.dim_ = dim;
  f.level_ = level;
  f.cells_ = std::move(kept);
  return f;
}

bool StepFunction::is_real() const {
  for (const auto& cell : cells_)
    if (cell.c.imag() != 0.0) return false;
  return true;
}

StepFunction StepFunction::refine(int new_level) const {
  check_level(new_level);
  if (new_level == level_) return *this;
  if (new_level < level_) {
    int s = level_ - new_level;
    for (const auto& cell : cells_)
      for (int j = 0; j < dim_; ++j) check_shift(cell.k[j], s);
    std::int64_t side = std::int64_t(1) << s;
    // children per cell: side^dim, refuse absurd expansions
    double children = std::pow(double(side), dim_);
    if (children * double(cells_.size()) > 4.0e6)
      throw config_error("refine would produce too many cells");
    std::vector<Cell> out;
    out.reserve(std::size_t(children) * cells_.size());
    for (const auto& cell : cells_) {
      for (std::int64_t i = 0; i < side; ++i) {
        if (dim_ == 1) {
          out.push_back({{cell.k[0] * side + i, 0}, cell.c});
        } else {
          for (std::int64_t j = 0; j < side; ++j)
            out.push_back({{cell.k[0] * side + i, cell.k[1] * side + j},
                           cell.c});
        }
      }
    }
    return from_cells(dim_, new_level, std::move(out));
  }
  // coarsening: every sibling block of 2^{s*dim} cells must exist and agree
  int s = new_level - level_;
  std::int64_t side = std::int64_t(1) << s;
  double block = std::pow(double(side), dim_);
  std::map<Index, std::pair<cplx, double>> groups;  // parent -> (coeff, seen)
  for (const auto& cell : cells_) {
    Index parent = {floor_div(cell.k[0], side),
                    dim_ == 2 ? floor_div(cell.k[1], side) : 0};
    auto it = groups.find(parent);
    if (it == groups.end()) {
      groups[parent] = {cell.c, 1.0};
    } else {
      if (it->second.first != cell.c)
        throw config_error("cannot coarsen exactly: sibling cells differ");
      it->second.second += 1.0;
    }
  }
  std::vector<Cell> out;
  out.reserve(groups.size());
  for (const auto& [parent, cs] : groups) {
    if (cs.second != block)
      throw config_error("cannot coarsen exactly: incomplete sibling block");
    out.push_back({parent, cs.first});
  }
  return from_cells(dim_, new_level, std::move(out));
}

StepFunction StepFunction::dilate(int j) const {
  check_level(level_ - j);
  StepFunction g = *this;
  g.level_ = level_ - j;
  return g;
}

StepFunction StepFunction::translate(Index w, int shift_level) const {
  if (dim_ == 1) w[1] = 0;
  if (shift_level >= level_) {
    int s = shift_level - level_;
    std::vector<Cell> out = cells_;
    for (auto& cell : out)
      for (int j = 0; j < dim_; ++j) {
        check_shift(w[j], s);
        std::int64_t delta = w[j] * (std::int64_t(1) << s);
        if ((delta > 0 && cell.k[j] > INT64_MAX / 2 - delta) ||
            (delta < 0 && cell.k[j] < INT64_MIN / 2 - delta))
          throw config_error("index overflow in translate");
        cell.k[j] += delta;
      }
    return from_cells(dim_, level_, std::move(out));
  }
  StepFunction fine = refine(shift_level);
  return fine.translate(w, shift_level);
}

cplx StepFunction::integral() const {
  double vol = cell_volume();
  cplx s = 0.0;
  for (const auto& cell : cells_) s += cell.c;
  return s * vol;
}

double StepFunction::l1_norm() const { return lp_mass(1.0); }

double StepFunction::sup_norm() const {
  double m = 0.0;
  for (const auto& cell : cells_) m = std::max(m, std::abs(cell.c));
  return m;
}

double StepFunction::lp_mass(double p) const {
  double vol = cell_volume();
  std::vector<double> terms(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i)
    terms[i] = std::pow(std::abs(cells_[i].c), p) * vol;
  return chunked_sum(terms);
}

double StepFunction::lp_norm(double p) const {
  if (std::isinf(p)) return sup_norm();
  if (!(p > 0)) throw config_error("lp_norm: p must be positive");
  return std::pow(lp_mass(p), 1.0 / p);
}

double StepFunction::support_lo(int axis) const {
  double lo = 0.0;
  bool first = true;
  double side = dyadic(level_);
  for (const auto& cell : cells_) {
    double v = side * double(cell.k[axis]);
    if (first || v < lo) lo = v;
    first = false;
  }
  return first ? 0.0 : lo;
}

double StepFunction::support_hi(int axis) const {
  double hi = 0.0;
  bool first = true;
  double side = dyadic(level_);
  for (const auto& cell : cells_) {
    double v = side * double(cell.k[axis] + 1);
    if (first || v > hi) hi = v;
    first = false;
  }
  return first ? 0.0 : hi;
}

double StepFunction::support_dist_origin() const {
  if (cells_.empty()) return 0.0;
  double side = dyadic(level_);
  double best = -1.0;
  for (const auto& cell : cells_) {
    double d2 = 0.0;
    for (int j = 0; j < dim_; ++j) {
      double lo = side * double(cell.k[j]);
      double hi = side * double(cell.k[j] + 1);
      double d = 0.0;
      if (hi <= 0)
        d = -hi;
      else if (lo >= 0)
        d = lo;
      d2 += d * d;
    }
    double d = std::sqrt(d2);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

double StepFunction::support_radius() const {
  if (cells_.empty()) return 0.0;
  double side = dyadic(level_);
  double best = 0.0;
  for (const auto& cell : cells_) {
    double d2 = 0.0;
    for (int j = 0; j < dim_; ++j) {
      double lo = std::abs(side * double(cell.k[j]));
      double hi = std::abs(side * double(cell.k[j] + 1));
      double d = std::max(lo, hi);
      d2 += d * d;
    }
    best = std::max(best, std::sqrt(d2));
  }
  return best;
}

double StepFunction::lp_mass_on_cube(double p, const DyadicCube& q) const {
  if (q.dim != dim_) throw config_error("cube dimension mismatch");
  double total = 0.0;
  if (q.level >= level_) {
    std::int64_t side = std::int64_t(1) << std::min(61, q.level - level_);
    if (q.level - level_ >= 62) side = 0;  // cube far larger than any index
    for (const auto& cell : cells_) {
      bool inside = true;
      for (int j = 0; j < dim_ && inside; ++j) {
        std::int64_t parent =
            side == 0 ? (cell.k[j] < 0 ? -1 : 0) : floor_div(cell.k[j], side);
        inside = (parent == q.k[j]);
      }
      if (inside) total += std::pow(std::abs(cell.c), p) * cell_volume();
    }
    return total;
  }
  // cube strictly inside one cell (or in none)
  std::int64_t side = std::int64_t(1) << (level_ - q.level);
  Index parent = {floor_div(q.k[0], side),
                  dim_ == 2 ? floor_div(q.k[1], side) : 0};
  for (const auto& cell : cells_)
    if (cell.k == parent)
      return std::pow(std::abs(cell.c), p) * q.volume();
  return 0.0;
}

double StepFunction::lp_mass_on_interval(double p, double a, double b) const {
  if (dim_ != 1) throw config_error("interval mass requires dim 1");
  if (b <= a) return 0.0;
  double side = dyadic(level_);
  double total = 0.0;
  for (const auto& cell : cells_) {
    double lo = side * double(cell.k[0]);
    double hi = lo + side;
    double len = std::min(hi, b) - std::max(lo, a);
    if (len > 0) total += std::pow(std::abs(cell.c), p) * len;
  }
  return total;
}

cplx StepFunction::integral_on_interval(double a, double b) const {
  if (dim_ != 1) throw config_error("interval integral requires dim 1");
  if (b <= a) return 0.0;
  double side = dyadic(level_);
  cplx total = 0.0;
  for (const auto& cell : cells_) {
    double lo = side * double(cell.k[0]);
    double hi = lo + side;
    double len = std::min(hi, b) - std::max(lo, a);
    if (len > 0) total += cell.c * len;
  }
  return total;
}

double StepFunction::lp_mass_on_ball(double p,
                                     const std::array<double, 2>& center,
                                     double r) const {
  if (r <= 0) return 0.0;
  if (dim_ == 1) return lp_mass_on_interval(p, center[0] - r, center[0] + r);
  double side = dyadic(level_);
  double total = 0.0;
  for (const auto& cell : cells_) {
    double ax = side * double(cell.k[0]), bx = ax + side;
    double ay = side * double(cell.k[1]), by = ay + side;
    double area = rect_disk_area(ax, bx, ay, by, center, r);
    if (area > 0) total += std::pow(std::abs(cell.c), p) * area;
  }
  return total;
}

cplx StepFunction::integral_on_ball(const std::array<double, 2>& center,
                                    double r) const {
  if (r <= 0) return 0.0;
  if (dim_ == 1) return integral_on_interval(center[0] - r, center[0] + r);
  double side = dyadic(level_);
  cplx total = 0.0;
  for (const auto& cell : cells_) {
    double ax = side * double(cell.k[0]), bx = ax + side;
    double ay = side * double(cell.k[1]), by = ay + side;
    double area = rect_disk_area(ax, bx, ay, by, center, r);
    if (area > 0) total += cell.c * area;
  }
  return total;
}

double StepFunction::lp_mass_on_annulus(double p, int k) const {
  std::array<double, 2> origin = {0.0, 0.0};
  double inner = lp_mass_on_ball(p, origin, dyadic(k));
  double outer = lp_mass_on_ball(p, origin, dyadic(k + 1));
  return std::max(0.0, outer - inner);
}

std::vector<MassGroup> cell_integrals(const StepFunction& f, int m) {
  check_level(m);
  std::vector<MassGroup> out;
  if (f.empty()) return out;
  if (m >= f.level()) {
    int s = m - f.level();
    std::map<Index, double> agg;
    for (const auto& cell : f.cells()) {
      Index parent = cell.k;
      for (int j = 0; j < f.dim(); ++j) {
        if (s >= 62)
          parent[j] = cell.k[j] < 0 ? -1 : 0;
        else
          parent[j] = floor_div(cell.k[j], std::int64_t(1) << s);
      }
      agg[parent] += std::abs(cell.c) * f.cell_volume();
    }
    out.reserve(agg.size());
    for (const auto& [k, v] : agg) {
      (void)k;
      if (v > 0) out.push_back({v, 1.0});
    }
    return out;
  }
  // below the cell level every cube inside a cell carries the same integral
  double count = dyadic(f.dim() * (f.level() - m));
  double vol = dyadic(f.dim() * m);
  std::map<double, double, std::greater<double>> agg;  // |c| -> cell count
  for (const auto& cell : f.cells()) agg[std::abs(cell.c)] += 1.0;
  out.reserve(agg.size());
  for (const auto& [absc, ncells] : agg)
    out.push_back({absc * vol, ncells * count});
  return out;
}

namespace {
// Area of [0,x] x [0,y] cap disk of radius r at the origin, x,y >= 0.
double quarter_area(double x, double y, double r) {
  x = std::min(x, r);
  y = std::min(y, r);
  if (x <= 0 || y <= 0) return 0.0;
  if (x * x + y * y <= r * r) return x * y;
  auto seg = [r](double u) {
    u = std::clamp(u, 0.0, r);
    return 0.5 * (u * std::sqrt(std::max(0.0, r * r - u * u)) +
                  r * r * std::asin(u / r));
  };
  double x0 = std::sqrt(std::max(0.0, r * r - y * y));
  return x0 * y + seg(x) - seg(x0);
}

double signed_corner(double x, double y, double r) {
  double s = 1.0;
  if (x < 0) s = -s;
  if (y < 0) s = -s;
  return s * quarter_area(std::abs(x), std::abs(y), r);
}
}  // namespace

double rect_disk_area(double ax, double bx, double ay, double by,
                      const std::array<double, 2>& center, double r) {
  ax -= center[0];
  bx -= center[0];
  ay -= center[1];
  by -= center[1];
  double area = signed_corner(bx, by, r) - signed_corner(ax, by, r) -
                signed_corner(bx, ay, r) + signed_corner(ax, ay, r);
  return std::max(0.0, area);
}

double sup_window_lp_mass(const StepFunction& f, double p, double width) {
  if (f.dim() != 1) throw config_error("window sup requires dim 1");
  if (f.empty() || width <= 0) return 0.0;
  double side = dyadic(f.level());
  std::vector<double> bounds;
  for (const auto& cell : f.cells()) {
    bounds.push_back(side * double(cell.k[0]));
    bounds.push_back(side * double(cell.k[0] + 1));
  }
  double best = 0.0;
  for (double b : bounds) {
    best = std::max(best, f.lp_mass_on_interval(p, b, b + width));
    best = std::max(best, f.lp_mass_on_interval(p, b - width, b));
  }
  return best;
}

std::vector<Piece> pieces_on_interval(const StepFunction& f, double a,
                                      double b) {
  if (f.dim() != 1) throw config_error("pieces require dim 1");
  std::vector<Piece> out;
  if (b <= a) return out;
  double side = dyadic(f.level());
  // cells are sorted by index, so a single sweep suffices
  double cursor = a;
  for (const auto& cell : f.cells()) {
    double lo = side * double(cell.k[0]);
    double hi = lo + side;
    if (hi <= a || lo >= b) continue;
    lo = std::max(lo, a);
    hi = std::min(hi, b);
    if (lo > cursor) out.push_back({lo - cursor, 0.0});
    out.push_back({hi - lo, cell.c});
    cursor = hi;
  }
  if (cursor < b) out.push_back({b - cursor, 0.0});
  return out;
}

}  // namespace mct
