#ifndef MCT_DYADIC_HPP
#define MCT_DYADIC_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "mct/mathutil.hpp"

namespace mct {

using Index = std::array<std::int64_t, 2>;  // second entry unused in dim 1

// Half-open dyadic cube prod_j [2^level k_j, 2^level (k_j+1)).
struct DyadicCube {
  int dim = 1;
  int level = 0;
  Index k = {0, 0};

  double side() const { return dyadic(level); }
  double volume() const { return dyadic(level * dim); }
  double lo(int j) const { return dyadic(level) * double(k[j]); }
  double hi(int j) const { return dyadic(level) * double(k[j] + 1); }
};

struct Cell {
  Index k = {0, 0};
  cplx c = 0.0;
};

// Finitely supported complex step function on the level-m dyadic grid.
// Cells are kept sorted by index and indices are unique; zero coefficients
// are dropped on construction.
class StepFunction {
 public:
  StepFunction() = default;
  static StepFunction from_cells(int dim, int level, std::vector<Cell> cells);

  int dim() const { return dim_; }
  int level() const { return level_; }
  const std::vector<Cell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }
  bool is_real() const;

  double cell_volume() const { return dyadic(level_ * dim_); }

  // Exact re-representation on a finer grid (new_level <= level).  Asking for
  // a coarser grid succeeds only when sibling blocks carry equal coefficients
  // and throws "cannot coarsen exactly" otherwise.
  StepFunction refine(int new_level) const;

  // g(x) = f(2^j x): same indices, level shifted down by j (j may be negative).
  StepFunction dilate(int j) const;

  // Translation by the lattice vector 2^shift_level * w (refines first when
  // the shift lives on a finer grid than the cells).
  StepFunction translate(Index w, int shift_level) const;

  cplx integral() const;           // exact complex integral
  double l1_norm() const;          // integral of |f|
  double sup_norm() const;         // max |coefficient|
  double lp_mass(double p) const;  // integral of |f|^p (p < inf)
  double lp_norm(double p) const;  // p = inf gives sup_norm

  // Support bounds in physical coordinates, per axis.
  double support_lo(int axis) const;
  double support_hi(int axis) const;
  // Distance from the origin to the support (0 when a cell touches 0).
  double support_dist_origin() const;
  double support_radius() const;  // sup-norm radius of the support

  // |f|^p mass and complex integral over boxes/intervals/disks, all exact.
  double lp_mass_on_cube(double p, const DyadicCube& q) const;
  double lp_mass_on_interval(double p, double a, double b) const;  // dim 1
  cplx integral_on_interval(double a, double b) const;             // dim 1
  double lp_mass_on_ball(double p, const std::array<double, 2>& center,
                         double r) const;
  cplx integral_on_ball(const std::array<double, 2>& center, double r) const;
  // mass of |f|^p on the annulus B_{2^{k+1}} \ B_{2^k} around the origin
  double lp_mass_on_annulus(double p, int k) const;

 private:
  int dim_ = 1;
  int level_ = 0;
  std::vector<Cell> cells_;
};

// One value of integral over a level-m cube |f|, with its multiplicity.  For
// m below the cell level the per-cube integrals repeat 2^{n(level-m)} times,
// so the count is kept as an exact power-of-two double.
struct MassGroup {
  double value = 0.0;
  double count = 1.0;
};

// Multiset of nonzero cube integrals int_{Q_k^m} |f|, run-length encoded.
// For m >= f.level one entry per occupied cube (count 1); below f.level the
// entries are per-coefficient groups with exponential counts.
std::vector<MassGroup> cell_integrals(const StepFunction& f, int m);

// Exact area of the intersection of an axis-aligned rectangle with the disk
// of radius r centered at `center`.
double rect_disk_area(double ax, double bx, double ay, double by,
                      const std::array<double, 2>& center, double r);

// 1-D helper: sup over x of the |f|^p mass of the window [x, x+width).  The
// map is piecewise linear in x, so the sup is attained at a breakpoint and
// the scan is exact.
double sup_window_lp_mass(const StepFunction& f, double p, double width);

// 1-D helper: constant pieces of f on [a,b), gaps included as zeros.
struct Piece {
  double len = 0.0;
  cplx value = 0.0;
};
std::vector<Piece> pieces_on_interval(const StepFunction& f, double a,
                                      double b);

}  // namespace mct

#endif
