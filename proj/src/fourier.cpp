#include "mct/fourier.hpp"

#include <cmath>

namespace mct {

cplx StepFT::ft_point(const std::array<double, 2>& y) const {
  if (f_.empty()) return 0.0;
  const int n = f_.dim();
  const int L = f_.level();
  const double h = dyadic(L);
  double yy[2] = {y[0] - freq_[0], n == 2 ? y[1] - freq_[1] : 0.0};
  // per-axis envelope h * sinc(pi h y_j), shared by all cells
  double envelope = 1.0;
  for (int j = 0; j < n; ++j) envelope *= h * sinc(M_PI * h * yy[j]);
  double half_phase = 0.0;  // phase of the cell-center offset h/2 per axis
  for (int j = 0; j < n; ++j) half_phase += 0.5 * yy[j];
  cplx sum = 0.0;
  for (const auto& cell : f_.cells()) {
    double t = double(cell.k[0]) * yy[0];
    if (n == 2) t += double(cell.k[1]) * yy[1];
    double theta = -2.0 * M_PI * h * (t + half_phase);
    sum += cell.c * cplx(std::cos(theta), std::sin(theta));
  }
  return envelope * sum;
}

std::vector<cplx> ft_points_serial(const FourierEvaluable& g,
                                   const std::vector<std::array<double, 2>>& pts) {
  std::vector<cplx> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) out[i] = g.ft_point(pts[i]);
  return out;
}

std::vector<cplx> ft_points(const FourierEvaluable& g,
                            const std::vector<std::array<double, 2>>& pts,
                            bool parallel) {
  if (!parallel) return ft_points_serial(g, pts);
  std::vector<cplx> out(pts.size());
#ifdef MCT_HAS_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i < long(pts.size()); ++i)
    out[std::size_t(i)] = g.ft_point(pts[std::size_t(i)]);
  return out;
}

double ft_lp_mass_on_cube(const FourierEvaluable& g, double p,
                          const DyadicCube& q, const QuadOpts& opts) {
  if (g.dim() != q.dim) throw config_error("cube dimension mismatch");
  int res = std::max(1, opts.resolution);
  double h = q.side() / res;
  std::vector<std::array<double, 2>> pts;
  if (q.dim == 1) {
    pts.reserve(res);
    for (int i = 0; i < res; ++i)
      pts.push_back({q.lo(0) + (i + 0.5) * h, 0.0});
  } else {
    pts.reserve(std::size_t(res) * res);
    for (int i = 0; i < res; ++i)
      for (int j = 0; j < res; ++j)
        pts.push_back({q.lo(0) + (i + 0.5) * h, q.lo(1) + (j + 0.5) * h});
  }
  std::vector<cplx> vals = ft_points(g, pts, opts.parallel);
  auto weighted = [&](std::size_t i) {
    double v = std::abs(vals[i]);
    if (opts.weight_expo != 0.0) {
      double r = std::hypot(pts[i][0], q.dim == 2 ? pts[i][1] : 0.0);
      v *= std::pow(r, opts.weight_expo);
    }
    return v;
  };
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) m = std::max(m, weighted(i));
    return m;
  }
  double cellvol = std::pow(h, q.dim);
  std::vector<double> terms(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i)
    terms[i] = std::pow(weighted(i), p) * cellvol;
  return chunked_sum(terms);
}

namespace {

struct BallGrid {
  std::vector<std::array<double, 2>> pts;
  std::vector<double> weights;  // measures, summing to |B_r| up to rounding
};

BallGrid ball_grid(int dim, const std::array<double, 2>& center, double r,
                   int res) {
  BallGrid grid;
  if (dim == 1) {
    double h = 2.0 * r / res;
    for (int i = 0; i < res; ++i) {
      grid.pts.push_back({center[0] - r + (i + 0.5) * h, 0.0});
      grid.weights.push_back(h);
    }
    return grid;
  }
  double h = 2.0 * r / res;
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j) {
      double ax = center[0] - r + i * h;
      double ay = center[1] - r + j * h;
      double area = rect_disk_area(ax, ax + h, ay, ay + h, center, r);
      if (area <= 0) continue;
      grid.pts.push_back({ax + 0.5 * h, ay + 0.5 * h});
      grid.weights.push_back(area);
    }
  return grid;
}

}  // namespace

cplx ft_average_on_ball(const FourierEvaluable& g,
                        const std::array<double, 2>& center, double r,
                        int resolution) {
  BallGrid grid = ball_grid(g.dim(), center, r, std::max(2, resolution));
  std::vector<cplx> vals = ft_points(g, grid.pts, true);
  cplx sum = 0.0;
  double vol = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    sum += vals[i] * grid.weights[i];
    vol += grid.weights[i];
  }
  return vol > 0 ? sum / vol : cplx(0.0);
}

double ft_lp_mass_on_ball(const FourierEvaluable& g, double p,
                          const std::array<double, 2>& center, double r,
                          cplx shift, int resolution) {
  BallGrid grid = ball_grid(g.dim(), center, r, std::max(2, resolution));
  std::vector<cplx> vals = ft_points(g, grid.pts, true);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : vals) m = std::max(m, std::abs(v - shift));
    return m;
  }
  std::vector<double> terms(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i)
    terms[i] = std::pow(std::abs(vals[i] - shift), p) * grid.weights[i];
  return chunked_sum(terms);
}

double ft_modulus_sup(const FourierEvaluable& g, double t, double span,
                      int samples_per_axis) {
  if (!(t > 0) || !(span > 0))
    throw config_error("ft_modulus_sup: t and span must be positive");
  int n = std::max(2, samples_per_axis);
  std::vector<std::array<double, 2>> base;
  if (g.dim() == 1) {
    for (int i = 0; i < n; ++i)
      base.push_back({-span + (2.0 * span) * (i + 0.5) / n, 0.0});
  } else {
    int side = std::max(2, int(std::sqrt(double(n))));
    for (int i = 0; i < side; ++i)
      for (int j = 0; j < side; ++j)
        base.push_back({-span + (2.0 * span) * (i + 0.5) / side,
                        -span + (2.0 * span) * (j + 0.5) / side});
  }
  std::vector<std::array<double, 2>> shifts;
  for (double frac : {1.0, 0.5, 0.25}) {
    if (g.dim() == 1) {
      shifts.push_back({t * frac, 0.0});
      shifts.push_back({-t * frac, 0.0});
    } else {
      double d = t * frac;
      double diag = d / std::sqrt(2.0);
      shifts.push_back({d, 0.0});
      shifts.push_back({-d, 0.0});
      shifts.push_back({0.0, d});
      shifts.push_back({0.0, -d});
      shifts.push_back({diag, diag});
      shifts.push_back({-diag, diag});
    }
  }
  std::vector<cplx> at_base = ft_points(g, base, true);
  double best = 0.0;
  for (const auto& s : shifts) {
    std::vector<std::array<double, 2>> moved(base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
      moved[i] = {base[i][0] + s[0], base[i][1] + s[1]};
    std::vector<cplx> at_moved = ft_points(g, moved, true);
    for (std::size_t i = 0; i < base.size(); ++i)
      best = std::max(best, std::abs(at_moved[i] - at_base[i]));
  }
  return best;
}

}  // namespace mct
