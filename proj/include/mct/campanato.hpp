#ifndef MCT_CAMPANATO_HPP
#define MCT_CAMPANATO_HPP

#include "mct/norms.hpp"

namespace mct {

struct CampanatoOpts {
  // dyadic scale window for modes without closed-form tails
  int k_lo = -8;
  int k_hi = 4;
  // centers live on the lattice of spacing 2^{k - shift_offset}, never finer
  // than 2^{lattice_floor}
  int shift_offset = 3;
  int lattice_floor = -12;
  // transform mode: ball quadrature resolution and center search window
  int resolution = 16;
  double search_radius = 8.0;
  bool parallel = true;
};

// Exact ball average of a step function.
cplx ball_average(const StepFunction& f, const std::array<double, 2>& center,
                  double r);

// Exact int_{B_r(center)} |f - c|^p.
double lp_dist_const_on_ball(const StepFunction& f, double p,
                             const std::array<double, 2>& center, double r,
                             cplx c);

// Exact inf over real constants of || f - c ||_{L_p(B_r(center))} for real
// f, by golden-section (the map is convex for p >= 1).
double lp_dist_best_const_on_ball(const StepFunction& f, double p,
                                  const std::array<double, 2>& center,
                                  double r);

// Oscillation at scale r: sup over lattice centers of
// || f - A_r f(x) ||_{L_p(B_r(x))}; a lower bound for the sup over all x.
double oscillation_term(const StepFunction& f, double p, double r,
                        double spacing);

// l_q over dyadic scales of w(2^k) times the oscillation.  In dim 1 the
// scales below the cell size follow the exact single-jump closed form
// (windows of width <= one cell contain at most one jump), and the large
// scales are extended until their contribution bound is negligible.  Power
// weights r^{-lambda} with lambda > n/p give an infinite seminorm for any
// nonzero step function (jumps are not Hoelder continuous).
NormResult campanato_seminorm(const StepFunction& f, double p, double q,
                              const Weight& w, const CampanatoOpts& opts = {});
NormResult campanato_seminorm(const StepFunction& f, double p, double q,
                              double lambda, const CampanatoOpts& opts = {});

// Seminorm plus sup_x || f ||_{L_p(B_1(x))} (exact in dim 1).
NormResult campanato_norm(const StepFunction& f, double p, double q,
                          const Weight& w, const CampanatoOpts& opts = {});

// Transform mode: quadrature averages and ball masses, centers on the
// lattice within the search window; certified lower bound.
NormResult campanato_seminorm_ft(const FourierEvaluable& g, double p, double q,
                                 const Weight& w,
                                 const CampanatoOpts& opts = {});

// sup over t = 2^{t_lo}..2^{t_hi} of t^{-alpha} omega(g, t) with the
// sup-modulus sampled on [-span, span]^dim; lower bound of the Lip-alpha
// seminorm of g.
double lip_seminorm_ft(const FourierEvaluable& g, double alpha, int t_lo,
                       int t_hi, double span, int samples_per_axis);

}  // namespace mct

#endif
