#ifndef MCT_FUNCTIONALS_HPP
#define MCT_FUNCTIONALS_HPP

#include "mct/norms.hpp"

namespace mct {

// Level window for the cube-union functional; both ends inclusive.
struct MRange {
  int lo = -64;
  int hi = 32;
};

struct DLevel {
  int m = 0;
  double best_nu = 1.0;
  double value_m = 0.0;
};

struct DProfile {
  std::vector<DLevel> levels;
  std::string to_csv() const;  // header m,best_nu,value_m
};

struct DResult {
  double value = 0.0;
  double tail_estimate = 0.0;  // certified bound on the omitted small levels
  bool lower_bound_only = false;
  DProfile profile;
  std::string note;
};

// Cube-union functional: per level m the cubes' |f| integrals are sorted and
// the best union of nu cubes is a prefix sum, so
//   value_m = (2^{mn})^{lambda/n - 1/p} sup_nu (1 + ln nu)^{n+1}
//             nu^{-min(1/p, 1/2)} S_nu,
// aggregated in l_q over m.  Requires
// max(0, n/p - n/2) < lambda < n/p; the expression is infinite outside.
DResult d_functional(const StepFunction& f, double p, double q, double lambda,
                     const MRange& range = {});

// Weight u(2^{-m}) (2^{mn})^{-1/p} in place of the power of the cube size.
// Requires a doubling certificate for u on the level window, and for p < 2
// additionally that r^{n/p - n/2} u(r) passes the small-scale summability
// check.  u(r) = r^{-lambda} reproduces d_functional exactly.
DResult d_functional_weighted(const StepFunction& f, double p, double q,
                              const Weight& u, const MRange& range = {});

// (sum_k (v(2^k)^{-1} int_{B_{2^{k+1}} \ B_{2^k}} |f|)^q)^{1/q}, annulus
// masses exact; for power v the small-annulus tail of a support touching the
// origin is a closed-form geometric series.
NormResult annulus_rhs(const StepFunction& f, const Weight& v, double q);

// sup over s > 0 of s^{alpha-1} int_{B_s} |y| |f| + s^alpha int_{B_s^c} |f|,
// dim 1, both integrals exact; dyadic scan plus a 16-per-octave refinement
// around the argmax.
double campanato_sup_functional(const StepFunction& f, double alpha);

struct GmResult {
  double constant = 0.0;
  bool infinite = false;  // some x has jump variation against zero mass
  double witness_x = 0.0;
};

// Smallest C on the window with int_{[x,2x]} |d f0| <= (C/x)
// int_{x/dilation}^{x dilation} |f0|: jump sums are exact, the sup over x
// scans interval breakpoints plus a geometric grid with local polish.
GmResult gm_constant(const StepFunction& f0, double dilation,
                     double window_lo = 0x1p-10, double window_hi = 0x1p10);

struct WeightConditionReport {
  bool product_ok = false;  // sup_r r^{n/p} w(r) v(1/r) bounded
  bool head_ok = false;     // sum_{k<=m} 2^k v(2^k) <= C 2^m v(2^m)
  bool tail_ok = false;     // sum_{k>=m} v(2^k) <= C v(2^m)
  bool inconclusive = false;
  double product_constant = 0.0;
  double head_constant = 0.0;
  double tail_constant = 0.0;
  std::string detail;
};

// The three admissibility conditions coupling the annulus weight v to the
// oscillation weight w; power weights are decided by their exponents, table
// weights on their window with ratio certificates.
WeightConditionReport campanato_weight_conditions(const Weight& v,
                                                  const Weight& w, double p,
                                                  int dim = 1,
                                                  int window_lo = -24,
                                                  int window_hi = 24);

// (int |x|^{a p} |f|^p)^{1/p}, exact for 1-D step functions; p = inf gives
// sup |x|^a |f| over the support, also exact.
double weighted_lp_norm(const StepFunction& f, double a, double p);

}  // namespace mct

#endif
