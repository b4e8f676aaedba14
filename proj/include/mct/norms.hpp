#ifndef MCT_NORMS_HPP
#define MCT_NORMS_HPP

#include <limits>
#include <map>
#include <optional>
#include <string>

#include "mct/fourier.hpp"
#include "mct/lorentz.hpp"

namespace mct {

// Shared exponent bundle for the scale-indexed spaces on R^n.
struct NormParams {
  double p = 2.0;
  double q = std::numeric_limits<double>::infinity();
  double lambda = 0.25;
  int dim = 1;

  double s() const;       // 1/s = 1/p - lambda/n, requires 1/s > 0
  double s_conj() const;  // s' = s/(s-1), requires s > 1
  double beta() const;    // lambda - max(0, n/p - n/2)
  double alpha() const;   // lambda - n/p
  void validate() const;  // positivity and dimension checks
};

// Positive weight on (0, inf), either r^expo or a table of dyadic values
// w(2^k) on a finite window.
class Weight {
 public:
  static Weight power(double expo);
  static Weight table(std::map<int, double> values);

  bool is_power() const { return expo_.has_value(); }
  double expo() const;            // power weights only
  double at_dyadic(int k) const;  // w(2^k); table weights require k in window
  bool covers(int k) const;
  int table_lo() const;  // table weights only
  int table_hi() const;

  struct Doubling {
    bool certified = false;
    double constant = 0.0;  // max of w(2^k)/w(2^{k+1}) and its reciprocal
  };
  Doubling doubling(int k_lo, int k_hi) const;

 private:
  Weight() = default;
  std::optional<double> expo_;
  std::map<int, double> table_;
};

struct NormResult {
  double value = 0.0;
  bool infinite = false;
  // True when the value is a finite sub-supremum (quadrature mode, or a
  // weight table restricting the level window).
  bool lower_bound_only = false;
  double tail_estimate = 0.0;  // exact modes: tail mass already included
  int m_lo = 0;                // levels enumerated term by term
  int m_hi = 0;
  double refinement_delta = 0.0;  // quadrature modes only
  std::string note;
};

// Morrey norm over grid-aligned dyadic cubes, exact for step functions: at
// each level the sup over cubes is a finite max, and both level tails are
// geometric series summed in closed form.
NormResult morrey_norm(const StepFunction& f, double p, double q,
                       double lambda);

// Same with w(2^m) in place of 2^{-m lambda}.  Power weights get the full
// closed-form treatment; table weights are evaluated on their window only
// and the result is flagged as a lower bound.
NormResult morrey_norm(const StepFunction& f, double p, double q,
                       const Weight& w);

// Ball convention, dim 1 only: sup_x || f ||_{L_p(B_r(x))} is an exact
// sliding-window sup, evaluated at dyadic radii with closed-form tails.
double morrey_ball_term(const StepFunction& f, double p, double r);
NormResult morrey_ball_norm(const StepFunction& f, double p, double q,
                            double lambda);

// Continuous-radius form, dim 1 only: geometric r samples (per_octave per
// octave) between the closed-form head and tail regimes.  Serves as the
// independent oracle for the dyadic discretizations.
NormResult morrey_dense_norm(const StepFunction& f, double p, double q,
                             double lambda, int per_octave = 64);

// Balls centered at the origin; exact at dyadic radii with a closed-form
// small-radius tail when the support touches the origin.
NormResult local_morrey_norm(const StepFunction& f, double p, double q,
                             double lambda);

// l_q over dyadic annuli B_{2^{k+1}} \ B_{2^k} of 2^{lambda k} times the
// local L_p norm; the annuli meet the support in finitely many k.
NormResult truncated_norm(const StepFunction& f, double lambda, double q,
                          double p);

// Membership test for the weight class requiring
//   || r^{k/p - 1/q} u ||_{L_q(0, eps)} < inf   and
//   || r^{-1/q} u ||_{L_q(eps, inf)} < inf,
// decided by geometric ratio tests on dyadic blocks of the window.
struct XiCheck {
  bool ok = false;
  bool inconclusive = false;
  double head_ratio = 0.0;  // block growth toward r -> 0
  double tail_ratio = 0.0;  // block growth toward r -> inf
  std::string detail;
};
XiCheck xi_class_check(const Weight& u, double k, double p, double q,
                       int window_lo = -24, int window_hi = 24);

// || v f** ||_{L_q(0, inf)} for a general weight; power weights delegate to
// the closed-form spans, table weights integrate blockwise on their window.
LorentzResult gamma_norm_weighted(const StepFunction& f, const Weight& v,
                                  double q);

// Quadrature Morrey norm of a transform: levels [m_lo, m_hi], cubes within
// [-search_radius, search_radius]^n, midpoint rule with `resolution` points
// per axis.  The result is a lower bound of the defining sup (finite level
// window, finite cube window); weight_expo multiplies the integrand by
// |y|^{weight_expo}.
struct FtNormOpts {
  int m_lo = -6;
  int m_hi = 6;
  int resolution = 64;
  double search_radius = 8.0;
  double weight_expo = 0.0;
  bool parallel = true;
};

// Per-level cube suprema of the quadrature masses.  The profile depends on
// (g, p, weight_expo, resolution) but not on (q, lambda), so one profile
// serves every lambda in a sweep.
struct FtLevelProfile {
  double p = 2.0;
  std::vector<int> m;
  std::vector<double> sup_mass;  // max over cubes of int_Q (|y|^a |g|)^p dy
};
FtLevelProfile ft_level_profile(const FourierEvaluable& g, double p,
                                const FtNormOpts& opts);
NormResult morrey_norm_from_profile(const FtLevelProfile& prof, double q,
                                    double lambda);
NormResult morrey_norm_ft(const FourierEvaluable& g, double p, double q,
                          double lambda, const FtNormOpts& opts);

}  // namespace mct

#endif
