#ifndef MCT_LORENTZ_HPP
#define MCT_LORENTZ_HPP

#include "mct/dyadic.hpp"

namespace mct {

// Decreasing rearrangement of a step function as value/measure spans:
// f*(t) = value[i] for t in [cum[i-1], cum[i]).
struct DistSpans {
  std::vector<double> value;  // strictly decreasing positive values
  std::vector<double> cum;    // cumulative measures, same length
  double total_mass = 0.0;    // integral of f*, i.e. the L1 norm

  double star(double t) const;       // f*(t)
  double star_star(double t) const;  // (1/t) int_0^t f*
};

DistSpans distribution_spans(const StepFunction& f);

struct LorentzResult {
  double value = 0.0;
  bool infinite = false;
};

// L_{p,q} norm computed exactly from the spans.  With maximal = true the
// rearrangement f* is replaced by the maximal function f** (larger, and the
// form some inequalities are stated in).
LorentzResult lorentz_norm(const StepFunction& f, double p, double q,
                           bool maximal = false);

// || v f** ||_{L_q(0, inf)} for a power weight v(x) = x^expo.  Head and tail
// are closed forms; the finitely many middle spans use high order panels in
// log scale.
LorentzResult gamma_norm(const StepFunction& f, double expo, double q);

// int_a^b (x^expo f**(x))^q dx over 0 < a < b < inf, split at the span
// boundaries so each piece integrates the exact form x^expo (A/x + B).
double maximal_lq_integral(const DistSpans& d, double a, double b, double expo,
                           double q);

}  // namespace mct

#endif
