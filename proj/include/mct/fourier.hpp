#ifndef MCT_FOURIER_HPP
#define MCT_FOURIER_HPP

#include <functional>
#include <memory>

#include "mct/dyadic.hpp"

namespace mct {

// Convention: hat f(y) = int f(x) e^{-2 pi i (x,y)} dx.

class FourierEvaluable {
 public:
  virtual ~FourierEvaluable() = default;
  virtual int dim() const = 0;
  virtual cplx ft_point(const std::array<double, 2>& y) const = 0;
  cplx ft_point1(double y) const { return ft_point({y, 0.0}); }
};

// Exact transform of a step function, optionally premodulated by
// e^{2 pi i (freq, x)} (which shifts the transform by freq).  Per cell the
// transform factors into sinc profiles and a phase, so evaluation is a
// single pass over the cells.
class StepFT : public FourierEvaluable {
 public:
  explicit StepFT(StepFunction f, std::array<double, 2> freq = {0.0, 0.0})
      : f_(std::move(f)), freq_(freq) {}
  int dim() const override { return f_.dim(); }
  cplx ft_point(const std::array<double, 2>& y) const override;
  const StepFunction& base() const { return f_; }
  const std::array<double, 2>& modulation() const { return freq_; }

 private:
  StepFunction f_;
  std::array<double, 2> freq_;
};

// Wraps a closed-form transform (used for analytic cross-checks).
class ClosedFormFT : public FourierEvaluable {
 public:
  ClosedFormFT(int dim, std::function<cplx(const std::array<double, 2>&)> fn)
      : dim_(dim), fn_(std::move(fn)) {}
  int dim() const override { return dim_; }
  cplx ft_point(const std::array<double, 2>& y) const override {
    return fn_(y);
  }

 private:
  int dim_;
  std::function<cplx(const std::array<double, 2>&)> fn_;
};

// Batch evaluation; the parallel path uses OpenMP when available and is
// bitwise identical to the serial one (points are independent).
std::vector<cplx> ft_points(const FourierEvaluable& g,
                            const std::vector<std::array<double, 2>>& pts,
                            bool parallel);
std::vector<cplx> ft_points_serial(const FourierEvaluable& g,
                                   const std::vector<std::array<double, 2>>& pts);

struct QuadOpts {
  int resolution = 64;   // midpoints per axis
  double weight_expo = 0.0;  // integrand carries |y|^{weight_expo}
  bool parallel = true;
};

// Midpoint quadrature of int_Q | |y|^a g(y) |^p dy (p = inf: max over the
// midpoints).  Deterministic summation order.
double ft_lp_mass_on_cube(const FourierEvaluable& g, double p,
                          const DyadicCube& q, const QuadOpts& opts);

// Mean of g over the ball B_r(center); dim 1 uses the midpoint rule on the
// interval, dim 2 weights grid boxes by their exact disk overlap.
cplx ft_average_on_ball(const FourierEvaluable& g,
                        const std::array<double, 2>& center, double r,
                        int resolution);

// Quadrature of int_{B_r(center)} |g - shift|^p with the same weighting.
double ft_lp_mass_on_ball(const FourierEvaluable& g, double p,
                          const std::array<double, 2>& center, double r,
                          cplx shift, int resolution);

// sup over sampled pairs of |g(x+h) - g(x)| with |h| <= t; a lower bound
// for the uniform modulus of continuity on [-span, span]^dim.
double ft_modulus_sup(const FourierEvaluable& g, double t, double span,
                      int samples_per_axis);

}  // namespace mct

#endif
