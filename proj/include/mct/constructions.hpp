#ifndef MCT_CONSTRUCTIONS_HPP
#define MCT_CONSTRUCTIONS_HPP

#include <map>

#include "mct/fourier.hpp"

namespace mct {

// sum_{k=1}^{N} chi_{(2^k, 2^k+1)} per axis, tensorized: N^dim unit cells.
StepFunction lacunary_product(int N, int dim = 1);

// Exact squared L_2(0,1) norm of the transform of lacunary_product(N, 1),
// expanded into pairwise sinc-correlation integrals; pair distances beyond
// 8192 are dropped (their integrals are O(d^{-2}) and certified negligible).
double lacunary_transform_l2sq(int N);

// +/-1 coefficient sequence of the flat-polynomial recursion
// P_{j+1} = P_j + x^{2^j} Q_j, Q_{j+1} = P_j - x^{2^j} Q_j; length a power
// of two.
std::vector<double> rudin_shapiro(int length);

// Step function sum eps_n chi_{[n, n+1)} with the coefficients above;
// requires N + 1 a power of two.
StepFunction ultraflat_counterexample(int N);

// P(y) = sum_n eps_n e^{-2 pi i n y}; the transform of the step function
// factors as hat f(y) = P(y) e^{-pi i y} sinc(pi y).
cplx coeff_poly_eval(const std::vector<double>& eps, double y);

// Exact || P ||_{L_2(a,b)} via the autocorrelations of eps.
double coeff_poly_l2(const std::vector<double>& eps, double a, double b);

// Exact transform of e^{2 pi i N x} chi_{(1,2)} per axis:
// hat f(s) = e^{-2 pi i (s-N)} (1 - e^{-2 pi i (s-N)}) / (2 pi i (s-N)).
ClosedFormFT modulated_box_transform(double N, int dim = 1);

// chi_{(N, N+1)} per axis.
StepFunction shifted_box(std::int64_t N, int dim = 1);

// Midpoint-sampled |x|^{-gamma - dim/p} / |log |x|| on the ball of radius
// 1/(2 pi); gamma < dim/p' keeps the weighted norm finite.  Default grid
// level -20 in dim 1 and -8 in dim 2.
StepFunction log_singular(double gamma, double p, int dim = 1, int level = 0);

// K unit cells with value k^{-alpha} at [2^{k-1}, 2^{k-1} + 1), k = 1..K.
StepFunction sharpness_example(double alpha, int K);

// The alpha window 1 - 1/s - beta < alpha < 1 - 1/s attached to the
// sharpness family; returned as (lo, hi).
std::pair<double, double> sharpness_window(double s, double beta);

// Nonincreasing radial profile t^{-theta} chi_{(0,1)} sampled at cell
// midpoints; theta < 1.
StepFunction gm_radial(double theta, int level = -16);

// Step brackets of |x|^gamma f: each cell coefficient is multiplied by the
// min (first) resp. max (second) of |x|^gamma over the cell, so any norm of
// |x|^gamma f monotone in |f| lands between the two.  Dim 1.
std::pair<StepFunction, StepFunction> power_weight_brackets(
    const StepFunction& f, double gamma);

// Registry for the command line: name in {lacunary, ultraflat,
// modulated-box, shifted-box, log-singular, sharpness, gm-radial}.  The
// modulated-box entry realizes the underlying box (combine with a
// modulation frequency when transforming).
StepFunction make_family(const std::string& name,
                         const std::map<std::string, double>& params);
std::vector<std::string> family_names();

}  // namespace mct

#endif
