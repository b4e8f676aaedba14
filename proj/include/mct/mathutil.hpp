#ifndef MCT_MATHUTIL_HPP
#define MCT_MATHUTIL_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mct {

using cplx = std::complex<double>;

// Raised when inputs or parameter combinations are outside the supported
// domain (trivial spaces, malformed files, impossible representations).
// The command line tool maps this to the usage/config exit code.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// 2^m as an exact double, valid far beyond the int range of shifts.
inline double dyadic(int m) { return std::ldexp(1.0, m); }

// Floor division for signed 64-bit, matching lattice coordinates of dyadic
// cubes (C++ '/' truncates toward zero, which is wrong for negatives).
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// sin(t)/t with the usual series patch near zero.
inline double sinc(double t) {
  if (std::abs(t) < 1e-4) {
    double t2 = t * t;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sin(t) / t;
}

// Sum in a fixed chunked order so results do not depend on thread count.
// Chunks are summed left to right; within a chunk the order is the index
// order.  Used by the parallel kernels to keep reports byte-identical.
double chunked_sum(const std::vector<double>& terms);

// Composite Gauss-Legendre (8 point) on [a,b] split into `panels` equal
// panels.  Exact enough for the smooth factors we integrate.
double gauss_panels(const std::function<double(double)>& f, double a, double b,
                    int panels);

// Golden section minimiser for a unimodal function on [a,b].
double golden_section_min(const std::function<double(double)>& f, double a,
                          double b, double tol);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
};

// Least squares fit of y against x (callers pass logs for log-log slopes).
SlopeFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// ell_q combination of a list of nonnegative terms: q = inf takes the max.
double lq_combine(const std::vector<double>& terms, double q);

// Deterministic 64-bit generator (splitmix64) used for all corpora so that
// identical seeds reproduce identical bytes on any platform.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0,1) with 53 random bits
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + std::int64_t(next() % std::uint64_t(hi - lo + 1));
  }
};

}  // namespace mct

#endif
