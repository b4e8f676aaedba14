#include "mct/mathutil.hpp"

#include <algorithm>
#include <limits>

namespace mct {

double chunked_sum(const std::vector<double>& terms) {
  const std::size_t kChunk = 1024;
  double total = 0.0;
  for (std::size_t base = 0; base < terms.size(); base += kChunk) {
    double part = 0.0;
    std::size_t end = std::min(terms.size(), base + kChunk);
    for (std::size_t i = base; i < end; ++i) part += terms[i];
    total += part;
  }
  return total;
}

namespace {
// 8-point Gauss-Legendre nodes/weights on [-1,1].
const double kNodes[8] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
const double kWeights[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};
}  // namespace

double gauss_panels(const std::function<double(double)>& f, double a, double b,
                    int panels) {
  if (panels < 1) panels = 1;
  double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    double mid = a + (p + 0.5) * h;
    double half = 0.5 * h;
    double part = 0.0;
    for (int i = 0; i < 8; ++i) part += kWeights[i] * f(mid + half * kNodes[i]);
    sum += part * half;
  }
  return sum;
}

double golden_section_min(const std::function<double(double)>& f, double a,
                          double b, double tol) {
  const double phi = 0.6180339887498949;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

SlopeFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw config_error("fit_line: need at least two points");
  std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw config_error("fit_line: degenerate abscissae");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (n > 2) {
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = y[i] - (fit.intercept + fit.slope * x[i]);
      ss += r * r;
    }
    fit.stderr_slope = std::sqrt(ss / double(n - 2) / sxx);
  }
  return fit;
}

double lq_combine(const std::vector<double>& terms, double q) {
  if (std::isinf(q)) {
    double m = 0.0;
    for (double t : terms) m = std::max(m, t);
    return m;
  }
  if (!(q > 0)) throw config_error("lq_combine: q must be positive");
  std::vector<double> powed(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    powed[i] = std::pow(terms[i], q);
  double s = chunked_sum(powed);
  return std::pow(s, 1.0 / q);
}

}  // namespace mct
