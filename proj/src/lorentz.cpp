#include "mct/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mct {

double DistSpans::star(double t) const {
  if (t < 0) throw config_error("f* argument must be nonnegative");
  for (std::size_t i = 0; i < value.size(); ++i)
    if (t < cum[i]) return value[i];
  return 0.0;
}

double DistSpans::star_star(double t) const {
  if (!(t > 0)) throw config_error("f** argument must be positive");
  double acc = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (t <= cum[i]) return (acc + value[i] * (t - prev)) / t;
    acc += value[i] * (cum[i] - prev);
    prev = cum[i];
  }
  return acc / t;
}

DistSpans distribution_spans(const StepFunction& f) {
  std::map<double, double, std::greater<double>> meas;  // |value| -> measure
  double vol = f.cell_volume();
  for (const auto& cell : f.cells()) {
    double a = std::abs(cell.c);
    if (a > 0) meas[a] += vol;
  }
  DistSpans d;
  double cum = 0.0;
  for (const auto& [v, m] : meas) {
    cum += m;
    d.value.push_back(v);
    d.cum.push_back(cum);
    d.total_mass += v * m;
  }
  return d;
}

namespace {

// int over one span of (x^{c1} (A/x + B))^q dx in log scale; the integrand
// is smooth so a few Gauss panels per octave are plenty.
double span_integral(double a, double b, double c1, double A, double B,
                     double q) {
  auto fn = [&](double u) {
    double x = std::exp(u);
    double val = std::pow(x, c1) * (A / x + B);
    return std::pow(val, q) * x;  // dx = x du
  };
  double la = std::log(a), lb = std::log(b);
  int panels = std::max(4, int(std::ceil((lb - la) * 6)));
  return gauss_panels(fn, la, lb, panels);
}

}  // namespace

LorentzResult lorentz_norm(const StepFunction& f, double p, double q,
                           bool maximal) {
  if (!(p > 0)) throw config_error("lorentz_norm: p must be positive");
  DistSpans d = distribution_spans(f);
  LorentzResult out;
  if (d.value.empty()) return out;
  std::size_t K = d.value.size();

  if (!maximal) {
    if (std::isinf(q)) {
      for (std::size_t i = 0; i < K; ++i)
        out.value = std::max(out.value,
                             d.value[i] * std::pow(d.cum[i], 1.0 / p));
      return out;
    }
    if (!(q > 0)) throw config_error("lorentz_norm: q must be positive");
    double sum = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < K; ++i) {
      sum += std::pow(d.value[i], q) * (p / q) *
             (std::pow(d.cum[i], q / p) - std::pow(prev, q / p));
      prev = d.cum[i];
    }
    out.value = std::pow(sum, 1.0 / q);
    return out;
  }

  // f** version.  On span i, f**(t) = A_i/t + B_i with the constants below;
  // past the support f**(t) = total_mass / t.
  std::vector<double> A(K), B(K);
  double acc = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < K; ++i) {
    A[i] = acc - d.value[i] * prev;
    B[i] = d.value[i];
    acc += d.value[i] * (d.cum[i] - prev);
    prev = d.cum[i];
  }
  double S = d.total_mass;
  double W = d.cum.back();

  if (std::isinf(q)) {
    // head span: f** is the constant v_1, so t^{1/p} f** peaks at the right
    // end; later spans can peak at either end or at one interior point
    double best = 0.0;
    prev = 0.0;
    for (std::size_t i = 0; i < K; ++i) {
      auto val = [&](double t) {
        return std::pow(t, 1.0 / p) * (A[i] / t + B[i]);
      };
      best = std::max(best, val(d.cum[i]));
      if (i > 0) {
        best = std::max(best, val(prev));
        if (B[i] > 0 && p > 1) {
          double tc = A[i] * (p - 1) / B[i];
          if (tc > prev && tc < d.cum[i]) best = std::max(best, val(tc));
        }
      }
      prev = d.cum[i];
    }
    if (p > 1)
      best = std::max(best, std::pow(W, 1.0 / p - 1.0) * S);
    else
      best = std::max(best, S);  // p = 1: sup_t t f**(t) = total mass
    out.value = best;
    return out;
  }

  if (!(q > 0)) throw config_error("lorentz_norm: q must be positive");
  // head span is exact, middle spans use panels, tail is exact;
  // integrand (t^{1/p} f**)^q dt/t = (t^{1/p - 1/q} f**)^q dt
  double sum = std::pow(d.value[0], q) * (p / q) * std::pow(d.cum[0], q / p);
  for (std::size_t i = 1; i < K; ++i)
    sum += span_integral(d.cum[i - 1], d.cum[i], 1.0 / p - 1.0 / q, A[i], B[i],
                         q);
  if (p <= 1) {
    out.infinite = true;  // tail (S/t) t^{1/p} is not q-integrable against dt/t
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  sum += std::pow(S, q) * std::pow(W, (1.0 / p - 1.0) * q) /
         ((1.0 - 1.0 / p) * q);
  out.value = std::pow(sum, 1.0 / q);
  return out;
}

LorentzResult gamma_norm(const StepFunction& f, double expo, double q) {
  DistSpans d = distribution_spans(f);
  LorentzResult out;
  if (d.value.empty()) return out;
  std::size_t K = d.value.size();
  std::vector<double> A(K), B(K);
  double acc = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < K; ++i) {
    A[i] = acc - d.value[i] * prev;
    B[i] = d.value[i];
    acc += d.value[i] * (d.cum[i] - prev);
    prev = d.cum[i];
  }
  double S = d.total_mass;
  double W = d.cum.back();
  double a = expo;

  if (std::isinf(q)) {
    double best = 0.0;
    if (a < 0) {
      out.infinite = true;  // x^a f** blows up at the origin
      out.value = std::numeric_limits<double>::infinity();
      return out;
    }
    best = d.value[0] * std::pow(d.cum[0], a);  // head, increasing in x
    prev = d.cum[0];
    for (std::size_t i = 1; i < K; ++i) {
      auto val = [&](double x) {
        return std::pow(x, a) * (A[i] / x + B[i]);
      };
      best = std::max(best, val(prev));
      best = std::max(best, val(d.cum[i]));
      if (a > 0 && a < 1 && B[i] > 0 && A[i] > 0) {
        double xc = A[i] * (1.0 - a) / (B[i] * a);
        if (xc > prev && xc < d.cum[i]) best = std::max(best, val(xc));
      }
      prev = d.cum[i];
    }
    if (a < 1) {
      best = std::max(best, S * std::pow(W, a - 1.0));
    } else if (a == 1.0) {
      best = std::max(best, S);
    } else {
      out.infinite = true;  // tail x^{a-1} S grows
      out.value = std::numeric_limits<double>::infinity();
      return out;
    }
    out.value = best;
    return out;
  }

  if (!(q > 0)) throw config_error("gamma_norm: q must be positive");
  if (a * q + 1.0 <= 0.0) {
    out.infinite = true;
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  double sum = std::pow(d.value[0], q) * std::pow(d.cum[0], a * q + 1.0) /
               (a * q + 1.0);
  for (std::size_t i = 1; i < K; ++i)
    sum += span_integral(d.cum[i - 1], d.cum[i], a, A[i], B[i], q);
  if ((a - 1.0) * q + 1.0 >= 0.0) {
    out.infinite = true;  // (x^{a-1} S)^q not integrable at infinity
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  sum += std::pow(S, q) * std::pow(W, (a - 1.0) * q + 1.0) /
         (-((a - 1.0) * q + 1.0));
  out.value = std::pow(sum, 1.0 / q);
  return out;
}

double maximal_lq_integral(const DistSpans& d, double a, double b, double expo,
                           double q) {
  if (!(a > 0.0) || !(b > a))
    throw config_error("maximal_lq_integral: need 0 < a < b");
  if (!(q > 0) || std::isinf(q))
    throw config_error("maximal_lq_integral: q must be positive and finite");
  if (d.value.empty()) return 0.0;
  double sum = 0.0, acc = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < d.value.size(); ++i) {
    double A = acc - d.value[i] * prev;
    double B = d.value[i];
    double lo = std::max(a, prev), hi = std::min(b, d.cum[i]);
    if (hi > lo) sum += span_integral(lo, hi, expo, A, B, q);
    acc += d.value[i] * (d.cum[i] - prev);
    prev = d.cum[i];
  }
  if (b > prev) {
    // beyond the support measure f** = total_mass / x exactly
    double lo = std::max(a, prev);
    sum += span_integral(lo, b, expo, d.total_mass, 0.0, q);
  }
  return sum;
}

}  // namespace mct
