#include "mct/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mct {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int floor_log2(double x) {
  int e = std::ilogb(x);
  return dyadic(e) <= x ? e : e - 1;
}

int ceil_log2(double x) {
  int e = std::ilogb(x);
  return dyadic(e) >= x ? e : e + 1;
}

// (1 + ln nu)^{n+1} nu^{-e} with e = min(1/p, 1/2); increasing up to the
// peak nu = exp((n+1)/e - 1) and decreasing beyond it.
struct NuWeight {
  double e = 0.5;
  int n1 = 2;
  double operator()(double nu) const {
    return std::pow(1.0 + std::log(nu), double(n1)) * std::pow(nu, -e);
  }
  double peak() const { return std::exp(double(n1) / e - 1.0); }
};

struct Segment {
  double lo = 0.0, hi = 0.0;  // nu range (continuous ends, integers inside)
  double a = 0.0, b = 0.0;    // S_nu = a + b nu on the segment
};

// d/dnu log( W(nu) (a + b nu) )
double objective_dlog(const NuWeight& w, const Segment& s, double nu) {
  return (double(w.n1) / (1.0 + std::log(nu)) - w.e) / nu +
         s.b / (s.a + s.b * nu);
}

// sup over integer nu in [1, total count] of W(nu) S_nu for one level.  The
// prefix sum S is linear on each run of equal cube masses, so per segment the
// candidates are the endpoints, the integers flanking interior critical
// points (located by sign changes of the log derivative on a geometric
// grid), and everything when the segment is short enough to enumerate.
void best_nu(const std::vector<MassGroup>& groups, const NuWeight& w,
             double* best, double* arg) {
  std::vector<MassGroup> g(groups);
  std::sort(g.begin(), g.end(), [](const MassGroup& x, const MassGroup& y) {
    return x.value > y.value;
  });
  *best = 0.0;
  *arg = 1.0;
  double cum_count = 0.0, cum_mass = 0.0;
  for (const MassGroup& grp : g) {
    Segment s;
    s.lo = cum_count;
    s.hi = cum_count + grp.count;
    s.b = grp.value;
    s.a = cum_mass - grp.value * cum_count;  // >= 0: S is concave
    cum_count = s.hi;
    cum_mass += grp.value * grp.count;

    double first = std::max(1.0, s.lo + 1.0);
    if (s.hi < first) continue;
    auto consider = [&](double nu) {
      nu = std::floor(nu);
      for (double t : {nu, nu + 1.0}) {
        if (t < first || t > s.hi) continue;
        double val = w(t) * (s.a + s.b * t);
        if (val > *best) {
          *best = val;
          *arg = t;
        }
      }
    };
    if (s.hi - first <= 4096.0 && s.hi < 0x1p52) {
      for (double t = first; t <= s.hi; t += 1.0) consider(t);
      continue;
    }
    consider(first);
    consider(s.hi);
    consider(w.peak());
    // geometric grid, 16 points per e-fold, bisect each derivative sign flip
    double llo = std::log(first), lhi = std::log(s.hi);
    int steps = std::max(2, int(std::ceil((lhi - llo) * 16.0)));
    double prev_nu = first, prev_d = objective_dlog(w, s, first);
    for (int i = 1; i <= steps; ++i) {
      double nu = std::exp(llo + (lhi - llo) * double(i) / double(steps));
      consider(nu);
      double d = objective_dlog(w, s, nu);
      if ((prev_d > 0.0) != (d > 0.0)) {
        // bisect to unit width, stopping early once the floating point grid
        // is coarser than the request (ulp > 0.5 beyond 2^53)
        double a = prev_nu, b2 = nu;
        while (b2 - a > 0.5) {
          double mid = 0.5 * (a + b2);
          if (mid <= a || mid >= b2) break;
          if ((objective_dlog(w, s, mid) > 0.0) == (prev_d > 0.0)) {
            a = mid;
          } else {
            b2 = mid;
          }
        }
        consider(a);
        consider(b2);
      }
      prev_nu = nu;
      prev_d = d;
    }
  }
}

// log2 upper bound for value_m below the enumerated window, for the power
// weight r^{-lambda}: every cube mass at level m <= f.level() is at most
// sup|f| 2^{mn} and S_nu <= ||f||_1, so sup_nu W(nu) S_nu <= ||f||_1 W(nu*)
// with nu* the larger of the crossing count ||f||_1 / (sup|f| 2^{mn}) and
// the W peak.  Log domain keeps deep levels free of under/overflow.
double small_level_bound_log2(double lambda, double p, double l1, double sup,
                              int m, int n, const NuWeight& w) {
  double log2_crossing =
      std::max(0.0, std::log2(l1 / sup) - double(m * n));
  double log2_nu = std::max(log2_crossing, std::log2(w.peak()));
  double log2_w = double(w.n1) * std::log2(1.0 + log2_nu * std::log(2.0)) -
                  w.e * log2_nu;
  return double(m) * (lambda - double(n) / p) + std::log2(l1) + log2_w;
}

Weight weight_times_power(const Weight& u, double a) {
  if (u.is_power()) return Weight::power(u.expo() + a);
  std::map<int, double> t;
  for (int k = u.table_lo(); k <= u.table_hi(); ++k) {
    t[k] = u.at_dyadic(k) * std::pow(dyadic(k), a);
  }
  return Weight::table(std::move(t));
}

// Shared core: scale(m) multiplies the inner sup; power weights carry exact
// geometric tails on both sides, table weights are window restricted.
DResult d_core(const StepFunction& f, double p, double q, const Weight& u,
               const MRange& range) {
  DResult res;
  if (f.empty()) return res;
  const int n = f.dim();
  NuWeight w{std::min(1.0 / p, 0.5), n + 1};
  auto scale = [&](int m) {
    // u(2^{-m}) (2^{mn})^{-1/p}
    return u.at_dyadic(-m) * std::pow(dyadic(m * n), -1.0 / p);
  };

  int m_lo = range.lo, m_hi = range.hi;
  if (!u.is_power()) {
    m_lo = std::max(m_lo, -u.table_hi());
    m_hi = std::min(m_hi, -u.table_lo());
    if (m_lo > m_hi) {
      throw config_error("d_functional: weight table window is disjoint from "
                         "the level range");
    }
    res.lower_bound_only = true;
    res.note = "levels restricted to the weight table window";
  }

  // Enumerate until a single cube holds the whole support so that the large
  // level side continues as an exact geometric series.
  std::vector<double> values;
  bool single_cube = false;
  int m = m_lo;
  for (; m <= m_hi || (u.is_power() && !single_cube && m < m_hi + 64); ++m) {
    std::vector<MassGroup> groups = cell_integrals(f, m);
    double best = 0.0, arg = 1.0;
    best_nu(groups, w, &best, &arg);
    double v = scale(m) * best;
    res.profile.levels.push_back({m, arg, v});
    values.push_back(v);
    if (groups.size() == 1 && groups.front().count == 1.0) single_cube = true;
    if (m >= m_hi && single_cube) break;
  }
  int m_last = res.profile.levels.back().m;

  if (std::isinf(q)) {
    res.value = lq_combine(values, q);
  } else {
    double sum = 0.0;
    for (double v : values) sum += std::pow(v, q);
    if (u.is_power() && single_cube) {
      // beyond m_last the whole support sits in one cube: term(m) =
      // scale(m) ||f||_1 with ratio scale(m+1)/scale(m) = 2^{lambda - n/p}
      double ratio = std::pow(scale(m_last + 1) / scale(m_last), q);
      if (ratio < 1.0) {
        sum += std::pow(scale(m_last + 1) * f.l1_norm(), q) / (1.0 - ratio);
      }
    }
    res.value = std::pow(sum, 1.0 / q);
  }

  if (u.is_power()) {
    // certified envelope for the omitted small levels
    double lambda = -u.expo();
    double l1 = f.l1_norm(), sup = f.sup_norm();
    if (std::isinf(q)) {
      double bound = 0.0;
      for (int mm = m_lo - 1; mm > m_lo - 4000; --mm) {
        double lb = small_level_bound_log2(lambda, p, l1, sup, mm, n, w);
        if (lb < -1060.0) break;
        double b = std::exp2(lb);
        bound = std::max(bound, b);
        if (b < 1e-18 * std::max(res.value, bound)) break;
      }
      if (bound > res.value) {
        res.lower_bound_only = true;
        res.note = "small-level tail bound exceeds the enumerated sup";
      }
      res.tail_estimate = bound;
    } else {
      double tail = 0.0;
      for (int mm = m_lo - 1; mm > m_lo - 4000; --mm) {
        double lb = small_level_bound_log2(lambda, p, l1, sup, mm, n, w);
        if (lb * q < -1060.0) break;
        double b = std::pow(std::exp2(lb), q);
        tail += b;
        if (b < 1e-18 * tail) break;
      }
      res.tail_estimate = std::pow(tail, 1.0 / q);
      if (res.tail_estimate > 1e-12 * res.value) {
        res.lower_bound_only = true;
        res.note = "small-level tail omitted; certified bound reported";
      }
    }
  }
  return res;
}

}  // namespace

std::string DProfile::to_csv() const {
  std::ostringstream out;
  out << "m,best_nu,value_m\n";
  char buf[128];
  for (const DLevel& l : levels) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g\n", l.m, l.best_nu,
                  l.value_m);
    out << buf;
  }
  return out.str();
}

DResult d_functional(const StepFunction& f, double p, double q, double lambda,
                     const MRange& range) {
  if (!(p > 0)) throw config_error("d_functional: p must be positive");
  if (!(q > 0)) throw config_error("d_functional: q must be positive");
  double n = double(f.dim());
  double lo = std::max(0.0, n / p - n / 2.0);
  if (!(lambda > lo) || !(lambda < n / p)) {
    throw config_error(
        "d_functional: needs max(0, n/p - n/2) < lambda < n/p (the "
        "cube-union expression is infinite outside)");
  }
  return d_core(f, p, q, Weight::power(-lambda), range);
}

DResult d_functional_weighted(const StepFunction& f, double p, double q,
                              const Weight& u, const MRange& range) {
  if (!(p > 0)) throw config_error("d_functional_weighted: p must be positive");
  if (!(q > 0)) throw config_error("d_functional_weighted: q must be positive");
  double n = double(f.dim());
  Weight::Doubling dbl = u.doubling(-range.hi, -range.lo);
  if (!dbl.certified) {
    throw config_error(
        "d_functional_weighted: weight is not doubling-certified on the "
        "level window");
  }
  if (u.is_power()) {
    double lambda = -u.expo();
    double lo = std::max(0.0, n / p - n / 2.0);
    if (!(lambda > lo) || !(lambda < n / p)) {
      throw config_error(
          "d_functional_weighted: power weight exponent outside the "
          "admissible window max(0, n/p - n/2) < lambda < n/p");
    }
  }
  if (p < 2.0) {
    XiCheck xc = xi_class_check(weight_times_power(u, n / p - n / 2.0),
                                n, 2.0, q);
    if (!xc.ok && !xc.inconclusive) {
      throw config_error(
          "d_functional_weighted: r^{n/p - n/2} u(r) fails the small-scale "
          "summability check");
    }
  }
  return d_core(f, p, q, u, range);
}

NormResult annulus_rhs(const StepFunction& f, const Weight& v, double q) {
  if (!(q > 0)) throw config_error("annulus_rhs: q must be positive");
  NormResult res;
  if (f.empty()) return res;
  const int n = f.dim();
  double rad = f.support_radius() * (n == 2 ? std::sqrt(2.0) : 1.0);
  int k_hi = ceil_log2(rad);  // annuli with 2^k >= rad carry no mass
  bool touching = f.support_dist_origin() == 0.0;
  int L = f.level();

  std::vector<double> terms;
  double closed = 0.0;  // q < inf: l_q^q mass of the closed small tail
  int k_lo;
  if (!touching) {
    k_lo = floor_log2(f.support_dist_origin());
  } else if (v.is_power()) {
    // below the cell scale the ball mass is exactly kappa t^n, so the
    // annulus terms form a geometric sequence
    k_lo = std::min(L, k_hi);
    double t0 = dyadic(k_lo);
    double kappa = f.lp_mass_on_ball(1.0, {0.0, 0.0}, t0) / std::pow(t0, n);
    double a = v.expo();
    // annulus term at k < L: kappa (2^n - 1) 2^{k(n - a)}
    double edge =
        kappa * (dyadic(n) - 1.0) * std::pow(2.0, double(k_lo - 1) * (double(n) - a));
    if (kappa > 0.0) {
      if (a > double(n) || (a == double(n) && !std::isinf(q))) {
        res.infinite = true;
        res.value = kInf;
        res.note = "small annuli do not decay: support touches the origin "
                   "and 1/v grows at least like r^{-n}";
        return res;
      }
      if (std::isinf(q)) {
        terms.push_back(edge);
      } else {
        double rs = std::pow(2.0, -(double(n) - a) * q);
        closed = std::pow(edge, q) / (1.0 - rs);
      }
    }
  } else {
    k_lo = v.table_lo();
    res.lower_bound_only = true;
    res.note = "small annuli restricted to the weight table window";
  }

  for (int k = k_lo; k < k_hi; ++k) {
    if (!v.covers(k)) {
      res.lower_bound_only = true;
      res.note = "annuli restricted to the weight table window";
      continue;
    }
    terms.push_back(f.lp_mass_on_annulus(1.0, k) / v.at_dyadic(k));
  }
  res.m_lo = k_lo;
  res.m_hi = k_hi - 1;
  if (std::isinf(q)) {
    res.value = lq_combine(terms, q);
  } else {
    double sum = closed;
    for (double t : terms) sum += std::pow(t, q);
    res.value = std::pow(sum, 1.0 / q);
  }
  return res;
}

double campanato_sup_functional(const StepFunction& f, double alpha) {
  if (f.dim() != 1) {
    throw config_error("campanato_sup_functional: dim 1 only");
  }
  if (!(alpha >= 0.0) || !(alpha <= 1.0)) {
    throw config_error("campanato_sup_functional: alpha must be in [0, 1]");
  }
  if (f.empty()) return 0.0;
  const double total = f.l1_norm();
  // int_{-s}^{s} |y| |f(y)| dy with the exact antiderivative y|y|/2
  auto moment_ball = [&](double s) {
    double lo = -s, m = 0.0;
    for (const Piece& pc : pieces_on_interval(f, -s, s)) {
      double hi = lo + pc.len;
      m += std::abs(pc.value) * 0.5 * (hi * std::abs(hi) - lo * std::abs(lo));
      lo = hi;
    }
    return m;
  };
  auto term = [&](double s) {
    double inside = f.lp_mass_on_interval(1.0, -s, s);
    return std::pow(s, alpha - 1.0) * moment_ball(s) +
           std::pow(s, alpha) * (total - inside);
  };
  double d0 = f.support_dist_origin();
  int k_lo = (d0 > 0.0 ? floor_log2(d0) : f.level()) - 42;
  int k_hi = ceil_log2(std::max(1.0, f.support_radius())) + 1;
  double best = 0.0, best_s = dyadic(k_lo);
  for (int k = k_lo; k <= k_hi; ++k) {
    for (int j = 0; j < 16; ++j) {
      double s = dyadic(k) * std::pow(2.0, double(j) / 16.0);
      double t = term(s);
      if (t > best) {
        best = t;
        best_s = s;
      }
    }
  }
  double s0 = golden_section_min([&](double s) { return -term(s); },
                                 best_s * std::pow(2.0, -1.0 / 16.0),
                                 best_s * std::pow(2.0, 1.0 / 16.0),
                                 1e-12 * best_s);
  return std::max(best, term(s0));
}

GmResult gm_constant(const StepFunction& f0, double dilation, double window_lo,
                     double window_hi) {
  if (f0.dim() != 1) throw config_error("gm_constant: dim 1 only");
  if (!(dilation > 1.0)) {
    throw config_error("gm_constant: dilation must exceed 1");
  }
  if (!(window_lo > 0.0) || !(window_hi > window_lo)) {
    throw config_error("gm_constant: window must satisfy 0 < lo < hi");
  }
  GmResult res;
  if (f0.empty()) return res;

  // jump positions and magnitudes on the positive axis
  std::vector<std::pair<double, double>> jumps;
  const auto& cs = f0.cells();
  double h = dyadic(f0.level());
  auto add_jump = [&](double x, double sz) {
    if (x > 0.0 && sz > 0.0) jumps.push_back({x, sz});
  };
  for (std::size_t i = 0; i < cs.size(); ++i) {
    double lo = h * double(cs[i].k[0]);
    double hi = lo + h;
    if (i == 0 || cs[i - 1].k[0] + 1 != cs[i].k[0]) {
      add_jump(lo, std::abs(cs[i].c));
      if (i > 0) add_jump(h * double(cs[i - 1].k[0] + 1),
                          std::abs(cs[i - 1].c));
    } else {
      add_jump(lo, std::abs(cs[i].c - cs[i - 1].c));
    }
    if (i + 1 == cs.size()) add_jump(hi, std::abs(cs[i].c));
  }

  auto variation = [&](double x) {  // jumps within the closed [x, 2x]
    double v = 0.0;
    for (const auto& j : jumps) {
      if (j.first >= x && j.first <= 2.0 * x) v += j.second;
    }
    return v;
  };
  auto ratio = [&](double x) -> double {
    double v = variation(x);
    if (v == 0.0) return 0.0;
    double mass = f0.lp_mass_on_interval(1.0, x / dilation, x * dilation);
    if (mass == 0.0) return kInf;
    return x * v / mass;
  };

  std::vector<double> candidates;
  auto push = [&](double x) {
    if (x >= window_lo && x <= window_hi) candidates.push_back(x);
  };
  push(window_lo);
  push(window_hi);
  for (const auto& j : jumps) {
    push(j.first);
    push(j.first * 0.5);
    push(j.first * dilation);
    push(j.first / dilation);
  }
  double octaves = std::log2(window_hi / window_lo);
  int steps = std::max(2, int(std::ceil(octaves * 64.0)));
  for (int i = 0; i <= steps; ++i) {
    push(window_lo * std::pow(window_hi / window_lo, double(i) / steps));
  }

  double best = 0.0, best_x = window_lo;
  for (double x : candidates) {
    double r = ratio(x);
    if (std::isinf(r)) {
      res.infinite = true;
      res.witness_x = x;
      res.constant = kInf;
      return res;
    }
    if (r > best) {
      best = r;
      best_x = x;
    }
  }
  double x0 = golden_section_min([&](double x) { return -ratio(x); },
                                 best_x * std::pow(2.0, -1.0 / 64.0),
                                 best_x * std::pow(2.0, 1.0 / 64.0),
                                 1e-12 * best_x);
  res.constant = std::max(best, ratio(x0));
  res.witness_x = ratio(x0) > best ? x0 : best_x;
  return res;
}

WeightConditionReport campanato_weight_conditions(const Weight& v,
                                                  const Weight& w, double p,
                                                  int dim, int window_lo,
                                                  int window_hi) {
  if (!(p > 0)) {
    throw config_error("campanato_weight_conditions: p must be positive");
  }
  WeightConditionReport rep;
  double np = double(dim) / p;

  if (v.is_power() && w.is_power()) {
    // r^{n/p} w(r) v(1/r) = r^{n/p + w_expo - v_expo}
    double e1 = np + w.expo() - v.expo();
    rep.product_ok = std::abs(e1) <= 1e-12;
    rep.product_constant =
        std::max(std::pow(dyadic(window_lo), e1), std::pow(dyadic(window_hi), e1));
    double av = v.expo();
    rep.head_ok = av > -1.0;  // sum 2^{k(1+av)} geometric from below
    rep.head_constant = rep.head_ok ? 1.0 / (1.0 - std::pow(2.0, -(1.0 + av)))
                                    : 0.0;
    rep.tail_ok = av < 0.0;  // sum 2^{k av} geometric from above
    rep.tail_constant = rep.tail_ok ? 1.0 / (1.0 - std::pow(2.0, av)) : 0.0;
    rep.detail = "power weights decided by exponents";
    return rep;
  }

  // table route: window evidence only
  rep.inconclusive = true;
  double prod = 0.0;
  for (int k = window_lo; k <= window_hi; ++k) {
    if (!w.covers(k) || !v.covers(-k)) continue;
    prod = std::max(prod,
                    std::pow(dyadic(k), np) * w.at_dyadic(k) * v.at_dyadic(-k));
  }
  rep.product_constant = prod;
  rep.product_ok = true;  // finite on the window; nothing beyond is claimed
  double head_best = 0.0, tail_best = 0.0;
  for (int m = window_lo; m <= window_hi; ++m) {
    if (!v.covers(m)) continue;
    double head = 0.0, tail = 0.0;
    for (int k = window_lo; k <= window_hi; ++k) {
      if (!v.covers(k)) continue;
      if (k <= m) head += dyadic(k) * v.at_dyadic(k);
      if (k >= m) tail += v.at_dyadic(k);
    }
    head_best = std::max(head_best, head / (dyadic(m) * v.at_dyadic(m)));
    tail_best = std::max(tail_best, tail / v.at_dyadic(m));
  }
  rep.head_constant = head_best;
  rep.tail_constant = tail_best;
  rep.head_ok = head_best > 0.0;
  rep.tail_ok = tail_best > 0.0;
  rep.detail = "table weights: window constants only, boundedness beyond the "
               "window not certified";
  return rep;
}

double weighted_lp_norm(const StepFunction& f, double a, double p) {
  if (f.dim() != 1) throw config_error("weighted_lp_norm: dim 1 only");
  if (f.empty()) return 0.0;
  double h = dyadic(f.level());
  if (std::isinf(p)) {
    double best = 0.0;
    for (const Cell& c : f.cells()) {
      double lo = h * double(c.k[0]), hi = lo + h;
      double alo = std::min(std::abs(lo), std::abs(hi));
      double ahi = std::max(std::abs(lo), std::abs(hi));
      if (lo < 0.0 && hi > 0.0) alo = 0.0;
      double wsup;
      if (a >= 0.0) {
        wsup = std::pow(ahi, a);
      } else if (alo == 0.0) {
        return kInf;
      } else {
        wsup = std::pow(alo, a);
      }
      best = std::max(best, wsup * std::abs(c.c));
    }
    return best;
  }
  double e = a * p + 1.0;
  // int_0^t x^{a p} dx, valid piecewise on one sign side of the origin
  auto prim = [&](double t) {
    return std::copysign(std::pow(std::abs(t), e), t) / e;
  };
  double mass = 0.0;
  for (const Cell& c : f.cells()) {
    double lo = h * double(c.k[0]), hi = lo + h;
    double w;
    if (e <= 0.0 && lo <= 0.0 && hi >= 0.0) {
      throw config_error(
          "weighted_lp_norm: weight not integrable where the support "
          "touches the origin");
    }
    if (lo >= 0.0 || hi <= 0.0) {
      w = std::abs(prim(hi) - prim(lo));
    } else {
      w = std::abs(prim(hi)) + std::abs(prim(lo));
    }
    mass += w * std::pow(std::abs(c.c), p);
  }
  return std::pow(mass, 1.0 / p);
}

}  // namespace mct
