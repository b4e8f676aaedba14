#include "mct/campanato.hpp"

#include <algorithm>
#include <cmath>

namespace mct {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

NormResult infinite_result(std::string note) {
  NormResult r;
  r.infinite = true;
  r.value = kInf;
  r.note = std::move(note);
  return r;
}

// Largest coefficient jump across adjacent cell boundaries; the edges of the
// support jump to zero and count as well.  Dim 1, cells sorted by index.
double max_jump_1d(const StepFunction& f) {
  const auto& cs = f.cells();
  if (cs.empty()) return 0.0;
  double best = std::abs(cs.front().c);
  for (std::size_t i = 1; i < cs.size(); ++i) {
    if (cs[i].k[0] == cs[i - 1].k[0] + 1) {
      best = std::max(best, std::abs(cs[i].c - cs[i - 1].c));
    } else {
      best = std::max(best, std::abs(cs[i - 1].c));
      best = std::max(best, std::abs(cs[i].c));
    }
  }
  return std::max(best, std::abs(cs.back().c));
}

// A window of width 2r that meets exactly one jump of height d splits into a
// fraction s on one side and 1-s on the other; subtracting the window mean
// leaves the mass 2r d^p (s(1-s)^p + (1-s)s^p).  This returns the maximum of
// the bracket over s, to the power 1/p.
double split_factor(double p) {
  auto neg = [p](double s) {
    return -(s * std::pow(1.0 - s, p) + (1.0 - s) * std::pow(s, p));
  };
  double s0 = golden_section_min(neg, 0.0, 1.0, 1e-12);
  double best = std::max(-neg(s0), -neg(0.5));
  return std::pow(best, 1.0 / p);
}

// Upper bound for sup_x || f - A_r f(x) ||_{L_p(B_r(x))} at radius r = 2^k:
// Minkowski plus |A| <= ||f||_1 / |B_r| (needs p >= 1).
double oscillation_upper(const StepFunction& f, double p, int k) {
  double ball = f.dim() == 1 ? dyadic(k + 1) : dyadic(2 * k);
  return f.lp_norm(p) + f.l1_norm() * std::pow(ball, 1.0 / p - 1.0);
}

int ceil_log2(double x) {
  int e = std::ilogb(x);
  return dyadic(e) >= x ? e : e + 1;
}

}  // namespace

cplx ball_average(const StepFunction& f, const std::array<double, 2>& center,
                  double r) {
  if (!(r > 0.0)) throw config_error("ball_average: radius must be positive");
  if (f.dim() == 1) {
    return f.integral_on_interval(center[0] - r, center[0] + r) / (2.0 * r);
  }
  const double pi = 4.0 * std::atan(1.0);
  return f.integral_on_ball(center, r) / (pi * r * r);
}

double lp_dist_const_on_ball(const StepFunction& f, double p,
                             const std::array<double, 2>& center, double r,
                             cplx c) {
  if (!(p > 0) || std::isinf(p)) {
    throw config_error("lp_dist_const_on_ball: p must be positive and finite");
  }
  if (!(r > 0.0)) {
    throw config_error("lp_dist_const_on_ball: radius must be positive");
  }
  if (f.dim() == 1) {
    double mass = 0.0;
    for (const Piece& pc : pieces_on_interval(f, center[0] - r, center[0] + r)) {
      mass += pc.len * std::pow(std::abs(pc.value - c), p);
    }
    return mass;
  }
  const double pi = 4.0 * std::atan(1.0);
  double side = f.cell_volume() == 0.0 ? 0.0 : dyadic(f.level());
  double covered = 0.0, mass = 0.0;
  for (const Cell& cell : f.cells()) {
    double ax = side * double(cell.k[0]);
    double ay = side * double(cell.k[1]);
    double a = rect_disk_area(ax, ax + side, ay, ay + side, center, r);
    if (a > 0.0) {
      covered += a;
      mass += a * std::pow(std::abs(cell.c - c), p);
    }
  }
  mass += std::max(0.0, pi * r * r - covered) * std::pow(std::abs(c), p);
  return mass;
}

double lp_dist_best_const_on_ball(const StepFunction& f, double p,
                                  const std::array<double, 2>& center,
                                  double r) {
  if (!f.is_real()) {
    throw config_error("lp_dist_best_const_on_ball: needs a real function");
  }
  double lo = 0.0, hi = 0.0;
  for (const Cell& cell : f.cells()) {
    lo = std::min(lo, cell.c.real());
    hi = std::max(hi, cell.c.real());
  }
  if (lo == hi) return 0.0;
  auto fn = [&](double c) { return lp_dist_const_on_ball(f, p, center, r, c); };
  double c0 = golden_section_min(fn, lo, hi, 1e-11 * (hi - lo));
  double best = std::min({fn(c0), fn(lo), fn(hi)});
  return std::pow(best, 1.0 / p);
}

double oscillation_term(const StepFunction& f, double p, double r,
                        double spacing) {
  if (f.empty()) return 0.0;
  if (!(spacing > 0.0) || !(r > 0.0)) {
    throw config_error("oscillation_term: radius and spacing must be positive");
  }
  const int n = f.dim();
  // Windows that miss the support contribute zero, so only centers within r
  // of the support box matter.  Widen the spacing if the grid would be huge.
  double lo0 = f.support_lo(0) - r, hi0 = f.support_hi(0) + r;
  double lo1 = n == 2 ? f.support_lo(1) - r : 0.0;
  double hi1 = n == 2 ? f.support_hi(1) + r : 0.0;
  auto count_axis = [&](double lo, double hi, double sp) {
    return double(std::floor(hi / sp) - std::ceil(lo / sp) + 1.0);
  };
  const double cap = double(1 << 16);
  while (count_axis(lo0, hi0, spacing) *
             (n == 2 ? count_axis(lo1, hi1, spacing) : 1.0) >
         cap) {
    spacing *= 2.0;
  }
  double best = 0.0;
  auto probe = [&](const std::array<double, 2>& x) {
    cplx a = ball_average(f, x, r);
    best = std::max(best, lp_dist_const_on_ball(f, p, x, r, a));
  };
  std::int64_t j0_lo = std::int64_t(std::ceil(lo0 / spacing));
  std::int64_t j0_hi = std::int64_t(std::floor(hi0 / spacing));
  if (n == 1) {
    for (std::int64_t j = j0_lo; j <= j0_hi; ++j) probe({spacing * double(j), 0.0});
  } else {
    std::int64_t j1_lo = std::int64_t(std::ceil(lo1 / spacing));
    std::int64_t j1_hi = std::int64_t(std::floor(hi1 / spacing));
    for (std::int64_t j = j0_lo; j <= j0_hi; ++j) {
      for (std::int64_t i = j1_lo; i <= j1_hi; ++i) {
        probe({spacing * double(j), spacing * double(i)});
      }
    }
  }
  return std::pow(best, 1.0 / p);
}

NormResult campanato_seminorm(const StepFunction& f, double p, double q,
                              const Weight& w, const CampanatoOpts& opts) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw config_error("campanato_seminorm: needs 1 <= p < infinity");
  }
  if (!(q > 0)) throw config_error("campanato_seminorm: q must be positive");
  NormResult res;
  if (f.empty()) return res;

  const int n = f.dim();
  const int L = f.level();
  const double np = double(n) / p;

  // Power weights r^{-lambda} admit closed tails; a nonzero step function
  // oscillates like r^{n/p} near its jumps, so lambda beyond n/p (or at the
  // endpoints with q < infinity) forces divergence.
  if (w.is_power()) {
    double lambda = -w.expo();
    if (lambda > np) {
      return infinite_result(
          "lambda > n/p: step functions have jumps, the small-scale terms "
          "grow without bound");
    }
    if (lambda == np && !std::isinf(q)) {
      return infinite_result("lambda = n/p with q < infinity: the small-scale "
                             "terms do not decay");
    }
    if (lambda < 0.0) {
      return infinite_result("lambda < 0: the large-scale terms grow");
    }
    if (lambda == 0.0 && !std::isinf(q)) {
      return infinite_result(
          "lambda = 0 with q < infinity: the large-scale terms do not decay");
    }
  }

  XiCheck xc = xi_class_check(w, double(n) + p, p, q);
  std::string warn;
  if (!xc.ok) {
    warn = xc.inconclusive
               ? "weight admissibility inconclusive on the test window"
               : "weight outside the admissible class: the space may contain "
                 "only constants";
  }

  // Per-scale term w(2^k) sup_x || f - A f(x) ||_{L_p(B_{2^k}(x))}.  In dim 1
  // a ball of radius 2^k with k < L fits inside one cell up to a single jump,
  // so those scales follow the closed form; larger scales scan the shift
  // lattice.
  const double kappa = n == 1 ? split_factor(p) : 0.0;
  const double jump = n == 1 ? max_jump_1d(f) : 0.0;
  auto small_term = [&](int k) {
    return w.at_dyadic(k) * std::pow(dyadic(k + 1), 1.0 / p) * jump * kappa;
  };
  auto lattice_term = [&](int k) {
    double spacing =
        dyadic(std::max(k - opts.shift_offset, opts.lattice_floor));
    return w.at_dyadic(k) * oscillation_term(f, p, dyadic(k), spacing);
  };
  auto term = [&](int k) {
    return (n == 1 && k <= L - 1) ? small_term(k) : lattice_term(k);
  };

  res.lower_bound_only = true;

  if (!w.is_power()) {
    // Table weights only cover a finite scale window; evaluate it term by
    // term and report the restriction.
    std::vector<double> terms;
    res.m_lo = w.table_lo();
    res.m_hi = w.table_hi();
    for (int k = res.m_lo; k <= res.m_hi; ++k) terms.push_back(term(k));
    res.value = lq_combine(terms, q);
    res.note = "scales restricted to the weight table window";
    if (!warn.empty()) res.note += "; " + warn;
    return res;
  }

  const double lambda = -w.expo();
  int k_start, k_min_stop;
  if (n == 1) {
    k_start = L;  // scales below L are covered by the closed small tail
    k_min_stop = std::max(L + 2, ceil_log2(std::max(
                                     1.0, f.support_hi(0) - f.support_lo(0))) +
                                     2);
  } else {
    k_start = opts.k_lo;
    k_min_stop = std::max(opts.k_hi, k_start);
  }

  if (std::isinf(q)) {
    double best = 0.0;
    if (n == 1) best = small_term(L - 1);  // dominates every smaller scale
    if (lambda == 0.0) {
      // sup over r is approached as r -> infinity: the mean tends to zero
      // and the window exhausts the support.
      double limit = f.lp_norm(p);
      if (p == 1.0) limit = f.l1_norm() + std::abs(f.integral());
      best = std::max(best, limit);
    }
    int k = k_start;
    for (; k <= k_min_stop || (k < 62 && oscillation_upper(f, p, k) *
                                                 w.at_dyadic(k) >
                                             best);
         ++k) {
      if (k > k_min_stop + 40) break;
      best = std::max(best, term(k));
    }
    res.value = best;
    res.m_lo = k_start;
    res.m_hi = k - 1;
    res.tail_estimate =
        std::max(0.0, w.at_dyadic(k) * oscillation_upper(f, p, k) - best);
  } else {
    // Here 0 < lambda < n/p.  Small side (dim 1): geometric closed form with
    // ratio 2^{-(1/p - lambda) q}; large side: extend until the Minkowski
    // bound certifies a negligible remainder with ratio 2^{-lambda q}.
    double sum = 0.0;
    if (n == 1) {
      double rs = std::pow(2.0, -(1.0 / p - lambda) * q);
      sum += std::pow(small_term(L - 1), q) / (1.0 - rs);
    }
    double rl = std::pow(2.0, -lambda * q);
    int k = k_start;
    double tail = kInf;
    for (; k <= k_min_stop || k < 62; ++k) {
      if (k > k_min_stop) {
        tail = std::pow(w.at_dyadic(k) * oscillation_upper(f, p, k), q) * rl /
               (1.0 - rl);
        if (tail <= 1e-14 * sum || k > k_min_stop + 40) break;
      }
      sum += std::pow(term(k), q);
    }
    res.value = std::pow(sum, 1.0 / q);
    res.m_lo = k_start;
    res.m_hi = k - 1;
    res.tail_estimate = std::isinf(tail) ? 0.0 : std::pow(tail, 1.0 / q);
  }

  res.note = n == 1 ? "lattice centers above the cell scale: value is a "
                      "lower bound there, small scales are exact"
                    : "finite scale window and lattice centers: value is a "
                      "lower bound";
  if (!warn.empty()) res.note += "; " + warn;
  return res;
}

NormResult campanato_seminorm(const StepFunction& f, double p, double q,
                              double lambda, const CampanatoOpts& opts) {
  return campanato_seminorm(f, p, q, Weight::power(-lambda), opts);
}

NormResult campanato_norm(const StepFunction& f, double p, double q,
                          const Weight& w, const CampanatoOpts& opts) {
  NormResult res = campanato_seminorm(f, p, q, w, opts);
  if (res.infinite || f.empty()) return res;
  double ball = 0.0;
  if (f.dim() == 1) {
    ball = morrey_ball_term(f, p, 1.0);
  } else {
    double spacing = dyadic(-opts.shift_offset);
    double lo0 = f.support_lo(0) - 1.0, hi0 = f.support_hi(0) + 1.0;
    double lo1 = f.support_lo(1) - 1.0, hi1 = f.support_hi(1) + 1.0;
    for (double x = spacing * std::ceil(lo0 / spacing); x <= hi0; x += spacing) {
      for (double y = spacing * std::ceil(lo1 / spacing); y <= hi1;
           y += spacing) {
        ball = std::max(ball, f.lp_mass_on_ball(p, {x, y}, 1.0));
      }
    }
    ball = std::pow(ball, 1.0 / p);
  }
  res.value += ball;
  return res;
}

NormResult campanato_seminorm_ft(const FourierEvaluable& g, double p, double q,
                                 const Weight& w, const CampanatoOpts& opts) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw config_error("campanato_seminorm_ft: needs 1 <= p < infinity");
  }
  if (!(q > 0)) throw config_error("campanato_seminorm_ft: q must be positive");
  if (opts.k_hi < opts.k_lo) {
    throw config_error("campanato_seminorm_ft: empty scale window");
  }
  const int n = g.dim();

  auto level_term = [&](int k, int resolution) {
    double r = dyadic(k);
    double spacing =
        dyadic(std::max(k - opts.shift_offset, opts.lattice_floor));
    double reach = opts.search_radius;
    std::int64_t j_lo = std::int64_t(std::ceil(-reach / spacing));
    std::int64_t j_hi = std::int64_t(std::floor(reach / spacing));
    while (double(j_hi - j_lo + 1) > double(1 << 13)) {
      spacing *= 2.0;
      j_lo = std::int64_t(std::ceil(-reach / spacing));
      j_hi = std::int64_t(std::floor(reach / spacing));
    }
    double best = 0.0;
    auto probe = [&](const std::array<double, 2>& x) {
      cplx a = ft_average_on_ball(g, x, r, resolution);
      best = std::max(best, ft_lp_mass_on_ball(g, p, x, r, a, resolution));
    };
    if (n == 1) {
      for (std::int64_t j = j_lo; j <= j_hi; ++j) {
        probe({spacing * double(j), 0.0});
      }
    } else {
      for (std::int64_t j = j_lo; j <= j_hi; ++j) {
        for (std::int64_t i = j_lo; i <= j_hi; ++i) {
          probe({spacing * double(j), spacing * double(i)});
        }
      }
    }
    return w.at_dyadic(k) * std::pow(best, 1.0 / p);
  };

  auto combine = [&](int resolution) {
    std::vector<double> terms;
    for (int k = opts.k_lo; k <= opts.k_hi; ++k) {
      if (!w.covers(k)) continue;
      terms.push_back(level_term(k, resolution));
    }
    return lq_combine(terms, q);
  };

  NormResult res;
  res.value = combine(opts.resolution);
  res.lower_bound_only = true;
  res.m_lo = opts.k_lo;
  res.m_hi = opts.k_hi;
  res.refinement_delta =
      std::abs(res.value - combine(std::max(4, opts.resolution / 2)));
  res.note =
      "quadrature oscillation on a finite scale window and lattice centers: "
      "value is a lower bound";
  return res;
}

double lip_seminorm_ft(const FourierEvaluable& g, double alpha, int t_lo,
                       int t_hi, double span, int samples_per_axis) {
  if (t_hi < t_lo) throw config_error("lip_seminorm_ft: empty scale window");
  double best = 0.0;
  for (int k = t_lo; k <= t_hi; ++k) {
    double t = dyadic(k);
    best = std::max(best, std::pow(t, -alpha) *
                              ft_modulus_sup(g, t, span, samples_per_axis));
  }
  return best;
}

}  // namespace mct
