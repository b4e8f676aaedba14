#include "mct/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

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

int ilog2_floor(double x) {
  return int(std::floor(std::log2(x)));
}

// Largest index of the cube grid shifted `shift` levels above the cell grid
// that contains cell index k.
Index cube_of(const Index& k, int dim, int shift) {
  Index out = {0, 0};
  for (int j = 0; j < dim; ++j) {
    if (shift >= 62)
      out[j] = k[j] < 0 ? -1 : 0;
    else
      out[j] = floor_div(k[j], std::int64_t(1) << shift);
  }
  return out;
}

bool index_near_origin(const Index& k, int dim) {
  for (int j = 0; j < dim; ++j)
    if (k[j] != 0 && k[j] != -1) return false;
  return true;
}

// Exact per-level suprema of the cube masses int_Q |f|^p, from the cell
// level up to the first level where every orthant lies inside one cube
// (above it the suprema stay constant).
struct CubeSups {
  int level_lo = 0;
  int level_hi = 0;
  std::vector<double> sup_mass;  // index m - level_lo
};

CubeSups cube_sups(const StepFunction& f, double p) {
  CubeSups out;
  out.level_lo = f.level();
  const int n = f.dim();
  const double cellvol = f.cell_volume();
  for (int m = f.level();; ++m) {
    std::map<Index, double> agg;
    for (const Cell& c : f.cells())
      agg[cube_of(c.k, n, m - f.level())] +=
          std::pow(std::abs(c.c), p) * cellvol;
    double top = 0.0;
    bool stable = true;
    for (const auto& [k, mass] : agg) {
      top = std::max(top, mass);
      stable = stable && index_near_origin(k, n);
    }
    out.sup_mass.push_back(top);
    if (stable) {
      out.level_hi = m;
      return out;
    }
  }
}

void check_pq(const char* who, double p, double q) {
  if (!(p > 0) || std::isinf(p)) {
    std::ostringstream os;
    os << who << ": p must be positive and finite";
    throw config_error(os.str());
  }
  if (!(q > 0)) {
    std::ostringstream os;
    os << who << ": q must be positive";
    throw config_error(os.str());
  }
}

}  // namespace

double NormParams::s() const {
  double inv = 1.0 / p - lambda / dim;
  if (!(inv > 0))
    throw config_error("NormParams: 1/s = 1/p - lambda/n must be positive");
  return 1.0 / inv;
}

double NormParams::s_conj() const {
  double sv = s();
  if (!(sv > 1)) throw config_error("NormParams: s' requires s > 1");
  return sv / (sv - 1.0);
}

double NormParams::beta() const {
  return lambda - std::max(0.0, dim / p - dim / 2.0);
}

double NormParams::alpha() const { return lambda - dim / p; }

void NormParams::validate() const {
  check_pq("NormParams", p, q);
  if (dim != 1 && dim != 2)
    throw config_error("NormParams: dim must be 1 or 2");
  if (!std::isfinite(lambda))
    throw config_error("NormParams: lambda must be finite");
}

Weight Weight::power(double expo) {
  if (!std::isfinite(expo))
    throw config_error("Weight: exponent must be finite");
  Weight w;
  w.expo_ = expo;
  return w;
}

Weight Weight::table(std::map<int, double> values) {
  if (values.empty()) throw config_error("Weight: table must be nonempty");
  for (const auto& [k, v] : values)
    if (!(v > 0) || !std::isfinite(v))
      throw config_error("Weight: table values must be positive and finite");
  Weight w;
  w.table_ = std::move(values);
  return w;
}

double Weight::expo() const {
  if (!expo_) throw config_error("Weight: not a power weight");
  return *expo_;
}

double Weight::at_dyadic(int k) const {
  if (expo_) return std::pow(2.0, double(k) * *expo_);
  auto it = table_.find(k);
  if (it == table_.end()) {
    std::ostringstream os;
    os << "Weight: table has no entry at scale 2^" << k;
    throw config_error(os.str());
  }
  return it->second;
}

bool Weight::covers(int k) const {
  return expo_.has_value() || table_.count(k) > 0;
}

int Weight::table_lo() const {
  if (expo_) throw config_error("Weight: power weights have no table window");
  return table_.begin()->first;
}

int Weight::table_hi() const {
  if (expo_) throw config_error("Weight: power weights have no table window");
  return table_.rbegin()->first;
}

Weight::Doubling Weight::doubling(int k_lo, int k_hi) const {
  Doubling d;
  double c = 1.0;
  for (int k = k_lo; k < k_hi; ++k) {
    if (!covers(k) || !covers(k + 1)) return d;
    double r = at_dyadic(k) / at_dyadic(k + 1);
    if (!(r > 0) || !std::isfinite(r)) return d;
    c = std::max(c, std::max(r, 1.0 / r));
  }
  d.certified = true;
  d.constant = c;
  return d;
}

namespace {

// Shared core of the aligned-cube Morrey norm.  With a power weight r^{-a}:
// terms below the cell level decay like 2^{m(n/p - a)} (sup cube sits inside
// the largest cell) and terms above the stabilization level decay like
// 2^{-m a}, so both tails are geometric series.
NormResult morrey_cubes_power(const StepFunction& f, double p, double q,
                              double lambda) {
  check_pq("morrey_norm", p, q);
  NormResult out;
  if (f.empty()) return out;
  const double n = f.dim();
  if (lambda < 0.0 || lambda > n / p)
    return infinite_result(
        "lambda outside [0, n/p]: only the zero function has finite norm");
  if (!std::isinf(q) && (lambda == 0.0 || lambda == n / p))
    throw config_error(
        "morrey_norm: trivial space (lambda = 0 or lambda = n/p needs q = "
        "infinity)");

  CubeSups cs = cube_sups(f, p);
  out.m_lo = cs.level_lo;
  out.m_hi = cs.level_hi;
  std::vector<double> terms(cs.sup_mass.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    int m = cs.level_lo + int(i);
    terms[i] = std::pow(2.0, -double(m) * lambda) *
               std::pow(cs.sup_mass[i], 1.0 / p);
  }
  if (std::isinf(q)) {
    // the small-m side is nondecreasing toward the first term and the
    // large-m side is nonincreasing past the last, so the max is interior
    out.value = *std::max_element(terms.begin(), terms.end());
    return out;
  }
  double sum = 0.0;
  for (double t : terms) sum += std::pow(t, q);
  double rs = std::pow(2.0, -(n / p - lambda) * q);
  double rl = std::pow(2.0, -lambda * q);
  double tails = std::pow(terms.front(), q) * rs / (1.0 - rs) +
                 std::pow(terms.back(), q) * rl / (1.0 - rl);
  out.tail_estimate = std::pow(tails, 1.0 / q);
  out.value = std::pow(sum + tails, 1.0 / q);
  return out;
}

// sup over level-m cubes of int_Q |f|^p for arbitrary m, via the closed
// forms outside [level_lo, level_hi].
double sup_mass_at(const CubeSups& cs, const StepFunction& f, double p,
                   int m) {
  if (m >= cs.level_hi) return cs.sup_mass.back();
  if (m >= cs.level_lo) return cs.sup_mass[m - cs.level_lo];
  double top = std::pow(f.sup_norm(), p);
  return top * std::pow(2.0, double(m) * f.dim());
}

}  // namespace

NormResult morrey_norm(const StepFunction& f, double p, double q,
                       double lambda) {
  return morrey_cubes_power(f, p, q, lambda);
}

NormResult morrey_norm(const StepFunction& f, double p, double q,
                       const Weight& w) {
  if (w.is_power()) return morrey_cubes_power(f, p, q, -w.expo());
  check_pq("morrey_norm", p, q);
  NormResult out;
  if (f.empty()) return out;
  CubeSups cs = cube_sups(f, p);
  out.m_lo = w.table_lo();
  out.m_hi = w.table_hi();
  out.lower_bound_only = true;
  out.note = "levels restricted to the weight table window";
  std::vector<double> terms;
  for (int m = out.m_lo; m <= out.m_hi; ++m)
    terms.push_back(w.at_dyadic(m) *
                    std::pow(sup_mass_at(cs, f, p, m), 1.0 / p));
  out.value = lq_combine(terms, q);
  return out;
}

double morrey_ball_term(const StepFunction& f, double p, double r) {
  if (f.dim() != 1)
    throw config_error("morrey_ball_term: dim 1 only");
  if (!(r > 0)) throw config_error("morrey_ball_term: radius must be positive");
  return std::pow(sup_window_lp_mass(f, p, 2.0 * r), 1.0 / p);
}

NormResult morrey_ball_norm(const StepFunction& f, double p, double q,
                            double lambda) {
  check_pq("morrey_ball_norm", p, q);
  NormResult out;
  if (f.empty()) return out;
  if (f.dim() != 1)
    throw config_error("morrey_ball_norm: dim 1 only");
  if (lambda < 0.0 || lambda > 1.0 / p)
    return infinite_result(
        "lambda outside [0, n/p]: only the zero function has finite norm");
  if (!std::isinf(q) && (lambda == 0.0 || lambda == 1.0 / p))
    throw config_error(
        "morrey_ball_norm: trivial space (lambda = 0 or lambda = n/p needs "
        "q = infinity)");

  // radius 2^k windows: below k_lo = level - 1 the window fits in one cell,
  // above k_hi it covers the support
  int k_lo = f.level() - 1;
  double span = f.support_hi(0) - f.support_lo(0);
  int k_hi = k_lo;
  while (dyadic(k_hi + 1) < span) ++k_hi;
  out.m_lo = k_lo;
  out.m_hi = k_hi;
  std::vector<double> terms;
  for (int k = k_lo; k <= k_hi; ++k)
    terms.push_back(std::pow(2.0, -double(k) * lambda) *
                    morrey_ball_term(f, p, dyadic(k)));
  if (std::isinf(q)) {
    out.value = *std::max_element(terms.begin(), terms.end());
    return out;
  }
  double sum = 0.0;
  for (double t : terms) sum += std::pow(t, q);
  double rs = std::pow(2.0, -(1.0 / p - lambda) * q);
  double rl = std::pow(2.0, -lambda * q);
  double tails = std::pow(terms.front(), q) * rs / (1.0 - rs) +
                 std::pow(terms.back(), q) * rl / (1.0 - rl);
  out.tail_estimate = std::pow(tails, 1.0 / q);
  out.value = std::pow(sum + tails, 1.0 / q);
  return out;
}

NormResult morrey_dense_norm(const StepFunction& f, double p, double q,
                             double lambda, int per_octave) {
  check_pq("morrey_dense_norm", p, q);
  if (per_octave < 1)
    throw config_error("morrey_dense_norm: per_octave must be >= 1");
  NormResult out;
  if (f.empty()) return out;
  if (f.dim() != 1)
    throw config_error("morrey_dense_norm: dim 1 only");
  if (lambda < 0.0 || lambda > 1.0 / p)
    return infinite_result(
        "lambda outside [0, n/p]: only the zero function has finite norm");
  if (!std::isinf(q) && (lambda == 0.0 || lambda == 1.0 / p))
    throw config_error(
        "morrey_dense_norm: trivial space (lambda = 0 or lambda = n/p needs "
        "q = infinity)");

  const double h = dyadic(f.level());
  const double top = f.sup_norm();
  const double span = f.support_hi(0) - f.support_lo(0);
  const double total = f.lp_mass(p);
  double r_lo = h / 2.0;               // below: mass(window) = top^p * 2r
  double r_hi = std::max(r_lo, span / 2.0);  // above: mass = total
  auto term = [&](double r) {
    return std::pow(r, -lambda) * morrey_ball_term(f, p, r);
  };
  const double ratio = std::pow(2.0, 1.0 / per_octave);
  out.lower_bound_only = true;
  out.note = "continuous-radius form sampled per octave between the closed "
             "form regimes";

  if (std::isinf(q)) {
    // head and tail sups sit at the regime boundaries for the admissible
    // lambda window
    double best = std::max(term(r_lo), term(r_hi));
    for (double r = r_lo; r < r_hi; r *= ratio) best = std::max(best, term(r));
    out.value = best;
    return out;
  }
  double head = std::pow(top, q) * std::pow(2.0, q / p) *
                std::pow(r_lo, (1.0 / p - lambda) * q) /
                ((1.0 / p - lambda) * q);
  double tail = std::pow(total, q / p) * std::pow(r_hi, -lambda * q) /
                (lambda * q);
  double mid = 0.0;
  for (double r = r_lo; r < r_hi; r *= ratio) {
    double rmid = std::min(r * std::sqrt(ratio), r_hi);
    double width = std::log(std::min(r * ratio, r_hi)) - std::log(r);
    mid += std::pow(term(rmid), q) * width;
  }
  out.value = std::pow(head + mid + tail, 1.0 / q);
  return out;
}

NormResult local_morrey_norm(const StepFunction& f, double p, double q,
                             double lambda) {
  check_pq("local_morrey_norm", p, q);
  NormResult out;
  if (f.empty()) return out;
  const double n = f.dim();
  if (lambda == 0.0) {
    if (!std::isinf(q))
      throw config_error(
          "local_morrey_norm: trivial space (lambda = 0 needs q = infinity)");
    out.value = f.lp_norm(p);  // sup over radii of the ball mass
    return out;
  }
  if (lambda < 0.0)
    return infinite_result(
        "negative lambda: the large-radius terms grow without bound");

  const std::array<double, 2> origin = {0.0, 0.0};
  double radius = f.support_radius() * std::sqrt(n);
  int k_hi = ilog2_floor(radius) + 1;
  while (dyadic(k_hi) < radius) ++k_hi;
  double d0 = f.support_dist_origin();
  bool touching = d0 == 0.0;

  int k_start;
  double kappa = 0.0;  // mass(B_t) = kappa * t^n for small t when touching
  if (touching) {
    k_start = std::min(f.level(), k_hi);
    double t0 = dyadic(f.level()) / 2.0;
    kappa = f.lp_mass_on_ball(p, origin, t0) / std::pow(t0, n);
    if (kappa > 0.0) {
      if (lambda > n / p)
        return infinite_result(
            "support touches the origin and lambda > n/p: small-radius terms "
            "grow without bound");
      if (lambda == n / p && !std::isinf(q))
        return infinite_result(
            "support touches the origin and lambda = n/p: the small-radius "
            "sum diverges for finite q");
    }
  } else {
    k_start = ilog2_floor(d0);  // ball of radius 2^{k_start} may hit support
  }

  std::vector<double> terms;
  for (int k = k_start; k <= k_hi; ++k)
    terms.push_back(std::pow(2.0, -double(k) * lambda) *
                    std::pow(f.lp_mass_on_ball(p, origin, dyadic(k)), 1.0 / p));
  out.m_lo = k_start;
  out.m_hi = k_hi;

  if (std::isinf(q)) {
    out.value = *std::max_element(terms.begin(), terms.end());
    // when touching with lambda < n/p the small-radius terms decay toward
    // 0; at lambda = n/p they are constant and equal the first term
    return out;
  }
  double sum = 0.0;
  for (double t : terms) sum += std::pow(t, q);
  double rl = std::pow(2.0, -lambda * q);
  double tails = std::pow(terms.back(), q) * rl / (1.0 - rl);
  if (touching && kappa > 0.0) {
    double rs = std::pow(2.0, -(n / p - lambda) * q);
    tails += std::pow(terms.front(), q) * rs / (1.0 - rs);
  }
  out.tail_estimate = std::pow(tails, 1.0 / q);
  out.value = std::pow(sum + tails, 1.0 / q);
  return out;
}

NormResult truncated_norm(const StepFunction& f, double lambda, double q,
                          double p) {
  check_pq("truncated_norm", p, q);
  if (!std::isfinite(lambda))
    throw config_error("truncated_norm: lambda must be finite");
  NormResult out;
  if (f.empty()) return out;
  const double n = f.dim();

  double radius = f.support_radius() * std::sqrt(n);
  int k_hi = ilog2_floor(radius) + 1;
  while (dyadic(k_hi) < radius) ++k_hi;
  double d0 = f.support_dist_origin();
  bool touching = d0 == 0.0;
  int k_start = touching ? std::min(f.level() - 1, k_hi)
                         : ilog2_floor(d0) - 1;

  double kappa = 0.0;
  if (touching) {
    double t0 = dyadic(f.level()) / 2.0;
    kappa = f.lp_mass_on_ball(p, {0.0, 0.0}, t0) / std::pow(t0, n);
    if (kappa > 0.0 && !std::isinf(q) && lambda + n / p <= 0.0)
      return infinite_result(
          "support touches the origin and lambda <= -n/p: the small-annulus "
          "sum diverges");
    if (kappa > 0.0 && std::isinf(q) && lambda + n / p < 0.0)
      return infinite_result(
          "support touches the origin and lambda < -n/p: small-annulus terms "
          "grow without bound");
  }

  std::vector<double> terms;
  for (int k = k_start; k < k_hi; ++k)
    terms.push_back(std::pow(2.0, double(k) * lambda) *
                    std::pow(f.lp_mass_on_annulus(p, k), 1.0 / p));
  out.m_lo = k_start;
  out.m_hi = k_hi - 1;
  if (terms.empty()) return out;

  if (std::isinf(q)) {
    out.value = *std::max_element(terms.begin(), terms.end());
    return out;
  }
  double sum = 0.0;
  for (double t : terms) sum += std::pow(t, q);
  double tails = 0.0;
  if (touching && kappa > 0.0) {
    double rs = std::pow(2.0, -(lambda + n / p) * q);
    tails = std::pow(terms.front(), q) * rs / (1.0 - rs);
  }
  out.tail_estimate = std::pow(tails, 1.0 / q);
  out.value = std::pow(sum + tails, 1.0 / q);
  return out;
}

XiCheck xi_class_check(const Weight& u, double k, double p, double q,
                       int window_lo, int window_hi) {
  check_pq("xi_class_check", p, q);
  if (window_hi - window_lo < 4)
    throw config_error("xi_class_check: window too small");
  XiCheck out;
  int mid = (window_lo + window_hi) / 2;

  // head: || r^{k/p - 1/q} u ||_{L_q(0, eps)}; surrogate per dyadic block
  auto head_val = [&](int j) {
    double a = k / p;
    if (std::isinf(q)) return std::pow(2.0, a * j) * u.at_dyadic(j);
    return std::pow(std::pow(2.0, (a - 1.0 / q) * j) * u.at_dyadic(j), q) *
           dyadic(j);
  };
  // tail: || r^{-1/q} u ||_{L_q(eps, inf)}
  auto tail_val = [&](int j) {
    if (std::isinf(q)) return u.at_dyadic(j);
    return std::pow(u.at_dyadic(j), q);  // block mass ~ u(2^j)^q * ln 2
  };

  const double eps = 1e-6;
  double head_ratio = 0.0;
  for (int j = window_lo + 1; j <= mid; ++j)
    head_ratio = std::max(head_ratio, head_val(j - 1) / head_val(j));
  double tail_ratio = 0.0;
  for (int j = mid; j < window_hi; ++j)
    tail_ratio = std::max(tail_ratio, tail_val(j + 1) / tail_val(j));
  out.head_ratio = head_ratio;
  out.tail_ratio = tail_ratio;

  double pass_bar = std::isinf(q) ? 1.0 + eps : 1.0 - eps;
  bool head_ok = head_ratio <= pass_bar;
  bool tail_ok = tail_ratio <= pass_bar;
  bool head_bad = head_ratio >= 1.0 + eps;
  bool tail_bad = tail_ratio >= 1.0 + eps;
  out.ok = head_ok && tail_ok;
  out.inconclusive = !out.ok && !head_bad && !tail_bad;
  std::ostringstream os;
  if (!head_ok) os << "head condition fails toward r -> 0; ";
  if (!tail_ok) os << "tail condition fails toward r -> infinity; ";
  if (out.ok) os << "both block sums contract on the window";
  out.detail = os.str();
  return out;
}

LorentzResult gamma_norm_weighted(const StepFunction& f, const Weight& v,
                                  double q) {
  if (v.is_power()) return gamma_norm(f, v.expo(), q);
  LorentzResult out;
  DistSpans d = distribution_spans(f);
  if (d.value.empty()) return out;
  int lo = v.table_lo(), hi = v.table_hi();
  if (std::isinf(q)) {
    // f** decreases, so on each block the sup sits at the left endpoint
    double best = 0.0;
    for (int k = lo; k <= hi; ++k)
      best = std::max(best, v.at_dyadic(k) * d.star_star(dyadic(k)));
    out.value = best;
    return out;
  }
  if (!(q > 0)) throw config_error("gamma_norm_weighted: q must be positive");
  double sum = 0.0;
  for (int k = lo; k <= hi; ++k)
    sum += std::pow(v.at_dyadic(k), q) *
           maximal_lq_integral(d, dyadic(k), dyadic(k + 1), 0.0, q);
  out.value = std::pow(sum, 1.0 / q);
  return out;
}

FtLevelProfile ft_level_profile(const FourierEvaluable& g, double p,
                                const FtNormOpts& opts) {
  if (!(p > 0) || std::isinf(p))
    throw config_error("ft_level_profile: p must be positive and finite");
  if (opts.m_hi < opts.m_lo)
    throw config_error("ft_level_profile: empty level window");
  if (!(opts.search_radius > 0))
    throw config_error("ft_level_profile: search radius must be positive");
  FtLevelProfile prof;
  prof.p = p;
  const int n = g.dim();
  QuadOpts qo;
  qo.resolution = opts.resolution;
  qo.weight_expo = opts.weight_expo;
  qo.parallel = opts.parallel;
  for (int m = opts.m_lo; m <= opts.m_hi; ++m) {
    double h = dyadic(m);
    std::int64_t K = std::int64_t(std::ceil(opts.search_radius / h));
    K = std::max<std::int64_t>(K, 1);
    double count = std::pow(2.0 * double(K), n);
    if (count > double(1 << 22))
      throw config_error(
          "ft_level_profile: cube window too large; raise m_lo or shrink the "
          "search radius");
    // Keep the quadrature step at most 1/resolution even on cubes with side
    // > 1, otherwise coarse levels undersample an oscillatory transform.
    int res = opts.resolution;
    for (int j = 0; j < m; ++j) {
      if (res >= (n == 1 ? 16384 : 256)) break;
      res *= 2;
    }
    qo.resolution = res;
    double sup = 0.0;
    DyadicCube cube;
    cube.dim = n;
    cube.level = m;
    for (std::int64_t i = -K; i < K; ++i) {
      if (n == 1) {
        cube.k = {i, 0};
        sup = std::max(sup, ft_lp_mass_on_cube(g, p, cube, qo));
      } else {
        for (std::int64_t j = -K; j < K; ++j) {
          cube.k = {i, j};
          sup = std::max(sup, ft_lp_mass_on_cube(g, p, cube, qo));
        }
      }
    }
    prof.m.push_back(m);
    prof.sup_mass.push_back(sup);
  }
  return prof;
}

NormResult morrey_norm_from_profile(const FtLevelProfile& prof, double q,
                                    double lambda) {
  if (prof.m.empty()) throw config_error("morrey_norm_from_profile: empty");
  if (!(q > 0)) throw config_error("morrey_norm_from_profile: q positive");
  NormResult out;
  out.lower_bound_only = true;
  out.m_lo = prof.m.front();
  out.m_hi = prof.m.back();
  std::vector<double> terms(prof.m.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    terms[i] = std::pow(2.0, -double(prof.m[i]) * lambda) *
               std::pow(prof.sup_mass[i], 1.0 / prof.p);
  out.value = lq_combine(terms, q);
  // heuristic scale of the omitted level tails, from the edge terms
  if (std::isinf(q))
    out.tail_estimate = std::max(terms.front(), terms.back());
  else
    out.tail_estimate = std::pow(
        std::pow(terms.front(), q) + std::pow(terms.back(), q), 1.0 / q);
  out.note = "finite level and cube windows: value is a lower bound";
  return out;
}

NormResult morrey_norm_ft(const FourierEvaluable& g, double p, double q,
                          double lambda, const FtNormOpts& opts) {
  NormResult out =
      morrey_norm_from_profile(ft_level_profile(g, p, opts), q, lambda);
  if (opts.resolution >= 8) {
    FtNormOpts half = opts;
    half.resolution = opts.resolution / 2;
    NormResult coarse =
        morrey_norm_from_profile(ft_level_profile(g, p, half), q, lambda);
    out.refinement_delta = std::abs(out.value - coarse.value);
  }
  return out;
}

}  // namespace mct
