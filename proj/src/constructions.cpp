#include "mct/constructions.hpp"

#include <algorithm>
#include <cmath>

namespace mct {

namespace {

const double kPi = 4.0 * std::atan(1.0);

bool is_pow2(int x) { return x >= 1 && (x & (x - 1)) == 0; }

double param(const std::map<std::string, double>& params,
             const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

StepFunction lacunary_product(int N, int dim) {
  if (N < 1 || N > 62) {
    throw config_error("lacunary_product: N must be in [1, 62]");
  }
  if (dim != 1 && dim != 2) {
    throw config_error("lacunary_product: dim must be 1 or 2");
  }
  std::vector<Cell> cells;
  if (dim == 1) {
    for (int k = 1; k <= N; ++k) {
      cells.push_back({{std::int64_t(1) << k, 0}, 1.0});
    }
  } else {
    for (int k = 1; k <= N; ++k) {
      for (int l = 1; l <= N; ++l) {
        cells.push_back({{std::int64_t(1) << k, std::int64_t(1) << l}, 1.0});
      }
    }
  }
  return StepFunction::from_cells(dim, 0, std::move(cells));
}

double lacunary_transform_l2sq(int N) {
  if (N < 1 || N > 62) {
    throw config_error("lacunary_transform_l2sq: N must be in [1, 62]");
  }
  // hat f(y) = sum_k e^{-2 pi i (2^k + 1/2) y} sinc(pi y), so the squared
  // L_2(0,1) norm is N c(0) + 2 sum_{k<l} c(2^l - 2^k) with
  // c(d) = int_0^1 cos(2 pi d y) sinc^2(pi y) dy.
  auto c = [](double d) {
    int panels = std::max(16, int(4.0 * std::min(d, 2048.0)));
    return gauss_panels(
        [d](double y) {
          double s = sinc(kPi * y);
          return std::cos(2.0 * kPi * d * y) * s * s;
        },
        0.0, 1.0, panels);
  };
  double total = double(N) * c(0.0);
  for (int k = 1; k <= N; ++k) {
    for (int l = k + 1; l <= N; ++l) {
      double d = double((std::int64_t(1) << l) - (std::int64_t(1) << k));
      if (d > 8192.0) continue;  // |c(d)| = O(d^{-2}), beyond resolution
      total += 2.0 * c(d);
    }
  }
  return total;
}

std::vector<double> rudin_shapiro(int length) {
  if (!is_pow2(length)) {
    throw config_error("rudin_shapiro: length must be a power of two");
  }
  std::vector<double> p = {1.0}, q = {1.0};
  while (int(p.size()) < length) {
    std::vector<double> np(p), nq(p);
    np.insert(np.end(), q.begin(), q.end());
    for (double v : q) nq.push_back(-v);
    p = std::move(np);
    q = std::move(nq);
  }
  return p;
}

StepFunction ultraflat_counterexample(int N) {
  if (N < 1 || !is_pow2(N + 1)) {
    throw config_error(
        "ultraflat_counterexample: N + 1 must be a power of two");
  }
  std::vector<double> eps = rudin_shapiro(N + 1);
  std::vector<Cell> cells;
  for (int n = 0; n <= N; ++n) cells.push_back({{n, 0}, eps[n]});
  return StepFunction::from_cells(1, 0, std::move(cells));
}

cplx coeff_poly_eval(const std::vector<double>& eps, double y) {
  cplx sum = 0.0;
  cplx w = std::polar(1.0, -2.0 * kPi * y);
  cplx z = 1.0;
  for (double e : eps) {
    sum += e * z;
    z *= w;
  }
  return sum;
}

double coeff_poly_l2(const std::vector<double>& eps, double a, double b) {
  if (!(b > a)) throw config_error("coeff_poly_l2: need a < b");
  const int n = int(eps.size());
  // |P|^2 = sum_d c_d e^{-2 pi i d y} with real autocorrelations c_d
  double sq = double(n) * (b - a);
  for (int d = 1; d < n; ++d) {
    double cd = 0.0;
    for (int i = 0; i + d < n; ++i) cd += eps[i] * eps[i + d];
    sq += 2.0 * cd * (std::sin(2.0 * kPi * d * b) - std::sin(2.0 * kPi * d * a)) /
          (2.0 * kPi * d);
  }
  return std::sqrt(std::max(0.0, sq));
}

ClosedFormFT modulated_box_transform(double N, int dim) {
  if (dim != 1 && dim != 2) {
    throw config_error("modulated_box_transform: dim must be 1 or 2");
  }
  auto axis = [N](double s) {
    double theta = 2.0 * kPi * (s - N);
    return std::polar(1.0, -1.5 * theta) * sinc(0.5 * theta);
  };
  return ClosedFormFT(dim, [axis, dim](const std::array<double, 2>& y) {
    cplx v = axis(y[0]);
    if (dim == 2) v *= axis(y[1]);
    return v;
  });
}

StepFunction shifted_box(std::int64_t N, int dim) {
  if (dim != 1 && dim != 2) {
    throw config_error("shifted_box: dim must be 1 or 2");
  }
  std::vector<Cell> cells = {{{N, dim == 2 ? N : 0}, 1.0}};
  return StepFunction::from_cells(dim, 0, std::move(cells));
}

StepFunction log_singular(double gamma, double p, int dim, int level) {
  if (dim != 1 && dim != 2) {
    throw config_error("log_singular: dim must be 1 or 2");
  }
  if (!(p > 0)) throw config_error("log_singular: p must be positive");
  double limit = double(dim) * (1.0 - 1.0 / p);  // dim / p'
  if (!(gamma < limit)) {
    throw config_error("log_singular: not integrable against the weight, "
                       "needs gamma < dim/p'");
  }
  if (level == 0) level = dim == 1 ? -20 : -8;
  if (level >= 0 || level < -24) {
    throw config_error("log_singular: level must be in [-24, -1]");
  }
  const double h = dyadic(level);
  const double radius = 1.0 / (2.0 * kPi);
  const std::int64_t K = std::int64_t(radius / h) + 1;
  const double expo = -gamma - double(dim) / p;
  std::vector<Cell> cells;
  auto value = [&](double r) {
    return std::pow(r, expo) / std::abs(std::log(r));
  };
  if (dim == 1) {
    for (std::int64_t j = -K; j < K; ++j) {
      double mid = (double(j) + 0.5) * h;
      if (std::abs(mid) > radius) continue;
      cells.push_back({{j, 0}, value(std::abs(mid))});
    }
  } else {
    for (std::int64_t j = -K; j < K; ++j) {
      for (std::int64_t i = -K; i < K; ++i) {
        double mx = (double(j) + 0.5) * h, my = (double(i) + 0.5) * h;
        double r = std::hypot(mx, my);
        if (r > radius) continue;
        cells.push_back({{j, i}, value(r)});
      }
    }
  }
  return StepFunction::from_cells(dim, level, std::move(cells));
}

StepFunction sharpness_example(double alpha, int K) {
  if (K < 1 || K > 64) {
    throw config_error("sharpness_example: K must be in [1, 64]");
  }
  std::vector<Cell> cells;
  for (int k = 1; k <= K; ++k) {
    cells.push_back(
        {{std::int64_t(1) << (k - 1), 0}, std::pow(double(k), -alpha)});
  }
  return StepFunction::from_cells(1, 0, std::move(cells));
}

std::pair<double, double> sharpness_window(double s, double beta) {
  return {1.0 - 1.0 / s - beta, 1.0 - 1.0 / s};
}

StepFunction gm_radial(double theta, int level) {
  if (!(theta > 0.0) || !(theta < 1.0)) {
    throw config_error("gm_radial: theta must be in (0, 1)");
  }
  if (level >= 0 || level < -20) {
    throw config_error("gm_radial: level must be in [-20, -1]");
  }
  const double h = dyadic(level);
  std::vector<Cell> cells;
  for (std::int64_t j = 0; double(j) * h < 1.0; ++j) {
    double mid = (double(j) + 0.5) * h;
    cells.push_back({{j, 0}, std::pow(mid, -theta)});
  }
  return StepFunction::from_cells(1, level, std::move(cells));
}

std::pair<StepFunction, StepFunction> power_weight_brackets(
    const StepFunction& f, double gamma) {
  if (f.dim() != 1) {
    throw config_error("power_weight_brackets: dim 1 only");
  }
  const double h = dyadic(f.level());
  std::vector<Cell> lo_cells, hi_cells;
  for (const Cell& c : f.cells()) {
    double lo = h * double(c.k[0]), hi = lo + h;
    double amin = (lo < 0.0 && hi > 0.0) ? 0.0
                                         : std::min(std::abs(lo), std::abs(hi));
    double amax = std::max(std::abs(lo), std::abs(hi));
    double wmin, wmax;
    if (gamma >= 0.0) {
      wmin = std::pow(amin, gamma);
      wmax = std::pow(amax, gamma);
    } else {
      if (amin == 0.0) {
        throw config_error(
            "power_weight_brackets: negative exponent with support touching "
            "the origin");
      }
      wmin = std::pow(amax, gamma);
      wmax = std::pow(amin, gamma);
    }
    lo_cells.push_back({c.k, c.c * wmin});
    hi_cells.push_back({c.k, c.c * wmax});
  }
  return {StepFunction::from_cells(1, f.level(), std::move(lo_cells)),
          StepFunction::from_cells(1, f.level(), std::move(hi_cells))};
}

StepFunction make_family(const std::string& name,
                         const std::map<std::string, double>& params) {
  int dim = int(param(params, "dim", 1.0));
  if (name == "lacunary") {
    return lacunary_product(int(param(params, "N", 8.0)), dim);
  }
  if (name == "ultraflat") {
    return ultraflat_counterexample(int(param(params, "N", 15.0)));
  }
  if (name == "modulated-box" || name == "shifted-box") {
    std::int64_t N = std::int64_t(
        param(params, "N", name == "modulated-box" ? 1.0 : 5.0));
    return shifted_box(name == "modulated-box" ? 1 : N, dim);
  }
  if (name == "log-singular") {
    return log_singular(param(params, "gamma", 0.25),
                        param(params, "p", 2.0), dim,
                        int(param(params, "level", 0.0)));
  }
  if (name == "sharpness") {
    return sharpness_example(param(params, "alpha", 0.6),
                             int(param(params, "K", 30.0)));
  }
  if (name == "gm-radial") {
    return gm_radial(param(params, "theta", 0.5),
                     int(param(params, "level", -16.0)));
  }
  std::string names;
  for (const std::string& n : family_names()) {
    names += (names.empty() ? "" : ", ") + n;
  }
  throw config_error("unknown family '" + name + "' (known: " + names + ")");
}

std::vector<std::string> family_names() {
  return {"lacunary",     "ultraflat", "modulated-box", "shifted-box",
          "log-singular", "sharpness", "gm-radial"};
}

}  // namespace mct
