#include "mct/sequences.hpp"

#include <algorithm>
#include <cmath>

namespace mct {

Rearranged rearrange(const IndexedSeq& s) {
  // ties resolved by the lexicographic index order the map already provides,
  // so the result is deterministic
  std::vector<double> vals;
  vals.reserve(s.a.size());
  for (const auto& [k, v] : s.a) {
    (void)k;
    if (v != 0.0) vals.push_back(std::abs(v));
  }
  std::stable_sort(vals.begin(), vals.end(), std::greater<double>());
  Rearranged r;
  r.star = vals;
  r.starstar.resize(vals.size());
  double prefix = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    prefix += vals[i];
    r.starstar[i] = prefix / double(i + 1);
  }
  return r;
}

double lorentz_seq_norm(const Rearranged& r, double p, double q) {
  if (!(p > 0)) throw config_error("lorentz_seq_norm: p must be positive");
  if (std::isinf(q)) {
    double m = 0.0;
    for (std::size_t i = 0; i < r.star.size(); ++i)
      m = std::max(m, std::pow(double(i + 1), 1.0 / p) * r.star[i]);
    return m;
  }
  if (!(q > 0)) throw config_error("lorentz_seq_norm: q must be positive");
  std::vector<double> terms(r.star.size());
  for (std::size_t i = 0; i < r.star.size(); ++i) {
    double n = double(i + 1);
    terms[i] = std::pow(std::pow(n, 1.0 / p) * r.star[i], q) / n;
  }
  return std::pow(chunked_sum(terms), 1.0 / q);
}

IndexedSeq convolve(const IndexedSeq& x, const IndexedSeq& y) {
  if (x.dim != y.dim) throw config_error("convolve: dimension mismatch");
  IndexedSeq out;
  out.dim = x.dim;
  for (const auto& [kx, vx] : x.a)
    for (const auto& [ky, vy] : y.a) {
      Index k = {kx[0] + ky[0], x.dim == 2 ? kx[1] + ky[1] : 0};
      out.a[k] += vx * vy;
    }
  return out;
}

IndexedSeq inverse_product_seq(int dim, std::int64_t radius) {
  if (dim != 1 && dim != 2) throw config_error("dimension must be 1 or 2");
  if (radius < 1) throw config_error("radius must be at least 1");
  IndexedSeq out;
  out.dim = dim;
  auto bar = [](std::int64_t r) { return double(std::max<std::int64_t>(std::llabs(r), 1)); };
  if (dim == 1) {
    for (std::int64_t r = -radius; r <= radius; ++r)
      out.a[{r, 0}] = 1.0 / bar(r);
  } else {
    for (std::int64_t r1 = -radius; r1 <= radius; ++r1)
      for (std::int64_t r2 = -radius; r2 <= radius; ++r2)
        out.a[{r1, r2}] = 1.0 / (bar(r1) * bar(r2));
  }
  return out;
}

int cross_block(std::int64_t k) {
  if (k == 0) return 0;
  std::int64_t m = std::llabs(k);
  int nu = 1;
  while ((std::int64_t(1) << nu) <= m) ++nu;
  return nu;  // floor(2^{nu-1}) <= |k| < 2^nu
}

std::vector<Index> hyperbolic_cross(int m, int dim) {
  if (dim != 1 && dim != 2) throw config_error("dimension must be 1 or 2");
  if (m > 40) throw config_error("hyperbolic cross level too large");
  std::vector<Index> out;
  if (m < dim) return out;  // no admissible block vector
  if (dim == 1) {
    for (std::int64_t k = -((std::int64_t(1) << m) - 1);
         k <= (std::int64_t(1) << m) - 1; ++k)
      if (k != 0) out.push_back({k, 0});
    return out;
  }
  for (std::int64_t k1 = -((std::int64_t(1) << (m - 1)) - 1);
       k1 <= (std::int64_t(1) << (m - 1)) - 1; ++k1) {
    if (k1 == 0) continue;
    int b1 = cross_block(k1);
    int rem = m - b1;
    if (rem < 1) continue;
    std::int64_t lim = (std::int64_t(1) << rem) - 1;
    for (std::int64_t k2 = -lim; k2 <= lim; ++k2) {
      if (k2 == 0) continue;
      out.push_back({k1, k2});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t hyperbolic_cross_size(int m, int dim) {
  if (dim != 1 && dim != 2) throw config_error("dimension must be 1 or 2");
  if (m > 60) throw config_error("hyperbolic cross level too large");
  if (m < dim) return 0;
  auto block_count = [](int nu) -> std::uint64_t {
    return nu == 1 ? 2ULL : (1ULL << nu);
  };
  if (dim == 1) {
    std::uint64_t total = 0;
    for (int nu = 1; nu <= m; ++nu) total += block_count(nu);
    return total;
  }
  std::uint64_t total = 0;
  for (int nu1 = 1; nu1 <= m - 1; ++nu1)
    for (int nu2 = 1; nu1 + nu2 <= m; ++nu2)
      total += block_count(nu1) * block_count(nu2);
  return total;
}

std::vector<double> cstar_star_profile(int dim, const std::vector<std::int64_t>& ns,
                                       std::int64_t radius) {
  IndexedSeq c = inverse_product_seq(dim, radius);
  Rearranged r = rearrange(c);
  // anything outside the box has a coordinate beyond radius, hence value
  // <= 1/(radius+1); the cut must sit above that for the top-N to be right
  double outside = 1.0 / double(radius + 1);
  std::vector<double> out;
  for (std::int64_t n : ns) {
    if (n < 1 || std::size_t(n) > r.star.size())
      throw config_error("cstar_star_profile: N outside enumerated range");
    if (r.star[std::size_t(n) - 1] < outside)
      throw config_error("cstar_star_profile: enumeration radius too small");
    out.push_back(r.starstar[std::size_t(n) - 1]);
  }
  return out;
}

double dsk_sample(const IndexedSeq& c, const std::vector<Index>& omega,
                  const std::vector<Index>& e) {
  if (omega.empty() || e.empty())
    throw config_error("dsk_sample: empty index set");
  double sum = 0.0;
  for (const auto& t : omega)
    for (const auto& m : e) {
      Index d = {m[0] - t[0], c.dim == 2 ? m[1] - t[1] : 0};
      sum += std::abs(c.at(d));
    }
  return sum / (double(omega.size()) * double(e.size()));
}

HardyCheck hardy_bound_check(const std::vector<double>& a,
                             const std::vector<double>& b, double p,
                             HardyDirection dir) {
  if (a.size() != b.size())
    throw config_error("hardy_bound_check: length mismatch");
  if (!(p >= 1)) throw config_error("hardy_bound_check: p must be >= 1");
  std::size_t n = a.size();
  HardyCheck out;
  std::vector<double> inner(n, 0.0);
  if (dir == HardyDirection::Tail) {
    double tail = 0.0;
    for (std::size_t i = n; i-- > 0;) {
      tail += a[i];
      inner[i] = tail;
    }
    double head_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      head_b += b[i];
      if (b[i] > 0)
        out.cond_constant = std::max(out.cond_constant, head_b / b[i]);
    }
  } else {
    double head = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      head += a[i];
      inner[i] = head;
    }
    double tail_b = 0.0;
    for (std::size_t i = n; i-- > 0;) {
      tail_b += b[i];
      if (b[i] > 0)
        out.cond_constant = std::max(out.cond_constant, tail_b / b[i]);
    }
  }
  std::vector<double> lhs_terms(n), mid_terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    lhs_terms[i] = std::pow(b[i] * a[i], p);
    mid_terms[i] = std::pow(b[i] * inner[i], p);
  }
  out.lhs = chunked_sum(lhs_terms);
  out.mid = chunked_sum(mid_terms);
  return out;
}

}  // namespace mct
