#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "mct/mathutil.hpp"
#include "mct/sequences.hpp"

using namespace mct;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// random sequence with `support` distinct indices in a +/- 64 window
IndexedSeq random_seq(Rng& rng, int support) {
  IndexedSeq s;
  std::set<std::int64_t> used;
  while (int(used.size()) < support) {
    std::int64_t k = rng.uniform_int(-64, 64);
    if (!used.insert(k).second) continue;
    double mag = rng.uniform(0.01, 3.0);
    s.a[{k, 0}] = (rng.next() & 1) ? mag : -mag;
  }
  return s;
}

// max over all n-element subsets of the sum of |values|, for every n
std::vector<double> exhaustive_best_sums(const std::vector<double>& vals) {
  std::vector<double> best(vals.size(), 0.0);
  for (unsigned mask = 1; mask < (1u << vals.size()); ++mask) {
    double sum = 0.0;
    int bits = 0;
    for (unsigned j = 0; j < vals.size(); ++j) {
      if (mask & (1u << j)) {
        sum += std::abs(vals[j]);
        ++bits;
      }
    }
    best[bits - 1] = std::max(best[bits - 1], sum);
  }
  return best;
}

}  // namespace

TEST_SUITE("sequences") {

TEST_CASE("rearrange sorts and averages a hand example") {
  IndexedSeq s;
  s.a[{-4, 0}] = -3.0;
  s.a[{0, 0}] = 1.0;
  s.a[{9, 0}] = 2.0;
  Rearranged r = rearrange(s);
  REQUIRE(r.star.size() == 3);
  CHECK(r.star[0] == 3.0);
  CHECK(r.star[1] == 2.0);
  CHECK(r.star[2] == 1.0);
  CHECK(r.starstar[0] == 3.0);
  CHECK(r.starstar[1] == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(r.starstar[2] == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("prefix averages equal the exhaustive best-subset averages") {
  Rng rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    int support = 1 + int(rng.uniform_int(0, 11));
    IndexedSeq s = random_seq(rng, support);
    std::vector<double> vals;
    for (const auto& kv : s.a) vals.push_back(kv.second);
    std::vector<double> best = exhaustive_best_sums(vals);
    Rearranged r = rearrange(s);
    REQUIRE(r.starstar.size() == best.size());
    for (std::size_t n = 1; n <= best.size(); ++n) {
      CHECK(std::abs(r.starstar[n - 1] - best[n - 1] / double(n)) <= 1e-12);
    }
  }
}

TEST_CASE("lorentz_seq_norm on one and two values") {
  IndexedSeq one;
  one.a[{7, 0}] = -2.0;
  Rearranged r1 = rearrange(one);
  CHECK(lorentz_seq_norm(r1, 2.0, kInf) == 2.0);
  CHECK(lorentz_seq_norm(r1, 2.0, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
  IndexedSeq two;
  two.a[{0, 0}] = 3.0;
  two.a[{1, 0}] = 1.0;
  Rearranged r2 = rearrange(two);
  // sup_n n^{1/2} a*_n = max(3, sqrt(2))
  CHECK(lorentz_seq_norm(r2, 2.0, kInf) == doctest::Approx(3.0));
  // (sum_n (n^{1/2} a*_n)^2 / n)^{1/2} = sqrt(9 + 1)
  CHECK(lorentz_seq_norm(r2, 2.0, 2.0) ==
        doctest::Approx(std::sqrt(10.0)).epsilon(1e-14));
}

TEST_CASE("convolve against delta and the binomial square") {
  IndexedSeq delta;
  delta.a[{0, 0}] = 1.0;
  IndexedSeq x;
  x.a[{2, 0}] = 5.0;
  x.a[{-1, 0}] = 1.5;
  IndexedSeq dx = convolve(delta, x);
  CHECK(dx.at({2, 0}) == 5.0);
  CHECK(dx.at({-1, 0}) == 1.5);
  IndexedSeq ones;
  ones.a[{0, 0}] = 1.0;
  ones.a[{1, 0}] = 1.0;
  IndexedSeq sq = convolve(ones, ones);
  CHECK(sq.at({0, 0}) == 1.0);
  CHECK(sq.at({1, 0}) == 2.0);
  CHECK(sq.at({2, 0}) == 1.0);
}

TEST_CASE("inverse_product_seq values and window") {
  IndexedSeq c = inverse_product_seq(1, 3);
  CHECK(c.at({0, 0}) == 1.0);
  CHECK(c.at({1, 0}) == 1.0);
  CHECK(c.at({-1, 0}) == 1.0);
  CHECK(c.at({2, 0}) == 0.5);
  CHECK(c.at({3, 0}) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(c.at({4, 0}) == 0.0);
  IndexedSeq c2 = inverse_product_seq(2, 2);
  CHECK(c2.at({2, 2}) == 0.25);
  CHECK(c2.at({0, 2}) == 0.5);
}

TEST_CASE("hyperbolic cross enumeration, blocks and size formula") {
  CHECK(hyperbolic_cross(0, 1).empty());
  CHECK(hyperbolic_cross(1, 2).empty());
  auto e3 = hyperbolic_cross(3, 1);
  CHECK(e3.size() == 14);  // 2 (2^3 - 1) in dim 1
  CHECK(std::is_sorted(e3.begin(), e3.end()));
  auto e22 = hyperbolic_cross(2, 2);
  CHECK(e22.size() == 4);  // only the block pair (1,1)
  for (int m = 1; m <= 10; ++m) {
    auto e = hyperbolic_cross(m, 1);
    CHECK(hyperbolic_cross_size(m, 1) == e.size());
    std::set<Index> uniq(e.begin(), e.end());
    CHECK(uniq.size() == e.size());
    for (const Index& k : e) {
      int nu = cross_block(k[0]);
      CHECK(nu >= 1);
      CHECK(nu <= m);
    }
  }
  for (int m = 2; m <= 8; ++m) {
    auto e = hyperbolic_cross(m, 2);
    CHECK(hyperbolic_cross_size(m, 2) == e.size());
    std::set<Index> uniq(e.begin(), e.end());
    CHECK(uniq.size() == e.size());
    for (const Index& k : e)
      CHECK(cross_block(k[0]) + cross_block(k[1]) <= m);
  }
}

TEST_CASE("cross_block brackets powers of two") {
  CHECK(cross_block(0) == 0);
  CHECK(cross_block(1) == 1);
  CHECK(cross_block(-1) == 1);
  CHECK(cross_block(2) == 2);
  CHECK(cross_block(3) == 2);
  CHECK(cross_block(4) == 3);
  CHECK(cross_block(7) == 3);
  CHECK(cross_block(8) == 4);
}

TEST_CASE("cstar_star_profile against the hand prefix average") {
  auto prof = cstar_star_profile(1, {1, 10}, 64);
  CHECK(prof[0] == doctest::Approx(1.0).epsilon(1e-15));
  // ten largest of 1/max(|k|,1): 1,1,1,1/2,1/2,1/3,1/3,1/4,1/4,1/5
  double sum10 = 3.0 + 1.0 + 2.0 / 3.0 + 0.5 + 0.2;
  CHECK(prof[1] == doctest::Approx(sum10 / 10.0).epsilon(1e-14));
  CHECK_THROWS_AS(cstar_star_profile(1, {100}, 4), config_error);
}

TEST_CASE("dsk_sample hand values and the best-subset bound") {
  IndexedSeq c;
  c.a[{0, 0}] = 1.0;
  c.a[{2, 0}] = -0.5;
  CHECK(dsk_sample(c, {{0, 0}}, {{2, 0}}) == 0.5);
  CHECK(dsk_sample(c, {{0, 0}, {1, 0}}, {{0, 0}}) ==
        doctest::Approx(0.5).epsilon(1e-15));
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    IndexedSeq s = random_seq(rng, 1 + int(rng.uniform_int(0, 9)));
    std::vector<Index> omega, e;
    int no = 1 + int(rng.uniform_int(0, 4));
    int ne = 1 + int(rng.uniform_int(0, 4));
    std::set<Index> so, se;
    while (int(so.size()) < no) so.insert({rng.uniform_int(-80, 80), 0});
    while (int(se.size()) < ne) se.insert({rng.uniform_int(-80, 80), 0});
    omega.assign(so.begin(), so.end());
    e.assign(se.begin(), se.end());
    double sample = dsk_sample(s, omega, e);
    Rearranged r = rearrange(s);
    std::size_t nu = std::max(omega.size(), e.size());
    double bound = nu <= r.starstar.size()
                       ? r.starstar[nu - 1]
                       : r.starstar.back() * double(r.starstar.size()) /
                             double(nu);
    CHECK(sample <= bound + 1e-12);
  }
}

TEST_CASE("hardy_bound_check hand example and the geometric-weight bound") {
  HardyCheck hc = hardy_bound_check({1.0, 0.0, 2.0}, {1.0, 2.0, 4.0}, 1.0,
                                    HardyDirection::Tail);
  CHECK(hc.lhs == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(hc.mid == doctest::Approx(15.0).epsilon(1e-15));
  CHECK(hc.cond_constant == doctest::Approx(1.75).epsilon(1e-15));
  // b_n = 2^{n/2}: the tail-direction constant is at most 1/(1 - 2^{-1/2})
  double cmax = 1.0 / (1.0 - std::pow(2.0, -0.5));
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    int len = 3 + int(rng.uniform_int(0, 20));
    std::vector<double> a(len), b(len);
    for (int j = 0; j < len; ++j) {
      a[j] = rng.uniform();
      b[j] = std::pow(2.0, 0.5 * double(j));
    }
    HardyCheck h = hardy_bound_check(a, b, 1.0, HardyDirection::Tail);
    CHECK(h.lhs <= h.mid + 1e-12);
    CHECK(h.mid <= cmax * h.lhs * (1.0 + 1e-12));
    CHECK(h.cond_constant <= cmax + 1e-12);
  }
  // head direction mirrors the sums
  HardyCheck hh = hardy_bound_check({1.0, 1.0}, {4.0, 2.0}, 1.0,
                                    HardyDirection::Head);
  CHECK(hh.mid == doctest::Approx(4.0 * 1.0 + 2.0 * 2.0).epsilon(1e-15));
}

}  // TEST_SUITE
