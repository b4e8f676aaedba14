#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "mct/campanato.hpp"
#include "mct/corpus.hpp"
#include "mct/norms.hpp"

using namespace mct;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

StepFunction unit_box() {
  return StepFunction::from_cells(1, 0, {{{0, 0}, 1.0}});
}

}  // namespace

TEST_SUITE("norms") {

TEST_CASE("aligned-cube Morrey norm of the unit box in closed form") {
  StepFunction f = unit_box();
  // q = inf: the level-0 cube carries the whole mass and lambda < 1/p damps
  // every other level
  CHECK(morrey_norm(f, 2.0, kInf, 0.25).value ==
        doctest::Approx(1.0).epsilon(1e-14));
  // q = 2, lambda = 1/4: terms 2^{-m/4} above and 2^{m/4} below level 0 sum
  // to (1 + r)/(1 - r) with r = 2^{-1/2}, i.e. the norm is 1 + sqrt(2)
  CHECK(morrey_norm(f, 2.0, 2.0, 0.25).value ==
        doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
  // endpoint lambda = n/p recovers the L_p norm, lambda = 0 the sup norm
  CHECK(morrey_norm(f, 2.0, kInf, 0.5).value ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(morrey_norm(f, 2.0, kInf, 0.0).value ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(morrey_norm(StepFunction(), 2.0, 2.0, 0.25).value == 0.0);
}

TEST_CASE("trivial and infinite parameter combinations") {
  StepFunction f = unit_box();
  CHECK(morrey_norm(f, 2.0, kInf, 0.75).infinite);
  CHECK(morrey_norm(f, 2.0, kInf, -0.1).infinite);
  CHECK_THROWS_AS(morrey_norm(f, 2.0, 2.0, 0.0), config_error);
  CHECK_THROWS_AS(morrey_norm(f, 2.0, 2.0, 0.5), config_error);
  CHECK_THROWS_AS(morrey_norm(f, -1.0, 2.0, 0.25), config_error);
}

TEST_CASE("power-weight overload reproduces the plain norm") {
  CorpusOpts co;
  co.real_only = true;
  auto corpus = generate_corpus(31, 6, co);
  for (const StepFunction& f : corpus) {
    NormResult a = morrey_norm(f, 2.0, kInf, 0.25);
    NormResult b = morrey_norm(f, 2.0, kInf, Weight::power(-0.25));
    CHECK(b.value == doctest::Approx(a.value).epsilon(1e-12));
    CHECK_FALSE(b.lower_bound_only);
  }
  // a table weight sees only its window and flags the restriction
  std::map<int, double> tab;
  for (int k = -6; k <= 6; ++k) tab[k] = std::pow(2.0, -0.25 * k);
  NormResult t = morrey_norm(corpus[0], 2.0, kInf, Weight::table(tab));
  CHECK(t.lower_bound_only);
  CHECK(t.value <= morrey_norm(corpus[0], 2.0, kInf, 0.25).value + 1e-12);
}

TEST_CASE("ball terms are sliding-window masses") {
  StepFunction f = unit_box();
  CHECK(morrey_ball_term(f, 2.0, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(morrey_ball_term(f, 2.0, 0.25) ==
        doctest::Approx(std::pow(0.5, 0.5)).epsilon(1e-14));
  CHECK(morrey_ball_term(f, 1.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("cube, ball and dense-radius norms obey the proven brackets") {
  auto corpus = generate_corpus(57, 8);
  double p = 2.0, lam = 0.25;
  for (const StepFunction& f : corpus) {
    double cube = morrey_norm(f, p, kInf, lam).value;
    double ball = morrey_ball_norm(f, p, kInf, lam).value;
    double dense = morrey_dense_norm(f, p, kInf, lam).value;
    // aligned cube of side 2^m fits in the ball of radius 2^{m-1}; a ball of
    // radius 2^k covers at most two cubes of side 2^{k+1}
    CHECK(ball >= cube * (1.0 - 1e-9));
    CHECK(ball <= cube * std::pow(2.0, 1.0 / p + lam) * (1.0 + 1e-9));
    // dyadic radii sample the dense sup within one octave
    CHECK(dense >= ball * (1.0 - 1e-9));
    CHECK(dense <= ball * std::pow(2.0, lam) * (1.0 + 1e-9));
  }
}

TEST_CASE("local Morrey equals a weighted annulus sum up to fixed factors") {
  StepFunction f = unit_box();
  NormResult lm = local_morrey_norm(f, 2.0, kInf, 0.25);
  CHECK(lm.value == doctest::Approx(1.0).epsilon(1e-12));
  NormResult tr = truncated_norm(f, -0.25, kInf, 2.0);
  CHECK(tr.value == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-12));
  auto corpus = generate_corpus(91, 8);
  for (const StepFunction& g : corpus) {
    double a = local_morrey_norm(g, 2.0, kInf, 0.25).value;
    double b = truncated_norm(g, -0.25, kInf, 2.0).value;
    // subadditivity of the origin balls over annuli, geometric sum upward
    CHECK(a >= b * std::pow(2.0, -0.25) * (1.0 - 1e-9));
    CHECK(a <= b / (std::pow(2.0, 0.25) - 1.0) * (1.0 + 1e-9));
  }
}

TEST_CASE("xi weight class membership by exponent") {
  // k = 1, p = 2, q = 2: r^a belongs exactly for -1/2 < a < 0
  CHECK(xi_class_check(Weight::power(-0.25), 1.0, 2.0, 2.0).ok);
  CHECK_FALSE(xi_class_check(Weight::power(0.1), 1.0, 2.0, 2.0).ok);
  CHECK_FALSE(xi_class_check(Weight::power(-0.6), 1.0, 2.0, 2.0).ok);
}

TEST_CASE("gamma norm of the unit box in closed form") {
  StepFunction f = unit_box();
  // f**(t) = min(1, 1/t): int (x^{-1/4} f**)^2 = 2 + 2/3
  CHECK(gamma_norm(f, -0.25, 2.0).value ==
        doctest::Approx(std::sqrt(8.0 / 3.0)).epsilon(1e-10));
  CHECK(gamma_norm(f, 0.25, kInf).value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(gamma_norm(f, -0.5, 2.0).infinite);
  // weighted form with the matching power delegates to the same closed form
  LorentzResult w = gamma_norm_weighted(f, Weight::power(-0.25), 2.0);
  CHECK(w.value == doctest::Approx(std::sqrt(8.0 / 3.0)).epsilon(1e-10));
}

TEST_CASE("profile reconstruction is a plain power sum") {
  FtLevelProfile prof;
  prof.p = 2.0;
  prof.m = {0};
  prof.sup_mass = {4.0};
  CHECK(morrey_norm_from_profile(prof, kInf, 0.3).value ==
        doctest::Approx(2.0).epsilon(1e-15));
  prof.m = {0, 1};
  prof.sup_mass = {4.0, 4.0};
  // each level contributes (2^{-m lambda} mass^{1/p})^q with q = 2
  double t0 = 4.0, t1 = std::pow(std::pow(2.0, -0.3) * 2.0, 2.0);
  CHECK(morrey_norm_from_profile(prof, 2.0, 0.3).value ==
        doctest::Approx(std::sqrt(t0 + t1)).epsilon(1e-12));
}

TEST_CASE("transform-mode Morrey norm is a certified stable lower bound") {
  StepFT g(unit_box());
  FtNormOpts opts;
  opts.m_lo = -6;
  opts.m_hi = 2;
  opts.resolution = 64;
  opts.search_radius = 8.0;
  NormResult r = morrey_norm_ft(g, 2.0, kInf, 0.25, opts);
  CHECK(r.lower_bound_only);
  CHECK(r.value > 0.5);
  CHECK(r.value < 1.0);
  CHECK(r.refinement_delta <= 0.05 * r.value);
  // finer quadrature may only reveal more of the sup, up to quadrature noise
  FtNormOpts fine = opts;
  fine.resolution = 128;
  NormResult r2 = morrey_norm_ft(g, 2.0, kInf, 0.25, fine);
  CHECK(r2.value == doctest::Approx(r.value).epsilon(0.02));
}

TEST_CASE("NormParams exponent arithmetic and validation") {
  NormParams np;
  np.p = 2.0;
  np.lambda = 0.25;
  CHECK(np.s() == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(np.s_conj() == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(np.alpha() == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(np.beta() == doctest::Approx(0.25).epsilon(1e-14));
  NormParams p1;
  p1.p = 1.0;
  p1.lambda = 0.75;
  CHECK(p1.beta() == doctest::Approx(0.25).epsilon(1e-14));
  NormParams bad;
  bad.p = 2.0;
  bad.lambda = 0.6;
  CHECK_THROWS_AS(bad.s(), config_error);
}

TEST_CASE("Weight evaluation, coverage and doubling certificates") {
  Weight pw = Weight::power(-0.5);
  CHECK(pw.is_power());
  CHECK(pw.at_dyadic(4) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(pw.covers(1000));
  auto d = pw.doubling(-50, 50);
  CHECK(d.certified);
  CHECK(d.constant == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  Weight tw = Weight::table({{-2, 4.0}, {-1, 2.0}, {0, 1.0}, {1, 0.5}});
  CHECK_FALSE(tw.is_power());
  CHECK(tw.table_lo() == -2);
  CHECK(tw.table_hi() == 1);
  CHECK(tw.covers(0));
  CHECK_FALSE(tw.covers(2));
  CHECK(tw.doubling(-2, 1).certified);
  CHECK(tw.doubling(-2, 1).constant == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_FALSE(tw.doubling(-3, 1).certified);
  CHECK_THROWS_AS(Weight::table({}), config_error);
}

TEST_CASE("ball averages and best constants on random balls") {
  CorpusOpts co;
  co.real_only = true;
  auto corpus = generate_corpus(271, 6, co);
  Rng rng(99);
  for (const StepFunction& f : corpus) {
    for (double p : {1.0, 2.0, 4.0}) {
      double x = rng.uniform(-2.0, 6.0);
      double r = rng.uniform(0.3, 3.0);
      cplx avg = ball_average(f, {x, 0.0}, r);
      // the distance at a given constant is a p-mass; take the root to
      // compare with the best-constant norm
      double norm_avg =
          std::pow(lp_dist_const_on_ball(f, p, {x, 0.0}, r, avg), 1.0 / p);
      double d_best = lp_dist_best_const_on_ball(f, p, {x, 0.0}, r);
      // the average is never better than the best constant, and worse by at
      // most the factor 2 from the triangle inequality
      CHECK(d_best <= norm_avg + 1e-9);
      CHECK(norm_avg <= 2.0 * d_best * (1.0 + 1e-6) + 1e-9);
    }
  }
  // for p = 2 the average is the best constant
  const StepFunction& f0 = corpus[0];
  double da = lp_dist_const_on_ball(f0, 2.0, {1.0, 0.0}, 2.0,
                                    ball_average(f0, {1.0, 0.0}, 2.0));
  double db = lp_dist_best_const_on_ball(f0, 2.0, {1.0, 0.0}, 2.0);
  CHECK(std::sqrt(da) == doctest::Approx(db).epsilon(1e-6));
}

TEST_CASE("oscillation of the unit box at a half-covered window") {
  StepFunction f = unit_box();
  // window [x-r, x+r] centered on the jump holds fraction 1/2, so the
  // oscillation is sqrt(2r theta(1-theta)) at theta = 1/2
  double r = 0.25;
  double osc = oscillation_term(f, 2.0, r, r / 8.0);
  CHECK(osc == doctest::Approx(std::sqrt(r / 2.0)).epsilon(1e-12));
}

TEST_CASE("campanato seminorm finiteness tracks the lambda window") {
  StepFunction f = unit_box();
  NormResult ok = campanato_seminorm(f, 2.0, kInf, 0.25);
  CHECK_FALSE(ok.infinite);
  CHECK(ok.value > 0.0);
  // above lambda = n/p a jump forces Hoelder failure
  NormResult bad = campanato_seminorm(f, 2.0, kInf, 0.75);
  CHECK(bad.infinite);
  // the full norm adds the unit-ball L_p term
  NormResult full = campanato_norm(f, 2.0, kInf, Weight::power(-0.25));
  CHECK(full.value >= ok.value - 1e-12);
}

TEST_CASE("lip seminorm of closed forms") {
  ClosedFormFT c(1, [](const std::array<double, 2>&) { return cplx(3.0); });
  CHECK(lip_seminorm_ft(c, 0.5, -6, -1, 4.0, 129) == 0.0);
  ClosedFormFT lin(1, [](const std::array<double, 2>& y) {
    return cplx(y[0], 0.0);
  });
  // omega(t) = t, so t^{-1/2} omega(t) peaks at the largest t = 2^{-1}
  double v = lip_seminorm_ft(lin, 0.5, -6, -1, 4.0, 513);
  CHECK(v <= std::pow(2.0, -0.5) + 1e-9);
  CHECK(v >= 0.85 * std::pow(2.0, -0.5));
}

}  // TEST_SUITE
