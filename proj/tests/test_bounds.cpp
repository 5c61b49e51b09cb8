#include <doctest.h>

#include <cmath>

#include "ellint/bounds.hpp"
#include "oracles.hpp"

using namespace ellint;

namespace {
const EvalConfig<> cfg{};

ModulusPoint<double> at(double r) { return ModulusPoint<double>::from_r(r); }
}

TEST_CASE("sharp constants") {
  const auto c = sharp_constants(Param<double>{0.5});
  CHECK(c.alpha0 == doctest::Approx(0.13309003545679846).epsilon(1e-13));
  CHECK(c.beta0 == 0.25);
  CHECK(sharp_constants(Param<double>{0.3}).beta0 ==
        doctest::Approx(0.21).epsilon(1e-15));
}

TEST_CASE("constant ordering lambda1 < alpha0 < beta0, lambda2 > 0") {
  for (int i = 1; i <= 50; ++i) {
    const auto c = sharp_constants(Param<double>{0.5 * i / 50.0});
    CHECK(c.lambda1 < c.alpha0);
    CHECK(c.alpha0 < c.beta0);
    CHECK(c.beta0 <= 0.25);
    CHECK(c.lambda2 > 0);
  }
}

TEST_CASE("ratio_rho limits and a frozen value") {
  // r -> 0: rho -> 1 + alpha0
  for (double a : {0.1, 0.3, 0.5}) {
    const Param<double> pa{a};
    const auto c = sharp_constants(pa);
    CHECK(std::abs(ratio_rho(pa, at(1e-6), cfg) - (1 + c.alpha0)) <= 1e-6);
    // r -> 1: rho -> 1
    CHECK(std::abs(ratio_rho(pa, ModulusPoint<double>::from_rp2(1e-10), cfg) -
                   1.0) <= 1e-4);
  }
  // a = 1/2, r = 0.8: K(0.8)/log(4/0.6)
  CHECK(ratio_rho(Param<double>{0.5}, at(0.8), cfg) ==
        doctest::Approx(1.0517536020710647).epsilon(1e-13));
}

TEST_CASE("rho stays strictly inside the envelope") {
  for (double a : {0.05, 0.25, 0.5}) {
    const Param<double> pa{a};
    const auto c = sharp_constants(pa);
    for (double r = 1e-4; r < 1; r = r < 0.9 ? r * 3 : (1 + r) / 2) {
      const auto p = at(r);
      const double rho = ratio_rho(pa, p, cfg);
      CHECK(rho > 1 + c.alpha0 * p.rp2);
      CHECK(rho < 1 + c.beta0 * p.rp2);
    }
  }
}

TEST_CASE("envelope at a = 1/2, r = 0.5") {
  const Param<double> half{0.5};
  const auto rep = envelope(half, at(0.5), cfg);
  CHECK(rep.value == doctest::Approx(1.685750354812596).epsilon(1e-13));
  CHECK(rep.value == doctest::Approx(oracle::agm_k(0.5)).epsilon(1e-13));
  CHECK(rep.lower < rep.value);
  CHECK(rep.value < rep.upper);
  CHECK(rep.lower_margin > 0);
  CHECK(rep.upper_margin > 0);
}

TEST_CASE("envelope margins collapse at the sharp ends") {
  const Param<double> a{0.4};
  // alpha0 is pinned at r -> 0
  const auto rep0 = envelope(a, at(1e-5), cfg);
  CHECK(rep0.lower_margin > 0);
  CHECK(rep0.lower_margin < 1e-11);
  // beta0 is pinned at r -> 1
  const auto rep1 = envelope(a, ModulusPoint<double>::from_rp2(1e-9), cfg);
  CHECK(rep1.upper_margin > 0);
  CHECK(rep1.upper_margin < 1e-7);
}

TEST_CASE("fault injection: a perturbed lower constant fails near r -> 0") {
  const Param<double> a{0.3};
  const auto c = sharp_constants(a);
  const double lam = c.alpha0 + 0.01;
  const auto p = at(1e-4);
  // corrupted lower bound exceeds K_a, i.e. H_lambda > 0
  CHECK(h_lambda(a, lam, p, cfg) > 0);
  // while the true constant keeps the margin positive
  CHECK(h_lambda(a, c.alpha0, p, cfg) < 0);
}

TEST_CASE("f_lemma33 endpoints, monotonicity, and route agreement") {
  const double pi = constants<double>::pi;
  for (double a : {0.2, 0.5}) {
    const Param<double> pa{a};
    const double lo = f_lemma33(pa, at(1e-3), cfg);
    const double lo_target =
        std::sin(pi * a) - pi * a * (1 - a) - pi / 2 * a * a * (1 - a) * (1 - a);
    CHECK(std::abs(lo - lo_target) <= 1e-6);
    const double hi =
        f_lemma33(pa, ModulusPoint<double>::from_rp2(1e-8), cfg);
    CHECK(std::abs(hi - a * (1 - a) * std::sin(pi * a)) <= 1e-6);
    double prev = -1e9;
    for (int i = 1; i <= 200; ++i) {
      const double cur = f_lemma33(pa, at(i / 201.0), cfg);
      CHECK(cur > prev);
      prev = cur;
    }
    // series route vs an explicit direct subtraction at moderate r
    for (double r : {0.3, 0.45}) {
      const auto p = at(r);
      const double x = p.r2();
      const double k = ellk_gen(pa, p, cfg);
      const double em = elle_gen(pa, p, cfg) - p.rp2 * k;
      const double direct =
          (x * x * std::sin(pi * a) - 2 * a * (1 - a) * x * p.rp2 * k +
           2 * (1 - a) * (p.rp2 - x) * em) /
          (p.rp2 * x * x);
      CHECK(f_lemma33(pa, p, cfg) == doctest::Approx(direct).epsilon(1e-9));
    }
    // range membership at an interior point
    const double mid = f_lemma33(pa, at(0.5), cfg);
    CHECK(mid > lo_target);
    CHECK(mid < a * (1 - a) * std::sin(pi * a));
  }
}

TEST_CASE("g_lambda limit table") {
  for (double a : {0.15, 0.3, 0.5}) {
    const Param<double> pa{a};
    const auto c = sharp_constants(pa);
    const auto p0 = at(1e-6);
    // sign flip across lambda1
    CHECK(g_lambda(pa, c.lambda1 - 1e-6, p0, cfg) > 0);
    CHECK(g_lambda(pa, c.lambda1 + 1e-6, p0, cfg) < 0);
    CHECK(std::abs(g_lambda(pa, c.lambda1, p0, cfg)) < 1e-5);
    // G_beta(1-) = 1 - 1/(2a(1-a))
    const double g1 =
        g_lambda(pa, c.beta0, ModulusPoint<double>::from_rp2(1e-8), cfg);
    CHECK(std::abs(g1 - (1 - 1 / (2 * a * (1 - a)))) <= 1e-4);
  }
  CHECK_THROWS_AS(g_lambda(Param<double>{0.3}, 0.0, at(0.5), cfg),
                  domain_error);
}

TEST_CASE("h_lambda endpoints and derivative identity") {
  const double pi = constants<double>::pi;
  const Param<double> a{0.35};
  const auto c = sharp_constants(a);
  // H_{alpha0}(0+) = 0
  CHECK(std::abs(h_lambda(a, c.alpha0, at(1e-8), cfg)) <= 1e-12);
  // H_lambda(1-) = 0 for any lambda
  for (double lam : {c.alpha0, 0.2, c.beta0}) {
    CHECK(std::abs(h_lambda(a, lam, ModulusPoint<double>::from_rp2(1e-10),
                            cfg)) <= 1e-8);
  }
  // dH/dr = 2 lambda r sin(pi a) G_lambda
  for (double lam : {c.alpha0, c.beta0}) {
    for (double r : {0.2, 0.6, 0.9}) {
      const double fd = oracle::central_diff(
          [&](double rr) { return h_lambda(a, lam, at(rr), cfg); }, r, 1e-5);
      const double closed =
          2 * lam * r * std::sin(pi * 0.35) * g_lambda(a, lam, at(r), cfg);
      CHECK(closed == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("envelope_scan") {
  const std::vector<Param<double>> as{Param<double>{0.5}};
  const std::vector<double> rs{0.5};
  const auto reports = envelope_scan(as, rs, cfg);
  REQUIRE(reports.size() == 1);
  const auto direct = envelope(Param<double>{0.5}, at(0.5), cfg);
  CHECK(reports[0].lower == direct.lower);
  CHECK(reports[0].value == direct.value);
  CHECK(reports[0].upper == direct.upper);
  CHECK_THROWS_AS(envelope_scan(as, {}, cfg), domain_error);
  CHECK_THROWS_AS(envelope_scan({}, rs, cfg), domain_error);
}

TEST_CASE("sharpness witnesses exist for perturbed constants") {
  for (double a : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    const Param<double> pa{a};
    const auto c = sharp_constants(pa);
    const auto lo = sharpness_scan(pa, c.alpha0 + 0.01, Side::lower, cfg);
    CHECK(lo.gap > 0);
    CHECK(lo.r <= 0.1);
    const auto up = sharpness_scan(pa, c.beta0 - 0.01, Side::upper, cfg);
    CHECK(up.gap > 0);
    CHECK(up.r > 0.9);
  }
}

TEST_CASE("a lambda strictly between the sharp constants fails both ways") {
  const Param<double> a{0.5};
  const auto lo = sharpness_scan(a, 0.2, Side::lower, cfg);
  CHECK(lo.gap > 0);
  const auto up = sharpness_scan(a, 0.2, Side::upper, cfg);
  CHECK(up.gap > 0);
}

TEST_CASE("sharpness preconditions") {
  const Param<double> a{0.3};
  const auto c = sharp_constants(a);
  CHECK_THROWS_AS(sharpness_scan(a, c.alpha0 - 0.01, Side::lower, cfg),
                  domain_error);
  CHECK_THROWS_AS(sharpness_scan(a, c.beta0 + 0.01, Side::upper, cfg),
                  domain_error);
}
