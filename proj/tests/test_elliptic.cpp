#include <doctest.h>

#include <cmath>

#include "ellint/elliptic.hpp"
#include "oracles.hpp"

using namespace ellint;

namespace {
const EvalConfig<> cfg{};

ModulusPoint<double> at(double r) { return ModulusPoint<double>::from_r(r); }
}

TEST_CASE("modulus point validation") {
  CHECK_THROWS_AS(ModulusPoint<double>::from_r(0.0), domain_error);
  CHECK_THROWS_AS(ModulusPoint<double>::from_r(1.0), domain_error);
  CHECK_THROWS_AS(ModulusPoint<double>::from_rp2(1.0), domain_error);
  const auto p = at(0.6);
  CHECK(p.rp2 == doctest::Approx(0.64).epsilon(1e-15));
}

TEST_CASE("ellk values") {
  const Param<double> half{0.5};
  CHECK(ellk_gen(half, at(1e-9), cfg) ==
        doctest::Approx(constants<double>::pi / 2).epsilon(1e-15));
  CHECK(ellk_gen(half, at(0.6), cfg) ==
        doctest::Approx(1.7507538029157526).epsilon(1e-13));
  // a = 0.3, r = 0.9 against a fixed-length brute-force sum
  const Param<double> a{0.3};
  const double brute = constants<double>::pi / 2 *
                       oracle::brute_2f1(0.3, 0.7, 1.0, 0.81, 100000);
  CHECK(ellk_gen(a, at(0.9), cfg) == doctest::Approx(brute).epsilon(1e-12));
}

TEST_CASE("ellk AGM regression over a grid at a = 1/2") {
  const Param<double> half{0.5};
  for (double r = 0.1; r < 0.995; r += 0.05) {
    const double k = ellk_gen(half, at(r), cfg);
    CHECK(std::abs(k - oracle::agm_k(r)) / k <= 1e-12);
  }
}

TEST_CASE("ellk refuses the logarithmic blow-up region") {
  CHECK_THROWS_AS(ellk_gen(Param<double>{0.5},
                           ModulusPoint<double>::from_rp2(1e-15), cfg),
                  domain_error);
}

TEST_CASE("elle values") {
  const Param<double> half{0.5};
  CHECK(elle_gen(half, at(1e-9), cfg) ==
        doctest::Approx(constants<double>::pi / 2).epsilon(1e-15));
  CHECK(elle_gen(half, at(0.6), cfg) ==
        doctest::Approx(1.4180833944487243).epsilon(1e-13));
  CHECK(elle_gen(half, at(0.6), cfg) ==
        doctest::Approx(oracle::quad_e(0.6)).epsilon(1e-12));
  // boundary value sin(pi a)/(2(1-a)) as r -> 1
  for (double a : {0.25, 0.5}) {
    const Param<double> pa{a};
    const double lim = std::sin(constants<double>::pi * a) / (2 * (1 - a));
    const double v = elle_gen(pa, at(1 - 1e-6), cfg);
    // the approach rate is O(r'^2 log r'), ~1e-5 at this distance
    CHECK(std::abs(v - lim) <= 1e-4);
    CHECK(v > lim);
  }
}

TEST_CASE("K increasing, E decreasing in r") {
  for (double a : {0.1, 0.3, 0.5}) {
    const Param<double> pa{a};
    double pk = 0, pe = 1e9;
    for (int i = 1; i <= 1000; ++i) {
      const double r = i / 1001.0;
      const double k = ellk_gen(pa, at(r), cfg);
      const double e = elle_gen(pa, at(r), cfg);
      CHECK(k > pk);
      CHECK(e < pe);
      pk = k;
      pe = e;
    }
  }
}

TEST_CASE("em_combo small-r leading behavior") {
  for (double a : {0.1, 0.4}) {
    const Param<double> pa{a};
    const double r = 1e-6;
    const double lead = em_combo(pa, at(r), cfg) / (r * r);
    CHECK(lead == doctest::Approx(constants<double>::pi * a / 2)
                      .epsilon(1e-9));
  }
}

TEST_CASE("em_combo equals the direct subtraction away from cancellation") {
  for (double a : {0.2, 0.5}) {
    const Param<double> pa{a};
    for (double r = 0.3; r <= 0.9; r += 0.1) {
      const auto p = at(r);
      const double direct =
          elle_gen(pa, p, cfg) - p.rp2 * ellk_gen(pa, p, cfg);
      CHECK(std::abs(em_combo(pa, p, cfg) - direct) <=
            1e-12 * std::abs(direct));
    }
  }
  // frozen reference point: a = 1/2, r = 0.5
  const Param<double> half{0.5};
  const auto p = at(0.5);
  const double direct = elle_gen(half, p, cfg) - 0.75 * ellk_gen(half, p, cfg);
  CHECK(em_combo(half, p, cfg) == doctest::Approx(direct).epsilon(1e-13));
  CHECK(em_combo(half, p, cfg) ==
        doctest::Approx(0.20314944322998013).epsilon(1e-12));
}

TEST_CASE("closed-form derivatives vs central differences") {
  const double h = 1e-5;
  for (double a : {0.15, 0.35, 0.5}) {
    const Param<double> pa{a};
    auto kf = [&](double r) { return ellk_gen(pa, at(r), cfg); };
    auto ef = [&](double r) { return elle_gen(pa, at(r), cfg); };
    auto emf = [&](double r) { return em_combo(pa, at(r), cfg); };
    for (double r : {0.1, 0.5, 0.9}) {
      const auto p = at(r);
      CHECK(d_ellk_gen(pa, p, cfg) ==
            doctest::Approx(oracle::central_diff(kf, r, h)).epsilon(1e-6));
      CHECK(d_elle_gen(pa, p, cfg) ==
            doctest::Approx(oracle::central_diff(ef, r, h)).epsilon(1e-6));
      CHECK(2 * a * r * ellk_gen(pa, p, cfg) ==
            doctest::Approx(oracle::central_diff(emf, r, h)).epsilon(1e-6));
      CHECK(d_ellk_gen(pa, p, cfg) > 0);
      CHECK(d_elle_gen(pa, p, cfg) < 0);
    }
  }
}

TEST_CASE("d_ellk small-r behavior: ~ pi a (1-a) r") {
  const Param<double> pa{0.3};
  const double r = 1e-7;
  CHECK(d_ellk_gen(pa, at(r), cfg) / r ==
        doctest::Approx(constants<double>::pi * 0.3 * 0.7).epsilon(1e-9));
}
