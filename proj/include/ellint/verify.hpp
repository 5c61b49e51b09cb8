// Self-verification catalogue: every inequality, monotonicity claim, limit
// value and sharpness assertion of the envelope theory, checked numerically
// on grids. Each check returns a pass/fail record with its worst grid point.

#ifndef ELLINT_VERIFY_HPP_
#define ELLINT_VERIFY_HPP_

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ellint/bounds.hpp"
#include "ellint/config.hpp"
#include "ellint/elliptic.hpp"
#include "ellint/ramanujan.hpp"

namespace ellint {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

enum class VerifyLevel { quick, full };

namespace verify_detail {

inline double agm(double x, double y) {
  for (int i = 0; i < 64 && std::abs(x - y) > 1e-17 * x; ++i) {
    const double m = (x + y) / 2;
    y = std::sqrt(x * y);
    x = m;
  }
  return (x + y) / 2;
}

/// Legendre K(r) through the arithmetic-geometric mean, the classical
/// independent route for the a = 1/2 regression.
inline double agm_ellk(double r) {
  return constants<double>::pi / (2 * agm(1.0, std::sqrt((1 - r) * (1 + r))));
}

struct Worst {
  double gap = std::numeric_limits<double>::infinity();
  double at = 0;
  void update(double g, double where) {
    if (g < gap) {
      gap = g;
      at = where;
    }
  }
};

/// Grid restatement of a monotonicity claim: strict
/// pairwise comparison of consecutive values. sign = +1 increasing,
/// -1 decreasing. Returns the worst consecutive difference.
template <class F>
Worst strictly_monotone(F && f, const std::vector<double> & grid, int sign) {
  Worst w;
  double prev = f(grid.front());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = f(grid[i]);
    w.update(sign * (cur - prev), grid[i]);
    prev = cur;
  }
  return w;
}

inline std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    g[i] = lo + (hi - lo) * i / (n - 1 > 0 ? n - 1 : 1);
  }
  return g;
}

inline std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> g(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i) {
    g[i] = std::exp(llo + (lhi - llo) * i / (n - 1 > 0 ? n - 1 : 1));
  }
  return g;
}

template <class F>
double central_diff(F && f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

inline CheckResult make(const std::string & name, bool pass,
                        const std::ostringstream & os) {
  return CheckResult{name, pass, os.str()};
}

}  // namespace verify_detail

/// Criterion: R(1/2) = 4 log 2 via both routes; dual-route agreement on a
/// grid of x in (0.001, 0.5].
inline CheckResult check_r_dual_route(int scale, const EvalConfig<> & cfg) {
  namespace vd = verify_detail;
  const double target = 4 * std::log(2.0);
  const RArgument<double> half{0.5};
  const double e1 = std::abs(r_def(half) - target) / target;
  const double e2 = std::abs(r_series(half, cfg) - target) / target;
  bool pass = e1 <= 1e-13 && e2 <= 1e-13;
  double worst = 0, worst_x = 0;
  for (double x : vd::linspace(0.001, 0.5, 1000 / scale)) {
    const RArgument<double> ax{x};
    const double rd = r_def(ax);
    const double rel = std::abs(rd - r_series(ax, cfg)) / rd;
    if (rel > worst) {
      worst = rel;
      worst_x = x;
    }
  }
  pass = pass && worst <= 1e-12;
  std::ostringstream os;
  os << "R(1/2) rel err def=" << e1 << " series=" << e2
     << "; worst dual-route rel " << worst << " at x=" << worst_x;
  return vd::make("r-dual-route", pass, os);
}

/// Criterion: xi strictly increasing with range (1, 4 - 4 log 2].
inline CheckResult check_xi(int scale, const EvalConfig<> &) {
  namespace vd = verify_detail;
  const double left = xi(RArgument<double>{1e-4});
  const double right = xi(RArgument<double>{0.5});
  const double right_target = 4 - 4 * std::log(2.0);
  auto w = vd::strictly_monotone(
      [](double x) { return xi(RArgument<double>{x}); },
      vd::linspace(1e-4, 0.5, 1000 / scale), +1);
  const bool pass = left > 1 && left < 1.001 &&
                    std::abs(right - right_target) <= 1e-12 && w.gap > 0;
  std::ostringstream os;
  os << "xi(1e-4)=" << left << ", |xi(1/2)-(4-4log2)|="
     << std::abs(right - right_target) << ", min consecutive increase "
     << w.gap << " at x=" << w.at;
  return vd::make("xi-range-monotone", pass, os);
}

/// Criterion: eta strictly decreasing with range [4 pi - 16 log 2, pi^2/6).
inline CheckResult check_eta(int scale, const EvalConfig<> &) {
  namespace vd = verify_detail;
  const double pi = constants<double>::pi;
  const double left = eta(RArgument<double>{1e-4});
  const double right = eta(RArgument<double>{0.5});
  const double right_target = 4 * pi - 16 * std::log(2.0);
  auto w = vd::strictly_monotone(
      [](double x) { return eta(RArgument<double>{x}); },
      vd::linspace(1e-4, 0.5, 1000 / scale), -1);
  const bool pass = std::abs(left - pi * pi / 6) <= 1e-3 &&
                    std::abs(right - right_target) <= 1e-12 && w.gap > 0;
  std::ostringstream os;
  os << "|eta(1e-4)-pi^2/6|=" << std::abs(left - pi * pi / 6)
     << ", |eta(1/2)-(4pi-16log2)|=" << std::abs(right - right_target)
     << ", min consecutive decrease " << w.gap << " at x=" << w.at;
  return vd::make("eta-range-monotone", pass, os);
}

/// Criterion: the three inequality gaps are strictly positive, and the two
/// decimal constants quoted for them reproduce to three digits.
inline CheckResult check_gap_positivity(int scale, const EvalConfig<> &) {
  namespace vd = verify_detail;
  const double pi = constants<double>::pi;
  vd::Worst w24, w25, ws;
  for (double x : vd::linspace(1e-4, 0.5, 1000 / scale)) {
    const RArgument<double> ax{x};
    w24.update(cor24_gap(ax), x);
    w25.update(cor25_gap(ax), x);
    ws.update(sine_gap(x), x);
  }
  // proof constants, assembled from library quantities
  const RArgument<double> half{0.5};
  const double c1 =
      rs_product(half) * eta(half) - pi * xi(half);  // (20log2-4)pi - 64log^2(2)
  const double c2 = std::log(16.0) - zeta_int<double>(2);  // log16 - pi^2/6
  const bool pass = w24.gap > 0 && w25.gap > 0 && ws.gap > 0 &&
                    c1 >= 0.236 && c1 < 0.237 && c2 >= 1.127 && c2 < 1.128;
  std::ostringstream os;
  os << "min gaps: cor24 " << w24.gap << " (x=" << w24.at << "), cor25 "
     << w25.gap << " (x=" << w25.at << "), sine " << ws.gap
     << " (x=" << ws.at << "); constants " << c1 << ", " << c2;
  return vd::make("gap-positivity", pass, os);
}

/// Criterion: at a = 1/2 the machinery reduces to Legendre's K: AGM
/// agreement, e^{R(1/2)/2} = 4, and the classical log(4/r') bound forms.
inline CheckResult check_agm_regression(int scale, const EvalConfig<> & cfg) {
  namespace vd = verify_detail;
  const Param<double> half{0.5};
  const auto c = sharp_constants(half);
  double worst = 0, worst_r = 0;
  vd::Worst env;
  for (double r : vd::logspace(0.01, 0.9999, std::max(50 / scale, 8))) {
    const auto p = ModulusPoint<double>::from_r(r);
    const double k = ellk_gen(half, p, cfg);
    const double rel = std::abs(k - vd::agm_ellk(r)) / k;
    if (rel > worst) {
      worst = rel;
      worst_r = r;
    }
    // classical forms (lower/upper constants pi/(4log2)-1 and 1/4)
    const double log4rp = std::log(4.0) + detail::log_inv_rprime(p);
    const double ratio = k / log4rp;
    env.update(1 + 0.25 * p.rp2 - ratio, r);
    env.update(ratio - (1 + (constants<double>::pi / (4 * std::log(2.0)) - 1) *
                                p.rp2),
               r);
  }
  const double e_exp =
      std::abs(std::exp(r_def(RArgument<double>{0.5}) / 2) - 4.0);
  const double e_alpha =
      std::abs(c.alpha0 - (constants<double>::pi / (4 * std::log(2.0)) - 1));
  const bool pass = worst <= 1e-12 && e_exp <= 1e-12 && e_alpha <= 1e-13 &&
                    c.beta0 == 0.25 && env.gap > 0;
  std::ostringstream os;
  os << "worst AGM rel " << worst << " at r=" << worst_r
     << "; |e^{R/2}-4|=" << e_exp << "; classical-form min gap " << env.gap;
  return vd::make("agm-regression", pass, os);
}

/// Criterion: closed-form derivative formulas against central differences.
inline CheckResult check_derivative_identities(int scale,
                                               const EvalConfig<> & cfg) {
  namespace vd = verify_detail;
  const int n = std::max(20 / scale, 4);
  const double h = 1e-5;
  double worst = 0;
  double worst_a = 0, worst_r = 0;
  const char * worst_id = "";
  auto consider = [&](const char * id, double a, double r, double closed,
                      double fd) {
    const double rel = std::abs(closed - fd) / std::abs(closed);
    if (rel > worst) {
      worst = rel;
      worst_a = a;
      worst_r = r;
      worst_id = id;
    }
  };
  for (double a : vd::linspace(0.025, 0.5, n)) {
    const Param<double> pa{a};
    auto kfun = [&](double r) {
      return ellk_gen(pa, ModulusPoint<double>::from_r(r), cfg);
    };
    auto efun = [&](double r) {
      return elle_gen(pa, ModulusPoint<double>::from_r(r), cfg);
    };
    auto emfun = [&](double r) {
      return em_combo(pa, ModulusPoint<double>::from_r(r), cfg);
    };
    for (double r : vd::linspace(0.05, 0.95, n)) {
      const auto p = ModulusPoint<double>::from_r(r);
      consider("dK", a, r, d_ellk_gen(pa, p, cfg),
               vd::central_diff(kfun, r, h));
      consider("dE", a, r, d_elle_gen(pa, p, cfg),
               vd::central_diff(efun, r, h));
      // d/dr(K - E) = 2(1-a) r E / r'^2
      consider("d(K-E)", a, r, 2 * (1 - a) * r * elle_gen(pa, p, cfg) / p.rp2,
               vd::central_diff([&](double rr) { return kfun(rr) - efun(rr); },
                                r, h));
      // d/dr(E - r'^2 K) = 2 a r K
      consider("d(E-r'2K)", a, r, 2 * a * r * ellk_gen(pa, p, cfg),
               vd::central_diff(emfun, r, h));
    }
  }
  const bool pass = worst <= 1e-6;
  std::ostringstream os;
  os << "worst rel " << worst << " (" << worst_id << ") at a=" << worst_a
     << " r=" << worst_r;
  return vd::make("derivative-identities", pass, os);
}

namespace verify_detail {

/// Envelope margins evaluated in extended precision: near r -> 0 the lower
/// margin shrinks to ~a^2 r^2 and sits only a few double ulps above zero at
/// the grid corner.
inline EnvelopeReport<long double> envelope_ld(long double a,
                                               const ModulusPoint<long double> & p) {
  static const EvalConfig<long double> cfg{};
  return envelope(Param<long double>{a}, p, cfg);
}

inline std::vector<ModulusPoint<long double>> envelope_grid(int n_r) {
  std::vector<ModulusPoint<long double>> pts;
  const int half = n_r / 2;
  for (double r : logspace(1e-6, 0.70, half)) {
    pts.push_back(ModulusPoint<long double>::from_r(r));
  }
  for (double y : logspace(0.5, 1e-10, n_r - half)) {
    pts.push_back(ModulusPoint<long double>::from_rp2(y));
  }
  return pts;
}

}  // namespace verify_detail

/// Criterion: strictly positive envelope margins across the (a, r) grid and
/// the two asymptotic sharpness limits of the ratio rho.
inline CheckResult check_envelope(int scale, const EvalConfig<> &) {
  namespace vd = verify_detail;
  const int n_a = std::max(20 / scale, 4);
  const int n_r = std::max(200 / scale, 16);
  const auto pts = vd::envelope_grid(n_r);
  long double worst_lo = 1e30L, worst_up = 1e30L;
  double at_a = 0, at_r = 0;
  for (int i = 1; i <= n_a; ++i) {
    const long double a = 0.5L * i / n_a;
    for (const auto & p : pts) {
      const auto rep = vd::envelope_ld(a, p);
      if (rep.lower_margin < worst_lo) {
        worst_lo = rep.lower_margin;
        at_a = static_cast<double>(a);
        at_r = static_cast<double>(p.r);
      }
      worst_up = std::min(worst_up, rep.upper_margin);
    }
  }
  // asymptotic limits of rho
  const EvalConfig<double> cfg{};
  double worst_rho0 = 0, worst_rho1 = 0;
  for (int i = 1; i <= n_a; ++i) {
    const Param<double> a{0.5 * i / n_a};
    const auto c = sharp_constants(a);
    const auto p0 = ModulusPoint<double>::from_r(1e-6);
    worst_rho0 = std::max(worst_rho0,
                          std::abs(ratio_rho(a, p0, cfg) - (1 + c.alpha0)));
    worst_rho1 = std::max(
        worst_rho1, std::abs(detail::rho_minus_one_near_one(a, 1e-10, cfg)));
  }
  const bool pass = worst_lo > 0 && worst_up > 0 && worst_rho0 <= 1e-6 &&
                    worst_rho1 <= 1e-4;
  std::ostringstream os;
  os << "min lower margin " << static_cast<double>(worst_lo) << " (a=" << at_a
     << ", r=" << at_r << "), min upper margin "
     << static_cast<double>(worst_up) << "; |rho(1e-6)-(1+a0)| "
     << worst_rho0 << ", |rho-1| at r'^2=1e-10 " << worst_rho1;
  return vd::make("envelope-margins", pass, os);
}

/// Criterion: both perturbed constants produce violation witnesses.
inline CheckResult check_sharpness(int, const EvalConfig<> & cfg) {
  namespace vd = verify_detail;
  std::ostringstream os;
  bool pass = true;
  for (double av : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    const Param<double> a{av};
    const auto c = sharp_constants(a);
    try {
      const auto lo = sharpness_scan(a, c.alpha0 + 0.01, Side::lower, cfg);
      const auto up = sharpness_scan(a, c.beta0 - 0.01, Side::upper, cfg);
      os << "a=" << av << ": lower r=" << lo.r << " gap=" << lo.gap
         << ", upper r'^2=" << up.rp2 << " gap=" << up.gap << "; ";
    } catch (const witness_not_found & e) {
      pass = false;
      os << "a=" << av << ": " << e.what() << "; ";
    }
  }
  return vd::make("sharpness-witnesses", pass, os);
}

/// Criterion: F strictly increasing with the stated endpoint values.
inline CheckResult check_f_lemma33(int scale, const EvalConfig<> & cfg) {
  namespace vd = verify_detail;
  const double pi = constants<double>::pi;
  bool pass = true;
  std::ostringstream os;
  for (double av : {0.1, 0.3, 0.5}) {
    const Param<double> a{av};
    auto w = vd::strictly_monotone(
        [&](double r) {
          return f_lemma33(a, ModulusPoint<double>::from_r(r), cfg);
        },
        vd::linspace(1e-3, 0.999, 1000 / scale), +1);
    const double lo =
        f_lemma33(a, ModulusPoint<double>::from_r(1e-3), cfg);
    const double hi =
        f_lemma33(a, ModulusPoint<double>::from_rp2(1e-8), cfg);
    const double lo_target = std::sin(pi * av) - pi * av * (1 - av) -
                             pi / 2 * av * av * (1 - av) * (1 - av);
    const double hi_target = av * (1 - av) * std::sin(pi * av);
    const bool ok = w.gap > 0 && std::abs(lo - lo_target) <= 1e-6 &&
                    std::abs(hi - hi_target) <= 1e-6;
    pass = pass && ok;
    os << "a=" << av << ": min increase " << w.gap << ", endpoint errs "
       << std::abs(lo - lo_target) << "/" << std::abs(hi - hi_target) << "; ";
  }
  return vd::make("f-monotone-endpoints", pass, os);
}

/// Criterion: the G_lambda limit table, the sign flip at lambda1, the
/// derivative identity H' = 2 lambda r sin(pi a) G, and the three-part
/// monotonicity pattern in lambda.
inline CheckResult check_g_limits(int scale, const EvalConfig<> & cfg) {
  namespace vd = verify_detail;
  const double pi = constants<double>::pi;
  bool pass = true;
  std::ostringstream os;
  double worst_h = 0, worst_g1 = 0;
  for (double av : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    const Param<double> a{av};
    const auto c = sharp_constants(a);
    const auto p0 = ModulusPoint<double>::from_r(1e-6);
    const double g_minus = g_lambda(a, c.lambda1 - 1e-6, p0, cfg);
    const double g_plus = g_lambda(a, c.lambda1 + 1e-6, p0, cfg);
    const double g1 =
        g_lambda(a, c.beta0, ModulusPoint<double>::from_rp2(1e-8), cfg);
    const double g1_target = 1 - 1 / (2 * av * (1 - av));
    worst_g1 = std::max(worst_g1, std::abs(g1 - g1_target));
    if (!(g_minus > 0 && g_plus < 0)) {
      pass = false;
      os << "a=" << av << ": G(0+) sign flip failed; ";
    }
    // monotonicity pattern in the three lambda regimes
    const auto rgrid = vd::linspace(0.05, 0.995, 200 / scale);
    auto gfun = [&](double lam) {
      return [&, lam](double r) {
        return g_lambda(a, lam, ModulusPoint<double>::from_r(r), cfg);
      };
    };
    if (!(vd::strictly_monotone(gfun(0.9 * c.lambda2), rgrid, +1).gap > 0)) {
      pass = false;
      os << "a=" << av << ": G not increasing for lambda<=lambda2; ";
    }
    if (!(vd::strictly_monotone(gfun(1.1 * c.beta0), rgrid, -1).gap > 0)) {
      pass = false;
      os << "a=" << av << ": G not decreasing for lambda>=beta0; ";
    }
    {
      const double lam = (c.lambda2 + c.beta0) / 2;
      int flips = 0;
      double prev = g_lambda(a, lam, ModulusPoint<double>::from_r(rgrid[0]),
                             cfg);
      int dir = -1;
      for (std::size_t i = 1; i < rgrid.size(); ++i) {
        const double cur =
            g_lambda(a, lam, ModulusPoint<double>::from_r(rgrid[i]), cfg);
        const int d = cur > prev ? +1 : -1;
        if (d != dir) {
          ++flips;
          dir = d;
        }
        prev = cur;
      }
      if (flips != 1) {
        pass = false;
        os << "a=" << av << ": expected one turning point, saw " << flips
           << " direction changes; ";
      }
    }
  }
  // identity H' = 2 lambda r sin(pi a) G on a 10x10x3 grid
  const int n = std::max(10 / scale, 3);
  for (double av : vd::linspace(0.05, 0.5, n)) {
    const Param<double> a{av};
    const auto c = sharp_constants(a);
    for (double lam : {c.alpha0, c.beta0, (c.alpha0 + c.beta0) / 2}) {
      for (double r : vd::linspace(0.05, 0.95, n)) {
        const double fd = vd::central_diff(
            [&](double rr) {
              return h_lambda(a, lam, ModulusPoint<double>::from_r(rr), cfg);
            },
            r, 1e-5);
        const double closed =
            2 * lam * r * std::sin(pi * av) *
            g_lambda(a, lam, ModulusPoint<double>::from_r(r), cfg);
        worst_h = std::max(worst_h,
                           std::abs(closed - fd) / std::abs(closed));
      }
    }
  }
  pass = pass && worst_h <= 1e-6 && worst_g1 <= 1e-4;
  os << "worst H' identity rel " << worst_h << ", worst G_beta(1-) err "
     << worst_g1;
  return vd::make("g-limit-table", pass, os);
}

/// Runs the whole catalogue. quick divides grid counts by 10.
inline std::vector<CheckResult> run_all_checks(VerifyLevel level,
                                               const EvalConfig<> & cfg) {
  const int scale = level == VerifyLevel::quick ? 10 : 1;
  return {
      check_r_dual_route(scale, cfg),   check_xi(scale, cfg),
      check_eta(scale, cfg),            check_gap_positivity(scale, cfg),
      check_agm_regression(scale, cfg), check_derivative_identities(scale, cfg),
      check_envelope(scale, cfg),       check_sharpness(scale, cfg),
      check_f_lemma33(scale, cfg),      check_g_limits(scale, cfg),
  };
}

}  // namespace ellint

#endif  // ELLINT_VERIFY_HPP_
