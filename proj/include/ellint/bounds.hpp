// The sharp two-sided logarithmic envelope for K_a(r),
//
//   1 + alpha r'^2 < K_a(r) / [sin(pi a) log(e^{R(a)/2}/r')] < 1 + beta r'^2,
//
// with the best-possible constants alpha0 = pi/[R(a) sin(pi a)] - 1 and
// beta0 = a(1-a), the auxiliary functions F, G_lambda, H_lambda appearing in
// the proof, and a scanner producing concrete violation witnesses for any
// perturbed constant.

#ifndef ELLINT_BOUNDS_HPP_
#define ELLINT_BOUNDS_HPP_

#include <cmath>
#include <string>
#include <vector>

#include "ellint/config.hpp"
#include "ellint/elliptic.hpp"
#include "ellint/ramanujan.hpp"
#include "ellint/special.hpp"

namespace ellint {

class witness_not_found : public std::runtime_error {
 public:
  explicit witness_not_found(const std::string & what)
      : std::runtime_error(what) {}
};

enum class Side { lower, upper };

template <class Real = double>
struct SharpConstants {
  Real alpha0;   // pi/[R(a) sin(pi a)] - 1
  Real beta0;    // a(1-a)
  Real lambda1;  // [sin(pi a) - a(1-a) pi] / {sin(pi a)[R(a) - 1]}
  Real lambda2;  // 1 - pi a(1-a)/sin(pi a) - pi a^2(1-a)^2/[2 sin(pi a)]
};

template <class Real = double>
struct EnvelopeReport {
  Real a;
  Real r;
  Real lower;
  Real value;
  Real upper;
  Real lower_margin;  // value - lower
  Real upper_margin;  // upper - value
};

template <class Real = double>
struct ViolationWitness {
  Real a;
  Real lambda;
  Side side;
  Real r;
  Real rp2;  // kept separately: r rounds to 1 for upper-side witnesses
  Real gap;  // positive violation magnitude of the perturbed inequality
};

namespace detail {

/// -log r' = -(1/2) log r'^2, assembled from whichever of r^2, r'^2 is the
/// accurate small quantity at the current end of the interval.
template <class Real>
Real log_inv_rprime(const ModulusPoint<Real> & p) {
  if (p.rp2 > static_cast<Real>(0.5)) {
    const Real r2 = p.r * p.r;
    return -std::log1p(-r2) / 2;
  }
  return -std::log(p.rp2) / 2;
}

/// log(e^{R(a)/2}/r') = R(a)/2 - log r'.
template <class Real>
Real envelope_log(const Param<Real> & a, const ModulusPoint<Real> & p) {
  return r_def(RArgument<Real>{a.a}) / 2 + log_inv_rprime(p);
}

/// rho(a, r) - 1 for r'^2 = y below the near-one cut, evaluated without the
/// 1 - 1 cancellation: the n = 0 connection term reproduces the denominator
/// exactly, so only the n >= 1 tail remains.
template <class Real>
Real rho_minus_one_near_one(const Param<Real> & a, Real y,
                            const EvalConfig<Real> & cfg) {
  const Real denom = r_def(RArgument<Real>{a.a}) - std::log(y);
  return k_conn_sum(a.a, y, cfg, 1) / denom;
}

}  // namespace detail

template <class Real>
SharpConstants<Real> sharp_constants(const Param<Real> & a) {
  const Real pi = constants<Real>::pi;
  const Real R = r_def(RArgument<Real>{a.a});
  const Real s = std::sin(pi * a.a);
  const Real b = a.a * (1 - a.a);
  return SharpConstants<Real>{
      pi / (R * s) - 1,
      b,
      (s - b * pi) / (s * (R - 1)),
      1 - pi * b / s - pi * b * b / (2 * s)};
}

/// The middle member of the envelope inequality,
/// rho = K_a(r) / [sin(pi a) log(e^{R(a)/2}/r')]. Unlike ellk_gen this
/// accepts r arbitrarily close to 1, switching to the connection expansion.
template <class Real>
Real ratio_rho(const Param<Real> & a, const ModulusPoint<Real> & p,
               const EvalConfig<Real> & cfg) {
  if (p.rp2 <= cfg.near_one_cut) {
    return 1 + detail::rho_minus_one_near_one(a, p.rp2, cfg);
  }
  const Real k = ellk_gen(a, p, cfg);
  const Real pi = constants<Real>::pi;
  return k / (std::sin(pi * a.a) * detail::envelope_log(a, p));
}

template <class Real>
EnvelopeReport<Real> envelope(const Param<Real> & a,
                              const ModulusPoint<Real> & p,
                              const EvalConfig<Real> & cfg) {
  const Real pi = constants<Real>::pi;
  const SharpConstants<Real> c = sharp_constants(a);
  const Real s = std::sin(pi * a.a);
  const Real L = detail::envelope_log(a, p);
  const Real lower = s * (1 + c.alpha0 * p.rp2) * L;
  const Real upper = s * (1 + c.beta0 * p.rp2) * L;
  const Real value = ellk_gen(a, p, cfg);
  return EnvelopeReport<Real>{a.a,   p.r,           lower,
                              value, upper,         value - lower,
                              upper - value};
}

/**
 * The strictly increasing proof function
 *
 *   F(r) = [r^4 sin(pi a) - 2a(1-a) r^2 r'^2 K_a
 *           + 2(1-a)(r'^2 - r^2)(E_a - r'^2 K_a)] / (r'^2 r^4),
 *
 * with range (sin(pi a) - pi a(1-a) - (pi/2) a^2(1-a)^2, a(1-a) sin(pi a)).
 * The numerator cancels to O(r^4) as r -> 0, so for r^2 <= 1/4 it is
 * re-expanded term by term in powers of r^2 with every retained coefficient
 * O(1) relative.
 */
template <class Real>
Real f_lemma33(const Param<Real> & a, const ModulusPoint<Real> & p,
               const EvalConfig<Real> & cfg) {
  const Real pi = constants<Real>::pi;
  const Real x = p.r2();
  if (x <= static_cast<Real>(0.25)) {
    // coefficient of x^n in (1 - x) F: with k_n = (a)_n(1-a)_n/(n!)^2 and
    // e_n = a k_n/(n+1),
    //   N_n = [n=0] sin(pi a) + pi a(1-a)(k_n - k_{n+1})
    //         + pi (1-a)(e_{n+1} - 2 e_n)
    const Real b = a.a * (1 - a.a);
    Real kn = 1;
    Real xpow = 1;
    detail::KahanSum<Real> s;
    for (int n = 0; n < cfg.max_terms; ++n) {
      const Real kn1 = kn * (a.a + n) * (1 - a.a + n) /
                       ((n + 1) * static_cast<Real>(n + 1));
      Real coef = pi * b * (kn - kn1) +
                  pi * (1 - a.a) * a.a *
                      (kn1 / (n + 2) - 2 * kn / static_cast<Real>(n + 1));
      if (n == 0) {
        coef += std::sin(pi * a.a);
      }
      const Real term = coef * xpow;
      s.add(term);
      if (n > 0 && std::abs(term) <= cfg.rel_tol * std::abs(s.value())) {
        return s.value() / p.rp2;
      }
      kn = kn1;
      xpow *= x;
    }
    throw non_convergence("f_lemma33: term cap reached before tolerance");
  }
  const Real sa = std::sin(pi * a.a);
  const Real k = ellk_gen(a, p, cfg);
  const Real em = em_combo(a, p, cfg);
  const Real num = x * x * sa - 2 * a.a * (1 - a.a) * x * p.rp2 * k +
                   2 * (1 - a.a) * (p.rp2 - x) * em;
  return num / (p.rp2 * x * x);
}

/**
 * G_lambda(r) = 1/2 - log(e^{R(a)/2}/r')
 *               + [r^2 sin(pi a) - 2(1-a)(E_a - r'^2 K_a)]
 *                 / [2 lambda r^2 r'^2 sin(pi a)].
 * The bracketed numerator is O(r^2) with a leading coefficient
 * sin(pi a) - pi a(1-a); for r^2 <= 1/4 it is summed from that series.
 */
template <class Real>
Real g_lambda(const Param<Real> & a, Real lambda, const ModulusPoint<Real> & p,
              const EvalConfig<Real> & cfg) {
  if (!(lambda > 0)) {
    throw domain_error("g_lambda: lambda must be positive");
  }
  const Real pi = constants<Real>::pi;
  const Real sa = std::sin(pi * a.a);
  const Real x = p.r2();
  Real num_over_x;  // [r^2 sin(pi a) - 2(1-a)(E_a - r'^2 K_a)] / r^2
  if (x <= static_cast<Real>(0.25)) {
    // M_0 = sin(pi a) - pi a(1-a); M_n = -pi(1-a) a k_n/(n+1) for n >= 1
    Real kn = 1;
    Real xpow = 1;
    detail::KahanSum<Real> s;
    for (int n = 0; n < cfg.max_terms; ++n) {
      const Real coef = (n == 0)
                            ? sa - pi * a.a * (1 - a.a)
                            : -pi * (1 - a.a) * a.a * kn /
                                  static_cast<Real>(n + 1);
      const Real term = coef * xpow;
      s.add(term);
      if (n > 0 && std::abs(term) <= cfg.rel_tol * std::abs(s.value())) {
        break;
      }
      kn = kn * (a.a + n) * (1 - a.a + n) / ((n + 1) * static_cast<Real>(n + 1));
      xpow *= x;
    }
    num_over_x = s.value();
  } else {
    num_over_x = (x * sa - 2 * (1 - a.a) * em_combo(a, p, cfg)) / x;
  }
  return static_cast<Real>(0.5) - detail::envelope_log(a, p) +
         num_over_x / (2 * lambda * p.rp2 * sa);
}

/// H_lambda(r) = sin(pi a)(1 + lambda r'^2) log(e^{R(a)/2}/r') - K_a(r).
template <class Real>
Real h_lambda(const Param<Real> & a, Real lambda, const ModulusPoint<Real> & p,
              const EvalConfig<Real> & cfg) {
  if (!(lambda > 0)) {
    throw domain_error("h_lambda: lambda must be positive");
  }
  const Real pi = constants<Real>::pi;
  const Real s = std::sin(pi * a.a);
  return s * (1 + lambda * p.rp2) * detail::envelope_log(a, p) -
         ellk_gen(a, p, cfg);
}

/// One envelope report per (a, r) grid point, a-major ordering.
template <class Real>
std::vector<EnvelopeReport<Real>> envelope_scan(
    const std::vector<Param<Real>> & a_grid, const std::vector<Real> & r_grid,
    const EvalConfig<Real> & cfg) {
  if (a_grid.empty() || r_grid.empty()) {
    throw domain_error("envelope_scan: grids must be non-empty");
  }
  std::vector<EnvelopeReport<Real>> out;
  out.reserve(a_grid.size() * r_grid.size());
  for (const auto & a : a_grid) {
    for (Real r : r_grid) {
      try {
        out.push_back(envelope(a, ModulusPoint<Real>::from_r(r), cfg));
      } catch (const std::exception & e) {
        throw domain_error("envelope_scan at a=" + std::to_string(double(a.a)) +
                           " r=" + std::to_string(double(r)) + ": " + e.what());
      }
    }
  }
  return out;
}

/**
 * Searches a geometric grid approaching the relevant endpoint for the first
 * point where the inequality with a perturbed constant fails. Lower side
 * (lambda > alpha0) walks r = 10^{-k} toward 0; upper side
 * (lambda < beta0) walks r'^2 = 10^{-k} toward 1, where the violation onset
 * can sit beyond r'^2 ~ 1e-30 and the gap is resolved through the
 * connection-series tail of rho - 1.
 */
template <class Real>
ViolationWitness<Real> sharpness_scan(const Param<Real> & a, Real lambda,
                                      Side side, const EvalConfig<Real> & cfg) {
  const SharpConstants<Real> c = sharp_constants(a);
  constexpr int kMaxRefine = 40;
  if (side == Side::lower) {
    if (!(lambda > c.alpha0)) {
      throw domain_error("sharpness_scan: lower side requires lambda > alpha0");
    }
    for (int k = 1; k <= kMaxRefine; ++k) {
      const Real r = std::pow(static_cast<Real>(10), static_cast<Real>(-k));
      const auto p = ModulusPoint<Real>::from_r(r);
      const Real gap = (1 + lambda * p.rp2) - ratio_rho(a, p, cfg);
      if (gap > 0) {
        return ViolationWitness<Real>{a.a, lambda, side, r, p.rp2, gap};
      }
    }
  } else {
    if (!(lambda > 0 && lambda < c.beta0)) {
      throw domain_error(
          "sharpness_scan: upper side requires lambda in (0, beta0)");
    }
    for (int k = 1; k <= kMaxRefine; ++k) {
      const Real y = std::pow(static_cast<Real>(10), static_cast<Real>(-k));
      Real gap;
      if (y <= cfg.near_one_cut) {
        gap = detail::rho_minus_one_near_one(a, y, cfg) - lambda * y;
      } else {
        const auto p = ModulusPoint<Real>::from_rp2(y);
        gap = ratio_rho(a, p, cfg) - (1 + lambda * y);
      }
      if (gap > 0) {
        return ViolationWitness<Real>{a.a, lambda, side,
                                      std::sqrt(1 - y), y, gap};
      }
    }
  }
  throw witness_not_found(
      "sharpness_scan: no violation within the search grid");
}

}  // namespace ellint

#endif  // ELLINT_BOUNDS_HPP_
