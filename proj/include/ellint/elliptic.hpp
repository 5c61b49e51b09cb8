// Generalized elliptic integrals K_a(r) = (pi/2) F(a, 1-a; 1; r^2) and
// E_a(r) = (pi/2) F(a-1, 1-a; 1; r^2), their closed-form derivatives, and
// the cancellation-safe combination E_a - r'^2 K_a.

#ifndef ELLINT_ELLIPTIC_HPP_
#define ELLINT_ELLIPTIC_HPP_

#include <cmath>

#include "ellint/config.hpp"
#include "ellint/special.hpp"

namespace ellint {

/**
 * Modulus r in (0,1) with the complementary quantity r'^2 = 1 - r^2 carried
 * explicitly, so that evaluation paths near either endpoint never have to
 * reconstruct the small quantity from the large one.
 */
template <class Real = double>
struct ModulusPoint {
  Real r;
  Real rp2;  // r'^2

  static ModulusPoint from_r(Real r) {
    if (!(r > 0 && r < 1)) {
      throw domain_error("ModulusPoint: r must lie in (0, 1)");
    }
    return ModulusPoint{r, (1 - r) * (1 + r)};
  }

  static ModulusPoint from_rp2(Real rp2) {
    if (!(rp2 > 0 && rp2 < 1)) {
      throw domain_error("ModulusPoint: r'^2 must lie in (0, 1)");
    }
    return ModulusPoint{std::sqrt(1 - rp2), rp2};
  }

  // r*r keeps full relative accuracy when r is tiny; near r = 1 the value is
  // close to 1 and the product is equally safe.
  Real r2() const { return r * r; }
};

/// K_a(r). Routes to the defining series or, for r'^2 below the cut, to the
/// logarithmic connection expansion. Refuses r'^2 < 1e-14 where the result
/// is dominated by the logarithmic divergence; asymptotic callers should use
/// the bounds layer.
template <class Real>
Real ellk_gen(const Param<Real> & a, const ModulusPoint<Real> & p,
              const EvalConfig<Real> & cfg) {
  const Real half_pi = constants<Real>::pi / 2;
  if (p.rp2 < static_cast<Real>(1e-14)) {
    throw domain_error("ellk_gen: r too close to 1 (r'^2 < 1e-14)");
  }
  if (p.rp2 <= cfg.near_one_cut) {
    return half_pi * detail::hyp2f1_k_near_one_y(a.a, p.rp2, cfg);
  }
  return half_pi * hyp2f1_series(a.a, 1 - a.a, Real{1}, p.r2(), cfg);
}

/// E_a(r). The defining series converges even at r = 1, but only like a
/// power of 1/n, so below the near-one cut the connection expansion of
/// F(a-1, 1-a; 1; x) is used instead.
template <class Real>
Real elle_gen(const Param<Real> & a, const ModulusPoint<Real> & p,
              const EvalConfig<Real> & cfg) {
  const Real half_pi = constants<Real>::pi / 2;
  if (p.rp2 <= cfg.near_one_cut) {
    return half_pi * detail::hyp2f1_e_near_one_y(a.a, p.rp2, cfg);
  }
  return half_pi * hyp2f1_series(a.a - 1, 1 - a.a, Real{1}, p.r2(), cfg);
}

/**
 * E_a - r'^2 K_a through its own series
 *
 *   (pi/2) sum_n a (a)_n (1-a)_n / ((n+1)! n!) r^{2n+2},
 *
 * which is the cancellation-safe route for small r where the direct
 * subtraction loses all significant digits. Near r = 1 (r'^2 below the cut)
 * the subtraction is harmless and uses the near-one routes.
 */
template <class Real>
Real em_combo(const Param<Real> & a, const ModulusPoint<Real> & p,
              const EvalConfig<Real> & cfg) {
  if (p.rp2 <= cfg.near_one_cut) {
    return elle_gen(a, p, cfg) - p.rp2 * ellk_gen(a, p, cfg);
  }
  const Real x = p.r2();
  detail::KahanSum<Real> s;
  Real term = a.a * x;  // n = 0
  for (int n = 0; n < cfg.max_terms; ++n) {
    s.add(term);
    term *= (a.a + n) * (1 - a.a + n) / ((n + 2) * static_cast<Real>(n + 1)) * x;
    if (std::abs(term) <= cfg.rel_tol * std::abs(s.value())) {
      return constants<Real>::pi / 2 * s.value();
    }
  }
  throw non_convergence("em_combo: term cap reached before tolerance");
}

/// dK_a/dr = 2(1-a)(E_a - r'^2 K_a)/(r r'^2); always positive.
template <class Real>
Real d_ellk_gen(const Param<Real> & a, const ModulusPoint<Real> & p,
                const EvalConfig<Real> & cfg) {
  return 2 * (1 - a.a) / (p.r * p.rp2) * em_combo(a, p, cfg);
}

/// dE_a/dr = -2(1-a)(K_a - E_a)/r; always negative on (0,1).
template <class Real>
Real d_elle_gen(const Param<Real> & a, const ModulusPoint<Real> & p,
                const EvalConfig<Real> & cfg) {
  // K_a - E_a = r^2 K_a - (E_a - r'^2 K_a); both terms are O(r^2), so the
  // small-r cancellation stays mild for a <= 1/2.
  const Real k = ellk_gen(a, p, cfg);
  const Real diff = p.r2() * k - em_combo(a, p, cfg);
  return -2 * (1 - a.a) / p.r * diff;
}

}  // namespace ellint

#endif  // ELLINT_ELLIPTIC_HPP_
