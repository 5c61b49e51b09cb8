// Scalar special functions: Pochhammer symbols, digamma, integer-argument
// Riemann zeta, and the Gauss hypergeometric series for the elliptic family
// F(a, 1-a; 1; x) / F(a-1, 1-a; 1; x), including the logarithmic connection
// expansions used near x = 1.

#ifndef ELLINT_SPECIAL_HPP_
#define ELLINT_SPECIAL_HPP_

#include <cmath>
#include <cstdint>

#include "ellint/config.hpp"

namespace ellint {

namespace detail {

// Compensated accumulator; the dominant terms of our series come first, the
// compensation suppresses rounding drift over long sums.
template <class Real>
struct KahanSum {
  Real sum{0};
  Real carry{0};

  void add(Real term) {
    Real y = term - carry;
    Real t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  Real value() const { return sum; }
};

}  // namespace detail

/// Rising factorial x(x+1)...(x+n-1); exact empty product for n = 0.
template <class Real>
Real pochhammer(Real x, int n) {
  if (n < 0) {
    throw domain_error("pochhammer: n must be nonnegative");
  }
  Real p = 1;
  for (int k = 0; k < n; ++k) {
    p *= x + static_cast<Real>(k);
  }
  return p;
}

/**
 * Digamma function for x > 0. Shifts the argument above 16 with
 * Psi(x) = Psi(x+1) - 1/x, then sums the asymptotic expansion
 * Psi(x) ~ log x - 1/(2x) - sum B_{2n}/(2n x^{2n}); the truncation error
 * at the shift threshold is below 1e-21.
 */
template <class Real>
Real digamma(Real x) {
  if (!(x > 0)) {
    throw domain_error("digamma: argument must be positive");
  }
  Real acc = 0;
  while (x < 16) {
    acc -= 1 / x;
    x += 1;
  }
  // B_{2n}/(2n) for n = 1..8
  static constexpr Real coef[] = {
      static_cast<Real>(1.0L / 12.0L),     static_cast<Real>(-1.0L / 120.0L),
      static_cast<Real>(1.0L / 252.0L),    static_cast<Real>(-1.0L / 240.0L),
      static_cast<Real>(1.0L / 132.0L),    static_cast<Real>(-691.0L / 32760.0L),
      static_cast<Real>(1.0L / 12.0L),     static_cast<Real>(-3617.0L / 8160.0L)};
  const Real inv2 = 1 / (x * x);
  Real p = inv2;
  Real tail = 0;
  for (Real c : coef) {
    tail += c * p;
    p *= inv2;
  }
  return acc + std::log(x) - 1 / (2 * x) - tail;
}

/**
 * Riemann zeta at integer m >= 2: forty explicit terms plus an
 * Euler-Maclaurin tail correction.
 */
template <class Real>
Real zeta_int(int m) {
  if (m < 2) {
    throw domain_error("zeta_int: argument must be >= 2");
  }
  constexpr int N = 40;
  detail::KahanSum<Real> s;
  for (int n = 1; n < N; ++n) {
    s.add(std::pow(static_cast<Real>(n), static_cast<Real>(-m)));
  }
  const Real Nr = static_cast<Real>(N);
  Real tail = std::pow(Nr, static_cast<Real>(1 - m)) / (m - 1) +
              std::pow(Nr, static_cast<Real>(-m)) / 2;
  // B_{2j}/(2j)! for j = 1..6
  static constexpr Real bf[] = {
      static_cast<Real>(1.0L / 12.0L),
      static_cast<Real>(-1.0L / 720.0L),
      static_cast<Real>(1.0L / 30240.0L),
      static_cast<Real>(-1.0L / 1209600.0L),
      static_cast<Real>(1.0L / 47900160.0L),
      static_cast<Real>(-691.0L / 1307674368000.0L)};
  Real rising = static_cast<Real>(m);           // (m)_{2j-1}
  Real npow = std::pow(Nr, static_cast<Real>(-m - 1));
  for (int j = 1; j <= 6; ++j) {
    tail += bf[j - 1] * rising * npow;
    rising *= (m + 2 * j - 1) * (m + 2 * j);
    npow /= Nr * Nr;
  }
  return s.value() + tail;
}

/**
 * Gauss hypergeometric series sum (a)_n (b)_n / (c)_n x^n / n! on |x| < 1,
 * with a successive-term ratio update. Throws non_convergence when the cap
 * is hit, which is expected for F(a, 1-a; 1; x) as x -> 1; callers route
 * through the near-one expansion instead.
 */
template <class Real>
Real hyp2f1_series(Real a, Real b, Real c, Real x, const EvalConfig<Real> & cfg) {
  if (!(x > -1 && x < 1)) {
    throw domain_error("hyp2f1_series: x must lie in (-1, 1)");
  }
  if (c <= 0 && c == std::floor(c)) {
    throw domain_error("hyp2f1_series: c must not be a nonpositive integer");
  }
  detail::KahanSum<Real> s;
  Real term = 1;
  for (int n = 0; n < cfg.max_terms; ++n) {
    s.add(term);
    term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * x;
    if (std::abs(term) <= cfg.rel_tol * std::abs(s.value())) {
      return s.value();
    }
  }
  throw non_convergence("hyp2f1_series: term cap reached before tolerance");
}

namespace detail {

/**
 * Tail of the logarithmic connection series for F(a, 1-a; 1; 1-y),
 *
 *   sum_{n >= start} c_n (d_n - log y) y^n,
 *   c_n = (a)_n (1-a)_n / (n!)^2,
 *   d_n = 2 Psi(n+1) - Psi(a+n) - Psi(1-a+n),
 *
 * so that F = (sin(pi a)/pi) * k_conn_sum(a, y, cfg, 0). The n = 0 term
 * equals R(a) - log y; starting at n = 1 yields the cancellation-free
 * excess of K_a over its logarithmic asymptote.
 */
template <class Real>
Real k_conn_sum(Real a, Real y, const EvalConfig<Real> & cfg, int start) {
  const Real logy = std::log(y);
  Real c = 1;
  Real d = -2 * constants<Real>::gamma - digamma(a) - digamma(1 - a);
  Real ypow = 1;
  KahanSum<Real> s;
  for (int n = 0; n < cfg.max_terms; ++n) {
    const Real term = c * (d - logy) * ypow;
    if (n >= start) {
      s.add(term);
      if (n > start &&
          std::abs(term) <= cfg.rel_tol * std::abs(s.value())) {
        return s.value();
      }
    }
    c *= (a + n) * (1 - a + n) / ((n + 1) * static_cast<Real>(n + 1));
    d += 2 / static_cast<Real>(n + 1) - 1 / (a + n) - 1 / (1 - a + n);
    ypow *= y;
  }
  throw non_convergence("k_conn_sum: term cap reached before tolerance");
}

/**
 * Connection expansion of F(a-1, 1-a; 1; 1-y) around y = 0:
 *
 *   F = sin(pi a)/[pi (1-a)]
 *       + (a-1) sin(pi a)/pi * y * sum_n C_n e_n y^n,
 *   C_n = (a)_n (2-a)_n / (n! (n+1)!),
 *   e_n = log y - Psi(n+1) - Psi(n+2) + Psi(a+n) + Psi(2-a+n).
 */
template <class Real>
Real hyp2f1_e_near_one_y(Real a, Real y, const EvalConfig<Real> & cfg) {
  const Real pi = constants<Real>::pi;
  const Real sa = std::sin(pi * a);
  const Real logy = std::log(y);
  Real c = 1;
  Real d = logy - (-constants<Real>::gamma) - (1 - constants<Real>::gamma) +
           digamma(a) + digamma(2 - a);
  Real ypow = 1;
  KahanSum<Real> s;
  for (int n = 0; n < cfg.max_terms; ++n) {
    const Real term = c * d * ypow;
    s.add(term);
    if (n > 0 && std::abs(term) <= cfg.rel_tol * std::abs(s.value())) {
      break;
    }
    c *= (a + n) * (2 - a + n) / ((n + 1) * static_cast<Real>(n + 2));
    d += -1 / static_cast<Real>(n + 1) - 1 / static_cast<Real>(n + 2) +
         1 / (a + n) + 1 / (2 - a + n);
    ypow *= y;
  }
  return sa / (pi * (1 - a)) + (a - 1) * sa / pi * y * s.value();
}

/// Same expansion parametrized by y = 1-x directly, valid for arbitrarily
/// small y (the double representation of x itself may round to 1).
template <class Real>
Real hyp2f1_k_near_one_y(Real a, Real y, const EvalConfig<Real> & cfg) {
  const Real pi = constants<Real>::pi;
  return std::sin(pi * a) / pi * k_conn_sum(a, y, cfg, 0);
}

}  // namespace detail

/**
 * F(a, 1-a; 1; x) near the logarithmic singularity at x = 1, through the
 * connection expansion in powers of 1-x. Requires 1-x <= near_one_cut.
 */
template <class Real>
Real hyp2f1_k_near_one(Real a, Real x, const EvalConfig<Real> & cfg) {
  if (!(a > 0 && a <= static_cast<Real>(0.5))) {
    throw domain_error("hyp2f1_k_near_one: a must lie in (0, 1/2]");
  }
  const Real y = 1 - x;
  if (!(y > 0 && y <= cfg.near_one_cut)) {
    throw domain_error(
        "hyp2f1_k_near_one: 1-x must lie in (0, near_one_cut]");
  }
  return detail::hyp2f1_k_near_one_y(a, y, cfg);
}

}  // namespace ellint

#endif  // ELLINT_SPECIAL_HPP_
