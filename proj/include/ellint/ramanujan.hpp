// The Ramanujan constant function R(x) = -2*gamma - Psi(x) - Psi(1-x) via
// two independent routes, the monotone auxiliary functions xi and eta, and
// the inequality gaps built from them.

#ifndef ELLINT_RAMANUJAN_HPP_
#define ELLINT_RAMANUJAN_HPP_

#include <cmath>

#include "ellint/config.hpp"
#include "ellint/special.hpp"

namespace ellint {

/// Argument of the Ramanujan constant function, x in (0, 1/2].
template <class Real = double>
struct RArgument {
  Real x;

  explicit RArgument(Real x_) : x{x_} {
    if (!(x > 0 && x <= static_cast<Real>(0.5))) {
      throw domain_error("RArgument: x must lie in (0, 1/2]");
    }
  }
};

/// Definitional route: R(x) = -2*gamma - Psi(x) - Psi(1-x).
template <class Real>
Real r_def(const RArgument<Real> & arg) {
  return -2 * constants<Real>::gamma - digamma(arg.x) - digamma(1 - arg.x);
}

/// Series route: R(x) = 1/x + sum_k 2 zeta(2k+1) x^{2k}. The term ratio is
/// at most x^2 <= 1/4, so forty terms always suffice.
template <class Real>
Real r_series(const RArgument<Real> & arg, const EvalConfig<Real> & cfg) {
  const Real x2 = arg.x * arg.x;
  detail::KahanSum<Real> s;
  s.add(1 / arg.x);
  Real xpow = x2;
  for (int k = 1; k <= 40; ++k) {
    const Real term = 2 * zeta_int<Real>(2 * k + 1) * xpow;
    s.add(term);
    if (term <= cfg.rel_tol * s.value()) {
      break;
    }
    xpow *= x2;
  }
  return s.value();
}

/// xi(x) = 1/[x(1-x)] - R(x); strictly increasing from (0,1/2] onto
/// (1, 4-4 log 2].
template <class Real>
Real xi(const RArgument<Real> & arg) {
  return 1 / (arg.x * (1 - arg.x)) - r_def(arg);
}

/// eta(x) = [pi/sin(pi x) - R(x)] / [x(1-x)]; strictly decreasing from
/// (0,1/2] onto [4 pi - 16 log 2, pi^2/6).
template <class Real>
Real eta(const RArgument<Real> & arg) {
  const Real pi = constants<Real>::pi;
  return (pi / std::sin(pi * arg.x) - r_def(arg)) / (arg.x * (1 - arg.x));
}

/// R(x) sin(pi x); strictly decreasing from (0,1/2] onto [4 log 2, pi).
template <class Real>
Real rs_product(const RArgument<Real> & arg) {
  return r_def(arg) * std::sin(constants<Real>::pi * arg.x);
}

/// Left-minus-right gap of the first R-inequality,
/// pi/[R sin(pi x)] - 1 > [sin(pi x) - pi x(1-x)] / {sin(pi x)[R - 1]};
/// strictly positive on (0, 1/2].
template <class Real>
Real cor24_gap(const RArgument<Real> & arg) {
  const Real pi = constants<Real>::pi;
  const Real R = r_def(arg);
  const Real s = std::sin(pi * arg.x);
  const Real lhs = pi / (R * s) - 1;
  const Real rhs = (s - pi * arg.x * (1 - arg.x)) / (s * (R - 1));
  return lhs - rhs;
}

/// Gap of the second R-inequality, x(1-x) > [pi - R sin(pi x)]/[R sin(pi x)];
/// strictly positive on (0, 1/2].
template <class Real>
Real cor25_gap(const RArgument<Real> & arg) {
  const Real pi = constants<Real>::pi;
  const Real rs = rs_product(arg);
  return arg.x * (1 - arg.x) - (pi - rs) / rs;
}

/// sin(pi x) - [pi x(1-x)/2][2 + x(1-x)]; strictly positive on (0, 1/2].
template <class Real>
Real sine_gap(Real x) {
  if (!(x > 0 && x <= static_cast<Real>(0.5))) {
    throw domain_error("sine_gap: x must lie in (0, 1/2]");
  }
  const Real pi = constants<Real>::pi;
  const Real q = x * (1 - x);
  return std::sin(pi * x) - pi * q / 2 * (2 + q);
}

}  // namespace ellint

#endif  // ELLINT_RAMANUJAN_HPP_
