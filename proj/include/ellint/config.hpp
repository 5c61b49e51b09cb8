// Shared configuration, domain types and error types for the ellint library.

#ifndef ELLINT_CONFIG_HPP_
#define ELLINT_CONFIG_HPP_

#include <limits>
#include <stdexcept>
#include <string>

namespace ellint {

class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string & what) : std::domain_error(what) {}
};

class non_convergence : public std::runtime_error {
 public:
  explicit non_convergence(const std::string & what)
      : std::runtime_error(what) {}
};

template <class Real>
struct constants {
  // Euler-Mascheroni, more digits than any supported Real needs
  static constexpr Real gamma =
      static_cast<Real>(0.57721566490153286060651209008240243104L);
  static constexpr Real pi =
      static_cast<Real>(3.14159265358979323846264338327950288420L);
};

/**
 * Series evaluation knobs. rel_tol is the relative truncation tolerance,
 * max_terms the hard cap on summed terms, near_one_cut the threshold on
 * r'^2 below which the logarithmic connection expansion is used.
 */
template <class Real = double>
struct EvalConfig {
  Real rel_tol = 8 * std::numeric_limits<Real>::epsilon();
  int max_terms = 20000;
  Real near_one_cut = static_cast<Real>(0.05);

  void validate() const {
    if (!(rel_tol > 0 && rel_tol < static_cast<Real>(1e-6))) {
      throw domain_error("EvalConfig: rel_tol must lie in (0, 1e-6)");
    }
    if (max_terms < 64) {
      throw domain_error("EvalConfig: max_terms must be >= 64");
    }
    if (!(near_one_cut > 0 && near_one_cut < 1)) {
      throw domain_error("EvalConfig: near_one_cut must lie in (0, 1)");
    }
  }
};

/// Generalization parameter a of the elliptic-integral family, a in (0, 1/2].
template <class Real = double>
struct Param {
  Real a;

  explicit Param(Real a_) : a{a_} {
    if (!(a > 0 && a <= static_cast<Real>(0.5))) {
      throw domain_error("Param: a must lie in (0, 1/2]");
    }
  }
};

}  // namespace ellint

#endif  // ELLINT_CONFIG_HPP_
