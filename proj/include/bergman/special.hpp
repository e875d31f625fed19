#pragma once

#include "bergman/quadrature.hpp"

namespace bergman {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// log Gamma(x) for x > 0 (Lanczos approximation, ~1e-14 relative on Gamma).
double log_gamma(double x);

/// Regularized upper incomplete gamma Q(s, x) = Gamma(s,x)/Gamma(s), s > 0.
double regularized_gamma_q(double s, double x);

// Upper incomplete gamma Gamma(s, x) for x > 0 and any real s; s <= 0 is
// reached by the downward recurrence Gamma(s-1,x) = (Gamma(s,x) - x^{s-1}e^{-x})/(s-1).
double gamma_upper(double s, double x);

/// log Gamma(s, x) for s > 0, assembled without overflow.
double log_gamma_upper(double s, double x);

// The model-domain moment integral I~(x) = int_0^1 r^x e^{-2/r} dr.
//
// Two independent quadrature paths (they are cross-checked in the tests and
// must agree within combined error estimates):
//   direct      - panels on (0,1] refined toward 0;
//   substituted - t = 2/r, giving 2^{x+1} int_2^inf t^{-x-2} e^{-t} dt.
// itilde() picks the substituted path for x <= -5, where the (0,1] integrand
// is a sharp interior peak, and the direct path otherwise.
QuadratureResult itilde_direct(double x, double tol = kDefaultQuadTol,
                               std::int64_t node_budget = kDefaultNodeBudget);
QuadratureResult itilde_substituted(double x, double tol = kDefaultQuadTol,
                                    std::int64_t node_budget = kDefaultNodeBudget);
QuadratureResult itilde(double x, double tol = kDefaultQuadTol,
                        std::int64_t node_budget = kDefaultNodeBudget);

// Closed-form route I~(x) = 2^{x+1} Gamma(-x-1, 2), in log space. Used for
// the convergence sums, whose terms overflow doubles long before they stop
// mattering, and as an independent reference in the tests.
double log_itilde(double x);
double itilde_reference(double x);

/// Growth comparator for x -> +inf: exactly 1/(x+1). Requires x > -1.
double itilde_comparator_plus(double x);

// Growth comparator for the negative direction: (1/2)^{x-1} Gamma(x-1) for
// x > 1. Assembled as exp of logs; the log variant stays finite far beyond
// the point where the linear value saturates to +inf (x ~ 172).
double itilde_comparator_minus(double x);
double log_itilde_comparator_minus(double x);

} // namespace bergman
