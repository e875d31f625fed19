#pragma once

#include <cstdint>
#include <functional>

namespace bergman {

/// Outcome of a numerical integration. `converged` implies the error
/// estimate met the requested tolerance; a false flag is the only way a
/// failed integration reports itself (values are never silently wrong).
struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::int64_t nodes_used = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr std::int64_t kDefaultNodeBudget = std::int64_t{1} << 20;

/// Adaptive Simpson on [a, b] with Richardson error estimate.
QuadratureResult adaptive_simpson(const Integrand& f, double a, double b, double tol,
                                  std::int64_t node_budget = kDefaultNodeBudget);

// Integral over (0, 1] for integrands that may be unbounded or vanish to
// all orders at 0. Dyadic panels [2^-k-1, 2^-k] refine geometrically toward
// the origin; each panel runs adaptive Simpson. When the panel values settle
// into a stable geometric ratio the remaining tail is extrapolated and its
// sensitivity added to the error estimate, so slowly convergent power-law
// integrands (r^a, a near -1) are handled without millions of panels.
QuadratureResult adaptive_quad_01(const Integrand& f, double tol = kDefaultQuadTol,
                                  std::int64_t node_budget = kDefaultNodeBudget);

/// Integral over [a, inf) via the substitution t = a + (1-v)/v, v in (0,1].
QuadratureResult adaptive_quad_tail(const Integrand& f, double a,
                                    double tol = kDefaultQuadTol,
                                    std::int64_t node_budget = kDefaultNodeBudget);

/// 15-point Gauss-Kronrod panel with embedded 7-point Gauss error estimate.
struct PanelEstimate {
    double value;
    double abs_error;
};
PanelEstimate gauss_kronrod_15(const Integrand& f, double a, double b);

} // namespace bergman
