#pragma once

#include "bergman/quadrature.hpp"

#include <functional>
#include <limits>

namespace bergman {

enum class WeightKind { power, exp_hartogs, custom };

/// Smoothness hint for custom weights; steers panel refinement.
enum class WeightSmoothness { smooth, singular_origin };

// A positive radial density w(r) on (0, 1]. The two built-ins are exact:
// power(rho) is w(r) = r^rho and exp_hartogs is w(r) = e^{-2/r}, the
// punctured-disk reductions of the Hartogs triangle and its exponential
// variant.
class RadialWeight {
public:
    static RadialWeight power(double rho);
    static RadialWeight exp_hartogs();
    static RadialWeight custom(std::function<double(double)> evaluator,
                               WeightSmoothness tag = WeightSmoothness::smooth);

    WeightKind kind() const { return kind_; }
    double power_exponent() const; // throws unless kind == power
    WeightSmoothness smoothness() const { return smoothness_; }

    /// Evaluates w(r) for r in (0, 1].
    double operator()(double r) const;

private:
    RadialWeight(WeightKind k, double rho, std::function<double(double)> eval,
                 WeightSmoothness tag);

    WeightKind kind_;
    double rho_ = 0.0;
    std::function<double(double)> eval_;
    WeightSmoothness smoothness_;
};

// Value of a radial moment mu_w(t) = 2 pi int_0^1 r^{t+1} w(r) dr. A
// divergent moment is a distinguished outcome, not an exception: monomial
// L^p norms legitimately hit it on the Hartogs model at p >= 4.
struct MomentValue {
    bool infinite = false;
    bool exact = false; // closed form, error 0
    QuadratureResult quad;

    double value() const {
        return infinite ? std::numeric_limits<double>::infinity() : quad.value;
    }
    static MomentValue make_exact(double v) {
        return {false, true, {v, 0.0, 1, true}};
    }
    static MomentValue make_infinite() {
        return {true, false, {std::numeric_limits<double>::infinity(), 0.0, 1, true}};
    }
};

// mu_w(t). For power weights the closed form 2 pi/(t+rho+2) is used (exact,
// infinite when t+rho+2 <= 0); for exp_hartogs, 2 pi * itilde(t+1); custom
// weights go through adaptive quadrature with a divergence test.
MomentValue moment(const RadialWeight& w, double t, double tol = kDefaultQuadTol);

} // namespace bergman
