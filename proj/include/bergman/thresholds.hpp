#pragma once

#include <optional>

namespace bergman {

// Exponent thresholds for the Friedrichs operator on a smoothly bounded
// pseudoconvex domain in C^n with Diederich-Fornaess exponent eta:
//
//   p_upper_case1 = 4n/(2n - eta)          target L^p range when r >= 2/(1-eta)
//   p_upper_case2 = 4nr/((2n-1)r + 2)      when 2 < r < 2/(1-eta)
//   epsilon_main  = 2 eta/(2n - eta)       F : A^2 -> A^p bounded on [2, 2+eps)
//   sobolev_upper = eta/(4n)               F : A^2 -> W^s bounded for s below this
//   ap_to_ws_upper(p) = (p-2)/(2p)         W^s range unlocked by an A^p bound
//
// eta is always an input; nothing here computes it.
struct ThresholdReport {
    int n = 1;
    double eta = 0.0;
    std::optional<double> r;
    std::optional<double> p;

    double p_upper_case1 = 0.0;
    std::optional<double> p_upper_case2;
    double epsilon_main = 0.0;
    double sobolev_upper = 0.0;
    std::optional<double> ws_upper_at_p;

    double ap_to_ws_upper(double p_val) const;
};

/// Requires n >= 1, 0 < eta < 1, r > 2 if given, p >= 2 if given; a
/// violation throws std::domain_error naming the constraint.
ThresholdReport exponent_thresholds(int n, double eta, std::optional<double> r = {},
                                    std::optional<double> p = {});

} // namespace bergman
