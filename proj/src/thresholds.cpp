#include "bergman/thresholds.hpp"

#include <stdexcept>

namespace bergman {

double ThresholdReport::ap_to_ws_upper(double p_val) const {
    if (!(p_val >= 2.0))
        throw std::domain_error("ap_to_ws_upper: requires p >= 2");
    return (p_val - 2.0) / (2.0 * p_val);
}

ThresholdReport exponent_thresholds(int n, double eta, std::optional<double> r,
                                    std::optional<double> p) {
    if (n < 1) throw std::domain_error("exponent_thresholds: requires n >= 1");
    if (!(eta > 0.0 && eta < 1.0))
        throw std::domain_error("exponent_thresholds: requires 0 < eta < 1");
    if (r && !(*r > 2.0))
        throw std::domain_error("exponent_thresholds: requires r > 2");
    if (p && !(*p >= 2.0))
        throw std::domain_error("exponent_thresholds: requires p >= 2");

    ThresholdReport rep;
    rep.n = n;
    rep.eta = eta;
    rep.r = r;
    rep.p = p;
    rep.p_upper_case1 = 4.0 * n / (2.0 * n - eta);
    rep.epsilon_main = 2.0 * eta / (2.0 * n - eta);
    rep.sobolev_upper = eta / (4.0 * n);
    if (r && *r < 2.0 / (1.0 - eta))
        rep.p_upper_case2 = 4.0 * n * *r / ((2.0 * n - 1.0) * *r + 2.0);
    if (p) rep.ws_upper_at_p = rep.ap_to_ws_upper(*p);
    return rep;
}

} // namespace bergman
