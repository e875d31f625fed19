#include "bergman/space.hpp"

#include "bergman/special.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace bergman {

ModelSpace::ModelSpace(RadialWeight w) : weight_(std::move(w)) {}

bool ModelSpace::admissible(int n) const {
    switch (weight_.kind()) {
        case WeightKind::power:
            return 2.0 * n + weight_.power_exponent() + 2.0 > 0.0;
        case WeightKind::exp_hartogs:
            return true;
        case WeightKind::custom:
            return !moment(2.0 * n).infinite;
    }
    return false;
}

MomentValue ModelSpace::moment(double t) const {
    {
        std::shared_lock lock(cache_mutex_);
        auto it = moment_cache_.find(t);
        if (it != moment_cache_.end()) return it->second;
    }
    MomentValue m = bergman::moment(weight_, t);
    std::unique_lock lock(cache_mutex_);
    return moment_cache_.emplace(t, m).first->second; // first writer wins
}

double ModelSpace::norming_constant_sq(int n) const {
    if (!admissible(n))
        throw std::domain_error("norming_constant: degree " + std::to_string(n) +
                                " is not admissible for this weight");
    return 1.0 / moment(2.0 * n).value();
}

double ModelSpace::norming_constant(int n) const { return std::sqrt(norming_constant_sq(n)); }

std::complex<double> ModelSpace::bergman_kernel(std::complex<double> z,
                                                std::complex<double> wbar,
                                                int truncation) const {
    const double az = std::abs(z);
    const double aw = std::abs(wbar);
    if (!(az > 0.0 && az < 1.0 && aw > 0.0 && aw < 1.0))
        throw std::domain_error("bergman_kernel: arguments must lie in the punctured disk");
    const std::complex<double> q = z * wbar;
    if (!(std::abs(q) < 1.0))
        throw std::domain_error("bergman_kernel: |z wbar| >= 1");

    std::complex<double> sum = 0.0;
    std::complex<double> qp = 1.0; // q^n going up
    for (int n = 0; n <= truncation; ++n) {
        if (admissible(n)) sum += norming_constant_sq(n) * qp;
        qp *= q;
    }
    std::complex<double> qm = 1.0; // q^-n going down
    for (int n = -1; n >= -truncation; --n) {
        qm /= q;
        if (admissible(n)) sum += norming_constant_sq(n) * qm;
    }
    return sum;
}

double ModelSpace::monomial_lp_norm(int n, double p) const {
    if (!(p >= 1.0)) throw std::domain_error("monomial_lp_norm: requires p >= 1");
    MomentValue m = moment(n * p);
    if (m.infinite) return std::numeric_limits<double>::infinity();
    return std::pow(m.value(), 1.0 / p);
}

std::optional<double> ModelSpace::coefficient_bound_constant(int n) const {
    MomentValue m = moment(static_cast<double>(n));
    if (m.infinite) return std::nullopt;
    return 1.0 / m.value();
}

std::shared_ptr<const ModelSpace> make_space(const RadialWeight& w) {
    return std::make_shared<const ModelSpace>(w);
}

std::complex<double> hartogs_kernel_closed_form(std::complex<double> z,
                                                std::complex<double> wbar) {
    const std::complex<double> q = z * wbar;
    if (!(std::abs(q) < 1.0) || q == std::complex<double>(0.0))
        throw std::domain_error("hartogs_kernel_closed_form: need 0 < |z wbar| < 1");
    const std::complex<double> one_minus = 1.0 - q;
    return 1.0 / (kPi * q * one_minus * one_minus);
}

} // namespace bergman
