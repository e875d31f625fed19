#pragma once

#include "bergman/weight.hpp"

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>

namespace bergman {

// A weighted Bergman space A^2(D*, w) on the punctured disk, carrying the
// admissible monomial degrees (those with finite squared L^2 norm mu(2n)),
// the norming constants c_n = mu(2n)^{-1/2}, and a memoized moment table.
//
// Immutable after construction except the moment cache, which is a
// thread-safe memo (concurrent readers, idempotent fill).
class ModelSpace {
public:
    explicit ModelSpace(RadialWeight w);

    const RadialWeight& weight() const { return weight_; }

    /// n is admissible iff mu(2n) is finite.
    bool admissible(int n) const;

    /// Memoized mu_w(t).
    MomentValue moment(double t) const;

    /// c_n^2 = 1/mu(2n); throws std::domain_error for inadmissible n.
    double norming_constant_sq(int n) const;
    double norming_constant(int n) const;

    // Partial kernel sum over admissible |n| <= truncation of
    // c_n^2 (z wbar)^n. Requires 0 < |z|, |wbar| < 1 and |z wbar| < 1.
    std::complex<double> bergman_kernel(std::complex<double> z, std::complex<double> wbar,
                                        int truncation) const;

    // (mu(n p))^{1/p}, the L^p(w) norm of z^n; +inf when the moment
    // diverges (a value, not an error: the Hartogs model really does lose
    // z^{-1} at p = 4).
    double monomial_lp_norm(int n, double p) const;

    // Sharp constant K_n = mu(n)^{-1} in |a_n| <= K_n ||f||_{L^1(w)};
    // nullopt when mu(n) diverges and no bound is available.
    std::optional<double> coefficient_bound_constant(int n) const;

private:
    RadialWeight weight_;
    mutable std::map<double, MomentValue> moment_cache_;
    mutable std::shared_mutex cache_mutex_;
};

/// Builds the space for a weight (the admissible set falls out of moment
/// finiteness: n >= -1 for the Hartogs model, all of Z for the exponential).
std::shared_ptr<const ModelSpace> make_space(const RadialWeight& w);

/// Exact closed form of the Hartogs-model kernel,
/// (1/pi) (z wbar)^{-1} (1 - z wbar)^{-2}.
std::complex<double> hartogs_kernel_closed_form(std::complex<double> z,
                                                std::complex<double> wbar);

} // namespace bergman
