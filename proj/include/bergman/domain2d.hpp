#pragma once

#include "bergman/series.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace bergman {

// The two model domains in C^2, described by the radius of the z1-fiber
// disk over each z2: |z1| < R(|z2|) with R(r) = r (Hartogs triangle) or
// R(r) = e^{-1/r} (exponential variant). R is increasing with 0 < R < 1 on
// (0,1); the fiber over z2 has area pi R(|z2|)^2.
struct DomainDescriptor2D {
    enum class Kind { hartogs, exp_hartogs };
    Kind kind = Kind::hartogs;

    static DomainDescriptor2D hartogs() { return {Kind::hartogs}; }
    static DomainDescriptor2D exp_hartogs() { return {Kind::exp_hartogs}; }

    double fiber_radius(double r2) const;
    double fiber_area(double r2) const;
    const char* name() const;
};

using Function2D =
    std::function<std::complex<double>(std::complex<double>, std::complex<double>)>;

// int |f|^p dV over the truncated domain {cutoff <= |z2| <= 1 - cutoff},
// full z1 fiber, by tensor polar quadrature: adaptive radial panels (refined
// toward both ends of the z2 annulus), trapezoid-with-doubling in the
// angles, fixed Gauss rule across the fiber. The value is the integral (the
// p-th power of the norm). Grid cells run in parallel; accumulation order
// is fixed, so results do not depend on the thread count.
QuadratureResult lp_norm_2d(const DomainDescriptor2D& domain, const Function2D& f, double p,
                            double cutoff, double tol = 1e-8);

// -- the L^2-vs-L^p divergence probe ------------------------------------------

struct CounterexampleRow {
    double cutoff;
    double l2; // int |f|^2 dV on the truncated domain
    double lp; // int |f|^p dV on the truncated domain
    std::int64_t nodes;
    bool converged;
};

// f(z) = 1/(1 - z2)^{2/p} on the Hartogs triangle, principal branch,
// for p > 2. The L^2 column converges as the cutoffs shrink; the L^p
// column grows by an asymptotically constant increment per cutoff halving
// (|f|^p = |1-z2|^{-2} diverges logarithmically at z2 = 1).
std::vector<CounterexampleRow> counterexample_probe(double p,
                                                    const std::vector<double>& cutoffs,
                                                    double tol = 1e-7);

/// Local model of the divergence: the L^p increment per cutoff halving
/// tends to pi^2 ln 2.
double counterexample_local_slope();

// One Richardson pass per exponent: values come from cutoffs halving
// coarse -> fine, each pass removes the c^e term. Returns the final-level
// sequence (length vals.size() - exponents.size()).
std::vector<double> richardson_extrapolate(const std::vector<double>& vals,
                                           const std::vector<double>& exponents);

// -- brute-force Friedrichs oracle ---------------------------------------------

struct BruteForceResult {
    LaurentSeries series;       // z2-only coefficients of B(conj f)
    double alpha1_leakage = 0.0; // max |coefficient| found on alpha1 >= 1 monomials
    bool converged = false;
    double max_coeff_change = 0.0;
    std::int64_t nodes_used = 0;
};

// B(conj f) computed from scratch on the full 2D domain: pairings
// <conj f, z1^a1 z2^a2> against every basis monomial with a1 <= 2 and
// min_degree <= a2 <= max_degree, numerator and squared norm on the same
// grid. Angular orthogonality should kill everything with a1 >= 1; the
// observed maximum is reported as leakage. This is the oracle that
// justifies reducing both domains to their z2 model spaces.
BruteForceResult brute_force_friedrichs(const DomainDescriptor2D& domain, const Function2D& f,
                                        int min_degree, int max_degree, int grid_level = 0);

} // namespace bergman
