#pragma once

#include "bergman/series.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace bergman {

// The Friedrichs operator F(g) = B(g-bar) acts on coefficients as the
// anti-diagonal flip  (F s)_m = phi_m conj(a_{-m})  with factors
// phi_m = mu(0)/mu(2m), stored for m with both m and -m admissible and zero
// otherwise (the angular integral kills every other pairing). On the
// Hartogs model this is the rank-3 table (1/2, 1, 3/2) at degrees
// (-1, 0, 1); on the exponential model phi_m = I~(1)/I~(2m+1).
//
// Factors are ratios of moments, so they do not move when the weight is
// rescaled. Immutable after construction apart from the factor memo.
class FriedrichsMap {
public:
    explicit FriedrichsMap(std::shared_ptr<const ModelSpace> space);

    const ModelSpace& space() const { return *space_; }
    std::shared_ptr<const ModelSpace> space_ptr() const { return space_; }

    /// phi_m; zero when m or -m is inadmissible. phi_0 = 1 always.
    double factor(int m) const;
    /// lambda_m = phi_m phi_{-m}, the F^2 eigenvalue at degree m.
    double eigenvalue(int m) const;
    /// s_m = mu(0)/sqrt(mu(2m) mu(-2m)) = sqrt(lambda_m); zero off the rank.
    double singular_value(int m) const;

private:
    std::shared_ptr<const ModelSpace> space_;
    mutable std::map<int, double> factor_memo_;
    mutable std::mutex memo_mutex_;
};

/// (F s)_m = phi_m conj(a_{-m}). Antilinear; fixes constants.
LaurentSeries friedrichs_apply(const FriedrichsMap& map, const LaurentSeries& s);

/// (F^2 s)_m = lambda_m a_m. Linear; equals friedrichs_apply twice.
LaurentSeries friedrichs_squared_apply(const FriedrichsMap& map, const LaurentSeries& s);

/// Weighted inner product <u, v> = sum u_n conj(v_n) mu(2n) (Parseval form).
std::complex<double> weighted_inner_product(const ModelSpace& space, const LaurentSeries& u,
                                            const LaurentSeries& v);

// -- Bergman projection of a sampled function --------------------------------

struct ProjectionResult {
    LaurentSeries series;
    bool converged = false;
    double max_coeff_change = 0.0; // between the two grid resolutions
    std::int64_t nodes_used = 0;
};

// b_n = c_n^2 <g, z^n> for |n| <= truncation, by polar quadrature of the
// pairings (angular DFT x radial panels, evaluated at two resolutions).
// Reproduces holomorphic admissible input.
ProjectionResult bergman_project(
    const ModelSpace& space,
    const std::function<std::complex<double>(std::complex<double>)>& g, int truncation,
    double tol = 1e-9);

// -- spectrum ----------------------------------------------------------------

struct SpectrumEntry {
    int degree;
    double singular_value;      // s_m of F
    double f_squared_eigenvalue; // lambda_m = s_m^2
};

struct SpectrumReport {
    int truncation = 0;
    double tolerance = 0.0;      // rank cutoff on singular values
    std::vector<SpectrumEntry> entries; // m = -truncation .. truncation
    int rank_estimate = 0;       // count of s_m above tolerance
    bool saturated = false;      // every entry above tolerance: rank looks
                                 // infinite within this truncation
};

/// Singular values and F^2 eigenvalues for |m| <= truncation; rank counted
/// at tolerance 1e-13 (the model factors are exact rationals; anything
/// smaller is rounding).
SpectrumReport spectrum(const FriedrichsMap& map, int truncation);

inline constexpr double kRankTolerance = 1e-13;

// -- operator norm probing ----------------------------------------------------

struct ProbeReport {
    double q = 2.0, p = 2.0;
    int truncation = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    double lower_bound = 0.0;   // max over trials of ||F s||_p / ||s||_q
    LaurentSeries witness;      // the maximizing series
    bool unbounded_hit = false; // witness maps to a series with infinite L^p norm
    std::vector<double> trial_values;
};

// Lower bound on ||F||_{A^q -> A^p} by random coefficient vectors plus
// coordinate ascent. Deterministic for a fixed seed (per-trial seeds derive
// from it; trials run independently and reduce by max in trial order).
// Never claims boundedness; an infinite target norm is reported as an
// unbounded hit with the witness.
ProbeReport norm_probe(const FriedrichsMap& map, double q, double p, int truncation,
                       int trials, std::uint64_t seed);

// -- the Hinfty-model convergence sums ----------------------------------------

struct SymmetricSumReport {
    double p = 0.0;
    int K = 0;
    std::vector<double> partial_sums;   // S_0..S_K, symmetric over |a| <= k
    std::vector<double> positive_terms; // t(0), t(1), ..., t(K)
    std::vector<double> negative_terms; // t(-1), ..., t(-K) at index k-1
    double last_term_magnitude = 0.0;
    double ratio_test_factor = 0.0;     // |t(-K)| / |t(-K+1)|
};

// Partial sums of S(p) = sum_{a in Z} I~(2a+1)^{-1} I~(ap+1)^{1/p} I~(-a+1)^{-1},
// the bound behind F : A^2(Hinf) -> A^p. Terms assembled in log space; the
// raw I~ values overflow doubles long before the terms stop mattering.
SymmetricSumReport hinfty_bound_series(double p, int K);

struct TailSumReport {
    int K = 0;
    std::vector<double> partial_sums; // S_0..S_K
    std::vector<double> terms;        // t(0)..t(K)
    double last_term_magnitude = 0.0;
    double ratio_test_factor = 0.0;
};

/// Partial sums of sum_{k>=0} I~(2k+1)^{-1} I~(-2k+1)^{-1} I~(k+1)^{-1}
/// (the F^2 : Hinfty -> Hinfty bound).
TailSumReport f_squared_hinfty_series(int K);

} // namespace bergman
