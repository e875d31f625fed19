#pragma once

#include "bergman/space.hpp"

#include <complex>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace bergman {

// A finite-support Laurent series: map from integer degree to complex
// coefficient, absent degree meaning zero. This is the representation every
// operator acts on. Value semantics; exact zeros are not stored.
class LaurentSeries {
public:
    LaurentSeries() = default;

    static LaurentSeries monomial(int degree, std::complex<double> a);

    void set(int degree, std::complex<double> value);
    std::complex<double> coeff(int degree) const;
    const std::map<int, std::complex<double>>& coefficients() const { return coeffs_; }

    bool empty() const { return coeffs_.empty(); }
    /// Smallest/largest degree with a stored coefficient; throws when empty.
    int min_degree() const;
    int max_degree() const;
    bool has_negative_degree() const;

    bool operator==(const LaurentSeries&) const = default;

private:
    std::map<int, std::complex<double>> coeffs_;
};

/// Sum a_n z^n, negative and nonnegative parts each by Horner. z = 0 with
/// negative support is a domain error.
std::complex<double> evaluate(const LaurentSeries& s, std::complex<double> z);

/// f -> what pairing against monomials sees of its conjugate: coefficient
/// a_n moves to degree -n as conj(a_n). An involution.
LaurentSeries conjugate_reflect(const LaurentSeries& s);

/// Largest |coefficient| difference, checked over the union of supports.
double max_coeff_distance(const LaurentSeries& a, const LaurentSeries& b);

// -- coefficient extraction from sampled circles --------------------------

struct ExtractionResult {
    LaurentSeries series;
    /// Max over degrees of the coefficient spread across circles; a large
    /// value flags input that is not holomorphic on the sampled annulus.
    double max_cross_circle_deviation = 0.0;
    bool consistent = true;
};

// Discrete angular transform on each circle |z| = r (exact for Laurent
// polynomials inside the anti-aliasing window), averaged across circles.
// Requires num_angles > 2 max(|degree|) and radii in (0, 1).
ExtractionResult extract_coefficients(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const std::vector<double>& radii, int num_angles, int min_degree, int max_degree,
    double consistency_tol = 1e-8);

/// Default anti-aliasing margin: N >= 4 max|degree| + 16.
int default_angle_count(int max_abs_degree);

// -- norms -----------------------------------------------------------------

/// Parseval: (sum |a_n|^2 mu(2n))^{1/2}. Inadmissible support throws.
double l2_norm(const ModelSpace& space, const LaurentSeries& s);

/// int |f| w dA over the punctured disk, by polar quadrature.
QuadratureResult l1_weighted_norm(const ModelSpace& space, const LaurentSeries& s,
                                  double tol = 1e-9);

struct LpNormResult {
    bool infinite = false;
    QuadratureResult quad; // value = the norm (not its p-th power)
    double value() const {
        return infinite ? std::numeric_limits<double>::infinity() : quad.value;
    }
};

// (int |f|^p w dA)^{1/p}. Distinguished +inf when the leading monomial at
// the puncture already fails to be p-integrable.
LpNormResult lp_weighted_norm(const ModelSpace& space, const LaurentSeries& s, double p,
                              double tol = 1e-9);

// -- text round-trip ---------------------------------------------------------

/// One line per term, "degree real imag", sorted by degree, 17 significant
/// digits (exact double round-trip).
std::string to_text(const LaurentSeries& s);
LaurentSeries series_from_text(const std::string& text);
LaurentSeries series_from_stream(std::istream& in);

} // namespace bergman
