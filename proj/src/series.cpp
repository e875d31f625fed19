#include "bergman/series.hpp"

#include "bergman/special.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace bergman {

LaurentSeries LaurentSeries::monomial(int degree, std::complex<double> a) {
    LaurentSeries s;
    s.set(degree, a);
    return s;
}

void LaurentSeries::set(int degree, std::complex<double> value) {
    if (value == std::complex<double>(0.0))
        coeffs_.erase(degree);
    else
        coeffs_[degree] = value;
}

std::complex<double> LaurentSeries::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? std::complex<double>(0.0) : it->second;
}

int LaurentSeries::min_degree() const {
    if (coeffs_.empty()) throw std::logic_error("min_degree of empty series");
    return coeffs_.begin()->first;
}

int LaurentSeries::max_degree() const {
    if (coeffs_.empty()) throw std::logic_error("max_degree of empty series");
    return coeffs_.rbegin()->first;
}

bool LaurentSeries::has_negative_degree() const {
    return !coeffs_.empty() && coeffs_.begin()->first < 0;
}

std::complex<double> evaluate(const LaurentSeries& s, std::complex<double> z) {
    if (s.empty()) return 0.0;
    if (z == std::complex<double>(0.0) && s.has_negative_degree())
        throw std::domain_error("evaluate: z = 0 with negative-degree support");

    // nonnegative part by Horner, descending degree
    std::complex<double> pos = 0.0;
    int prev = -1;
    for (auto it = s.coefficients().rbegin(); it != s.coefficients().rend(); ++it) {
        if (it->first < 0) break;
        if (prev >= 0)
            for (int k = prev; k > it->first; --k) pos *= z;
        pos += it->second;
        prev = it->first;
    }
    if (prev > 0)
        for (int k = prev; k > 0; --k) pos *= z;
    else if (prev < 0)
        pos = 0.0;

    // negative part: Horner in u = 1/z, from the most negative degree upward
    std::complex<double> neg = 0.0;
    if (s.has_negative_degree()) {
        const std::complex<double> u = 1.0 / z;
        int prev_neg = 0;
        bool first = true;
        for (const auto& [n, a] : s.coefficients()) {
            if (n >= 0) break;
            if (first) {
                neg = a;
                first = false;
            } else {
                for (int k = prev_neg; k < n; ++k) neg *= u;
                neg += a;
            }
            prev_neg = n;
        }
        for (int k = prev_neg; k < 0; ++k) neg *= u;
    }
    return pos + neg;
}

LaurentSeries conjugate_reflect(const LaurentSeries& s) {
    LaurentSeries out;
    for (const auto& [n, a] : s.coefficients()) out.set(-n, std::conj(a));
    return out;
}

double max_coeff_distance(const LaurentSeries& a, const LaurentSeries& b) {
    double m = 0.0;
    for (const auto& [n, v] : a.coefficients()) m = std::max(m, std::abs(v - b.coeff(n)));
    for (const auto& [n, v] : b.coefficients()) m = std::max(m, std::abs(v - a.coeff(n)));
    return m;
}

int default_angle_count(int max_abs_degree) { return 4 * max_abs_degree + 16; }

ExtractionResult extract_coefficients(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const std::vector<double>& radii, int num_angles, int min_degree, int max_degree,
    double consistency_tol) {
    if (radii.empty()) throw std::domain_error("extract_coefficients: no radii");
    for (double r : radii)
        if (!(r > 0.0 && r < 1.0))
            throw std::domain_error("extract_coefficients: radii must lie in (0, 1)");
    if (min_degree > max_degree)
        throw std::domain_error("extract_coefficients: empty degree range");
    const int max_abs = std::max(std::abs(min_degree), std::abs(max_degree));
    if (num_angles <= 2 * max_abs)
        throw std::domain_error(
            "extract_coefficients: anti-aliasing window violated (need N > 2 max|degree|)");

    const int ncirc = static_cast<int>(radii.size());
    const int ndeg = max_degree - min_degree + 1;
    std::vector<std::vector<std::complex<double>>> per_circle(
        ncirc, std::vector<std::complex<double>>(ndeg));

    for (int c = 0; c < ncirc; ++c) {
        const double r = radii[c];
        std::vector<std::complex<double>> samples(num_angles);
        for (int j = 0; j < num_angles; ++j) {
            const double th = kTwoPi * j / num_angles;
            samples[j] = f(std::polar(r, th));
        }
        for (int n = min_degree; n <= max_degree; ++n) {
            std::complex<double> acc = 0.0;
            for (int j = 0; j < num_angles; ++j) {
                const double th = kTwoPi * j / num_angles;
                acc += samples[j] * std::polar(1.0, -n * th);
            }
            per_circle[c][n - min_degree] = acc / (double(num_angles) * std::pow(r, n));
        }
    }

    ExtractionResult out;
    for (int n = min_degree; n <= max_degree; ++n) {
        std::complex<double> mean = 0.0;
        for (int c = 0; c < ncirc; ++c) mean += per_circle[c][n - min_degree];
        mean /= double(ncirc);
        double dev = 0.0;
        for (int c = 0; c < ncirc; ++c)
            dev = std::max(dev, std::abs(per_circle[c][n - min_degree] - mean));
        out.max_cross_circle_deviation = std::max(out.max_cross_circle_deviation, dev);
        if (std::abs(mean) > 0.0) out.series.set(n, mean);
    }
    out.consistent = out.max_cross_circle_deviation <= consistency_tol;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Angular integral int_0^2pi |f(r e^it)|^p dt by trapezoid with doubling
// (spectrally accurate for smooth periodic integrands).
double angular_abs_power(const LaurentSeries& s, double r, double p, int n0,
                         std::int64_t* evals) {
    auto sample_sum = [&](int n) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const double th = kTwoPi * j / n;
            acc += std::pow(std::abs(evaluate(s, std::polar(r, th))), p);
        }
        *evals += n;
        return acc * (kTwoPi / n);
    };
    int n = n0;
    double prev = sample_sum(n);
    for (int iter = 0; iter < 12; ++iter) {
        n *= 2;
        const double cur = sample_sum(n);
        if (std::abs(cur - prev) <= 1e-12 * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

LpNormResult weighted_power_integral(const ModelSpace& space, const LaurentSeries& s,
                                     double p, double tol) {
    LpNormResult out;
    if (s.empty()) {
        out.quad = {0.0, 0.0, 1, true};
        return out;
    }
    const int dmin = s.min_degree();
    if (space.moment(p * dmin).infinite) {
        out.infinite = true;
        return out;
    }

    // factor r^{p dmin} out of |f|^p so the radial integrand is a clean
    // power law near 0 and the tail extrapolation in adaptive_quad_01 bites
    LaurentSeries shifted;
    for (const auto& [n, a] : s.coefficients()) shifted.set(n - dmin, a);
    const int n0 = std::max(32, default_angle_count(std::max(
                                    std::abs(s.min_degree()), std::abs(s.max_degree()))));

    std::int64_t ang_evals = 0;
    const RadialWeight& w = space.weight();
    auto h = [&](double r) {
        const double ang = angular_abs_power(shifted, r, p, n0, &ang_evals);
        return std::exp((p * dmin + 1.0) * std::log(r)) * w(r) * ang;
    };
    QuadratureResult q = adaptive_quad_01(h, tol);
    q.nodes_used += ang_evals;
    q.abs_error_estimate += 1e-12 * std::abs(q.value); // angular tolerance share
    out.quad = q;
    return out;
}

} // namespace

double l2_norm(const ModelSpace& space, const LaurentSeries& s) {
    double acc = 0.0;
    for (const auto& [n, a] : s.coefficients()) {
        MomentValue m = space.moment(2.0 * n);
        if (m.infinite)
            throw std::domain_error("l2_norm: degree " + std::to_string(n) +
                                    " is not admissible");
        acc += std::norm(a) * m.value();
    }
    return std::sqrt(acc);
}

QuadratureResult l1_weighted_norm(const ModelSpace& space, const LaurentSeries& s,
                                  double tol) {
    LpNormResult r = weighted_power_integral(space, s, 1.0, tol);
    if (r.infinite) {
        // an L^1(w)-divergent series is outside every use here; report as
        // non-converged infinity rather than a silent wrong value
        QuadratureResult q;
        q.value = std::numeric_limits<double>::infinity();
        q.converged = false;
        q.nodes_used = 1;
        return q;
    }
    return r.quad;
}

LpNormResult lp_weighted_norm(const ModelSpace& space, const LaurentSeries& s, double p,
                              double tol) {
    if (!(p >= 1.0)) throw std::domain_error("lp_weighted_norm: requires p >= 1");
    LpNormResult r = weighted_power_integral(space, s, p, tol);
    if (r.infinite || s.empty()) return r;
    const double integral = r.quad.value;
    r.quad.value = std::pow(integral, 1.0 / p);
    if (integral > 0.0)
        r.quad.abs_error_estimate =
            r.quad.abs_error_estimate * r.quad.value / (p * integral);
    return r;
}

std::string to_text(const LaurentSeries& s) {
    std::string out;
    char line[96];
    for (const auto& [n, a] : s.coefficients()) {
        std::snprintf(line, sizeof line, "%d %.17g %.17g\n", n, a.real(), a.imag());
        out += line;
    }
    return out;
}

LaurentSeries series_from_stream(std::istream& in) {
    LaurentSeries s;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int n;
        double re, im;
        if (!(ls >> n >> re >> im))
            throw std::runtime_error("series parse error on line: " + line);
        s.set(n, {re, im});
    }
    return s;
}

LaurentSeries series_from_text(const std::string& text) {
    std::istringstream in(text);
    return series_from_stream(in);
}

} // namespace bergman
