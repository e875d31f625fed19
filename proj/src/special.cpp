#include "bergman/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bergman {

namespace {

constexpr double kLn2 = 0.693147180559945309417232121458176568;

double exp_or_zero(double log_value) {
    return log_value < -745.0 ? 0.0 : std::exp(log_value);
}

// P(s, x) by series, for x < s + 1.
double gamma_p_series(double s, double x) {
    double ap = s;
    double sum = 1.0 / s;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-17)
            return sum * std::exp(-x + s * std::log(x) - log_gamma(s));
    }
    throw std::runtime_error("gamma_p_series: no convergence");
}

// Lentz continued fraction for the fraction part of Gamma(s, x); valid for
// x > 0 whenever x >= s + 1, including s <= 0. Gamma(s,x) = e^{-x} x^s * h.
double gamma_upper_cf_factor(double s, double x) {
    const double fpmin = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 100000; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) return h;
    }
    throw std::runtime_error("gamma_upper_cf_factor: no convergence");
}

// Q(s, x) by continued fraction, for x >= s + 1 and s > 0.
double gamma_q_cf(double s, double x) {
    return std::exp(-x + s * std::log(x) - log_gamma(s)) * gamma_upper_cf_factor(s, x);
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    // Lanczos, g = 7, n = 9
    static const double c[9] = {0.99999999999980993,     676.5203681218851,
                                -1259.1392167224028,     771.32342877765313,
                                -176.61502916214059,     12.507343278686905,
                                -0.13857109526572012,    9.9843695780195716e-6,
                                1.5056327351493116e-7};
    if (x < 0.5) {
        // reflection keeps the series argument >= 0.5
        return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double a = c[0];
    for (int i = 1; i < 9; ++i) a += c[i] / (z + i);
    const double t = z + 7.5;
    return 0.5 * std::log(kTwoPi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

double regularized_gamma_q(double s, double x) {
    if (!(s > 0.0) || !(x >= 0.0))
        throw std::domain_error("regularized_gamma_q: requires s > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
    return gamma_q_cf(s, x);
}

double gamma_upper(double s, double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_upper: requires x > 0");
    if (s > 0.0) return std::exp(log_gamma_upper(s, x));
    // s <= 0 guarantees x >= s + 1; the unnormalized continued fraction
    // avoids the Gamma(s) poles entirely
    return exp_or_zero(-x + s * std::log(x)) * gamma_upper_cf_factor(s, x);
}

double log_gamma_upper(double s, double x) {
    if (!(s > 0.0) || !(x > 0.0))
        throw std::domain_error("log_gamma_upper: requires s > 0, x > 0");
    return log_gamma(s) + std::log(regularized_gamma_q(s, x));
}

QuadratureResult itilde_direct(double x, double tol, std::int64_t node_budget) {
    if (!(tol > 0.0)) throw std::domain_error("itilde: tol must be positive");
    auto f = [x](double r) { return exp_or_zero(x * std::log(r) - 2.0 / r); };
    return adaptive_quad_01(f, tol, node_budget);
}

QuadratureResult itilde_substituted(double x, double tol, std::int64_t node_budget) {
    if (!(tol > 0.0)) throw std::domain_error("itilde: tol must be positive");
    const double scale = (x + 1.0) * kLn2;
    auto g = [x, scale](double t) { return exp_or_zero(scale - (x + 2.0) * std::log(t) - t); };
    return adaptive_quad_tail(g, 2.0, tol, node_budget);
}

QuadratureResult itilde(double x, double tol, std::int64_t node_budget) {
    return x <= -5.0 ? itilde_substituted(x, tol, node_budget)
                     : itilde_direct(x, tol, node_budget);
}

double log_itilde(double x) {
    const double s = -x - 1.0;
    if (s > 0.0) return (x + 1.0) * kLn2 + log_gamma_upper(s, 2.0);
    // Gamma(s,2) = e^-2 2^s h, and 2^{x+1} 2^s = 1, so only h survives
    return -2.0 + std::log(gamma_upper_cf_factor(s, 2.0));
}

double itilde_reference(double x) {
    const double lv = log_itilde(x);
    if (lv > 709.0) return std::numeric_limits<double>::infinity();
    return std::exp(lv);
}

double itilde_comparator_plus(double x) {
    if (!(x > -1.0)) throw std::domain_error("itilde_comparator_plus: requires x > -1");
    return 1.0 / (x + 1.0);
}

double log_itilde_comparator_minus(double x) {
    if (!(x > 1.0)) throw std::domain_error("itilde_comparator_minus: requires x > 1");
    return -(x - 1.0) * kLn2 + log_gamma(x - 1.0);
}

double itilde_comparator_minus(double x) {
    const double lv = log_itilde_comparator_minus(x);
    if (lv > 709.0) return std::numeric_limits<double>::infinity();
    return std::exp(lv);
}

} // namespace bergman
