#include "bergman/space.hpp"

#include "bergman/special.hpp"
#include "reference_values.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

using namespace bergman;

TEST_SUITE("weights and spaces") {

TEST_CASE("weight evaluation") {
    auto w2 = RadialWeight::power(2.0);
    CHECK(w2(0.5) == doctest::Approx(0.25));
    CHECK(w2(1.0) == 1.0);
    auto we = RadialWeight::exp_hartogs();
    CHECK(we(0.5) == doctest::Approx(std::exp(-4.0)));
    CHECK_THROWS_AS(RadialWeight::power(-1.0), std::domain_error);
    CHECK_THROWS_AS(RadialWeight::custom([](double r) { return r - 0.5; }),
                    std::domain_error); // not positive
    CHECK_THROWS_AS(we(0.0), std::domain_error);
    CHECK_THROWS_AS(we(1.5), std::domain_error);
}

TEST_CASE("power moments are closed form") {
    auto w = RadialWeight::power(2.0);
    auto m = moment(w, 0.0);
    CHECK(m.exact);
    CHECK_FALSE(m.infinite);
    CHECK(m.value() == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(m.quad.abs_error_estimate == 0.0);

    // mu(2k) = pi/(k+2), the kernel coefficients
    for (int k = -1; k <= 20; ++k) {
        auto mk = moment(w, 2.0 * k);
        CHECK(mk.value() == doctest::Approx(kPi / (k + 2.0)).epsilon(1e-15));
    }

    CHECK(moment(w, -4.0).infinite);
    CHECK(moment(w, -4.5).infinite);
}

TEST_CASE("moment(power) closed-form identity for random exponents") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> rho_dist(0.0, 5.0);
    std::uniform_real_distribution<double> t_dist(-1.5, 8.0);
    for (int i = 0; i < 20; ++i) {
        const double rho = rho_dist(rng);
        double t = t_dist(rng);
        if (t + rho + 2.0 <= 0.0) t = -rho - 1.5;
        const double v = moment(RadialWeight::power(rho), t).value();
        CHECK(std::abs(v * (t + rho + 2.0) - kTwoPi) <= 1e-14 * kTwoPi);
    }
}

TEST_CASE("exp-model moments reduce to itilde") {
    auto w = RadialWeight::exp_hartogs();
    auto m = moment(w, 0.0);
    CHECK_FALSE(m.infinite);
    CHECK(m.quad.converged);
    CHECK(m.value() == doctest::Approx(kTwoPi * ref::itilde_1).epsilon(1e-10));
    CHECK(moment(w, -31.0).value() ==
          doctest::Approx(kTwoPi * ref::itilde_m30).epsilon(1e-9));
}

TEST_CASE("custom moments: quadrature and scaling linearity") {
    auto w = RadialWeight::custom([](double r) { return r * r; });
    CHECK(moment(w, 0.0).value() == doctest::Approx(kPi / 2.0).epsilon(1e-9));

    for (double lambda : {0.25, 3.0, 17.5}) {
        auto wl = RadialWeight::custom([lambda](double r) { return lambda * r * r; });
        for (double t : {0.0, 1.0, -1.0, 3.5}) {
            CHECK(moment(wl, t).value() ==
                  doctest::Approx(lambda * moment(w, t).value()).epsilon(1e-8));
        }
    }
}

TEST_CASE("custom moments: divergence is detected, not mislabeled") {
    auto w = RadialWeight::custom([](double r) { return 1.0 / r; },
                                  WeightSmoothness::singular_origin);
    // t = -2: integrand r^{-1} w = r^{-2}, divergent
    CHECK(moment(w, -2.0).infinite);
    // t = 0: integrand r / r = 1, fine
    auto m = moment(w, 0.0);
    CHECK_FALSE(m.infinite);
    CHECK(m.value() == doctest::Approx(kTwoPi).epsilon(1e-8));
}

TEST_CASE("admissible index sets") {
    auto hart = make_space(RadialWeight::power(2.0));
    CHECK_FALSE(hart->admissible(-2));
    for (int n = -1; n <= 12; ++n) CHECK(hart->admissible(n));

    auto exp_sp = make_space(RadialWeight::exp_hartogs());
    for (int n = -30; n <= 30; ++n) CHECK(exp_sp->admissible(n));

    auto disk = make_space(RadialWeight::power(0.0)); // unweighted punctured disk
    CHECK_FALSE(disk->admissible(-1));
    CHECK(disk->admissible(0));

    auto cust = make_space(RadialWeight::custom([](double r) { return 1.0 + r; }));
    CHECK(cust->admissible(0));
    CHECK_FALSE(cust->admissible(-1)); // mu(-2) ~ int r^-1 diverges
}

TEST_CASE("norming constants") {
    auto hart = make_space(RadialWeight::power(2.0));
    for (int k = -1; k <= 20; ++k)
        CHECK(hart->norming_constant_sq(k) ==
              doctest::Approx((k + 2.0) / kPi).epsilon(1e-14));
    CHECK_THROWS_AS(hart->norming_constant(-2), std::domain_error);

    auto exp_sp = make_space(RadialWeight::exp_hartogs());
    CHECK(exp_sp->norming_constant_sq(3) ==
          doctest::Approx(1.0 / (kTwoPi * ref::itilde_7)).epsilon(1e-9));

    // c_n^2 mu(2n) = 1 for everything cached
    for (int n : {-1, 0, 1, 5, 17})
        CHECK(hart->norming_constant_sq(n) * hart->moment(2.0 * n).value() ==
              doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("weight scaling leaves the Friedrichs ratio invariant") {
    auto base = make_space(RadialWeight::custom([](double r) { return std::exp(r); }));
    auto scaled = make_space(
        RadialWeight::custom([](double r) { return 7.25 * std::exp(r); }));
    const double mu0 = base->moment(0.0).value();
    const double mu0s = scaled->moment(0.0).value();
    CHECK(mu0s == doctest::Approx(7.25 * mu0).epsilon(1e-8));
    for (int n : {1, 2, 3}) { // mu(-2) diverges for this weight, so stay positive
        CHECK(scaled->norming_constant_sq(n) ==
              doctest::Approx(base->norming_constant_sq(n) / 7.25).epsilon(1e-8));
        const double ratio_base = mu0 / base->moment(2.0 * n).value();
        const double ratio_scaled = mu0s / scaled->moment(2.0 * n).value();
        CHECK(ratio_scaled == doctest::Approx(ratio_base).epsilon(1e-8));
    }
}

TEST_CASE("hartogs kernel: partial sums against the closed form") {
    auto hart = make_space(RadialWeight::power(2.0));
    const std::complex<double> z(0.5, 0.0), wbar(0.5, 0.0);
    const std::complex<double> closed = hartogs_kernel_closed_form(z, wbar);
    CHECK(closed.real() ==
          doctest::Approx(1.0 / (kPi * 0.25 * 0.75 * 0.75)).epsilon(1e-14));
    const std::complex<double> sum = hart->bergman_kernel(z, wbar, 60);
    CHECK(std::abs(sum - closed) < 1e-10);
}

TEST_CASE("kernel diagonal positivity and hermitian symmetry") {
    auto hart = make_space(RadialWeight::power(2.0));
    auto exp_sp = make_space(RadialWeight::exp_hartogs());
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> rad(0.15, 0.8), ang(0.0, kTwoPi);
    for (int i = 0; i < 12; ++i) {
        const std::complex<double> z = std::polar(rad(rng), ang(rng));
        const std::complex<double> w = std::polar(rad(rng), ang(rng));
        for (const auto& sp : {hart, exp_sp}) {
            const auto diag = sp->bergman_kernel(z, std::conj(z), 40);
            CHECK(diag.real() > 0.0);
            CHECK(std::abs(diag.imag()) < 1e-12 * diag.real());
            const auto k1 = sp->bergman_kernel(z, std::conj(w), 40);
            const auto k2 = sp->bergman_kernel(w, std::conj(z), 40);
            CHECK(std::abs(k1 - std::conj(k2)) < 1e-10 * (1.0 + std::abs(k1)));
        }
    }
}

TEST_CASE("exp-model kernel diagonal: stabilization depth at z = 0.9") {
    auto exp_sp = make_space(RadialWeight::exp_hartogs());
    const std::complex<double> z(0.9, 0.0);
    const double k80 = exp_sp->bergman_kernel(z, z, 80).real();
    const double k140 = exp_sp->bergman_kernel(z, z, 140).real();
    const double k200 = exp_sp->bergman_kernel(z, z, 200).real();
    CHECK(k200 == doctest::Approx(ref::exp_kernel_09).epsilon(1e-9));
    // ~6 digits by K = 80, 10 digits by K = 140 (tail-ratio oracle)
    CHECK(std::abs(k80 - k200) / k200 < 1e-6);
    CHECK(std::abs(k140 - k200) / k200 < 1e-10);
}

TEST_CASE("kernel domain errors") {
    auto hart = make_space(RadialWeight::power(2.0));
    CHECK_THROWS_AS(hart->bergman_kernel({1.2, 0.0}, {0.5, 0.0}, 10), std::domain_error);
    CHECK_THROWS_AS(hart->bergman_kernel({0.0, 0.0}, {0.5, 0.0}, 10), std::domain_error);
}

TEST_CASE("monomial Lp norms on the Hartogs model") {
    auto hart = make_space(RadialWeight::power(2.0));
    CHECK(hart->monomial_lp_norm(-1, 3.0) ==
          doctest::Approx(std::pow(kTwoPi, 1.0 / 3.0)).epsilon(1e-14));
    CHECK(std::isinf(hart->monomial_lp_norm(-1, 4.0)));
    CHECK(std::isinf(hart->monomial_lp_norm(-1, 5.0)));
    CHECK(hart->monomial_lp_norm(1, 2.0) ==
          doctest::Approx(std::sqrt(kPi / 3.0)).epsilon(1e-14));
    // ||z^n||_2 = 1/c_n
    for (int n : {-1, 0, 1, 4})
        CHECK(hart->monomial_lp_norm(n, 2.0) ==
              doctest::Approx(1.0 / hart->norming_constant(n)).epsilon(1e-12));
    CHECK_THROWS_AS(hart->monomial_lp_norm(0, 0.5), std::domain_error);
}

TEST_CASE("coefficient bound constants reproduce the model-space table") {
    auto hart = make_space(RadialWeight::power(2.0));
    CHECK(*hart->coefficient_bound_constant(-1) ==
          doctest::Approx(3.0 / kTwoPi).epsilon(1e-14));
    CHECK(*hart->coefficient_bound_constant(0) ==
          doctest::Approx(2.0 / kPi).epsilon(1e-14));
    CHECK(*hart->coefficient_bound_constant(1) ==
          doctest::Approx(5.0 / kTwoPi).epsilon(1e-14));

    auto disk = make_space(RadialWeight::power(0.0));
    CHECK_FALSE(disk->coefficient_bound_constant(-3).has_value()); // no bound available
}

} // TEST_SUITE
