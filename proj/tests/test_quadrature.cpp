#include "bergman/quadrature.hpp"

#include "reference_values.hpp"

#include <doctest.h>

#include <cmath>

using namespace bergman;

TEST_SUITE("quadrature") {

TEST_CASE("adaptive simpson on smooth integrands") {
    auto q = adaptive_simpson([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    q = adaptive_simpson([](double x) { return std::sin(x); }, 0.0, 3.141592653589793, 1e-12);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(2.0).epsilon(1e-11));
}

TEST_CASE("unit interval engine: constants and polynomials") {
    auto q = adaptive_quad_01([](double) { return 1.0; }, 1e-10);
    CHECK(q.converged);
    CHECK(std::abs(q.value - 1.0) <= 1e-10);
    CHECK(q.nodes_used >= 1);

    q = adaptive_quad_01([](double r) { return r * r; }, 1e-10);
    CHECK(q.converged);
    CHECK(std::abs(q.value - 1.0 / 3.0) <= 1e-10);
}

TEST_CASE("unit interval engine: vanishing to all orders at 0") {
    auto q = adaptive_quad_01([](double r) { return std::exp(-2.0 / r); }, 1e-12);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(ref::itilde_0).epsilon(1e-11));
}

TEST_CASE("unit interval engine: integrable power singularities") {
    // int_0^1 r^-0.9 = 10
    auto q = adaptive_quad_01([](double r) { return std::pow(r, -0.9); }, 1e-9);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(10.0).epsilon(1e-9));

    // int_0^1 r^-0.999 = 1000: the geometric tail extrapolation has to carry
    // almost all of the mass
    q = adaptive_quad_01([](double r) { return std::pow(r, -0.999); }, 1e-4);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(1000.0).epsilon(1e-7));
}

TEST_CASE("unit interval engine: divergent integrand reports failure") {
    auto q = adaptive_quad_01([](double r) { return 1.0 / r; }, 1e-10, 1 << 14);
    CHECK_FALSE(q.converged);
}

TEST_CASE("converged implies error estimate within tolerance") {
    for (double tol : {1e-6, 1e-10}) {
        auto q = adaptive_quad_01([](double r) { return std::sqrt(r); }, tol);
        if (q.converged) CHECK(q.abs_error_estimate <= tol);
        CHECK(q.nodes_used >= 1);
    }
}

TEST_CASE("tail engine on [2, inf)") {
    auto q = adaptive_quad_tail([](double t) { return std::exp(-t); }, 2.0, 1e-12);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(std::exp(-2.0)).epsilon(1e-11));

    q = adaptive_quad_tail([](double t) { return t * std::exp(-t); }, 2.0, 1e-12);
    CHECK(q.value == doctest::Approx(3.0 * std::exp(-2.0)).epsilon(1e-11));
}

TEST_CASE("gauss-kronrod panel") {
    auto [v, e] = gauss_kronrod_15([](double x) { return std::pow(x, 8); }, 0.0, 1.0);
    CHECK(v == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
    CHECK(e < 1e-12);
}

} // TEST_SUITE
