#include <catch_amalgamated.hpp>

#include <pochhammer/gamma_kernel.hpp>
#include <pochhammer/quadrature.hpp>

#include <cmath>

using namespace pochhammer;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("adaptive quadrature on closed forms", "[quadrature]")
{
    CHECK_THAT(integrate_adaptive([](double t) { return t; }, 0.0, 1.0, 1e-13).value, WithinAbs(0.5, 1e-12));
    const auto e = integrate_adaptive([](double t) { return std::exp(-t); }, 0.0, 40.0, 1e-13);
    CHECK(e.success);
    CHECK_THAT(e.value, WithinAbs(1.0, 1e-12));
    CHECK(e.error_estimate <= 1e-13);
    CHECK_THAT(integrate_adaptive([](double t) { return std::pow(t, 1.5) * std::exp(-t); }, 0.0, 3.0, 1e-13).value,
               WithinRel(lower_incomplete_gamma(2.5, 3.0), 1e-10));
    for (double z : {1.5, 3.0, 7.0})
        CHECK_THAT(integrate_adaptive([z](double t) { return std::pow(t, z - 1) * std::exp(-t); }, 0.0, 50.0,
                                      1e-14 * std::tgamma(z))
                       .value,
                   WithinRel(std::tgamma(z), 1e-10));
}

TEST_CASE("adaptive quadrature reports budget exhaustion", "[quadrature]")
{
    const auto r = integrate_adaptive([](double t) { return std::sin(1.0 / t); }, 1e-6, 1.0, 1e-15, 5);
    CHECK_FALSE(r.success);
    CHECK(std::isfinite(r.value));
}

TEST_CASE("Gauss-Hermite integrates even moments exactly", "[quadrature]")
{
    CHECK_THAT(gauss_hermite([](double) { return 1.0; }, 2), WithinAbs(1.0, 1e-15));
    CHECK_THAT(gauss_hermite([](double t) { return t * t; }, 2), WithinAbs(1.0, 1e-14));
    CHECK_THAT(gauss_hermite([](double t) { return std::pow(t, 4); }, 3), WithinAbs(3.0, 1e-13));
    for (std::size_t n : {4u, 16u, 64u, 128u})
    {
        double dfact = 1.0;
        for (unsigned m = 1; m < n && m <= 15; ++m)
        {
            dfact *= 2.0 * m - 1.0;
            CHECK_THAT(gauss_hermite([m](double t) { return std::pow(t, 2.0 * m); }, n), WithinRel(dfact, 1e-12));
        }
        CHECK_THAT(gauss_hermite([](double t) { return t * t * t; }, n), WithinAbs(0.0, 1e-12));
    }
    CHECK_THROWS(hermite_rule(1));
    CHECK_THROWS(hermite_rule(129));
}

TEST_CASE("nested simplex integration", "[quadrature]")
{
    CHECK_THAT(integrate_simplex(1, 2.0, true), WithinRel(2.0, 1e-12));
    CHECK_THAT(integrate_simplex(2, 1.0, false), WithinRel(0.5, 1e-12));
    CHECK_THAT(integrate_simplex(3, 1.0, true), WithinRel(1.0 / 48.0, 1e-8));
    CHECK_THROWS(integrate_simplex(6, 1.0, true));
}
