#include <catch_amalgamated.hpp>

#include <pochhammer/gamma_kernel.hpp>
#include <pochhammer/recip_gamma.hpp>

#include <cmath>

using namespace pochhammer;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("leading reciprocal gamma coefficients", "[recip_gamma]")
{
    const auto& c = default_c_table();
    const double g = euler_gamma();
    CHECK(c[0] == 1.0);
    CHECK_THAT(c[1], WithinRel(g, 1e-15));
    CHECK_THAT(c[2], WithinRel(0.5 * (g * g - zeta(2)), 1e-14));
    CHECK_THAT(c[3], WithinRel(-0.0420026350340952355, 1e-13));
    CHECK(std::fabs(c[80]) < 1e-60);
}

TEST_CASE("coefficients agree with the composition expansion", "[recip_gamma]")
{
    const auto& c = default_c_table();
    for (unsigned n = 1; n <= 18; ++n)
        CHECK_THAT(c[n], WithinAbs(c_composition_oracle(n), 1e-10));
    CHECK_THROWS_AS(c_composition_oracle(21), std::out_of_range);
}

TEST_CASE("series reproduces 1/Gamma(t+1)", "[recip_gamma]")
{
    for (double t = -0.9; t <= 3.0; t += 0.1)
    {
        const auto r = recip_gamma_series(t);
        CHECK(r.converged);
        CHECK_THAT(r.value, WithinAbs(1.0 / std::tgamma(t + 1.0), 1e-12));
    }
    // longer tables come from the same recursion
    const auto longer = c_table(250);
    CHECK(longer[80] == default_c_table()[80]);
}

TEST_CASE("shifted and weighted tables", "[recip_gamma]")
{
    const auto& c = default_c_table();
    const auto s = c.shifted(1.0);
    for (double u : {-0.5, 0.0, 0.5})
        CHECK_THAT(s.evaluate(u), WithinAbs(c.evaluate(1.0 + u), 1e-13));
    for (double x : {0.3, 1.0, 5.0})
    {
        const auto w = weighted_series_coeffs(x);
        for (double t : {0.0, 0.7, 2.0})
            CHECK_THAT(w.evaluate(t), WithinRel(std::pow(x, t) / std::tgamma(t + 1.0), 1e-12));
        CHECK(c_of_x(5, x) == Catch::Approx(w[5]).epsilon(1e-14));
    }
    CHECK_THAT(c.derivative(1, 0.0), WithinRel(euler_gamma(), 1e-15));
    CHECK_THAT(c.integral(1.0), WithinAbs(1.08514266435747008, 1e-13));
}
