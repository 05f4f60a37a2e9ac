#include <catch_amalgamated.hpp>

#include <pochhammer/analogue_one.hpp>

#include <cmath>
#include <random>

using namespace pochhammer;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("rt triangle entries", "[analogue_one]")
{
    const auto T = rtilde_triangle(8);
    CHECK(T.rtilde[3][1] == 2);
    CHECK(T.rtilde[3][2] == 2);
    CHECK(T.rtilde[0][0] == 1);
    CHECK(T.rtilde[5][0] == 0);
    CHECK(T.stilde[3][1] == 2);
    CHECK(T.stilde[3][2] == -2);
    CHECK(T.Stilde[3][2] == 2);
    for (unsigned n = 2; n <= 8; ++n)
        CHECK(T.Stilde[n][n - 1] == ExactRational((n - 1) * (n - 1), 2));
    CHECK(rtilde_coefficient(4, 2) == ExactRational(81, 8));
    CHECK_THROWS_AS(rtilde_triangle(49), std::out_of_range);
}

TEST_CASE("Mobius chains and groupoid counts reproduce the inverse", "[analogue_one]")
{
    const auto T = rtilde_triangle(12);
    CHECK(stilde_mobius_oracle(5, 5) == 1);
    CHECK(stilde_mobius_oracle(3, 2) == 2);
    CHECK(stilde_mobius_oracle(6, 2) == T.Stilde[6][2]);
    const auto g = groupoid_cardinalities(5, 2);
    CHECK(g.g == rtilde_coefficient(5, 2));
    CHECK(g.go - g.ge == T.Stilde[5][2]);
    CHECK(groupoid_cardinalities(3, 1).g == 2);
    const auto diag = groupoid_cardinalities(4, 4);
    CHECK(diag.ge == 0);
    CHECK(diag.go == 0);
    CHECK(g.ge + g.go <= groupoid_bound(5, 2));
    CHECK_THROWS_AS(stilde_mobius_oracle(13, 2), std::out_of_range);
    CHECK_THROWS_AS(groupoid_cardinalities(21, 2), std::out_of_range);
}

TEST_CASE("polynomial and closed forms", "[analogue_one]")
{
    CHECK(rtilde_poly(ExactRational(1), ExactRational(1), 3) == 5);
    CHECK(rtilde_poly(ExactRational(3), ExactRational(0), 4) == 81);
    CHECK(rtilde_poly(ExactRational(0), ExactRational(3), 4) == 0);
    CHECK_THAT(rtilde_closed(1.0, 1.0, 3), WithinRel(5.0, 1e-15));
    CHECK_THAT(rtilde_closed(2.0, 6.0, 4), WithinRel(16.0 * rtilde_closed(1.0, 3.0, 4), 1e-14));
    CHECK_THROWS_AS(rtilde_closed(0.0, 1.0, 3), std::domain_error);

    std::mt19937 rng(4u);
    std::uniform_real_distribution<double> u(0.1, 4.0);
    for (int i = 0; i < 200; ++i)
    {
        const double x = u(rng), y = u(rng);
        const unsigned n = 1 + i % 15;
        CHECK_THAT(rtilde_poly(x, y, n), WithinRel(rtilde_closed(x, y, n), 1e-11));
    }
    // far past overflow the two log-scaled paths still agree
    CHECK_THAT(rtilde_poly_scaled(3.0, 2.0, 200).log_magnitude,
               WithinRel(rtilde_closed_scaled(3.0, 2.0, 200).log_magnitude, 1e-12));
}

TEST_CASE("smooth extension", "[analogue_one]")
{
    CHECK_THAT(rtilde_ext(1.0, 1.0, 2.0), WithinRel(1.5, 1e-13));
    CHECK_THAT(rtilde_ext(2.0, 3.0, 2.5), WithinRel(std::pow(3.0, 2.5) * rtilde_ext(2.0 / 3.0, 1.0, 2.5), 1e-11));
    for (unsigned n = 1; n <= 12; ++n)
        CHECK_THAT(rtilde_ext(0.7, 1.3, n), WithinRel(rtilde_closed(0.7, 1.3, n), 1e-10));
    // between integers the extension interpolates monotonically here
    CHECK(rtilde_ext(1.0, 1.0, 3.5) > rtilde_ext(1.0, 1.0, 3.0));
    CHECK(rtilde_ext(1.0, 1.0, 3.5) < rtilde_ext(1.0, 1.0, 4.0));

    const auto a = rtilde_ext_series_alternating(1.0, 0.5, 2.7);
    const auto b = rtilde_ext_series_positive(1.0, 0.5, 2.7);
    REQUIRE(a.converged);
    REQUIRE(b.converged);
    CHECK_THAT(a.value, WithinRel(rtilde_ext(1.0, 0.5, 2.7), 1e-10));
    CHECK_THAT(b.value, WithinRel(rtilde_ext(1.0, 0.5, 2.7), 1e-10));
}

TEST_CASE("Gaussian expectation", "[analogue_one]")
{
    CHECK_THAT(gaussian_expectation(1.0, 1, 2), WithinAbs(1.0, 1e-15));
    CHECK_THAT(gaussian_expectation(1.0, 2, 2), WithinRel(1.5, 1e-14));
    CHECK_THAT(gaussian_expectation(0.7, 6, 6), WithinRel(rtilde_closed(1.0, 0.7, 6), 1e-9));
    CHECK_THROWS_AS(gaussian_expectation(0.7, 6, 5), std::out_of_range);
    CHECK_THAT(cosh_partial(3, 1.0), WithinRel(1.0 + 0.5 + 1.0 / 24 + 1.0 / 720, 1e-15));
}

TEST_CASE("recursion, derivatives and limits", "[analogue_one]")
{
    CHECK_THAT(rtilde_recursion_rhs(0.5, 2.0, 7), WithinRel(rtilde_closed(0.5, 2.0, 8), 1e-10));
    const double h = 1e-6;
    const double dy = (rtilde_closed(1.5, 0.8 + h, 5) - rtilde_closed(1.5, 0.8 - h, 5)) / (2 * h);
    CHECK_THAT(rtilde_y_derivative_rhs(1.5, 0.8, 5), WithinRel(dy, 1e-5));
    const double dx = 1.5 * (rtilde_closed(1.5 + h, 0.8, 5) - rtilde_closed(1.5 - h, 0.8, 5)) / (2 * h);
    CHECK_THAT(rtilde_x_derivative_rhs(1.5, 0.8, 5), WithinRel(dx, 1e-5));
    CHECK_THAT(rtilde_limit_reduced(1.0, 60), WithinAbs(std::exp(1.0), 1e-12));
    // the reduced form equals the ratio wherever the ratio is representable
    for (unsigned n : {5u, 10u, 20u})
        CHECK_THAT(std::exp(rtilde_closed_scaled((n - 1.0) * (n - 1.0), 2.0, n).log_magnitude -
                            2.0 * n * std::log(n - 1.0)),
                   WithinRel(rtilde_limit_reduced(1.0, n), 1e-12));
}

TEST_CASE("asymptotic deviations shrink", "[analogue_one]")
{
    const auto dev = rtilde_asymptotic_deviations();
    REQUIRE(dev.size() == 5);
    CHECK_THAT(dev[1][0], WithinAbs(0.0816, 5e-4));
    CHECK_THAT(dev[4][2], WithinAbs(0.0302, 5e-4));
    for (const auto& d : dev)
        for (std::size_t i = 1; i < d.size(); ++i)
            CHECK((d[i] < d[i - 1] || d[i] < asymptotic_noise_floor));
}
