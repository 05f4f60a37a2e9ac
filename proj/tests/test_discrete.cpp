#include <catch_amalgamated.hpp>

#include <pochhammer/discrete.hpp>

#include <cmath>
#include <random>

using namespace pochhammer;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("discrete Pochhammer special cases", "[discrete]")
{
    CHECK(pochhammer_discrete<ExactRational>(2, 3, 3) == 80);
    CHECK(pochhammer_discrete<ExactRational>(7, -1, 7) == factorial_exact(7));
    CHECK(pochhammer_discrete<ExactRational>(1, 1, 10) == factorial_exact(10));
    CHECK(pochhammer_discrete<ExactRational>(5, 2, 0) == 1);
    CHECK(pochhammer_discrete<double>(0.5, 1.0, 3) == 0.5 * 1.5 * 2.5);
}

TEST_CASE("Stirling triangles", "[discrete]")
{
    const auto r = stirling_triangle(StirlingKind::first_unsigned, 10);
    const auto s = stirling_triangle(StirlingKind::first_signed, 10);
    const auto S = stirling_triangle(StirlingKind::second, 10);
    CHECK(r(4, 1) == 6);
    CHECK(r(4, 2) == 11);
    CHECK(S(5, 2) == 15);
    CHECK(s(4, 1) == -6);
    CHECK(r.at(3, 5) == 0);
    for (unsigned n = 0; n <= 9; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(r(n, k) == stirling_lattice_oracle(n, k));
    CHECK_THROWS_AS(stirling_triangle(StirlingKind::second, 65), std::out_of_range);
    CHECK_THROWS_AS(stirling_lattice_oracle(10, 2), std::out_of_range);
}

TEST_CASE("rising factorial expansion holds at random rationals", "[discrete][property]")
{
    const auto r = stirling_triangle(StirlingKind::first_unsigned, 8);
    std::mt19937 rng(31u);
    std::uniform_int_distribution<int> u(-20, 20);
    for (int i = 0; i < 40; ++i)
    {
        const ExactRational x(u(rng), 7), y(u(rng), 3);
        for (unsigned n = 0; n <= 8; ++n)
        {
            ExactRational acc = 0;
            for (unsigned k = 0; k <= n; ++k)
                acc += r(n, k) * pow_exact(x, k) * pow_exact(y, n - k);
            CHECK(acc == pochhammer_discrete(x, y, n));
        }
    }
}

TEST_CASE("simplex volume and moment", "[discrete]")
{
    CHECK(simplex_volume(ExactRational(3), 2) == ExactRational(9, 2));
    CHECK(simplex_moment(ExactRational(1), 3) == ExactRational(1, 48));
    CHECK(simplex_moment_double_factorial(ExactRational(5, 2), 4) == simplex_moment(ExactRational(5, 2), 4));
    CHECK_THAT(simplex_moment(2.0, 5), WithinRel(std::pow(2.0, 10) / (32.0 * 120.0), 1e-15));
    CHECK_THROWS_AS(simplex_volume(-1.0, 2), std::domain_error);
}

TEST_CASE("discrete and continuous sum pairs", "[discrete]")
{
    CHECK(power_sum(3, 1) == 6);
    CHECK(power_sum(4, 3) == 100);
    CHECK(power_sum_pair(3, 1).continuous == 4.5);
    CHECK_THAT(power_sum_pair(10000, 2).ratio(), WithinAbs(1.0, 2e-4));
    CHECK_THAT(geometric_integral(2.0, 3.0), WithinRel(7.0 / std::log(2.0), 1e-15));
    CHECK_THAT(geometric_sum_pair(2.0, 3.0).discrete, WithinRel(15.0, 1e-15));
    CHECK_THROWS_AS(geometric_integral(1.0, 3.0), std::domain_error);

    // G/S_y decays like 1/ln x
    double prev = 1.0;
    for (double x : {1e2, 1e4, 1e6, 1e8})
    {
        const auto p = geometric_sum_pair(x, 2.0);
        const double ratio = p.continuous / p.discrete;
        CHECK(ratio <= 1.0 / std::log(x));
        CHECK(ratio < prev);
        prev = ratio;
    }
    const auto h = harmonic_pair(1000000);
    CHECK_THAT(h.discrete - h.continuous, WithinAbs(euler_gamma(), 1e-6));
}
