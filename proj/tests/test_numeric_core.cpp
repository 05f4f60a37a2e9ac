#include <catch_amalgamated.hpp>

#include <pochhammer/numeric_core.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace pochhammer;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("zeta at even integers matches Bernoulli closed forms", "[numeric_core]")
{
    const double pi = std::numbers::pi;
    CHECK_THAT(zeta(2), WithinRel(pi * pi / 6, 1e-15));
    CHECK_THAT(zeta(4), WithinRel(std::pow(pi, 4) / 90, 1e-15));
    CHECK_THAT(zeta(6), WithinRel(std::pow(pi, 6) / 945, 1e-15));
    CHECK_THAT(zeta(60), WithinRel(1.0, 1e-16));
    CHECK(zeta(30) > zeta(31));
}

TEST_CASE("zeta_hat(1) is Euler's constant", "[numeric_core]")
{
    CHECK(zeta_hat(1) == euler_gamma());
    CHECK(zeta_hat(3) == zeta(3));
    CHECK_THROWS_AS(zeta(1), std::domain_error);
}

TEST_CASE("high precision zeta agrees with the double table", "[numeric_core]")
{
    const auto hp = zeta_table_hp(40);
    for (int k = 2; k <= 40; ++k)
        CHECK_THAT(hp[k].convert_to<double>(), WithinRel(zeta(k), 2e-16));
    CHECK_THAT(euler_gamma_hp().convert_to<double>(), WithinRel(euler_gamma(), 1e-16));
}

TEST_CASE("exact rationals print in lowest terms", "[numeric_core]")
{
    CHECK(to_string(ExactRational(6, 4)) == "3/2");
    CHECK(to_string(ExactRational(-8, 4)) == "-2");
    CHECK(to_string(factorial_exact(20)) == "2432902008176640000");
    CHECK(pow_exact(ExactRational(2, 3), 3) == ExactRational(8, 27));
}

TEST_CASE("LogScaled follows plain arithmetic", "[numeric_core][property]")
{
    std::mt19937 rng(12345u);
    std::uniform_real_distribution<double> u(-30.0, 30.0);
    for (int i = 0; i < 500; ++i)
    {
        const double a = u(rng), b = u(rng);
        const auto la = LogScaled::from_double(a), lb = LogScaled::from_double(b);
        CHECK_THAT((la * lb).to_double(), WithinRel(a * b, 1e-13));
        CHECK_THAT((la + lb).to_double(), WithinAbs(a + b, 1e-13 * (std::fabs(a) + std::fabs(b))));
        CHECK_THAT((la - lb).to_double(), WithinAbs(a - b, 1e-13 * (std::fabs(a) + std::fabs(b))));
    }
}

TEST_CASE("LogScaled carries magnitudes past double range", "[numeric_core]")
{
    const auto big = pow_scaled(10.0, 400.0);
    CHECK_FALSE(big.fits_double());
    CHECK_THAT(big.log_magnitude, WithinRel(400 * std::log(10.0), 1e-15));
    CHECK(std::isinf(big.to_double()));
    const auto back = big * pow_scaled(10.0, -399.0);
    CHECK(back.fits_double());
    CHECK_THAT(back.to_double(), WithinRel(10.0, 1e-12));
    CHECK(pow_scaled(-2.0, 3.0).sign == -1);
    CHECK(LogScaled::zero().is_zero());
}
