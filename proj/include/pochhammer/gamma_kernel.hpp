///
/// \file gamma_kernel.hpp
///
/// Real gamma function, regularized incomplete gamma, partial exponential
/// sums, the y-Gamma function and the continuous Pochhammer extension
/// r(x,y,z) = y^z Gamma(x/y + z) / Gamma(x/y).
///
#ifndef POCHHAMMER_GAMMA_KERNEL_HPP
#define POCHHAMMER_GAMMA_KERNEL_HPP

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "numeric_core.hpp"

namespace pochhammer
{

//==============================================================================
// Gamma and log-gamma
//==============================================================================
namespace detail
{
// Lanczos approximation, g = 607/128, 15 terms (Godfrey).
inline constexpr double lanczos_g = 607.0 / 128.0;

inline constexpr std::array<double, 15> lanczos_coeffs = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

// A_g(w) such that Gamma(w+1) = sqrt(2 pi) t^{w+1/2} e^{-t} A_g(w), t = w+g+1/2
inline double lanczos_sum(double w)
{
    double sum = lanczos_coeffs[0];
    for (std::size_t k = lanczos_coeffs.size() - 1; k >= 1; --k)
        sum += lanczos_coeffs[k] / (w + static_cast<double>(k));
    return sum;
}

inline constexpr double log_sqrt_two_pi = 0.91893853320467274178032973640561764;
inline constexpr double sqrt_two_pi     = 2.50662827463100050241576528481104525;

// Gamma(w+1) for w >= -0.5
inline double lanczos_gamma1p(double w)
{
    const double t = w + lanczos_g + 0.5;
    // split the power so t^{w+1/2} e^{-t} does not overflow before 171.6
    const double half = std::pow(t, 0.5 * (w + 0.5));
    return sqrt_two_pi * half * (half * std::exp(-t)) * lanczos_sum(w);
}

inline double lanczos_log_gamma1p(double w)
{
    const double t = w + lanczos_g + 0.5;
    return log_sqrt_two_pi + (w + 0.5) * std::log(t) - t + std::log(lanczos_sum(w));
}

// ln Gamma(z) by the Stirling series with seven Bernoulli corrections; z >= 15
inline double stirling_log_gamma(double z)
{
    constexpr std::array<double, 7> b = {
        1.0 / 12.0,       -1.0 / 360.0,     1.0 / 1260.0,  -1.0 / 1680.0,
        1.0 / 1188.0,     -691.0 / 360360.0, 1.0 / 156.0};
    const double inv  = 1.0 / z;
    const double inv2 = inv * inv;
    double corr       = 0.0;
    double p          = inv;
    for (double c : b)
    {
        corr += c * p;
        p    *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + log_sqrt_two_pi + corr;
}

inline constexpr double gamma_overflow = 171.62437695630272;
} // namespace detail

/// Natural log of Gamma(z), z > 0.
inline double log_gamma(double z)
{
    detail::require(z > 0.0, "log_gamma: z must be > 0");
    if (z >= 15.0)
        return detail::stirling_log_gamma(z);
    if (z < 0.5)
        return detail::lanczos_log_gamma1p(z) - std::log(z);
    return detail::lanczos_log_gamma1p(z - 1.0);
}

/// Gamma(z) for z > 0; +inf past the binary64 range (use gamma_scaled there).
inline double gamma(double z)
{
    detail::require(z > 0.0, "gamma: z must be > 0");
    if (z > detail::gamma_overflow)
        return std::numeric_limits<double>::infinity();
    if (z <= 23.0 && z == std::floor(z))
    {
        // (z-1)! is exact in binary64 through 22!
        double f = 1.0;
        for (double k = 2.0; k < z; k += 1.0)
            f *= k;
        return f;
    }
    if (z < 0.5)
        return detail::lanczos_gamma1p(z) / z;
    return detail::lanczos_gamma1p(z - 1.0);
}

inline LogScaled gamma_scaled(double z)
{
    return LogScaled::from_log(1, log_gamma(z));
}

/// Argument and value of the minimum of Gamma(t+1) on (0, 1).
struct GammaMinimum
{
    double argument;
    double value;
};

namespace detail
{
// psi(1+t) = -gamma + sum_{k>=2} (-1)^k zeta(k) t^{k-1}, |t| < 1
inline double digamma1p_series(double t)
{
    double acc = -euler_gamma(), power = 1.0;
    for (int k = 2; k < 120; ++k)
    {
        power *= t;
        const double term = zeta(k) * power;
        acc += (k % 2 == 0) ? term : -term;
        if (std::fabs(term) < 1e-18)
            break;
    }
    return acc;
}
} // namespace detail

inline const GammaMinimum& gamma_minimum()
{
    static const GammaMinimum m = [] {
        // Gamma(t+1) is strictly convex on [0,1]; its minimum is the root of psi(1+t)
        double lo = 0.0, hi = 1.0;
        while (hi - lo > 1e-16)
        {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi)
                break;
            (detail::digamma1p_series(mid) < 0.0 ? lo : hi) = mid;
        }
        const double t = 0.5 * (lo + hi);
        return GammaMinimum{t, gamma(t + 1.0)};
    }();
    return m;
}

//==============================================================================
// Regularized incomplete gamma
//==============================================================================
namespace detail
{
struct IncompleteGamma
{
    double p;      // regularized lower
    double q;      // regularized upper
    double log_eq; // ln(e^x Q(z,x)), finite whenever Q > 0
    std::size_t terms;
    double tail;
    bool converged;
};

inline constexpr std::size_t incomplete_gamma_budget = 200000;

// Lower series for x <= z + 1, continued fraction (modified Lentz) above.
inline IncompleteGamma incomplete_gamma(double z, double x, double tol)
{
    require(z > 0.0, "regularized_q: z must be > 0");
    require(x >= 0.0, "regularized_q: x must be >= 0");
    require(tol > 0.0, "regularized_q: tol must be > 0");

    if (x == 0.0)
        return {0.0, 1.0, 0.0, 0, 0.0, true};

    const double eps = std::numeric_limits<double>::epsilon();
    if (x <= z + 1.0)
    {
        // P = x^z e^{-x} / Gamma(z+1) * sum_n x^n / ((z+1)...(z+n))
        const double log_pref = z * std::log(x) - x - log_gamma(z + 1.0);
        const double pref     = std::exp(log_pref);
        double term = 1.0, sum = 1.0, tail = 0.0;
        std::size_t n  = 0;
        bool converged = false;
        while (n < incomplete_gamma_budget)
        {
            ++n;
            term *= x / (z + static_cast<double>(n));
            sum  += term;
            const double r = x / (z + static_cast<double>(n) + 1.0);
            tail = pref * term * r / (1.0 - r);
            if (tail <= std::max(tol, eps) * 0.5 && term <= sum * eps)
            {
                converged = true;
                break;
            }
        }
        const double p = pref * sum;
        const double q = 1.0 - p;
        const double log_eq = q > 0.0 ? x + std::log(q) : -std::numeric_limits<double>::infinity();
        return {p, q, log_eq, n, tail, converged && tail <= tol};
    }

    const double tiny = std::numeric_limits<double>::min() / eps;
    double b = x + 1.0 - z;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    double delta = 0.0;
    std::size_t i = 0;
    bool converged = false;
    while (i < incomplete_gamma_budget)
    {
        ++i;
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - z);
        b += 2.0;
        d  = an * d + b;
        if (std::fabs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny)
            c = tiny;
        d     = 1.0 / d;
        delta = d * c;
        h    *= delta;
        if (std::fabs(delta - 1.0) <= 4.0 * eps)
        {
            converged = true;
            break;
        }
    }
    const double log_eq = z * std::log(x) - log_gamma(z) + std::log(h);
    const double q      = std::exp(log_eq - x);
    const double tail   = q * std::fabs(delta - 1.0);
    return {1.0 - q, q, log_eq, i, tail, converged && tail <= tol};
}
} // namespace detail

/// Q(z,x) = Gamma(z,x) / Gamma(z). Absolute error bounded by tol when
/// converged.
inline SeriesEval<double> regularized_q(double z, double x, double tol = 1e-14)
{
    const auto r = detail::incomplete_gamma(z, x, tol);
    return {r.q, r.terms, r.tail, r.converged};
}

/// P(z,x) = 1 - Q(z,x), computed directly on the series side.
inline SeriesEval<double> regularized_p(double z, double x, double tol = 1e-14)
{
    const auto r = detail::incomplete_gamma(z, x, tol);
    return {r.p, r.terms, r.tail, r.converged};
}

/// gamma(z,x) = int_0^x t^{z-1} e^{-t} dt
inline double lower_incomplete_gamma(double z, double x)
{
    return gamma(z) * detail::incomplete_gamma(z, x, 1e-15).p;
}

/// Gamma(z,x) = int_x^inf t^{z-1} e^{-t} dt
inline double upper_incomplete_gamma(double z, double x)
{
    return gamma(z) * detail::incomplete_gamma(z, x, 1e-15).q;
}

//==============================================================================
// Partial exponential sums
//==============================================================================
namespace detail
{
// sum_{k=0}^{m} x^k / k! in log space, any real x
inline LogScaled partial_exp_sum_scaled(std::size_t m, double x)
{
    if (x == 0.0)
        return LogScaled::from_double(1.0);
    const double log_abs = std::log(std::fabs(x));
    LogScaled sum        = LogScaled::from_double(1.0);
    double log_term      = 0.0;
    for (std::size_t k = 1; k <= m; ++k)
    {
        log_term += log_abs - std::log(static_cast<double>(k));
        const int sign = (x < 0.0 && (k % 2 == 1)) ? -1 : 1;
        sum += LogScaled::from_log(sign, log_term);
    }
    return sum;
}

// plain double sum; returns NaN-free result only when no term overflows
inline double partial_exp_sum(std::size_t m, double x)
{
    double term = 1.0, sum = 1.0;
    for (std::size_t k = 1; k <= m; ++k)
    {
        term *= x / static_cast<double>(k);
        sum  += term;
    }
    return sum;
}

inline bool is_positive_integer(double z)
{
    return z >= 1.0 && z == std::floor(z) && z < 1e9;
}

inline void check_partial_args(double z, double x)
{
    require(z > 0.0, "e_partial: z must be > 0");
    require(x >= 0.0, "e_partial: x must be >= 0");
}

inline SeriesEval<double> as_failure(const IncompleteGamma& r, double value)
{
    return {value, r.terms, r.tail, r.converged};
}
} // namespace detail

/// e_{z-1}(x) through the incomplete gamma route e^x Gamma(z,x)/Gamma(z),
/// whatever z is.
inline SeriesEval<LogScaled> e_partial_via_gamma_scaled(double z, double x, double tol = 1e-14)
{
    detail::check_partial_args(z, x);
    const auto r = detail::incomplete_gamma(z, x, tol);
    LogScaled v  = std::isfinite(r.log_eq) ? LogScaled::from_log(1, r.log_eq) : LogScaled::zero();
    // tail is absolute on Q; scale to e^x Q
    const double rel_tail = r.q > 0.0 ? r.tail / r.q : r.tail;
    return {v, r.terms, rel_tail, r.converged};
}

inline double e_partial_via_gamma(double z, double x, double tol = 1e-14)
{
    const auto r = e_partial_via_gamma_scaled(z, x, tol);
    if (!r.converged)
        throw NumericalFailure("e_partial: incomplete gamma did not converge");
    return r.value.to_double();
}

/// e_{z-1}(x): the truncated exponential sum_{k<z} x^k/k! for integer z,
/// e^x Q(z,x) otherwise.
inline double e_partial(double z, double x)
{
    detail::check_partial_args(z, x);
    if (detail::is_positive_integer(z))
    {
        const auto m = static_cast<std::size_t>(z) - 1;
        const double direct = detail::partial_exp_sum(m, x);
        if (std::isfinite(direct))
            return direct;
        return detail::partial_exp_sum_scaled(m, x).to_double();
    }
    return e_partial_via_gamma(z, x);
}

inline LogScaled e_partial_scaled(double z, double x)
{
    detail::check_partial_args(z, x);
    if (detail::is_positive_integer(z))
        return detail::partial_exp_sum_scaled(static_cast<std::size_t>(z) - 1, x);
    const auto r = e_partial_via_gamma_scaled(z, x);
    if (!r.converged)
        throw NumericalFailure("e_partial: incomplete gamma did not converge");
    return r.value;
}

/// e_n(x) = sum_{k=0}^{n} x^k / k! for any real x.
inline double exp_partial_sum(std::size_t n, double x)
{
    const double direct = detail::partial_exp_sum(n, x);
    if (std::isfinite(direct))
        return direct;
    return detail::partial_exp_sum_scaled(n, x).to_double();
}

inline LogScaled exp_partial_sum_scaled(std::size_t n, double x)
{
    return detail::partial_exp_sum_scaled(n, x);
}

//==============================================================================
// y-Gamma and the continuous Pochhammer symbol
//==============================================================================

/// Gamma_y(x) = int_0^inf t^{x-1} e^{-t^y / y} dt = y^{x/y - 1} Gamma(x/y)
inline LogScaled gamma_y_scaled(double y, double x)
{
    detail::require(y > 0.0 && x > 0.0, "gamma_y: arguments must be > 0");
    const double a = x / y;
    return LogScaled::from_log(1, (a - 1.0) * std::log(y) + log_gamma(a));
}

inline double gamma_y(double y, double x)
{
    detail::require(y > 0.0 && x > 0.0, "gamma_y: arguments must be > 0");
    const double a = x / y;
    if (a < detail::gamma_overflow)
    {
        const double g = std::pow(y, a - 1.0) * gamma(a);
        if (std::isfinite(g) && g != 0.0)
            return g;
    }
    return gamma_y_scaled(y, x).to_double();
}

/// r(x,y,z) = Gamma_y(x + yz) / Gamma_y(x) = y^z Gamma(x/y + z) / Gamma(x/y)
inline LogScaled pochhammer_continuous_scaled(double x, double y, double z)
{
    detail::require(x > 0.0 && y > 0.0 && z >= 0.0,
                    "pochhammer_continuous: need x > 0, y > 0, z >= 0");
    if (z == 0.0)
        return LogScaled::from_double(1.0);
    const double a = x / y;
    return LogScaled::from_log(1, z * std::log(y) + log_gamma(a + z) - log_gamma(a));
}

inline double pochhammer_continuous(double x, double y, double z)
{
    detail::require(x > 0.0 && y > 0.0 && z >= 0.0,
                    "pochhammer_continuous: need x > 0, y > 0, z >= 0");
    if (z == 0.0)
        return 1.0;
    const double a = x / y;
    if (a + z < 170.0)
    {
        const double v = std::pow(y, z) * (gamma(a + z) / gamma(a));
        if (std::isfinite(v) && v != 0.0)
            return v;
    }
    return pochhammer_continuous_scaled(x, y, z).to_double();
}

} // namespace pochhammer

#endif // POCHHAMMER_GAMMA_KERNEL_HPP
