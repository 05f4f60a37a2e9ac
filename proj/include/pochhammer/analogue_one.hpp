///
/// \file analogue_one.hpp
///
/// The first continuous analogue
///   rt(x,y,n) = sum_k rt_{n,k} x^k y^{n-k},  rt_{n,k} = (n-1)^{2(n-k)} / (2^{n-k} (n-k)!),
/// its closed form x^n e_{n-1}(y(n-1)^2/2x), the smooth extension to real z
/// through the incomplete gamma function, the exact Stirling analogues and
/// groupoid cardinalities, and the identities used to test all of it.
///
#ifndef POCHHAMMER_ANALOGUE_ONE_HPP
#define POCHHAMMER_ANALOGUE_ONE_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "discrete.hpp"
#include "gamma_kernel.hpp"
#include "numeric_core.hpp"
#include "quadrature.hpp"

namespace pochhammer
{

//==============================================================================
// Exact coefficients
//==============================================================================

/// rt_{n,k}; rt_{0,0} = 1 and rt_{n,0} = 0 for n >= 1.
inline ExactRational rtilde_coefficient(unsigned n, unsigned k)
{
    detail::require(k <= n, "rtilde_coefficient: need k <= n");
    if (k == 0)
        return n == 0 ? ExactRational(1) : ExactRational(0);
    const unsigned j = n - k;
    return simplex_moment(ExactRational(n - 1), j);
}

struct RTildeTriangle
{
    std::size_t max_n = 0;
    std::vector<std::vector<ExactRational>> rtilde; // rt_{n,k}
    std::vector<std::vector<ExactRational>> stilde; // (-1)^{n-k} rt_{n,k}
    std::vector<std::vector<ExactRational>> Stilde; // inverse of stilde
};

inline constexpr std::size_t rtilde_triangle_max_n = 48;

inline RTildeTriangle rtilde_triangle(std::size_t max_n)
{
    detail::require_budget(max_n <= rtilde_triangle_max_n, "rtilde_triangle: max_n must be <= 48");
    RTildeTriangle t;
    t.max_n = max_n;
    t.rtilde.resize(max_n + 1);
    t.stilde.resize(max_n + 1);
    t.Stilde.resize(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n)
    {
        t.rtilde[n].resize(n + 1);
        t.stilde[n].resize(n + 1);
        for (std::size_t k = 0; k <= n; ++k)
        {
            t.rtilde[n][k] = rtilde_coefficient(static_cast<unsigned>(n), static_cast<unsigned>(k));
            t.stilde[n][k] = ((n - k) % 2 == 0) ? t.rtilde[n][k] : ExactRational(-t.rtilde[n][k]);
        }
    }
    // forward substitution on the unit lower triangular stilde:
    // St_{n,k} = -sum_{k<=l<n} st_{n,l} St_{l,k}
    for (std::size_t n = 0; n <= max_n; ++n)
    {
        t.Stilde[n].assign(n + 1, ExactRational(0));
        t.Stilde[n][n] = 1;
        for (std::size_t k = 0; k < n; ++k)
        {
            ExactRational acc = 0;
            for (std::size_t l = k; l < n; ++l)
                if (!t.stilde[n][l].is_zero())
                    acc += t.stilde[n][l] * t.Stilde[l][k];
            t.Stilde[n][k] = -acc;
        }
    }
    return t;
}

inline constexpr unsigned mobius_oracle_max_n = 12;

/// St_{n,k} as the alternating sum over chains k = i_0 < ... < i_l = n of
/// st_{i_l,i_{l-1}} ... st_{i_1,i_0}.
inline ExactRational stilde_mobius_oracle(unsigned n, unsigned k)
{
    detail::require_budget(n <= mobius_oracle_max_n, "stilde_mobius_oracle: n must be <= 12");
    detail::require(k > 0 && k <= n, "stilde_mobius_oracle: need 0 < k <= n");
    if (k == n)
        return 1;
    auto st = [](unsigned a, unsigned b) {
        const ExactRational r = rtilde_coefficient(a, b);
        return ((a - b) % 2 == 0) ? r : ExactRational(-r);
    };
    const unsigned interior = n - k - 1;
    ExactRational total     = 0;
    for (unsigned mask = 0; mask < (1u << interior); ++mask)
    {
        ExactRational prod = 1;
        unsigned prev      = k;
        unsigned length    = 0;
        for (unsigned i = 0; i < interior; ++i)
        {
            if (mask & (1u << i))
            {
                const unsigned node = k + 1 + i;
                prod *= st(node, prev);
                prev = node;
                ++length;
            }
        }
        prod *= st(n, prev);
        ++length;
        total += (length % 2 == 0) ? prod : ExactRational(-prod);
    }
    return total;
}

struct GroupoidCardinalities
{
    ExactRational g;  // |G_{n,k}|
    ExactRational ge; // compositions with an even number of parts
    ExactRational go; // compositions with an odd number of parts
};

inline constexpr unsigned groupoid_max_gap = 18;

/// |G_{n,k}| by its closed form, |G^e_{n,k}| and |G^o_{n,k}| by enumerating
/// the compositions a_1 + ... + a_l = n - k.
inline GroupoidCardinalities groupoid_cardinalities(unsigned n, unsigned k)
{
    detail::require(k > 0 && k <= n, "groupoid_cardinalities: need 0 < k <= n");
    detail::require_budget(n - k <= groupoid_max_gap, "groupoid_cardinalities: n - k must be <= 18");
    GroupoidCardinalities out;
    const unsigned m = n - k;
    out.g            = rtilde_coefficient(n, k);
    if (m == 0)
        return out;

    std::vector<BigInt> fact(m + 1);
    fact[0] = 1;
    for (unsigned i = 1; i <= m; ++i)
        fact[i] = fact[i - 1] * i;

    BigInt even = 0, odd = 0;
    for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask)
    {
        // bit i set: a part ends after position i+1
        BigInt weight    = fact[m];
        unsigned partial = 0;
        unsigned parts   = 0;
        unsigned run     = 0;
        for (unsigned pos = 1; pos <= m; ++pos)
        {
            ++run;
            if (pos == m || ((mask >> (pos - 1)) & 1u))
            {
                partial += run;
                weight /= fact[run];
                BigInt p = boost::multiprecision::pow(BigInt(partial + k - 1), 2 * run);
                weight *= p;
                ++parts;
                run = 0;
            }
        }
        if (parts % 2 == 0)
            even += weight;
        else
            odd += weight;
    }
    const ExactRational scale = pow_exact(ExactRational(2), m) * factorial_exact(m);
    out.ge = ExactRational(even) / scale;
    out.go = ExactRational(odd) / scale;
    return out;
}

/// (n-1)^{2(n-k)} S_{n-k}(n-k) / (2^{n-k} (n-k)!), an upper bound on |G^e| + |G^o|.
inline ExactRational groupoid_bound(unsigned n, unsigned k)
{
    detail::require(k > 0 && k < n, "groupoid_bound: need 0 < k < n");
    const unsigned m = n - k;
    return rtilde_coefficient(n, k) * power_sum(m, m);
}

//==============================================================================
// Evaluation
//==============================================================================

/// Exact evaluation of the polynomial form.
inline ExactRational rtilde_poly(const ExactRational& x, const ExactRational& y, unsigned n)
{
    ExactRational acc = 0;
    for (unsigned k = 0; k <= n; ++k)
    {
        const ExactRational c = rtilde_coefficient(n, k);
        if (!c.is_zero())
            acc += c * pow_exact(x, k) * pow_exact(y, n - k);
    }
    return acc;
}

namespace detail
{
inline const std::vector<double>& rtilde_coefficients_double(unsigned n)
{
    static std::mutex mutex;
    static std::map<unsigned, std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
    {
        std::vector<double> c(n + 1);
        for (unsigned k = 0; k <= n; ++k)
            c[k] = to_double(rtilde_coefficient(n, k));
        it = cache.emplace(n, std::move(c)).first;
    }
    return it->second;
}

inline double log_rtilde_coefficient(unsigned n, unsigned k)
{
    const double j = n - k;
    return 2.0 * j * std::log(static_cast<double>(n) - 1.0) - j * std::numbers::ln2 - log_gamma(j + 1.0);
}
} // namespace detail

/// Sum over k of rt_{n,k} x^k y^{n-k} with log-magnitude terms.
inline LogScaled rtilde_poly_scaled(double x, double y, unsigned n)
{
    if (n == 0)
        return LogScaled::from_double(1.0);
    LogScaled acc;
    for (unsigned k = 1; k <= n; ++k)
    {
        const unsigned j = n - k;
        LogScaled c      = (j == 0) ? LogScaled::from_double(1.0)
                                    : LogScaled::from_log(1, detail::log_rtilde_coefficient(n, k));
        acc += c * pow_scaled(x, k) * pow_scaled(y, j);
    }
    return acc;
}

/// The polynomial form in binary64. Falls back to the log-scaled sum when
/// a coefficient or term leaves the binary64 range.
inline double rtilde_poly(double x, double y, unsigned n)
{
    const auto& c = detail::rtilde_coefficients_double(n);
    double acc    = 0.0;
    for (unsigned k = 0; k <= n; ++k)
        if (c[k] != 0.0)
            acc += c[k] * std::pow(x, k) * std::pow(y, n - k);
    if (std::isfinite(acc))
        return acc;
    return rtilde_poly_scaled(x, y, n).to_double();
}

/// x^n e_{n-1}(y (n-1)^2 / 2x) in log space.
inline LogScaled rtilde_closed_scaled(double x, double y, unsigned n)
{
    detail::require(x != 0.0, "rtilde_closed: x must be nonzero");
    detail::require(n >= 1, "rtilde_closed: n must be >= 1");
    const double nm = n - 1.0;
    const double w  = y * nm * nm / (2.0 * x);
    return pow_scaled(x, n) * exp_partial_sum_scaled(n - 1, w);
}

inline double rtilde_closed(double x, double y, unsigned n)
{
    detail::require(x != 0.0, "rtilde_closed: x must be nonzero");
    detail::require(n >= 1, "rtilde_closed: n must be >= 1");
    const double nm = n - 1.0;
    const double w  = y * nm * nm / (2.0 * x);
    const double v  = std::pow(x, n) * exp_partial_sum(n - 1, w);
    if (std::isfinite(v) && v != 0.0)
        return v;
    return rtilde_closed_scaled(x, y, n).to_double();
}

namespace detail
{
inline void check_ext_args(double x, double y, double z)
{
    require(x > 0.0, "rtilde_ext: x must be > 0");
    require(y >= 0.0, "rtilde_ext: y must be >= 0");
    require(z > 0.0, "rtilde_ext: z must be > 0");
}

inline double ext_argument(double x, double y, double z)
{
    return y * (z - 1.0) * (z - 1.0) / (2.0 * x);
}
} // namespace detail

/// x^z e^w Gamma(z,w)/Gamma(z) with w = y(z-1)^2/2x, in log space.
inline LogScaled rtilde_ext_scaled(double x, double y, double z, double tol = 1e-14)
{
    detail::check_ext_args(x, y, z);
    const double w = detail::ext_argument(x, y, z);
    const auto e   = e_partial_via_gamma_scaled(z, w, tol);
    if (!e.converged)
        throw NumericalFailure("rtilde_ext: incomplete gamma did not converge");
    return pow_scaled(x, z) * e.value;
}

inline double rtilde_ext(double x, double y, double z, double tol = 1e-14)
{
    return rtilde_ext_scaled(x, y, z, tol).to_double();
}

namespace detail
{
inline constexpr std::size_t ext_series_budget = 100000;
}

/// First series form:
///   x^z e^w (1 - (w^z / Gamma(z)) sum_k (-w)^k / (k! (z+k))).
/// The tail estimate includes the rounding error of the alternating sum, so
/// converged is false where cancellation destroys the requested accuracy.
inline SeriesEval<double> rtilde_ext_series_alternating(double x, double y, double z, double tol = 1e-11)
{
    detail::check_ext_args(x, y, z);
    const double w   = detail::ext_argument(x, y, z);
    const double eps = std::numeric_limits<double>::epsilon();
    SeriesEval<double> r;
    if (w == 0.0)
    {
        r.value     = std::pow(x, z);
        r.converged = true;
        return r;
    }
    double term = 1.0; // (-w)^k / k!
    double sum  = 1.0 / z;
    double biggest = sum;
    std::size_t k  = 0;
    bool done      = false;
    while (k < detail::ext_series_budget)
    {
        ++k;
        term *= -w / static_cast<double>(k);
        const double t = term / (z + static_cast<double>(k));
        sum += t;
        biggest = std::max(biggest, std::fabs(t));
        if (k > w && std::fabs(t) <= eps * std::fabs(sum))
        {
            done = true;
            break;
        }
    }
    const double lower = std::exp(z * std::log(w) - log_gamma(z)) * sum; // P(z,w)
    const double q     = 1.0 - lower;
    const double pref  = std::exp(z * std::log(x) + w);
    r.value            = pref * q;
    r.terms_used       = k;
    // rounding in the sum, scaled through P, then through 1 - P
    const double sum_err = std::exp(z * std::log(w) - log_gamma(z)) * biggest * eps * static_cast<double>(k);
    const double abs_err = pref * (sum_err + eps * std::max(1.0, std::fabs(lower)));
    r.tail_estimate      = abs_err;
    r.converged          = done && std::isfinite(r.value) && abs_err <= tol * std::max(1.0, std::fabs(r.value));
    return r;
}

/// Second series form:
///   x^z e^w - x^z w^z sum_k w^k / Gamma(z+k+1).
inline SeriesEval<double> rtilde_ext_series_positive(double x, double y, double z, double tol = 1e-11)
{
    detail::check_ext_args(x, y, z);
    const double w   = detail::ext_argument(x, y, z);
    const double eps = std::numeric_limits<double>::epsilon();
    SeriesEval<double> r;
    const double xz = std::pow(x, z);
    if (w == 0.0)
    {
        r.value     = xz;
        r.converged = true;
        return r;
    }
    // sum_k w^{z+k} / Gamma(z+k+1), terms built from the first in log space
    double term = std::exp(z * std::log(w) - log_gamma(z + 1.0));
    double sum  = term;
    std::size_t k = 0;
    bool done     = false;
    while (k < detail::ext_series_budget)
    {
        ++k;
        term *= w / (z + static_cast<double>(k));
        sum += term;
        if (z + k > w && term <= eps * sum)
        {
            done = true;
            break;
        }
    }
    const double head = std::exp(w);
    r.value           = xz * (head - sum);
    r.terms_used      = k;
    const double abs_err = 4.0 * xz * eps * (head + sum);
    r.tail_estimate      = abs_err;
    r.converged          = done && std::isfinite(r.value) && abs_err <= tol * std::max(1.0, std::fabs(r.value));
    return r;
}

//==============================================================================
// Gaussian expectation
//==============================================================================

/// 2cosh_{2m}(u) = sum_{l=0}^{m} u^{2l} / (2l)!
inline double cosh_partial(unsigned m, double u)
{
    const double u2 = u * u;
    double term = 1.0, sum = 1.0;
    for (unsigned l = 1; l <= m; ++l)
    {
        term *= u2 / ((2.0 * l - 1.0) * (2.0 * l));
        sum  += term;
    }
    return sum;
}

/// E[2cosh_{2(n-1)}((n-1) sqrt(y) X)] for X standard normal, by Gauss-Hermite.
/// The integrand has degree 2(n-1), so nodes >= n makes the rule exact.
inline double gaussian_expectation(double y, unsigned n, std::size_t nodes)
{
    detail::require(y > 0.0, "gaussian_expectation: y must be > 0");
    detail::require(n >= 1, "gaussian_expectation: n must be >= 1");
    detail::require_budget(nodes >= n, "gaussian_expectation: need nodes >= n");
    const double scale = (n - 1.0) * std::sqrt(y);
    return gauss_hermite([&](double t) { return cosh_partial(n - 1, scale * t); }, nodes);
}

//==============================================================================
// Recursion, derivatives and limits
//==============================================================================

/// x rt(x, n^2 y/(n-1)^2, n) + n^{2n} x y^n / (2^n n!), which equals rt(x,y,n+1).
inline double rtilde_recursion_rhs(double x, double y, unsigned n)
{
    detail::require(n >= 2, "rtilde_recursion_rhs: n must be >= 2");
    const double nd    = n;
    const double ratio = nd * nd / ((nd - 1.0) * (nd - 1.0));
    const double extra = std::exp(2.0 * nd * std::log(nd) - nd * std::numbers::ln2 - log_gamma(nd + 1.0)) *
                         x * std::pow(y, n);
    return x * rtilde_closed(x, ratio * y, n) + extra;
}

/// n rt(x,y,n) - ((n-1)^2 y / 2) rt(x, (n-1)^2 y/(n-2)^2, n-1), which equals x d rt/dx.
inline double rtilde_x_derivative_rhs(double x, double y, unsigned n)
{
    detail::require(n >= 3, "rtilde_x_derivative_rhs: n must be >= 3");
    const double a = n - 1.0, b = n - 2.0;
    return n * rtilde_closed(x, y, n) - 0.5 * a * a * y * rtilde_closed(x, a * a * y / (b * b), n - 1);
}

/// ((n-1)^2 / 2) rt(x, (n-1)^2 y/(n-2)^2, n-1), which equals d rt/dy.
inline double rtilde_y_derivative_rhs(double x, double y, unsigned n)
{
    detail::require(n >= 3, "rtilde_y_derivative_rhs: n must be >= 3");
    const double a = n - 1.0, b = n - 2.0;
    return 0.5 * a * a * rtilde_closed(x, a * a * y / (b * b), n - 1);
}

/// rt((n-1)^2, 2y, n) / (n-1)^{2n} reduced algebraically to e_{n-1}(y).
inline double rtilde_limit_reduced(double y, unsigned n)
{
    detail::require(n >= 1, "rtilde_limit_reduced: n must be >= 1");
    return exp_partial_sum(n - 1, y);
}

//==============================================================================
// Asymptotic regimes
//==============================================================================

/// Deviations below this are treated as rounding noise.
inline constexpr double asymptotic_noise_floor = 1e-12;

/// Log-space deviations |ln lhs - ln asymptote| along each asymptotic
/// regime of rt; index 0..4 correspond to the five regimes.
inline std::vector<std::vector<double>> rtilde_asymptotic_deviations()
{
    std::vector<std::vector<double>> out(5);
    const double ya = 20.0;
    for (double z : {20.0, 40.0, 80.0})
    {
        const double lhs  = rtilde_ext_scaled((z - 1) * (z - 1), 2 * ya, z).log_magnitude;
        const double asym = 2 * z * std::log(z - 1) +
                            std::log(std::exp(ya) - std::exp(z * std::log(ya) - log_gamma(z + 1)));
        out[0].push_back(std::fabs(lhs - asym));
    }
    for (double y : {50.0, 100.0, 200.0})
    {
        const double z    = 5.0;
        const double lhs  = rtilde_ext_scaled((z - 1) * (z - 1), 2 * y, z).log_magnitude;
        const double asym = (z - 1) * std::log(y) + 2 * z * std::log(z - 1) - log_gamma(z);
        out[1].push_back(std::fabs(lhs - asym));
    }
    const double xc = 20.0;
    for (double z : {20.0, 40.0, 80.0})
    {
        const double lhs  = z * std::log(xc) + rtilde_ext_scaled(1 / xc, 2 / ((z - 1) * (z - 1)), z).log_magnitude;
        const double asym = std::log(std::exp(xc) - std::exp(z * std::log(xc) - log_gamma(z + 1)));
        out[2].push_back(std::fabs(lhs - asym));
    }
    for (double x : {50.0, 100.0, 200.0})
    {
        const double z    = 5.0;
        const double lhs  = std::log(x) + rtilde_ext_scaled(1 / x, 2 / ((z - 1) * (z - 1)), z).log_magnitude;
        const double asym = -log_gamma(z);
        out[3].push_back(std::fabs(lhs - asym));
    }
    for (double z : {20.0, 40.0, 80.0})
    {
        const double lhs  = rtilde_ext_scaled(1.0, 2 * z / ((z - 1) * (z - 1)), z).log_magnitude;
        const double asym = z - std::numbers::ln2;
        out[4].push_back(std::fabs(lhs - asym));
    }
    return out;
}

} // namespace pochhammer

#endif // POCHHAMMER_ANALOGUE_ONE_HPP
