///
/// \file recip_gamma.hpp
///
/// Taylor machinery for 1/Gamma(t+1) = sum_n c_n t^n and for
/// x^t/Gamma(t+1) = sum_n c_n(x) t^n.
///
/// The coefficients come from the recursion
///   (n+1) c_{n+1} = sum_{k=0}^{n} (-1)^k zeta_hat(k+1) c_{n-k},  c_0 = 1,
/// which cancels O(1) terms down to |c_n| ~ 1e-80 by n = 80. It is therefore
/// run in 120-digit binary floating point and only the final coefficients
/// are rounded to double.
///
#ifndef POCHHAMMER_RECIP_GAMMA_HPP
#define POCHHAMMER_RECIP_GAMMA_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "numeric_core.hpp"

namespace pochhammer
{

/// Power series coefficients a_0 ... a_N of some function of t.
struct CoeffTable
{
    std::vector<double> coefficients;

    std::size_t size() const { return coefficients.size(); }
    /// Highest retained index N.
    std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    double operator[](std::size_t n) const { return coefficients[n]; }

    /// Horner evaluation from the highest term.
    double evaluate(double t) const
    {
        double acc = 0.0;
        for (std::size_t n = coefficients.size(); n-- > 0;)
            acc = acc * t + coefficients[n];
        return acc;
    }

    /// k-th derivative at t: sum_n (n+1)_{rising k} a_{n+k} t^n.
    double derivative(unsigned k, double t) const
    {
        if (k >= coefficients.size())
            return 0.0;
        double acc = 0.0;
        for (std::size_t n = coefficients.size() - k; n-- > 0;)
        {
            double rising = 1.0;
            for (unsigned j = 1; j <= k; ++j)
                rising *= static_cast<double>(n + j);
            acc = acc * t + rising * coefficients[n + k];
        }
        return acc;
    }

    /// Coefficients of u -> f(center + u), from the derivative series at center.
    CoeffTable shifted(double center) const
    {
        const std::size_t size_n = coefficients.size();
        CoeffTable out;
        out.coefficients.assign(size_n, 0.0);
        std::vector<double> binom(size_n);
        for (std::size_t k = 0; k < size_n; ++k)
        {
            // d_k = sum_n binom(n+k, k) a_{n+k} center^n
            binom[0] = 1.0;
            for (std::size_t n = 1; n < size_n - k; ++n)
                binom[n] = binom[n - 1] * static_cast<double>(n + k) / static_cast<double>(n);
            double acc = 0.0;
            for (std::size_t n = size_n - k; n-- > 0;)
                acc = acc * center + binom[n] * coefficients[n + k];
            out.coefficients[k] = acc;
        }
        return out;
    }

    /// Antiderivative vanishing at 0, evaluated at z: sum_{n>=1} a_{n-1} z^n / n.
    double integral(double z) const
    {
        double acc = 0.0;
        for (std::size_t n = coefficients.size(); n >= 1; --n)
            acc = acc * z + coefficients[n - 1] / static_cast<double>(n);
        return acc * z;
    }
};

/// Default table length used by every downstream series.
inline constexpr std::size_t default_coeff_degree = 80;

namespace detail
{
inline constexpr std::size_t cached_coeff_degree = 200;

inline std::vector<HighPrecision> c_coefficients_hp(std::size_t n_max)
{
    using HP = HighPrecision;
    const auto zeta = zeta_table_hp(static_cast<int>(n_max) + 2);
    std::vector<HP> zeta_hat(n_max + 2);
    zeta_hat[1] = euler_gamma_hp();
    for (std::size_t k = 2; k < zeta_hat.size(); ++k)
        zeta_hat[k] = zeta[k];

    std::vector<HP> c(n_max + 1);
    c[0] = 1;
    for (std::size_t n = 0; n < n_max; ++n)
    {
        HP acc = 0;
        for (std::size_t k = 0; k <= n; ++k)
        {
            const HP t = zeta_hat[k + 1] * c[n - k];
            if (k % 2 == 0)
                acc += t;
            else
                acc -= t;
        }
        c[n + 1] = acc / HP(n + 1);
    }
    return c;
}

inline const std::vector<double>& cached_c_coefficients()
{
    static const std::vector<double> table = [] {
        const auto hp = c_coefficients_hp(cached_coeff_degree);
        std::vector<double> out(hp.size());
        for (std::size_t i = 0; i < hp.size(); ++i)
            out[i] = hp[i].convert_to<double>();
        return out;
    }();
    return table;
}
} // namespace detail

/// c_0 ... c_N of 1/Gamma(t+1).
inline CoeffTable c_table(std::size_t n_max = default_coeff_degree)
{
    CoeffTable t;
    if (n_max <= detail::cached_coeff_degree)
    {
        const auto& cache = detail::cached_c_coefficients();
        t.coefficients.assign(cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(n_max) + 1);
        return t;
    }
    const auto hp = detail::c_coefficients_hp(n_max);
    t.coefficients.resize(hp.size());
    for (std::size_t i = 0; i < hp.size(); ++i)
        t.coefficients[i] = hp[i].convert_to<double>();
    return t;
}

/// Shared N = 80 table.
inline const CoeffTable& default_c_table()
{
    static const CoeffTable t = c_table(default_coeff_degree);
    return t;
}

inline constexpr unsigned composition_oracle_max = 20;

/// c_n by explicit expansion of exp(sum_k (-1)^{k+1} zeta_hat(k) t^k / k):
/// the sum over all compositions k_1 + ... + k_l = n of
/// (-1)^{n+l} / l! * prod zeta_hat(k_i) / k_i. Exponential in n.
inline double c_composition_oracle(unsigned n)
{
    detail::require_budget(n >= 1 && n <= composition_oracle_max,
                           "c_composition_oracle: need 1 <= n <= 20");
    std::vector<double> factor(n + 1);
    for (unsigned k = 1; k <= n; ++k)
        factor[k] = zeta_hat(static_cast<int>(k)) / k;
    std::vector<double> inv_factorial(n + 1, 1.0);
    for (unsigned l = 1; l <= n; ++l)
        inv_factorial[l] = inv_factorial[l - 1] / l;

    double total = 0.0;
    const unsigned long cuts = 1ul << (n - 1);
    for (unsigned long mask = 0; mask < cuts; ++mask)
    {
        // bit i set: a part ends after position i+1
        double prod  = 1.0;
        unsigned l   = 0;
        unsigned run = 0;
        for (unsigned pos = 1; pos <= n; ++pos)
        {
            ++run;
            if (pos == n || (mask >> (pos - 1)) & 1ul)
            {
                prod *= factor[run];
                ++l;
                run = 0;
            }
        }
        const double sign = ((n + l) % 2 == 0) ? 1.0 : -1.0;
        total += sign * inv_factorial[l] * prod;
    }
    return total;
}

/// c_n(x) = sum_{k=0}^{n} c_{n-k} ln^k(x) / k!
inline double c_of_x(std::size_t n, double x, const CoeffTable& table = default_c_table())
{
    detail::require(x > 0.0, "c_of_x: x must be > 0");
    detail::require_budget(n < table.size(), "c_of_x: table too short");
    const double lx = std::log(x);
    double power    = 1.0; // ln^k(x) / k!
    double acc      = 0.0;
    for (std::size_t k = 0; k <= n; ++k)
    {
        if (k > 0)
            power *= lx / static_cast<double>(k);
        acc += table[n - k] * power;
    }
    return acc;
}

/// Coefficient table of t -> x^t / Gamma(t+1).
inline CoeffTable weighted_series_coeffs(double x, const CoeffTable& table = default_c_table())
{
    detail::require(x > 0.0, "weighted_series_coeffs: x must be > 0");
    if (x == 1.0)
        return table;
    const double lx = std::log(x);
    CoeffTable out;
    out.coefficients.assign(table.size(), 0.0);
    std::vector<double> power(table.size());
    power[0] = 1.0;
    for (std::size_t k = 1; k < power.size(); ++k)
        power[k] = power[k - 1] * lx / static_cast<double>(k);
    for (std::size_t n = 0; n < table.size(); ++n)
    {
        double acc = 0.0;
        for (std::size_t k = 0; k <= n; ++k)
            acc += table[n - k] * power[k];
        out.coefficients[n] = acc;
    }
    return out;
}

/// Validated evaluation window of the series.
inline constexpr double recip_series_window = 3.0;

/// 1/Gamma(t+1) from the truncated Taylor series.
inline SeriesEval<double> recip_gamma_series(double t, const CoeffTable& table = default_c_table(),
                                             double tol = 1e-12)
{
    SeriesEval<double> r;
    r.value      = table.evaluate(t);
    r.terms_used = table.size();
    // last two retained terms bound the neglected tail for an entire series
    // whose coefficients decay superexponentially
    const std::size_t N = table.degree();
    double tail         = std::fabs(table[N] * std::pow(t, static_cast<double>(N)));
    if (N >= 1)
        tail += std::fabs(table[N - 1] * std::pow(t, static_cast<double>(N - 1)));
    r.tail_estimate = tail;
    r.converged     = std::fabs(t) <= recip_series_window && tail <= tol * std::max(1.0, std::fabs(r.value));
    return r;
}

} // namespace pochhammer

#endif // POCHHAMMER_RECIP_GAMMA_HPP
