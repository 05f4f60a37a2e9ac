///
/// \file analogue_two.hpp
///
/// The second continuous analogue rho(x,y,z) = x^z E(y(z-1)^2/2x, z-1) built
/// on E(x,z) = int_0^z x^t / Gamma(t+1) dt, together with
/// nu(x) = E(x, inf) and the mu-function.
///
/// E is summed from the reciprocal gamma Taylor series. Near the origin the
/// series is used as is. Further out, [0,z] is cut into unit panels and the
/// integrand is re-expanded around each panel centre c = m + c0:
///   x^{c+v} / Gamma(c+v+1) = x^c * x^v * [1/Gamma(c0+v+1)] * prod_{i=1}^{m} 1/(c0+i+v)
/// so that every series is evaluated with |v| <= 1/2.
///
#ifndef POCHHAMMER_ANALOGUE_TWO_HPP
#define POCHHAMMER_ANALOGUE_TWO_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "gamma_kernel.hpp"
#include "numeric_core.hpp"
#include "quadrature.hpp"
#include "recip_gamma.hpp"

namespace pochhammer
{

/// Minimum of Gamma(t+1) on t >= 0, m = Gamma(a+1) at a ~ 0.4616.
inline double gamma_min_value()
{
    return gamma_minimum().value;
}

/// x^t / Gamma(t+1) straight from the gamma kernel.
inline double weighted_recip_gamma(double x, double t)
{
    detail::require(x > 0.0, "weighted_recip_gamma: x must be > 0");
    return std::exp(t * std::log(x) - log_gamma(t + 1.0));
}

namespace detail
{
inline constexpr std::size_t panel_terms  = 64;
inline constexpr std::size_t panel_budget = 100000;
// largest |ln x| * z for which the single centred series is used
inline constexpr double direct_log_budget = 6.0;
inline constexpr double max_abs_log_x     = 30.0;

using Poly = std::vector<double>;

inline Poly truncate_product(const Poly& a, const Poly& b, std::size_t len)
{
    Poly out(len, 0.0);
    for (std::size_t i = 0; i < std::min(len, a.size()); ++i)
    {
        if (a[i] == 0.0)
            continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// int_lo^hi sum_k p_k v^k dv
inline double integrate_poly(const Poly& p, double lo, double hi)
{
    double acc_hi = 0.0, acc_lo = 0.0;
    for (std::size_t k = p.size(); k-- > 0;)
    {
        acc_hi = acc_hi * hi + p[k] / static_cast<double>(k + 1);
        acc_lo = acc_lo * lo + p[k] / static_cast<double>(k + 1);
    }
    return acc_hi * hi - acc_lo * lo;
}

struct PanelResult
{
    double value;
    double tail;
};

// int over v in [lo, hi] of x^{c+v}/Gamma(c+v+1), c = m + c0, 0 <= c0 < 1
// and |lo|, |hi| <= 1/2.
inline PanelResult integrate_panel(double log_x, std::size_t m, double c0, double lo, double hi,
                                   const CoeffTable& base_shifted)
{
    const std::size_t len = panel_terms;
    // x^v
    Poly expo(len);
    expo[0] = 1.0;
    for (std::size_t k = 1; k < len; ++k)
        expo[k] = expo[k - 1] * log_x / static_cast<double>(k);
    Poly series(base_shifted.coefficients.begin(),
                base_shifted.coefficients.begin() + static_cast<std::ptrdiff_t>(std::min(len, base_shifted.size())));
    series = truncate_product(series, expo, len);

    // prod_i 1/(a_i + v) = prod_i (1/a_i) * 1/(1 + v/a_i), the scale kept in log space
    double log_scale = (static_cast<double>(m) + c0) * log_x;
    for (std::size_t i = 1; i <= m; ++i)
    {
        const double a = c0 + static_cast<double>(i);
        log_scale -= std::log(a);
        Poly geo(len);
        geo[0] = 1.0;
        for (std::size_t k = 1; k < len; ++k)
            geo[k] = -geo[k - 1] / a;
        series = truncate_product(series, geo, len);
    }
    const double scale = std::exp(log_scale);
    const double value = scale * integrate_poly(series, lo, hi);
    const double reach = std::max(std::fabs(lo), std::fabs(hi));
    double tail = 0.0;
    for (std::size_t k = len - 2; k < len; ++k)
        tail += std::fabs(series[k]) * std::pow(reach, static_cast<double>(k + 1)) / static_cast<double>(k + 1);
    tail = scale * tail + std::fabs(value) * 64.0 * std::numeric_limits<double>::epsilon();
    return {value, tail};
}

// Direct single-centre series sum_{n>=1} c_{n-1}(x) z^n / n.
inline SeriesEval<double> E_direct(double x, double z, const CoeffTable& table)
{
    SeriesEval<double> r;
    const CoeffTable w = weighted_series_coeffs(x, table);
    r.value            = w.integral(z);
    r.terms_used       = w.size();
    const std::size_t N = w.degree();
    r.tail_estimate = std::fabs(w[N] * std::pow(z, N + 1.0) / (N + 1.0)) +
                      std::fabs(w[N - 1] * std::pow(z, static_cast<double>(N)) / N);
    return r;
}

// int_a^b x^t/Gamma(t+1) dt by unit panels centred at half integers.
inline SeriesEval<double> E_panels(double x, double a, double b, const CoeffTable& table)
{
    SeriesEval<double> r;
    const double log_x = std::log(x);
    double total = 0.0, tail = 0.0;
    std::size_t panels = 0;

    // every panel is centred at a half integer, so all share one base series
    const CoeffTable half = table.shifted(0.5);

    double left = a;
    while (left < b)
    {
        if (panels >= panel_budget)
        {
            r.value         = total;
            r.terms_used    = panels;
            r.tail_estimate = std::numeric_limits<double>::infinity();
            r.converged     = false;
            return r;
        }
        const double right  = std::min(b, std::floor(left) + 1.0);
        const double centre = std::floor(left) + 0.5;
        const auto m        = static_cast<std::size_t>(std::floor(left));
        const auto p = integrate_panel(log_x, m, 0.5, left - centre, right - centre, half);
        total += p.value;
        tail  += p.tail;
        ++panels;
        left = right;

        // past the peak the panels shrink faster than geometrically
        const double ratio = x / (left + 1.0);
        if (ratio < 0.5 && p.value >= 0.0 && p.value <= total * 1e-18)
        {
            tail += p.value * ratio / (1.0 - ratio);
            break;
        }
    }
    r.value         = total;
    r.terms_used    = panels * panel_terms;
    r.tail_estimate = tail;
    r.converged     = true;
    return r;
}
} // namespace detail

/// Largest z for which the centred series and its z-derivatives are used.
inline constexpr double E_series_window = 3.0;

/// E(x,z) = int_0^z x^t/Gamma(t+1) dt from the reciprocal gamma series.
inline SeriesEval<double> E_series(double x, double z, double tol = 1e-12,
                                   const CoeffTable& table = default_c_table())
{
    detail::require(x > 0.0, "E_series: x must be > 0");
    detail::require(z >= 0.0, "E_series: z must be >= 0");
    detail::require(tol > 0.0, "E_series: tol must be > 0");
    detail::require_budget(std::fabs(std::log(x)) <= detail::max_abs_log_x,
                           "E_series: |ln x| must be <= 30");
    SeriesEval<double> r;
    if (z == 0.0)
    {
        r.converged = true;
        return r;
    }
    const double log_x = std::fabs(std::log(x));
    const double head  = std::min(z, E_series_window);
    SeriesEval<double> first;
    if (log_x * head <= detail::direct_log_budget)
        first = detail::E_direct(x, head, table);
    else
        first = detail::E_panels(x, 0.0, head, table);
    r = first;
    if (z > head)
    {
        const auto rest = detail::E_panels(x, head, z, table);
        r.value        += rest.value;
        r.terms_used   += rest.terms_used;
        r.tail_estimate += rest.tail_estimate;
        if (!rest.converged)
        {
            r.converged = false;
            return r;
        }
    }
    r.converged = std::isfinite(r.value) && r.tail_estimate <= tol * std::max(1.0, std::fabs(r.value));
    return r;
}

/// E(x,z) by adaptive Gauss-Kronrod on x^t/Gamma(t+1); tol is absolute.
inline QuadratureResult E_quadrature(double x, double z, double tol = 1e-12,
                                     std::size_t max_subdivisions = 4000)
{
    detail::require(x > 0.0, "E_quadrature: x must be > 0");
    detail::require(z >= 0.0, "E_quadrature: z must be >= 0");
    const double log_x = std::log(x);
    return integrate_adaptive([log_x](double t) { return std::exp(t * log_x - log_gamma(t + 1.0)); }, 0.0, z,
                              tol, max_subdivisions);
}

namespace detail
{
// Cut-off Z with int_Z^inf x^t/Gamma(t+1) dt <= e^{-Z} <= budget. Beyond
// e^2 x the integrand is at most (ex/t)^t <= e^{-t}.
inline double nu_cutoff(double x, double budget)
{
    double Z = std::max(30.0, std::exp(2.0) * x);
    while (std::exp(-Z) > budget)
        Z += 10.0;
    return Z;
}

inline void throw_unless(const QuadratureResult& q, const char* what)
{
    if (!q.success)
        throw NumericalFailure(what);
}
} // namespace detail

/// nu(x) = int_0^inf x^t/Gamma(t+1) dt with absolute error below
/// tol * max(1, (e^x - 1)/x).
inline double nu(double x, double tol = 1e-10)
{
    detail::require(x > 0.0, "nu: x must be > 0");
    detail::require(tol > 0.0, "nu: tol must be > 0");
    const double scale = std::max(1.0, std::expm1(x) / x);
    const double Z     = detail::nu_cutoff(x, 0.5 * tol * scale);
    const auto q       = E_quadrature(x, Z, 0.5 * tol * scale, 20000);
    detail::throw_unless(q, "nu: quadrature did not reach the tolerance");
    return q.value;
}

/// mu(x,beta,alpha) = int_0^inf x^{alpha+t} t^beta / (Gamma(alpha+t+1) Gamma(beta+1)) dt.
/// The tail past s = alpha + t = Z is bounded by Q(beta+1, Z).
inline double mu_function(double x, double beta, double alpha, double tol = 1e-10)
{
    detail::require(x > 0.0, "mu_function: x must be > 0");
    detail::require(beta >= 0.0 && alpha >= 0.0, "mu_function: beta and alpha must be >= 0");
    detail::require(tol > 0.0, "mu_function: tol must be > 0");
    const double scale   = std::max(1.0, std::expm1(x) / x);
    const double budget  = 0.5 * tol * scale;
    const double log_x   = std::log(x);
    const double lg_beta = log_gamma(beta + 1.0);
    double Z = std::max({30.0, std::exp(2.0) * x, alpha + 1.0});
    while (regularized_q(beta + 1.0, Z).value > budget)
        Z += 10.0;
    auto f = [&](double t) {
        if (t == 0.0)
            return beta == 0.0 ? std::exp(alpha * log_x - log_gamma(alpha + 1.0)) : 0.0;
        const double s = alpha + t;
        return std::exp(s * log_x - log_gamma(s + 1.0) + beta * std::log(t) - lg_beta);
    };
    const auto q = integrate_adaptive(f, 0.0, Z - alpha, budget, 20000);
    detail::throw_unless(q, "mu_function: quadrature did not reach the tolerance");
    return q.value;
}

//==============================================================================
// rho
//==============================================================================

namespace detail
{
inline void check_rho_args(double x, double y, double z)
{
    require(x > 0.0, "rho: x must be > 0");
    require(y > 0.0, "rho: y must be > 0");
    require(z >= 1.0, "rho: z must be >= 1");
}

inline double rho_argument(double x, double y, double z)
{
    return y * (z - 1.0) * (z - 1.0) / (2.0 * x);
}

inline double E_checked(double x, double z, double tol)
{
    const auto e = E_series(x, z, tol);
    if (!e.converged)
        throw NumericalFailure("rho: E series did not converge");
    return e.value;
}
} // namespace detail

/// rho(x,y,z) = x^z E(y(z-1)^2/2x, z-1) in log space; rho(x,y,1) = 0.
inline LogScaled rho_scaled(double x, double y, double z, double tol = 1e-10)
{
    detail::check_rho_args(x, y, z);
    if (z == 1.0)
        return LogScaled::zero();
    const double e = detail::E_checked(detail::rho_argument(x, y, z), z - 1.0, tol);
    return pow_scaled(x, z) * LogScaled::from_double(e);
}

inline double rho(double x, double y, double z, double tol = 1e-10)
{
    return rho_scaled(x, y, z, tol).to_double();
}

/// d^k E / dz^k from the termwise differentiated series, k in {1,2,3}, z <= 3.
inline double E_deriv_z(double x, double z, unsigned k, const CoeffTable& table = default_c_table())
{
    detail::require(x > 0.0, "E_deriv_z: x must be > 0");
    detail::require(k >= 1 && k <= 3, "E_deriv_z: k must be 1, 2 or 3");
    detail::require(z >= 0.0 && z <= E_series_window, "E_deriv_z: z must lie in [0, 3]");
    return weighted_series_coeffs(x, table).derivative(k - 1, z);
}

/// y d rho/dy = x^z sum_{n>=2} c_{n-2}(w) (z-1)^n / n, for z - 1 <= 3.
inline double rho_y_derivative_series(double x, double y, double z, const CoeffTable& table = default_c_table())
{
    detail::check_rho_args(x, y, z);
    detail::require(z - 1.0 <= E_series_window, "rho_y_derivative_series: need z <= 4");
    const double t = z - 1.0;
    const CoeffTable c = weighted_series_coeffs(detail::rho_argument(x, y, z), table);
    double acc = 0.0;
    for (std::size_t m = c.size(); m-- > 0;)
        acc = acc * t + c[m] / static_cast<double>(m + 2);
    return std::pow(x, z) * acc * t * t;
}

/// ln(x) rho + (2/(z-1)) y d rho/dy + x^z sum_n c_n(w) (z-1)^n, which equals d rho/dz.
inline double rho_z_derivative_rhs(double x, double y, double z, double tol = 1e-12,
                                   const CoeffTable& table = default_c_table())
{
    detail::check_rho_args(x, y, z);
    detail::require(z > 1.0, "rho_z_derivative_rhs: z must be > 1");
    const double t   = z - 1.0;
    const double w   = detail::rho_argument(x, y, z);
    const double yry = rho_y_derivative_series(x, y, z, table);
    const double f   = weighted_series_coeffs(w, table).evaluate(t);
    return std::log(x) * rho(x, y, z, tol) + 2.0 / t * yry + std::pow(x, z) * f;
}

} // namespace pochhammer

#endif // POCHHAMMER_ANALOGUE_TWO_HPP
