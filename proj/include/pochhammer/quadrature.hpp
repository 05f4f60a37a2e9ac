///
/// \file quadrature.hpp
///
/// Numerical integration used as independent oracles: adaptive
/// Gauss-Kronrod on finite intervals, Gauss-Hermite for standard normal
/// expectations, and nested integration over the ordered simplex
/// 0 <= s_1 <= ... <= s_k <= x.
///
#ifndef POCHHAMMER_QUADRATURE_HPP
#define POCHHAMMER_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <queue>
#include <vector>

#include "numeric_core.hpp"

namespace pochhammer
{

struct QuadratureRequest
{
    std::function<double(double)> integrand;
    double a                     = 0.0;
    double b                     = 0.0;
    double tolerance             = 1e-10;
    std::size_t max_subdivisions = 2000;
};

struct QuadratureResult
{
    double value          = 0.0;
    double error_estimate = 0.0;
    std::size_t intervals = 0;
    bool success          = false;
};

namespace detail
{
// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> gk15_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> gk15_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> g7_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment
{
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <typename F>
Segment gauss_kronrod15(F& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half   = 0.5 * (b - a);
    const double fc     = f(center);
    double kronrod      = fc * gk15_weights[7];
    double gauss        = fc * g7_weights[3];
    double abs_sum      = std::fabs(kronrod);
    for (std::size_t j = 0; j < 7; ++j)
    {
        const double dx = half * gk15_nodes[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        kronrod += gk15_weights[j] * (f1 + f2);
        abs_sum += gk15_weights[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1)
            gauss += g7_weights[j / 2] * (f1 + f2);
    }
    const double value = kronrod * half;
    double error       = std::fabs((kronrod - gauss) * half);
    // roundoff floor
    error = std::max(error, 50.0 * std::numeric_limits<double>::epsilon() * abs_sum * std::fabs(half));
    return {a, b, value, error};
}
} // namespace detail

/// Globally adaptive Gauss-Kronrod 7/15 with bisection of the worst
/// interval. The tolerance is absolute.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double tolerance,
                                    std::size_t max_subdivisions = 2000)
{
    detail::require(a <= b, "integrate_adaptive: need a <= b");
    detail::require(tolerance > 0.0, "integrate_adaptive: tolerance must be > 0");
    if (a == b)
        return {0.0, 0.0, 0, true};

    std::priority_queue<detail::Segment> heap;
    heap.push(detail::gauss_kronrod15(f, a, b));
    double value = heap.top().value;
    double error = heap.top().error;
    std::size_t intervals = 1;

    while (error > tolerance && intervals < max_subdivisions)
    {
        const detail::Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
        {
            heap.push(worst);
            break;
        }
        const auto left  = detail::gauss_kronrod15(f, worst.a, mid);
        const auto right = detail::gauss_kronrod15(f, mid, worst.b);
        heap.push(left);
        heap.push(right);
        ++intervals;
        value += left.value + right.value - worst.value;
        error  = std::max(0.0, error + left.error + right.error - worst.error);
    }
    // resum to shed the drift of the running updates
    value = 0.0;
    error = 0.0;
    while (!heap.empty())
    {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    return {value, error, intervals, error <= tolerance};
}

inline QuadratureResult integrate_adaptive(const QuadratureRequest& request)
{
    return integrate_adaptive(request.integrand, request.a, request.b, request.tolerance,
                              request.max_subdivisions);
}

/// Same as integrate_adaptive with the tolerance taken relative to a first
/// GK15 estimate of the integral.
template <typename F>
QuadratureResult integrate_relative(F&& f, double a, double b, double rel_tol,
                                    std::size_t max_subdivisions = 2000)
{
    if (a == b)
        return {0.0, 0.0, 0, true};
    const auto first = detail::gauss_kronrod15(f, a, b);
    const double tol = std::max(rel_tol * std::fabs(first.value), std::numeric_limits<double>::min());
    return integrate_adaptive(f, a, b, tol, max_subdivisions);
}

//==============================================================================
// Gauss-Hermite
//==============================================================================

/// Nodes and weights for E[f(X)], X standard normal.
struct HermiteRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline constexpr std::size_t hermite_min_nodes = 2;
inline constexpr std::size_t hermite_max_nodes = 128;

namespace detail
{
// Newton iteration on the orthonormal physicists' Hermite recurrence, then
// rescaled to the standard normal weight.
inline HermiteRule build_hermite_rule(std::size_t n)
{
    std::vector<double> x(n), w(n);
    const double pim4 = 0.7511255444649425; // pi^{-1/4}
    const std::size_t m = (n + 1) / 2;
    const double nd     = static_cast<double>(n);
    double z = 0.0, pp = 0.0;
    for (std::size_t i = 0; i < m; ++i)
    {
        if (i == 0)
            z = std::sqrt(2.0 * nd + 1.0) - 1.85575 * std::pow(2.0 * nd + 1.0, -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow(nd, 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * x[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * x[1];
        else
            z = 2.0 * z - x[i - 2];

        for (int iter = 0; iter < 100; ++iter)
        {
            double p1 = pim4, p2 = 0.0;
            for (std::size_t j = 0; j < n; ++j)
            {
                const double p3 = p2;
                p2 = p1;
                const double jd = static_cast<double>(j);
                p1 = z * std::sqrt(2.0 / (jd + 1.0)) * p2 - std::sqrt(jd / (jd + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * nd) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) <= 1e-14 * std::max(1.0, std::fabs(z)))
                break;
        }
        x[i]         = z;
        x[n - 1 - i] = -z;
        w[i]         = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }

    HermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
    for (std::size_t i = 0; i < n; ++i)
    {
        // ascending order
        rule.nodes[i]   = std::numbers::sqrt2 * x[n - 1 - i];
        rule.weights[i] = w[n - 1 - i] * inv_sqrt_pi;
    }
    return rule;
}
} // namespace detail

/// Cached rule with the given node count, 2 <= nodes <= 128.
inline const HermiteRule& hermite_rule(std::size_t nodes)
{
    detail::require_budget(nodes >= hermite_min_nodes && nodes <= hermite_max_nodes,
                           "gauss_hermite: node count must be in [2, 128]");
    static std::mutex mutex;
    static std::array<std::optional<HermiteRule>, hermite_max_nodes + 1> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (!cache[nodes])
        cache[nodes] = detail::build_hermite_rule(nodes);
    return *cache[nodes];
}

/// E[f(X)] for X ~ N(0, 1); exact for polynomials of degree < 2 * nodes.
template <typename F>
double gauss_hermite(F&& f, std::size_t nodes)
{
    const HermiteRule& rule = hermite_rule(nodes);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(rule.nodes[i]);
    return sum;
}

//==============================================================================
// Nested integration over the ordered simplex
//==============================================================================

inline constexpr unsigned simplex_max_dimension = 5;

/// Integrates 1 (volume) or s_1 ... s_k (moment) over
/// {0 <= s_1 <= ... <= s_k <= x} by nesting one-dimensional quadratures:
/// F_k(x) = int_0^x w(s) F_{k-1}(s) ds.
inline double integrate_simplex(unsigned k, double x, bool moment)
{
    detail::require_budget(k <= simplex_max_dimension, "integrate_simplex: k must be <= 5");
    detail::require(x >= 0.0, "integrate_simplex: x must be >= 0");

    std::function<double(unsigned, double)> level = [&](unsigned depth, double upper) -> double {
        if (depth == 0)
            return 1.0;
        auto inner = [&](double s) { return (moment ? s : 1.0) * level(depth - 1, s); };
        // polynomial integrands: the first GK15 pass already meets the tolerance
        return integrate_relative(inner, 0.0, upper, 1e-12, 8).value;
    };
    return level(k, x);
}

} // namespace pochhammer

#endif // POCHHAMMER_QUADRATURE_HPP
