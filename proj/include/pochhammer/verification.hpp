///
/// \file verification.hpp
///
/// Property suites that check each module against independent oracles:
/// brute-force enumerations, quadrature, finite differences and closed
/// forms. Every case records inputs, expected and actual values, a
/// residual and a pass flag.
///
#ifndef POCHHAMMER_VERIFICATION_HPP
#define POCHHAMMER_VERIFICATION_HPP

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "analogue_one.hpp"
#include "analogue_two.hpp"
#include "discrete.hpp"
#include "gamma_kernel.hpp"
#include "numeric_core.hpp"
#include "quadrature.hpp"
#include "recip_gamma.hpp"

namespace pochhammer
{

struct VerificationCase
{
    std::string id;
    std::string inputs;
    std::string expected;
    std::string actual;
    double residual = 0.0;
    bool pass       = false;
};

struct VerificationReport
{
    std::string suite;
    std::vector<VerificationCase> cases;

    std::size_t passed() const
    {
        std::size_t n = 0;
        for (const auto& c : cases)
            n += c.pass ? 1 : 0;
        return n;
    }
    std::size_t failed() const { return cases.size() - passed(); }
    bool ok() const { return failed() == 0; }
};

inline std::string format_real(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail
{
class Recorder
{
public:
    Recorder(VerificationReport& report, double tol_scale) : report_(report), scale_(tol_scale) {}

    /// |actual - expected| <= rel_tol * max(|expected|, floor)
    void close(const std::string& id, const std::string& inputs, double expected, double actual,
               double rel_tol, double floor = 0.0)
    {
        const double denom = std::max(std::fabs(expected), floor);
        const double res   = denom > 0.0 ? std::fabs(actual - expected) / denom : std::fabs(actual - expected);
        push(id, inputs, format_real(expected), format_real(actual), res,
             std::isfinite(actual) && res <= rel_tol * scale_);
    }

    void absolute(const std::string& id, const std::string& inputs, double expected, double actual,
                  double abs_tol)
    {
        const double res = std::fabs(actual - expected);
        push(id, inputs, format_real(expected), format_real(actual), res,
             std::isfinite(actual) && res <= abs_tol * scale_);
    }

    void exact(const std::string& id, const std::string& inputs, const ExactRational& expected,
               const ExactRational& actual)
    {
        push(id, inputs, to_string(expected), to_string(actual), to_double(actual - expected), expected == actual);
    }

    /// lhs <= rhs, with a relative slack for rounding in both sides.
    void at_most(const std::string& id, const std::string& inputs, double lhs, double rhs, double slack = 1e-12)
    {
        const double res = lhs - rhs;
        push(id, inputs, "<= " + format_real(rhs), format_real(lhs), res,
             std::isfinite(lhs) && res <= slack * std::max(std::fabs(rhs), 1.0));
    }

    void holds(const std::string& id, const std::string& inputs, bool condition, const std::string& detail_text)
    {
        push(id, inputs, "true", detail_text, condition ? 0.0 : 1.0, condition);
    }

    /// Runs body and records a failed case if it throws.
    void guarded(const std::string& id, const std::function<void()>& body)
    {
        try
        {
            body();
        }
        catch (const std::exception& e)
        {
            push(id, "", "no exception", e.what(), 1.0, false);
        }
    }

private:
    void push(const std::string& id, const std::string& inputs, std::string expected, std::string actual,
              double residual, bool pass)
    {
        report_.cases.push_back({report_.suite + "/" + id, inputs, std::move(expected), std::move(actual),
                                 residual, pass});
    }

    VerificationReport& report_;
    double scale_;
};

inline std::string args(std::initializer_list<std::pair<const char*, double>> kv)
{
    std::string s;
    for (const auto& [k, v] : kv)
    {
        if (!s.empty())
            s += ' ';
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s=%.10g", k, v);
        s += buf;
    }
    return s;
}

inline double log_factorial_sum(unsigned n)
{
    long double acc = 0.0L;
    for (unsigned k = 2; k <= n; ++k)
        acc += std::log(static_cast<long double>(k));
    return static_cast<double>(acc);
}

inline double double_factorial(unsigned n)
{
    double v = 1.0;
    for (unsigned k = n; k >= 2; k -= 2)
        v *= k;
    return v;
}
} // namespace detail

//==============================================================================
// kernel: numeric_core, gamma_kernel, quadrature
//==============================================================================

inline VerificationReport verify_kernel(double tol_scale = 1.0)
{
    VerificationReport report{"kernel", {}};
    detail::Recorder rec(report, tol_scale);
    using detail::args;
    const double pi = std::numbers::pi;

    rec.close("zeta2", "k=2", pi * pi / 6.0, zeta(2), 1e-15);
    rec.close("zeta4", "k=4", std::pow(pi, 4) / 90.0, zeta(4), 1e-15);
    rec.close("zeta50", "k=50", 1.0 + std::exp2(-50.0), zeta(50), 1e-30, 1.0);
    bool decreasing = true;
    for (int k = 2; k < 80; ++k)
        decreasing = decreasing && (k < 40 ? zeta(k + 1) < zeta(k) : zeta(k + 1) <= zeta(k));
    rec.holds("zeta_decreasing", "k=2..80", decreasing, decreasing ? "true" : "false");
    {
        double h = 0.0;
        const int n = 1000000;
        for (int k = n; k >= 1; --k)
            h += 1.0 / k;
        rec.absolute("euler_gamma_limit", "n=1e6", h - std::log(static_cast<double>(n)), euler_gamma(), 1e-6);
    }
    rec.close("exp_euler_gamma", "", std::exp(euler_gamma()), 1.7810724179901979, 1e-15);

    for (unsigned n = 1; n <= 20; ++n)
        rec.close("gamma_factorial", args({{"n", double(n)}}), std::exp(detail::log_factorial_sum(n - 1)),
                  gamma(n), 1e-13);
    rec.close("gamma_half", "z=0.5", std::sqrt(pi), gamma(0.5), 1e-14);
    rec.close("log_gamma_200", "z=200", detail::log_factorial_sum(199), log_gamma(200.0), 1e-14);
    rec.close("gamma_min_argument", "", 0.46163214496836234, gamma_minimum().argument, 1e-6);
    rec.close("gamma_min_value", "", 0.88560319441088870, gamma_minimum().value, 1e-12);

    rec.absolute("Q_1000_1000", "z=1000 x=1000", 0.5, regularized_q(1000.0, 1000.0).value, 0.01);
    for (unsigned n = 1; n <= 20; ++n)
        for (double x : {0.1, 1.0, 5.0, 20.0})
            rec.guarded("partial_exp", [&] {
                rec.close("partial_exp", args({{"n", double(n)}, {"x", x}}), exp_partial_sum(n - 1, x),
                          e_partial_via_gamma(n, x), 1e-10);
            });
    for (double z : {0.7, 2.5, 6.0})
        for (double x : {0.5, 3.0, 12.0})
            rec.absolute("p_plus_q", args({{"z", z}, {"x", x}}), 1.0,
                         regularized_p(z, x).value + regularized_q(z, x).value, 1e-14);

    for (double y : {0.5, 1.0, 3.0})
        for (double x : {1.5, 4.0})
        {
            const double a = x / y;
            for (unsigned n = 0; n <= 6; ++n)
                rec.close("pochhammer_integer_z", args({{"x", x}, {"y", y}, {"n", double(n)}}),
                          pochhammer_discrete<double>(x, y, n), pochhammer_continuous(x, y, n), 1e-12);
            rec.close("gamma_y_ratio", args({{"x", x}, {"y", y}}), std::pow(y, a - 1.0) * gamma(a), gamma_y(y, x),
                      1e-12);
        }
    rec.close("gamma_y_one", "y=1 x=3.3", gamma(3.3), gamma_y(1.0, 3.3), 1e-14);

    // LogScaled against plain arithmetic on a seeded grid
    std::mt19937 rng(20240117u);
    std::uniform_real_distribution<double> expo(-250.0, 250.0);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < 200; ++i)
    {
        const double a = (coin(rng) ? -1.0 : 1.0) * std::pow(10.0, expo(rng));
        const double b = (coin(rng) ? -1.0 : 1.0) * std::pow(10.0, expo(rng) * 0.2);
        const auto la  = LogScaled::from_double(a);
        const auto lb  = LogScaled::from_double(b);
        rec.close("logscaled_mul", args({{"a", a}, {"b", b}}), a * b, (la * lb).to_double(), 1e-12);
        if (std::signbit(a) == std::signbit(b))
            rec.close("logscaled_add", args({{"a", a}, {"b", b}}), a + b, (la + lb).to_double(), 1e-12);
    }

    // exact rational field laws on seeded triples
    std::uniform_int_distribution<int> small(-50, 50);
    for (int i = 0; i < 50; ++i)
    {
        auto pick = [&] {
            int d = small(rng);
            return ExactRational(small(rng)) / ExactRational(d == 0 ? 1 : d);
        };
        const ExactRational a = pick(), b = pick(), c = pick();
        rec.exact("rational_assoc", "", (a + b) + c, a + (b + c));
        rec.exact("rational_distrib", "", a * (b + c), a * b + a * c);
        rec.exact("rational_commute", "", a * b, b * a);
    }

    // quadrature
    rec.absolute("quad_linear", "[0,1]", 0.5, integrate_adaptive([](double t) { return t; }, 0.0, 1.0, 1e-13).value,
                 1e-12);
    rec.absolute("quad_exp", "[0,40]", -std::expm1(-40.0),
                 integrate_adaptive([](double t) { return std::exp(-t); }, 0.0, 40.0, 1e-13).value, 1e-12);
    rec.close("quad_lower_incomplete", "z=2.5 x=3", lower_incomplete_gamma(2.5, 3.0),
              integrate_adaptive([](double t) { return std::pow(t, 1.5) * std::exp(-t); }, 0.0, 3.0, 1e-13).value,
              1e-10);
    for (double z : {1.5, 3.0, 7.0})
        rec.close("quad_gamma", args({{"z", z}}), gamma(z),
                  integrate_adaptive([z](double t) { return std::pow(t, z - 1.0) * std::exp(-t); }, 0.0, 50.0,
                                     1e-13 * gamma(z))
                      .value,
                  1e-10);
    for (std::size_t n : {2u, 5u, 10u, 20u, 40u})
        for (unsigned m = 0; m < n && m <= 12; ++m)
            rec.close("gauss_hermite_moment", args({{"nodes", double(n)}, {"m", double(m)}}),
                      m == 0 ? 1.0 : detail::double_factorial(2 * m - 1),
                      gauss_hermite([m](double t) { return std::pow(t, 2.0 * m); }, n), 1e-12);
    return report;
}

//==============================================================================
// recip: reciprocal gamma coefficients
//==============================================================================

inline VerificationReport verify_recip(double tol_scale = 1.0)
{
    VerificationReport report{"recip", {}};
    detail::Recorder rec(report, tol_scale);
    using detail::args;
    const CoeffTable& c = default_c_table();

    rec.close("c1_gamma", "n=1", euler_gamma(), c[1], 1e-15);
    rec.close("c2_closed", "n=2", 0.5 * (euler_gamma() * euler_gamma() - zeta(2)), c[2], 1e-14);
    for (unsigned n = 1; n <= 15; ++n)
        rec.absolute("composition_oracle", args({{"n", double(n)}}), c_composition_oracle(n), c[n], 1e-10);
    for (double t : {-0.5, -0.25, 0.0, 0.3, 1.0, 1.7, 2.5, 3.0})
        rec.absolute("series_vs_gamma", args({{"t", t}}), 1.0 / gamma(t + 1.0), recip_gamma_series(t).value, 1e-12);
    for (std::size_t n : {0u, 3u, 9u})
        rec.absolute("c_of_one", args({{"n", double(n)}}), c[n], c_of_x(n, 1.0), 0.0);
    for (double x : {0.4, 2.0, 7.0})
    {
        for (double t : {-0.4, 0.6, 2.2})
            rec.close("weighted_series", args({{"x", x}, {"t", t}}), weighted_recip_gamma(x, t),
                      weighted_series_coeffs(x).evaluate(t), 1e-12);
        // d c_n(x)/dx = c_{n-1}(x)/x
        for (std::size_t n : {1u, 4u, 10u})
        {
            const double h  = 1e-6 * x;
            const double fd = (c_of_x(n, x + h) - c_of_x(n, x - h)) / (2.0 * h);
            rec.close("c_of_x_derivative", args({{"x", x}, {"n", double(n)}}), c_of_x(n - 1, x) / x, fd, 1e-5,
                      1e-6);
        }
    }
    for (auto [x, z] : {std::pair{1.3, 0.8}, {1.0, 0.0}, {0.5, 2.9}, {3.0, 1.5}})
        rec.close("E_deriv_1", args({{"x", x}, {"z", z}}), weighted_recip_gamma(x, z), E_deriv_z(x, z, 1), 1e-9);
    for (unsigned k : {2u, 3u})
    {
        const double x = 2.0, z = 1.5, h = 1e-5;
        const double fd = (E_deriv_z(x, z + h, k - 1) - E_deriv_z(x, z - h, k - 1)) / (2.0 * h);
        rec.close("E_deriv_fd", args({{"k", double(k)}}), fd, E_deriv_z(x, z, k), 1e-6);
    }
    return report;
}

//==============================================================================
// discrete
//==============================================================================

inline VerificationReport verify_discrete(double tol_scale = 1.0)
{
    VerificationReport report{"discrete", {}};
    detail::Recorder rec(report, tol_scale);
    using detail::args;

    const auto r = stirling_triangle(StirlingKind::first_unsigned, 12);
    const auto s = stirling_triangle(StirlingKind::first_signed, 12);
    const auto S = stirling_triangle(StirlingKind::second, 12);
    for (unsigned n = 0; n <= 9; ++n)
        for (unsigned k = 0; k <= n; ++k)
            rec.exact("lattice_oracle", args({{"n", double(n)}, {"k", double(k)}}), stirling_lattice_oracle(n, k),
                      r(n, k));
    for (unsigned n = 0; n <= 12; ++n)
    {
        ExactRational sum = 0, weighted = 0;
        for (unsigned k = 0; k <= n; ++k)
        {
            sum      += r(n, k);
            weighted += r(n, k) * pow_exact(ExactRational(2), n - k);
        }
        rec.exact("row_sum_factorial", args({{"n", double(n)}}), factorial_exact(n), sum);
        rec.exact("double_factorial", args({{"n", double(n)}}),
                  pochhammer_discrete<ExactRational>(1, 2, n), weighted);
        for (unsigned k = 0; k <= n; ++k)
        {
            ExactRational delta = 0;
            for (unsigned l = k; l <= n; ++l)
                delta += s(n, l) * S(l, k);
            rec.exact("inversion", args({{"n", double(n)}, {"k", double(k)}}), ExactRational(n == k ? 1 : 0),
                      delta);
        }
    }
    // x^n = sum_k S_{n,k} r(x,-1,k)
    for (unsigned n = 0; n <= 10; ++n)
        for (int xi = -3; xi <= 3; ++xi)
        {
            const ExactRational x(xi);
            ExactRational acc = 0;
            for (unsigned k = 0; k <= n; ++k)
                acc += S(n, k) * pochhammer_discrete<ExactRational>(x, -1, k);
            rec.exact("falling_expansion", args({{"n", double(n)}, {"x", double(xi)}}), pow_exact(x, n), acc);
        }
    for (unsigned n = 0; n <= 15; ++n)
        rec.exact("falling_factorial", args({{"n", double(n)}}), factorial_exact(n),
                  pochhammer_discrete<ExactRational>(n, -1, n));
    rec.exact("pochhammer_2_3_3", "x=2 y=3 n=3", 80, pochhammer_discrete<ExactRational>(2, 3, 3));

    for (unsigned k = 0; k <= 6; ++k)
        for (int num : {1, 3, 7})
        {
            const ExactRational x = ExactRational(num) / 2;
            rec.exact("moment_double_factorial", args({{"x", num / 2.0}, {"k", double(k)}}), simplex_moment(x, k),
                      simplex_moment_double_factorial(x, k));
        }
    for (unsigned k = 0; k <= 5; ++k)
        for (double x : {0.5, 1.0, 2.0})
        {
            rec.close("simplex_moment_quad", args({{"x", x}, {"k", double(k)}}), simplex_moment(x, k),
                      integrate_simplex(k, x, true), 1e-7);
            rec.close("simplex_volume_quad", args({{"x", x}, {"k", double(k)}}), simplex_volume(x, k),
                      integrate_simplex(k, x, false), 1e-7);
        }
    rec.close("simplex_moment_1_3", "x=1 k=3", 1.0 / 48.0, simplex_moment(1.0, 3), 1e-15);
    rec.close("simplex_volume_3_2", "x=3 k=2", 4.5, simplex_volume(3.0, 2), 1e-15);

    rec.exact("power_sum", "n=3 k=1", 6, power_sum(3, 1));
    rec.close("power_integral", "n=3 k=1", 4.5, power_sum_pair(3, 1).continuous, 1e-15);
    rec.absolute("power_ratio", "n=1e4 k=2", 1.0, power_sum_pair(10000, 2).ratio(), 2e-4);
    rec.close("geometric_integral", "x=2 y=3", 7.0 / std::log(2.0), geometric_integral(2.0, 3.0), 1e-15);
    {
        // G/S_y ~ 1/ln x, so the ratio falls towards 0 only logarithmically
        double previous = 1.0;
        for (double x : {1e2, 1e4, 1e6, 1e8})
        {
            const auto p       = geometric_sum_pair(x, 2.0);
            const double ratio = p.continuous / p.discrete;
            rec.at_most("geometric_ratio_bound", args({{"x", x}}), ratio, 1.0 / std::log(x));
            rec.holds("geometric_ratio_falls", args({{"x", x}}), ratio < previous, format_real(ratio));
            previous = ratio;
        }
    }
    {
        const auto h = harmonic_pair(1000000);
        rec.absolute("harmonic_minus_log", "n=1e6", euler_gamma(), h.discrete - h.continuous, 1e-6);
    }
    return report;
}

//==============================================================================
// analogue1: rt
//==============================================================================

namespace detail
{
// deviation sequence must fall, values under the floor count as the floor
inline bool monotone_with_floor(const std::vector<double>& dev, double floor)
{
    for (std::size_t i = 1; i < dev.size(); ++i)
    {
        const double a = std::max(dev[i - 1], floor);
        const double b = std::max(dev[i], floor);
        if (!(b < a || (a == floor && b == floor)))
            return false;
    }
    return true;
}

inline std::string join(const std::vector<double>& v)
{
    std::string s;
    for (double d : v)
        s += (s.empty() ? "" : ",") + format_real(d);
    return s;
}
} // namespace detail

inline VerificationReport verify_analogue1(double tol_scale = 1.0)
{
    VerificationReport report{"analogue1", {}};
    detail::Recorder rec(report, tol_scale);
    using detail::args;

    const auto T = rtilde_triangle(12);
    rec.exact("rt_3_1", "", 2, T.rtilde[3][1]);
    rec.exact("rt_3_2", "", 2, T.rtilde[3][2]);
    rec.exact("st_3_1", "", 2, T.stilde[3][1]);
    rec.exact("St_3_2", "", 2, T.Stilde[3][2]);
    for (unsigned n = 0; n <= 12; ++n)
    {
        rec.exact("rt_diagonal", args({{"n", double(n)}}), 1, T.rtilde[n][n]);
        if (n >= 1)
            rec.exact("rt_zero_column", args({{"n", double(n)}}), 0, T.rtilde[n][0]);
        for (unsigned k = 0; k <= n; ++k)
        {
            ExactRational delta = 0;
            for (unsigned l = k; l <= n; ++l)
                delta += T.stilde[n][l] * T.Stilde[l][k];
            rec.exact("inversion", args({{"n", double(n)}, {"k", double(k)}}), ExactRational(n == k ? 1 : 0), delta);
            if (k >= 1)
                rec.exact("mobius_oracle", args({{"n", double(n)}, {"k", double(k)}}), T.Stilde[n][k],
                          stilde_mobius_oracle(n, k));
        }
    }
    for (unsigned n = 2; n <= 10; ++n)
        for (unsigned k = 1; k < n; ++k)
        {
            const auto g = groupoid_cardinalities(n, k);
            ExactRational signed_diff = g.ge - g.go;
            if ((n - k) % 2 == 1)
                signed_diff = -signed_diff;
            rec.exact("groupoid_identity", args({{"n", double(n)}, {"k", double(k)}}), T.Stilde[n][k], signed_diff);
            rec.exact("groupoid_g", args({{"n", double(n)}, {"k", double(k)}}),
                      ((n - k) % 2 == 0) ? T.stilde[n][k] : ExactRational(-T.stilde[n][k]), g.g);
            rec.holds("groupoid_bound", args({{"n", double(n)}, {"k", double(k)}}),
                      g.ge + g.go <= groupoid_bound(n, k), to_string(g.ge + g.go));
        }

    rec.close("poly_1_1_3", "x=1 y=1 n=3", 5.0, rtilde_poly(1.0, 1.0, 3), 1e-15);
    rec.close("closed_1_1_3", "x=1 y=1 n=3", 5.0, rtilde_closed(1.0, 1.0, 3), 1e-15);
    rec.close("ext_1_1_2", "x=1 y=1 z=2", 1.5, rtilde_ext(1.0, 1.0, 2.0), 1e-13);
    rec.exact("poly_exact_n1", "x=7/3 y=5 n=1", ExactRational(7) / 3, rtilde_poly(ExactRational(7) / 3, ExactRational(5), 1));
    rec.exact("poly_exact_y0", "x=3/2 y=0 n=5", pow_exact(ExactRational(3) / 2, 5),
              rtilde_poly(ExactRational(3) / 2, ExactRational(0), 5));
    rec.exact("poly_exact_x0", "x=0 y=4 n=5", 0, rtilde_poly(ExactRational(0), ExactRational(4), 5));
    rec.close("homogeneity", "a=2 x=1 y=3 n=4", std::pow(2.0, 4) * rtilde_closed(1, 3, 4), rtilde_closed(2, 6, 4), 1e-14);
    rec.close("ext_scaling", "x=2 y=3 z=2.5", std::pow(3.0, 2.5) * rtilde_ext(2.0 / 3.0, 1.0, 2.5),
              rtilde_ext(2.0, 3.0, 2.5), 1e-11);
    for (unsigned n = 1; n <= 8; ++n)
        rec.close("closed_example_a", args({{"n", double(n)}}), exp_partial_sum(n - 1, (n - 1.0) * (n - 1.0) / 2.0),
                  rtilde_closed(1, 1, n), 1e-14);

    for (unsigned n = 1; n <= 12; ++n)
        for (double x : {0.5, 1.0, 2.0})
            for (double y : {0.5, 1.0, 2.0})
            {
                const std::string in = args({{"x", x}, {"y", y}, {"n", double(n)}});
                const double closed  = rtilde_closed(x, y, n);
                rec.close("poly_vs_closed", in, closed, rtilde_poly(x, y, n), 1e-11);
                rec.guarded("ext_vs_closed", [&] { rec.close("ext_vs_closed", in, closed, rtilde_ext(x, y, n), 1e-10); });
            }
    {
        std::size_t both = 0;
        for (double z = 0.25; z <= 12.0; z += 0.25)
            for (double x : {0.5, 1.0, 2.0})
                for (double y : {0.0, 0.5, 1.0, 2.0})
                {
                    const auto a = rtilde_ext_series_alternating(x, y, z);
                    const auto b = rtilde_ext_series_positive(x, y, z);
                    if (a.converged && b.converged)
                    {
                        ++both;
                        rec.close("series_forms", args({{"x", x}, {"y", y}, {"z", z}}), b.value, a.value, 1e-9);
                    }
                }
        rec.holds("series_overlap_nonempty", "", both > 20, std::to_string(both));
    }
    {
        std::mt19937 rng(7u);
        std::uniform_real_distribution<double> ux(0.1, 5.0), uy(0.0, 3.0), uz(0.1, 10.0);
        for (int i = 0; i < 100; ++i)
        {
            const double x = ux(rng), y = uy(rng), z = uz(rng);
            const double w = y * (z - 1) * (z - 1) / (2 * x);
            rec.at_most("ext_upper_bound", args({{"x", x}, {"y", y}, {"z", z}}),
                        rtilde_ext_scaled(x, y, z).log_magnitude, z * std::log(x) + w, 1e-13);
        }
    }

    for (unsigned n = 2; n <= 12; ++n)
        for (double x : {0.5, 1.0, 2.0})
            for (double y : {0.5, 1.0, 2.0})
                rec.close("recursion", args({{"x", x}, {"y", y}, {"n", double(n)}}), rtilde_closed(x, y, n + 1),
                          rtilde_recursion_rhs(x, y, n), 1e-10);
    const double h = 1e-6;
    for (unsigned n = 3; n <= 8; ++n)
        for (double x : {0.5, 1.0, 2.0})
            for (double y : {0.5, 1.0, 2.0})
            {
                const std::string in = args({{"x", x}, {"y", y}, {"n", double(n)}});
                const double dx = x * (rtilde_closed(x + h, y, n) - rtilde_closed(x - h, y, n)) / (2 * h);
                const double dy = (rtilde_closed(x, y + h, n) - rtilde_closed(x, y - h, n)) / (2 * h);
                rec.close("x_derivative", in, rtilde_x_derivative_rhs(x, y, n), dx, 1e-5);
                rec.close("y_derivative", in, rtilde_y_derivative_rhs(x, y, n), dy, 1e-5);
            }
    for (unsigned n = 1; n <= 10; ++n)
        for (double y : {0.3, 1.0, 2.5})
            rec.close("gaussian_expectation", args({{"y", y}, {"n", double(n)}}), rtilde_closed(1, y, n),
                      gaussian_expectation(y, n, n + 8), 1e-9);
    rec.close("gaussian_n2", "y=1 n=2", 1.5, gaussian_expectation(1.0, 2, 2), 1e-13);

    for (double y : {0.5, 1.0, 2.0})
        rec.absolute("limit_reduced", args({{"y", y}, {"n", 60}}), std::exp(y), rtilde_limit_reduced(y, 60), 1e-12);
    for (double x : {0.5, 2.0})
        rec.absolute("limit_inverse", args({{"x", x}, {"n", 60}}), std::exp(x),
                     std::exp(60 * std::log(x) + rtilde_closed_scaled(1 / x, 2.0 / (59.0 * 59.0), 60).log_magnitude),
                     1e-12 * std::exp(x));

    const auto dev = rtilde_asymptotic_deviations();
    const char* names[] = {"asymptotic_a", "asymptotic_b", "asymptotic_c", "asymptotic_d", "asymptotic_e"};
    for (std::size_t i = 0; i < dev.size(); ++i)
        rec.holds(names[i], "", detail::monotone_with_floor(dev[i], asymptotic_noise_floor), detail::join(dev[i]));
    return report;
}

//==============================================================================
// analogue2: E, nu, mu, rho
//==============================================================================

/// Upper bound on E(x,z) from Gamma(t+1) >= e^{-gamma t} (tangent line of the
/// convex ln Gamma(t+1) at 0): (x^z e^{gamma z} - 1) / (ln x + gamma).
inline double E_upper_bound(double x, double z)
{
    const double a = std::log(x) + euler_gamma();
    if (a == 0.0)
        return z;
    return std::expm1(a * z) / a;
}

inline VerificationReport verify_analogue2(double tol_scale = 1.0)
{
    VerificationReport report{"analogue2", {}};
    detail::Recorder rec(report, tol_scale);
    using detail::args;
    const double eg = euler_gamma();
    const double m  = gamma_min_value();

    for (double x : {0.3, 1.0, std::exp(eg), 4.0})
        for (double z : {0.5, 2.0, 5.0, 10.0})
            rec.guarded("E_series_vs_quadrature", [&] {
                const auto s = E_series(x, z);
                const auto q = E_quadrature(x, z, 1e-13 * std::max(1.0, s.value));
                rec.close("E_series_vs_quadrature", args({{"x", x}, {"z", z}}), q.value, s.value, 1e-8);
            });
    rec.absolute("E_zero", "x=2 z=0", 0.0, E_series(2.0, 0.0).value, 0.0);
    rec.absolute("E_quadrature_zero", "x=2 z=0", 0.0, E_quadrature(2.0, 0.0).value, 0.0);
    rec.close("E_1_1", "x=1 z=1", E_quadrature(1.0, 1.0, 1e-14).value, E_series(1.0, 1.0).value, 1e-10);

    rec.guarded("nu", [&] {
        const double v = nu(1.0);
        rec.absolute("nu_1", "x=1", 2.2665, v, 5e-4);
        rec.absolute("E_quadrature_1_20", "x=1 z=20", v, E_quadrature(1.0, 20.0, 1e-14).value, 1e-12);
        rec.absolute("E_1_29_limit", "x=1 z=29", v, E_series(1.0, 29.0).value, 1e-10);
        rec.absolute("rho_limit_30", "n=30", v, rho(1.0, 2.0 / (29.0 * 29.0), 30.0), 1e-10);
        rec.close("mu_nu", "x=1 beta=0 alpha=0", v, mu_function(1.0, 0.0, 0.0), 1e-8);
    });
    rec.guarded("nu_bounds", [&] {
        rec.at_most("nu_lower_2", "x=2", std::expm1(2.0) / 2.0, nu(2.0));
        rec.at_most("nu_upper_2", "x=2", nu(2.0), 2.0 * (std::exp(2.0) + (1 - m) / m));
        rec.at_most("nu_lower_half", "x=0.5", std::expm1(0.5), nu(0.5));
        rec.at_most("nu_upper_half", "x=0.5", nu(0.5), std::exp(0.5) + (1 - m) / m);
        rec.close("mu_tail", "x=1.5 beta=0 alpha=2", nu(1.5) - E_series(1.5, 2.0).value, mu_function(1.5, 0.0, 2.0),
                  1e-8);
    });
    rec.guarded("mu_cutoffs", [&] {
        // the same integrand cut off ten units further
        const double base = mu_function(1.0, 1.0, 0.0, 1e-12);
        const double far  = integrate_adaptive(
                               [](double t) { return t * std::exp(-log_gamma(t + 1.0)); }, 0.0, 50.0, 1e-13)
                               .value;
        rec.absolute("mu_1_1_0", "x=1 beta=1 alpha=0", far, base, 1e-10);
    });

    rec.absolute("rho_boundary", "x=2 y=3 z=1", 0.0, rho(2.0, 3.0, 1.0), 0.0);
    rec.close("rho_1_1_2", "x=1 y=1 z=2", E_quadrature(0.5, 1.0, 1e-14).value, rho(1.0, 1.0, 2.0), 1e-12);

    const double h = 1e-6;
    for (double x : {0.5, 1.0, 2.0})
        for (double y : {0.5, 1.0, 2.0})
            for (double z : {1.5, 2.5, 4.0})
                rec.guarded("rho_identities", [&] {
                    const std::string in = args({{"x", x}, {"y", y}, {"z", z}});
                    const double r  = rho(x, y, z, 1e-13);
                    const double rx = (rho(x + h, y, z, 1e-13) - rho(x - h, y, z, 1e-13)) / (2 * h);
                    const double ry = (rho(x, y + h, z, 1e-13) - rho(x, y - h, z, 1e-13)) / (2 * h);
                    const double rz = (rho(x, y, z + h, 1e-13) - rho(x, y, z - h, 1e-13)) / (2 * h);
                    rec.close("euler_identity", in, z * r, x * rx + y * ry, 1e-5);
                    rec.close("y_derivative_series", in, rho_y_derivative_series(x, y, z), y * ry, 1e-5);
                    rec.close("z_derivative_identity", in, rho_z_derivative_rhs(x, y, z), rz, 1e-5);
                });

    // upper bounds from Gamma(t+1) >= e^{-gamma t}
    for (double z : {0.5, 1.0, 2.0, 5.0})
        rec.at_most("E_bound_unit", args({{"z", z}}), E_series(std::exp(-eg), z).value, z);
    for (double x : {0.3, 0.9, 1.5, 4.0})
        for (double z : {0.5, 2.0, 5.0})
            rec.at_most("E_bound_general", args({{"x", x}, {"z", z}}), E_series(x, z).value, E_upper_bound(x, z));
    for (double z : {2.0, 3.0, 5.0, 10.0})
    {
        rec.at_most("rho_bound_unit", args({{"z", z}}), rho(std::exp(eg), 2.0 / ((z - 1) * (z - 1)), z),
                    (z - 1) * std::exp(eg * z));
        for (double x : {0.5, 2.0, std::exp(1.0), 5.0})
            rec.at_most("rho_bound_general", args({{"x", x}, {"z", z}}), rho(x, 2.0 / ((z - 1) * (z - 1)), z),
                        (std::pow(x, z) - x * std::exp(eg * (z - 1))) / (std::log(x) - eg));
    }

    for (double x : {0.3, 0.9, 1.0, 1.5, 4.0})
        for (double z : {2.2, 3.7, 6.5})
        {
            const std::string in = args({{"x", x}, {"z", z}});
            const double e       = E_series(x, z).value;
            const auto lo_n      = static_cast<std::size_t>(std::floor(z));
            const auto hi_n      = static_cast<std::size_t>(std::ceil(z)) - 1;
            double lower, upper;
            if (x >= 1.0)
            {
                lower = (exp_partial_sum(lo_n, x) - 1.0) / x;
                upper = x * (exp_partial_sum(hi_n, x) + (1 - m) / m);
            }
            else
            {
                lower = exp_partial_sum(lo_n, x) - 1.0;
                upper = exp_partial_sum(hi_n, x) + (1 - m) / m;
            }
            rec.at_most("sandwich_lower", in, lower, e);
            rec.at_most("sandwich_upper", in, e, upper);
        }

    {
        const double y = 2.0;
        const double v = E_series(y, 39.0).value;
        rec.at_most("limit_bound_b_lower", "y=2 n=40", std::expm1(y) / y, v);
        rec.at_most("limit_bound_b_upper", "y=2 n=40", v, y * (std::exp(y) + (1 - m) / m));
        const double yd = 0.5;
        const double vd = E_series(yd, 39.0).value;
        rec.at_most("limit_bound_d_lower", "y=0.5 n=40", std::expm1(yd), vd);
        rec.at_most("limit_bound_d_upper", "y=0.5 n=40", vd, std::exp(yd) + (1 - m) / m);
    }
    for (unsigned n = 3; n <= 12; ++n)
        for (double x : {0.5, 1.0, 2.0, 5.0})
            for (double y : {0.01, 0.2, 1.0, 3.0})
            {
                const std::string in = args({{"x", x}, {"y", y}, {"n", double(n)}});
                const double nm = n - 1.0;
                const double r  = rho(x, y, n);
                const double rt = rtilde_closed(x, y, n);
                const double xn = std::pow(x, n);
                if (y * nm * nm >= 2 * x)
                {
                    const double ratio = y * nm * nm / (2 * x);
                    rec.at_most("rho_rtilde_a_lower", in, (rt - xn) / ratio, r);
                    rec.at_most("rho_rtilde_a_upper", in, r, ratio * (rt + (1 - m) / m * xn));
                    if (x >= 1.0)
                        rec.at_most("asymptotic_bound_a", in, x * r, n * n * y * rt);
                }
                else
                {
                    rec.at_most("rho_rtilde_c_lower", in, rt - xn, r);
                    rec.at_most("rho_rtilde_c_upper", in, r, rt + (1 - m) / m * xn);
                }
            }
    for (double n : {10.0, 20.0, 40.0})
    {
        for (double y : {1.0, 2.0})
        {
            const double log_rho = rho_scaled((n - 1) * (n - 1), 2 * y, n).log_magnitude;
            rec.at_most("envelope_b", args({{"n", n}, {"y", y}}), std::exp(log_rho - 2 * n * std::log(n)), 10.0);
        }
        const double log_rho = rho_scaled(1.0, 2 * n / ((n - 1) * (n - 1)), n).log_magnitude;
        rec.at_most("envelope_c", args({{"n", n}}), std::exp(log_rho - std::log(n) - n), 10.0);
    }

    {
        double previous_nu = std::numeric_limits<double>::infinity();
        for (double s : {0.1, 0.5, 1.0, 2.0})
        {
            const double x = std::exp(-s);
            double previous_E = 0.0;
            bool monotone     = true;
            for (double z = 0.25; z <= 8.0; z += 0.25)
            {
                const double e = E_series(x, z).value;
                monotone       = monotone && e >= previous_E;
                previous_E     = e;
            }
            rec.holds("laplace_E_monotone", args({{"s", s}}), monotone, format_real(previous_E));
            const double v = nu(x);
            rec.holds("laplace_nu_decreasing", args({{"s", s}}), v < previous_nu, format_real(v));
            previous_nu = v;
        }
    }
    return report;
}

//==============================================================================
// Dispatch
//==============================================================================

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"kernel", "recip", "discrete", "analogue1", "analogue2"};
    return names;
}

/// Runs one suite by name, or every suite for "all".
inline std::vector<VerificationReport> run_suites(const std::string& name, double tol_scale = 1.0)
{
    detail::require(tol_scale > 0.0, "run_suites: tol_scale must be > 0");
    std::vector<VerificationReport> out;
    const bool all = name == "all";
    if (!all && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        throw std::invalid_argument("unknown suite: " + name);
    if (all || name == "kernel")
        out.push_back(verify_kernel(tol_scale));
    if (all || name == "recip")
        out.push_back(verify_recip(tol_scale));
    if (all || name == "discrete")
        out.push_back(verify_discrete(tol_scale));
    if (all || name == "analogue1")
        out.push_back(verify_analogue1(tol_scale));
    if (all || name == "analogue2")
        out.push_back(verify_analogue2(tol_scale));
    return out;
}

} // namespace pochhammer

#endif // POCHHAMMER_VERIFICATION_HPP
