///
/// \file numeric_core.hpp
///
/// Exact rationals, log-scaled reals, series results and the zeta values
/// shared by every other part of the library.
///
#ifndef POCHHAMMER_NUMERIC_CORE_HPP
#define POCHHAMMER_NUMERIC_CORE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace pochhammer
{

//==============================================================================
// Error types
//==============================================================================

/// Raised when an iterative evaluation cannot reach its requested accuracy.
class NumericalFailure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace detail
{
inline void require(bool condition, const char* message)
{
    if (!condition)
        throw std::domain_error(message);
}

inline void require_budget(bool condition, const char* message)
{
    if (!condition)
        throw std::out_of_range(message);
}
} // namespace detail

//==============================================================================
// Exact rationals
//==============================================================================

/// Arbitrary precision rational; always stored in lowest terms with a
/// positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;
using BigInt        = boost::multiprecision::cpp_int;

/// Integers print as "p", everything else as "p/q".
inline std::string to_string(const ExactRational& q)
{
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

inline double to_double(const ExactRational& q)
{
    return q.convert_to<double>();
}

inline ExactRational factorial_exact(unsigned n)
{
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return ExactRational(f);
}

inline ExactRational pow_exact(const ExactRational& base, unsigned exponent)
{
    ExactRational result = 1;
    ExactRational b      = base;
    while (exponent != 0)
    {
        if (exponent & 1u)
            result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

//==============================================================================
// LogScaled
//==============================================================================

/// A real number held as sign and natural log of its magnitude. Used for
/// quantities such as (n-1)^{2n} that leave the binary64 range.
struct LogScaled
{
    int sign             = 0;
    double log_magnitude = -std::numeric_limits<double>::infinity();

    static LogScaled zero() { return {}; }

    static LogScaled from_log(int sign, double log_magnitude)
    {
        if (sign == 0)
            return zero();
        return {sign > 0 ? 1 : -1, log_magnitude};
    }

    static LogScaled from_double(double v)
    {
        if (v == 0.0)
            return zero();
        return {v > 0 ? 1 : -1, std::log(std::fabs(v))};
    }

    /// Overflows to +-inf and underflows to 0 like any double would.
    double to_double() const
    {
        if (sign == 0)
            return 0.0;
        return sign * std::exp(log_magnitude);
    }

    bool fits_double() const
    {
        return sign == 0 || (log_magnitude < 709.78 && log_magnitude > -708.0);
    }

    bool is_zero() const { return sign == 0; }

    LogScaled operator-() const { return {-sign, log_magnitude}; }

    friend LogScaled operator*(const LogScaled& a, const LogScaled& b)
    {
        if (a.sign == 0 || b.sign == 0)
            return zero();
        return {a.sign * b.sign, a.log_magnitude + b.log_magnitude};
    }

    friend LogScaled operator/(const LogScaled& a, const LogScaled& b)
    {
        if (b.sign == 0)
            throw std::domain_error("LogScaled: division by zero");
        if (a.sign == 0)
            return zero();
        return {a.sign * b.sign, a.log_magnitude - b.log_magnitude};
    }

    // log-sum-exp with sign tracking
    friend LogScaled operator+(const LogScaled& a, const LogScaled& b)
    {
        if (a.sign == 0)
            return b;
        if (b.sign == 0)
            return a;
        const LogScaled& big   = a.log_magnitude >= b.log_magnitude ? a : b;
        const LogScaled& small = a.log_magnitude >= b.log_magnitude ? b : a;
        const double d         = small.log_magnitude - big.log_magnitude;
        if (big.sign == small.sign)
            return {big.sign, big.log_magnitude + std::log1p(std::exp(d))};
        if (d == 0.0)
            return zero();
        return {big.sign, big.log_magnitude + std::log1p(-std::exp(d))};
    }

    friend LogScaled operator-(const LogScaled& a, const LogScaled& b) { return a + (-b); }

    LogScaled& operator*=(const LogScaled& o) { return *this = *this * o; }
    LogScaled& operator+=(const LogScaled& o) { return *this = *this + o; }
};

/// Natural log of |base|^exponent with the matching sign, for real exponent.
inline LogScaled pow_scaled(double base, double exponent)
{
    if (base == 0.0)
        return exponent == 0.0 ? LogScaled::from_double(1.0) : LogScaled::zero();
    if (base < 0.0)
    {
        const double rounded = std::round(exponent);
        detail::require(rounded == exponent, "pow_scaled: negative base needs an integer exponent");
        const int sign = (static_cast<long long>(rounded) % 2 == 0) ? 1 : -1;
        return LogScaled::from_log(sign, exponent * std::log(-base));
    }
    return LogScaled::from_log(1, exponent * std::log(base));
}

//==============================================================================
// Series results
//==============================================================================

/// Result of a truncated series: value, number of terms summed, an
/// estimate of the neglected tail and whether the requested tolerance was met.
template <typename T = double>
struct SeriesEval
{
    T value{};
    std::size_t terms_used = 0;
    double tail_estimate   = 0.0;
    bool converged         = false;
};

//==============================================================================
// Constants and zeta values
//==============================================================================

/// Euler-Mascheroni constant.
inline constexpr double euler_gamma() { return 0.57721566490153286060651209008240243; }

namespace detail
{
// 120 significant digits
inline constexpr const char* euler_gamma_digits =
    "0.5772156649015328606065120900824024310421593359399235988057672348848677267776646709369470632917467495146314472498070824809605";

// Direct sum of n^{-k} for n < N plus the Euler-Maclaurin tail with the
// B2, B4 and B6 corrections.
inline double zeta_euler_maclaurin(int k)
{
    constexpr int N = 40;
    const double kd = k;
    double head     = 0.0;
    for (int n = N - 1; n >= 2; --n)
        head += std::pow(static_cast<double>(n), -kd);

    const double Nd  = N;
    const double p   = std::pow(Nd, -kd);
    double tail      = Nd * p / (kd - 1.0) + 0.5 * p;
    const double b2  = kd * p / Nd / 12.0;
    const double b4  = kd * (kd + 1) * (kd + 2) * p / (Nd * Nd * Nd) / 720.0;
    const double b6  = kd * (kd + 1) * (kd + 2) * (kd + 3) * (kd + 4) * p / std::pow(Nd, 5) / 30240.0;
    tail            += b2 - b4 + b6;
    return 1.0 + (head + tail);
}

inline constexpr int zeta_cache_size = 256;

inline const std::array<double, zeta_cache_size>& zeta_cache()
{
    static const std::array<double, zeta_cache_size> table = [] {
        std::array<double, zeta_cache_size> t{};
        t[0] = t[1] = std::numeric_limits<double>::quiet_NaN();
        for (int k = 2; k < zeta_cache_size; ++k)
            t[k] = zeta_euler_maclaurin(k);
        return t;
    }();
    return table;
}
} // namespace detail

/// Riemann zeta at integer k >= 2.
inline double zeta(int k)
{
    detail::require(k >= 2, "zeta: k must be >= 2");
    if (k < detail::zeta_cache_size)
        return detail::zeta_cache()[static_cast<std::size_t>(k)];
    return 1.0 + std::exp2(-static_cast<double>(k));
}

/// zeta with the k = 1 slot replaced by Euler's constant.
inline double zeta_hat(int k)
{
    detail::require(k >= 1, "zeta_hat: k must be >= 1");
    return k == 1 ? euler_gamma() : zeta(k);
}

//==============================================================================
// High precision support for the reciprocal gamma recursion
//==============================================================================

using HighPrecision =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<120>,
                                  boost::multiprecision::et_off>;

inline HighPrecision euler_gamma_hp()
{
    static const HighPrecision g(detail::euler_gamma_digits);
    return g;
}

/// zeta(2..k_max) at HighPrecision via Borwein's alternating-series
/// acceleration; index 0 and 1 are unused.
inline std::vector<HighPrecision> zeta_table_hp(int k_max)
{
    using HP = HighPrecision;
    detail::require(k_max >= 2, "zeta_table_hp: k_max must be >= 2");

    // error ~ 3 / (3 + sqrt 8)^n, 170 terms is well past 120 digits
    constexpr int n = 170;
    std::vector<HP> d(n + 1);
    HP term = HP(1) / n; // i = 0 term of n * sum (n+i-1)! 4^i / ((n-i)! (2i)!)
    HP acc  = 0;
    for (int i = 0; i <= n; ++i)
    {
        if (i > 0)
        {
            // ratio of consecutive terms
            term *= HP(n + i - 1) * HP(n - i + 1) * 4;
            term /= HP(2 * i - 1) * HP(2 * i);
        }
        acc  += term;
        d[i]  = n * acc;
    }

    std::vector<HP> out(static_cast<std::size_t>(k_max) + 1);
    std::vector<HP> inv_pow(n); // (j+1)^{-s}
    for (int j = 0; j < n; ++j)
        inv_pow[j] = HP(1) / HP(j + 1);
    for (int s = 2; s <= k_max; ++s)
    {
        for (int j = 0; j < n; ++j)
            inv_pow[j] /= (j + 1);
        HP sum = 0;
        for (int j = 0; j < n; ++j)
        {
            HP t = (d[j] - d[n]) * inv_pow[j];
            sum += (j % 2 == 0) ? t : HP(-t);
        }
        const HP scale = HP(1) - boost::multiprecision::ldexp(HP(1), 1 - s);
        out[s]         = -sum / (d[n] * scale);
    }
    return out;
}

} // namespace pochhammer

#endif // POCHHAMMER_NUMERIC_CORE_HPP
