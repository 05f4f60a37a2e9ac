///
/// \file discrete.hpp
///
/// The discrete Pochhammer symbol r(x,y,n) = x(x+y)...(x+(n-1)y), the
/// Stirling triangles expanding it, a brute-force lattice oracle for the
/// coefficients, simplex volumes and moments, and small discrete/continuous
/// sum pairs (power sums, geometric sums, harmonic sums).
///
#ifndef POCHHAMMER_DISCRETE_HPP
#define POCHHAMMER_DISCRETE_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "numeric_core.hpp"

namespace pochhammer
{

/// prod_{l=0}^{n-1} (x + l y); exact for ExactRational, plain product for reals.
template <typename T>
T pochhammer_discrete(const T& x, const T& y, unsigned n)
{
    T result = T(1);
    for (unsigned l = 0; l < n; ++l)
        result *= x + T(l) * y;
    return result;
}

//==============================================================================
// Stirling triangles
//==============================================================================

enum class StirlingKind
{
    first_unsigned,
    first_signed,
    second
};

inline const char* to_string(StirlingKind kind)
{
    switch (kind)
    {
    case StirlingKind::first_unsigned: return "first_unsigned";
    case StirlingKind::first_signed: return "first_signed";
    case StirlingKind::second: return "second";
    }
    return "?";
}

/// Lower triangular table rows[n][k], 0 <= k <= n <= max_n.
struct StirlingTriangle
{
    StirlingKind kind = StirlingKind::first_unsigned;
    std::size_t max_n = 0;
    std::vector<std::vector<ExactRational>> rows;

    const ExactRational& operator()(std::size_t n, std::size_t k) const { return rows.at(n).at(k); }

    /// Zero above the diagonal.
    ExactRational at(std::size_t n, std::size_t k) const
    {
        return k <= n ? rows.at(n).at(k) : ExactRational(0);
    }
};

inline constexpr std::size_t stirling_max_n = 64;

inline StirlingTriangle stirling_triangle(StirlingKind kind, std::size_t max_n)
{
    detail::require_budget(max_n <= stirling_max_n, "stirling_triangle: max_n must be <= 64");
    StirlingTriangle t;
    t.kind  = kind;
    t.max_n = max_n;
    t.rows.resize(max_n + 1);
    t.rows[0] = {ExactRational(1)};
    for (std::size_t n = 0; n < max_n; ++n)
    {
        auto& next = t.rows[n + 1];
        next.assign(n + 2, ExactRational(0));
        const auto& cur = t.rows[n];
        for (std::size_t k = 1; k <= n + 1; ++k)
        {
            const ExactRational left = cur.size() > k - 1 ? cur[k - 1] : ExactRational(0);
            const ExactRational same = k <= n ? cur[k] : ExactRational(0);
            switch (kind)
            {
            case StirlingKind::first_unsigned:
                next[k] = left + ExactRational(n) * same;
                break;
            case StirlingKind::first_signed:
                next[k] = left - ExactRational(n) * same;
                break;
            case StirlingKind::second:
                next[k] = left + ExactRational(k) * same;
                break;
            }
        }
    }
    return t;
}

inline constexpr unsigned lattice_oracle_max_n = 9;

/// r_{n,k} as the sum over 0 <= s_1 < ... < s_{n-k} <= n-1 of s_1 ... s_{n-k}.
inline ExactRational stirling_lattice_oracle(unsigned n, unsigned k)
{
    detail::require_budget(n <= lattice_oracle_max_n, "stirling_lattice_oracle: n must be <= 9");
    detail::require(k <= n, "stirling_lattice_oracle: need k <= n");
    const unsigned len = n - k;
    BigInt total = 0;
    // every subset of {0, ..., n-1} with exactly len elements
    for (unsigned mask = 0; mask < (1u << n); ++mask)
    {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != len)
            continue;
        BigInt prod = 1;
        for (unsigned s = 0; s < n; ++s)
            if (mask & (1u << s))
                prod *= s;
        total += prod;
    }
    return ExactRational(total);
}

//==============================================================================
// Simplex volumes and moments
//==============================================================================

/// vol{0 <= s_1 <= ... <= s_k <= x} = x^k / k!
inline double simplex_volume(double x, unsigned k)
{
    detail::require(x >= 0.0, "simplex_volume: x must be >= 0");
    double v = 1.0;
    for (unsigned j = 1; j <= k; ++j)
        v *= x / j;
    return v;
}

inline ExactRational simplex_volume(const ExactRational& x, unsigned k)
{
    detail::require(x >= 0, "simplex_volume: x must be >= 0");
    return pow_exact(x, k) / factorial_exact(k);
}

/// a_{x,k} = int over the simplex of s_1 ... s_k = x^{2k} / (2^k k!)
inline double simplex_moment(double x, unsigned k)
{
    detail::require(x >= 0.0, "simplex_moment: x must be >= 0");
    const double half_sq = 0.5 * x * x;
    double v = 1.0;
    for (unsigned j = 1; j <= k; ++j)
        v *= half_sq / j;
    return v;
}

inline ExactRational simplex_moment(const ExactRational& x, unsigned k)
{
    detail::require(x >= 0, "simplex_moment: x must be >= 0");
    return pow_exact(x, 2 * k) / (pow_exact(ExactRational(2), k) * factorial_exact(k));
}

/// The same moment written as (2k-1)!! x^{2k} / (2k)!.
inline ExactRational simplex_moment_double_factorial(const ExactRational& x, unsigned k)
{
    BigInt dfact = 1;
    for (unsigned j = 1; j + 1 <= 2 * k; j += 2)
        dfact *= j;
    return ExactRational(dfact) * pow_exact(x, 2 * k) / factorial_exact(2 * k);
}

//==============================================================================
// Discrete sums and their continuous analogues
//==============================================================================

struct AnaloguePair
{
    double discrete   = 0.0;
    double continuous = 0.0;
    double ratio() const { return discrete / continuous; }
};

/// S_k(n) = 1^k + 2^k + ... + n^k, exactly.
inline ExactRational power_sum(unsigned n, unsigned k)
{
    BigInt total = 0;
    for (unsigned l = 1; l <= n; ++l)
    {
        BigInt p = 1;
        for (unsigned j = 0; j < k; ++j)
            p *= l;
        total += p;
    }
    return ExactRational(total);
}

/// S_k(n) against S(n,k) = n^{k+1} / (k+1).
inline AnaloguePair power_sum_pair(unsigned n, unsigned k)
{
    detail::require(k >= 1, "power_sum_pair: k must be >= 1");
    AnaloguePair p;
    long double acc = 0.0L;
    for (unsigned l = 1; l <= n; ++l)
        acc += std::pow(static_cast<long double>(l), static_cast<long double>(k));
    p.discrete   = static_cast<double>(acc);
    p.continuous = std::pow(static_cast<double>(n), k + 1.0) / (k + 1.0);
    return p;
}

/// G(x,y) = int_0^y x^t dt = (x^y - 1) / ln x
inline double geometric_integral(double x, double y)
{
    detail::require(x > 0.0, "geometric_integral: x must be > 0");
    detail::require(x != 1.0, "geometric_integral: x = 1 has the limit value y");
    return std::expm1(y * std::log(x)) / std::log(x);
}

/// S_y(x) = (x^{y+1} - 1) / (x - 1), which is sum_{k=0}^{y} x^k for integer
/// y, against G(x,y).
inline AnaloguePair geometric_sum_pair(double x, double y)
{
    detail::require(x > 0.0 && x != 1.0, "geometric_sum_pair: need x > 0, x != 1");
    AnaloguePair p;
    p.discrete   = std::expm1((y + 1.0) * std::log(x)) / (x - 1.0);
    p.continuous = geometric_integral(x, y);
    return p;
}

/// H_n = sum_{k<=n} 1/k against ln n.
inline AnaloguePair harmonic_pair(unsigned n)
{
    detail::require(n >= 1, "harmonic_pair: n must be >= 1");
    AnaloguePair p;
    double acc = 0.0;
    for (unsigned k = n; k >= 1; --k)
        acc += 1.0 / k;
    p.discrete   = acc;
    p.continuous = std::log(static_cast<double>(n));
    return p;
}

} // namespace pochhammer

#endif // POCHHAMMER_DISCRETE_HPP
