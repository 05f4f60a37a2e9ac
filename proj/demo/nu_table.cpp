// Prints nu(x), its bracketing bounds and the convergence of E(x,z) to it.

#include <pochhammer/pochhammer.hpp>

#include <cstdio>

int main()
{
    using namespace pochhammer;
    const double m = gamma_min_value();

    std::printf("%6s  %20s  %20s  %20s\n", "x", "lower", "nu(x)", "upper");
    for (double x : {0.25, 0.5, 0.75, 1.0, 2.0, 4.0, 8.0})
    {
        const double v = nu(x);
        double lo, hi;
        if (x >= 1.0)
        {
            lo = std::expm1(x) / x;
            hi = x * (std::exp(x) + (1 - m) / m);
        }
        else
        {
            lo = std::expm1(x);
            hi = std::exp(x) + (1 - m) / m;
        }
        std::printf("%6.2f  %20.15f  %20.15f  %20.15f\n", x, lo, v, hi);
    }

    std::printf("\nE(1,z) -> nu(1) = %.15f\n", nu(1.0));
    for (double z : {1.0, 2.0, 5.0, 10.0, 20.0, 29.0})
        std::printf("%6.1f  %20.15f\n", z, E_series(1.0, z).value);
}
