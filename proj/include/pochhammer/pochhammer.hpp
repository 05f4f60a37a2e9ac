// Umbrella header.
#ifndef POCHHAMMER_POCHHAMMER_HPP
#define POCHHAMMER_POCHHAMMER_HPP

#include "numeric_core.hpp"
#include "gamma_kernel.hpp"
#include "quadrature.hpp"
#include "recip_gamma.hpp"
#include "discrete.hpp"
#include "analogue_one.hpp"
#include "analogue_two.hpp"
#include "verification.hpp"

#endif // POCHHAMMER_POCHHAMMER_HPP
