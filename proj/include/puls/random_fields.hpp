#pragma once

#include <cstdint>
#include <random>

#include "puls/grid.hpp"

namespace puls {

// Standard normal built on the engine's raw uniforms (Box-Muller), so streams
// do not depend on the standard library's distribution internals.
double standard_normal(std::mt19937_64& rng);

// Smooth random field: iid complex unit-normal spectral components damped by
// e^{-|k|^2/4}, inverse-transformed and projected to the real part.
RealField random_smooth_field(const GridPtr& grid, std::mt19937_64& rng);

// Element of the ball B_rho with H2 norm drawn uniformly from (0, rho].
RealField random_ball_field(const GridPtr& grid, double rho, std::mt19937_64& rng);

}  // namespace puls
