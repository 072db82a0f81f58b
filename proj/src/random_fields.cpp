#include "puls/random_fields.hpp"

#include <cmath>

namespace puls {

namespace {
double uniform01(std::mt19937_64& rng) {
  // 53-bit mantissa in (0, 1]
  return ((rng() >> 11) + 1.0) * 0x1.0p-53;
}
}  // namespace

double standard_normal(std::mt19937_64& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

RealField random_smooth_field(const GridPtr& grid, std::mt19937_64& rng) {
  CArray coeffs(grid->size());
  const Array& k2 = grid->ksq();
  for (Eigen::Index i = 0; i < grid->size(); ++i) {
    const double damp = std::exp(-k2[i] / 4.0);
    coeffs[i] = std::complex<double>(standard_normal(rng), standard_normal(rng)) * damp;
  }
  return from_spectral(SpectralField{grid, std::move(coeffs)});
}

RealField random_ball_field(const GridPtr& grid, double rho, std::mt19937_64& rng) {
  RealField f = random_smooth_field(grid, rng);
  const double target = rho * uniform01(rng);
  const double nrm = h2_norm(f);
  f.values *= target / nrm;
  return f;
}

}  // namespace puls
