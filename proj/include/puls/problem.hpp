#pragma once

#include "puls/grid.hpp"

namespace puls {

enum class Sigma0Family { Manufactured, GaussianWell };
enum class Sigma1Family { Gaussian, Zero };

// Analytic descriptors for the coefficient functions of the stationary
// problem: sigma0 with far-field limit delta > 0, sigma1 decaying to zero,
// and the reproduction constant a > 0.
struct CoefficientSpec {
  double a = 1.0;

  Sigma0Family sigma0_family = Sigma0Family::Manufactured;
  double amplitude = 0.4;      // Manufactured: target peak A in (0,1)
  bool symmetry_bump = true;   // Manufactured: fixed asymmetric bump on the target
  double well_delta = 1.0;     // GaussianWell parameters
  double well_beta = 0.5;
  double well_width = 1.0;

  Sigma1Family sigma1_family = Sigma1Family::Gaussian;
  double sigma1_gamma = 1.0;
  double sigma1_width = 1.0;
};

struct CoefficientFields {
  GridPtr grid;
  RealField sigma0;
  RealField sigma1;
  double a = 1.0;
  double delta = 1.0;  // far-field value of sigma0, the essential-spectrum floor
};

// The canonical manufactured target: A * sum over the 3^d neighboring periodic
// images of sech(|x - 2Lm|), plus (optionally) the fixed asymmetric bump
// 0.05 * exp(-|x - x0|^2), x0 = (1, 0.5[, 0.25]). The image sum makes the
// sampled field smooth-periodic to machine precision, so the discrete
// Laplacian matches the analytic one to roundoff.
RealField manufactured_target(const CoefficientSpec& spec, const GridPtr& grid);

// sigma0 := lap(w0*)/w0* + a*w0*(1 - w0*) with the discrete spectral
// Laplacian; by construction the stationary residual of (w0*, sigma0) at
// eps = 0 vanishes to roundoff. Rejects targets with values below 1e-300.
RealField manufactured_sigma0(const RealField& w0_target, double a);

// Pointwise evaluation of the analytic descriptors, with a boundary-shell
// decay check (DomainTooSmall when the box cannot hold the requested widths).
// For the Manufactured family sigma0 is the closed-form image-sum expression,
// which agrees with manufactured_sigma0 of the sampled target to roundoff.
CoefficientFields eval_coefficients(const CoefficientSpec& spec, const GridPtr& grid);

// lap(w) + a w^2 (1 - w) - (sigma0 + eps*sigma1) w, pointwise.
RealField stationary_residual(const RealField& w, const CoefficientFields& coeffs, double eps);

}  // namespace puls
