#pragma once

#include <utility>
#include <vector>

#include "puls/problem.hpp"

namespace puls {

struct NewtonSettings {
  double tol = 1e-10;          // absolute target for ||F||_L2
  int max_iters = 50;
  double krylov_tol = 1e-12;   // relative residual of each Jacobian solve
  int krylov_max_iters = 500;
  int max_halvings = 8;        // damping line search on ||F||_L2
};

struct BasePulse {
  RealField w0;
  double residual_l2 = 0.0;
  double decay_C = 0.0;        // w0 <= C e^{-alpha |x|} fit (nontrivial pulses only)
  double decay_alpha = 0.0;
  int newton_iterations = 0;
  bool trivial = false;        // converged to ||w||_H2 < 1e-8
  std::vector<double> residual_history;
};

// Newton iteration on F(w) = lap w + a w^2(1-w) - sigma0 w, each step solving
// the symmetric Jacobian system by MINRES preconditioned with the Fourier
// multiplier (-lap + delta)^{-1}. Damped by halving when a full step does not
// reduce ||F||.
BasePulse solve_base(const CoefficientFields& coeffs, const RealField& guess,
                     const NewtonSettings& cfg = {});

// Least-squares fit of log(shell max of w0) against radius over the annulus
// r in [L/3, 2L/3]; returns (C, alpha) with alpha > 0 enforced.
std::pair<double, double> decay_fit(const BasePulse& pulse);

}  // namespace puls
