#pragma once

#include <functional>

#include "puls/grid.hpp"

namespace puls {

using FieldOp = std::function<RealField(const RealField&)>;

struct MinresResult {
  RealField x;
  int iterations = 0;
  double rel_residual = 0.0;  // true ||Ax - b|| / ||b||
  bool converged = false;
};

// Preconditioned MINRES for symmetric (possibly indefinite) A with an SPD
// preconditioner. Convergence is declared on the true relative residual, not
// the preconditioned estimate. Returns x = 0 immediately when b = 0.
MinresResult minres(const FieldOp& apply, const RealField& rhs, const FieldOp& precondition,
                    double rel_tol, int max_iters);

}  // namespace puls
