#pragma once

#include <stdexcept>
#include <string>

namespace puls {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridMismatch : Error {
  GridMismatch() : Error("fields live on different grids") {}
};

// Newton did not reach the residual tolerance within the iteration cap.
struct NonConvergence : Error {
  int iterations;
  double residual;
  NonConvergence(int it, double res)
      : Error("Newton did not converge: " + std::to_string(it) +
              " iterations, residual " + std::to_string(res)),
        iterations(it), residual(res) {}
};

// Krylov solve for the Jacobian system stagnated badly; either the guess is
// far outside the basin or the linearization is (nearly) singular.
struct SingularJacobian : Error {
  double rel_residual;
  explicit SingularJacobian(double r)
      : Error("Jacobian solve stagnated at relative residual " + std::to_string(r)),
        rel_residual(r) {}
};

struct Stagnation : Error {
  int iterations;
  double rel_residual;
  Stagnation(int it, double r)
      : Error("Krylov solve stagnated after " + std::to_string(it) +
              " iterations at relative residual " + std::to_string(r)),
        iterations(it), rel_residual(r) {}
};

struct KernelNotChecked : Error {
  KernelNotChecked() : Error("operator used before the kernel check (run smallest_eigenpairs first)") {}
};

// |lambda_min| fell below the triviality threshold: the discrete kernel is not
// trivially empty and downstream solves refuse the operator.
struct OperatorUnusable : Error {
  double lambda_min;
  explicit OperatorUnusable(double lm)
      : Error("kernel check failed: |lambda_min| = " + std::to_string(lm) + " <= 1e-6"),
        lambda_min(lm) {}
};

struct BallEscape : Error {
  int iteration;
  double norm;
  BallEscape(int it, double n)
      : Error("Picard iterate " + std::to_string(it) + " left the ball: ||v||_H2 = " +
              std::to_string(n)),
        iteration(it), norm(n) {}
};

struct NoContraction : Error {
  int iteration;
  NoContraction(int it)
      : Error("Picard step ratios exceeded 1 for 3 consecutive steps (at step " +
              std::to_string(it) + ")"),
        iteration(it) {}
};

struct DomainTooSmall : Error {
  using Error::Error;
};

struct NonDecaying : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace puls
