#include "puls/krylov.hpp"

#include <cmath>
#include <limits>

namespace puls {

// Paige & Saunders recurrence; Lanczos runs on the preconditioned operator in
// the M^{-1} inner product. phibar tracks the preconditioned residual norm,
// which can undershoot the true L2 residual by up to the preconditioner's
// condition number, so the true residual is re-measured before accepting.
MinresResult minres(const FieldOp& apply, const RealField& rhs, const FieldOp& precondition,
                    double rel_tol, int max_iters) {
  const auto dot = [](const RealField& f, const RealField& g) {
    return (f.values * g.values).sum();
  };

  MinresResult out;
  out.x = RealField{rhs.grid, Array::Zero(rhs.grid->size())};

  const double bnorm = std::sqrt(dot(rhs, rhs));
  if (bnorm == 0.0) {
    out.converged = true;
    return out;
  }

  RealField r1 = rhs;
  RealField y = precondition(r1);
  double beta1 = dot(r1, y);
  if (!(beta1 > 0.0)) return out;  // preconditioner not SPD or rhs degenerate
  beta1 = std::sqrt(beta1);

  double oldb = 0.0, beta = beta1, dbar = 0.0, epsln = 0.0;
  double phibar = beta1, cs = -1.0, sn = 0.0;
  RealField r2 = r1;
  RealField w = RealField{rhs.grid, Array::Zero(rhs.grid->size())};
  RealField w2 = w;
  double check_level = rel_tol;

  for (int itn = 1; itn <= max_iters; ++itn) {
    const double s = 1.0 / beta;
    RealField v{rhs.grid, y.values * s};
    y = apply(v);
    if (itn >= 2) y.values -= (beta / oldb) * r1.values;
    const double alfa = dot(v, y);
    y.values -= (alfa / beta) * r2.values;
    r1 = r2;
    r2 = y;
    y = precondition(r2);
    oldb = beta;
    beta = dot(r2, y);
    if (!(beta >= 0.0)) break;  // indefinite preconditioner; bail out
    beta = std::sqrt(beta);

    const double oldeps = epsln;
    const double delta = cs * dbar + sn * alfa;
    const double gbar = sn * dbar - cs * alfa;
    epsln = sn * beta;
    dbar = -cs * beta;
    double gamma = std::sqrt(gbar * gbar + beta * beta);
    gamma = std::max(gamma, std::numeric_limits<double>::epsilon());
    cs = gbar / gamma;
    sn = beta / gamma;
    const double phi = cs * phibar;
    phibar = sn * phibar;

    RealField w1 = w2;
    w2 = w;
    w = RealField{rhs.grid, (v.values - oldeps * w1.values - delta * w2.values) / gamma};
    out.x.values += phi * w.values;
    out.iterations = itn;

    if (phibar <= check_level * beta1 || itn == max_iters) {
      RealField res = apply(out.x);
      res.values = rhs.values - res.values;
      out.rel_residual = std::sqrt(dot(res, res)) / bnorm;
      if (out.rel_residual <= rel_tol) {
        out.converged = true;
        return out;
      }
      check_level *= 0.1;  // preconditioned estimate was optimistic; keep going
    }
  }

  RealField res = apply(out.x);
  res.values = rhs.values - res.values;
  out.rel_residual = std::sqrt(dot(res, res)) / bnorm;
  out.converged = out.rel_residual <= rel_tol;
  return out;
}

}  // namespace puls
