#include "puls/base_pulse.hpp"

#include <cmath>

#include "puls/errors.hpp"
#include "puls/krylov.hpp"

namespace puls {

BasePulse solve_base(const CoefficientFields& coeffs, const RealField& guess,
                     const NewtonSettings& cfg) {
  require_same_grid(guess, coeffs.sigma0);
  const GridPtr grid = guess.grid;

  const Array prec_mult = 1.0 / (grid->ksq() + coeffs.delta);
  const FieldOp precondition = [&](const RealField& f) {
    return apply_spectral_multiplier(f, prec_mult);
  };

  BasePulse out;
  out.w0 = guess;

  RealField F = stationary_residual(out.w0, coeffs, 0.0);
  double fnorm = l2_norm(F);
  out.residual_history.push_back(fnorm);

  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    if (fnorm <= cfg.tol) {
      out.residual_l2 = fnorm;
      out.newton_iterations = iter;
      if (h2_norm(out.w0) < 1e-8) {
        out.trivial = true;
      } else {
        std::tie(out.decay_C, out.decay_alpha) = decay_fit(out);
      }
      return out;
    }

    // J s = lap s + (a(2w - 3w^2) - sigma0) s, symmetric
    const Array jpot =
        coeffs.a * (2.0 * out.w0.values - 3.0 * out.w0.values.square()) - coeffs.sigma0.values;
    const FieldOp apply_J = [&](const RealField& s) {
      RealField ls = laplacian(s);
      ls.values += jpot * s.values;
      return ls;
    };

    RealField rhs{grid, -F.values};
    MinresResult step = minres(apply_J, rhs, precondition, cfg.krylov_tol, cfg.krylov_max_iters);
    if (!step.converged && step.rel_residual > 1e-3) throw SingularJacobian(step.rel_residual);

    double t = 1.0;
    RealField w_try{grid, out.w0.values + step.x.values};
    RealField F_try = stationary_residual(w_try, coeffs, 0.0);
    double f_try = l2_norm(F_try);
    for (int halving = 0; halving < cfg.max_halvings && f_try >= fnorm; ++halving) {
      t *= 0.5;
      w_try.values = out.w0.values + t * step.x.values;
      F_try = stationary_residual(w_try, coeffs, 0.0);
      f_try = l2_norm(F_try);
    }

    out.w0 = std::move(w_try);
    F = std::move(F_try);
    fnorm = f_try;
    out.residual_history.push_back(fnorm);
  }

  if (fnorm <= cfg.tol) {
    out.residual_l2 = fnorm;
    out.newton_iterations = cfg.max_iters;
    if (h2_norm(out.w0) < 1e-8) {
      out.trivial = true;
    } else {
      std::tie(out.decay_C, out.decay_alpha) = decay_fit(out);
    }
    return out;
  }
  throw NonConvergence(cfg.max_iters, fnorm);
}

std::pair<double, double> decay_fit(const BasePulse& pulse) {
  const Grid& g = *pulse.w0.grid;
  const double L = g.half_period();
  const double r_lo = L / 3.0, r_hi = 2.0 * L / 3.0;
  const double bin_w = g.spacing();
  const int nbins = static_cast<int>(std::ceil((r_hi - r_lo) / bin_w));

  std::vector<double> shell_max(nbins, 0.0);
  for (Eigen::Index idx = 0; idx < g.size(); ++idx) {
    double r2 = 0.0;
    for (int a = 0; a < g.dim(); ++a) {
      const double x = g.coord(idx, a);
      r2 += x * x;
    }
    const double r = std::sqrt(r2);
    if (r < r_lo || r >= r_hi) continue;
    const int b = static_cast<int>((r - r_lo) / bin_w);
    shell_max[b] = std::max(shell_max[b], pulse.w0.values[idx]);
  }

  // least squares of log(shell max) vs bin-center radius
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int npts = 0;
  for (int b = 0; b < nbins; ++b) {
    if (shell_max[b] <= 1e-13)
      throw NonDecaying("shell max underflows in the fit annulus; pulse too weak or box too large");
    const double x = r_lo + (b + 0.5) * bin_w;
    const double y = std::log(shell_max[b]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++npts;
  }
  const double slope = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / npts;
  if (slope >= 0.0) throw NonDecaying("shell maxima do not decay with radius");
  return {std::exp(intercept), -slope};
}

}  // namespace puls
