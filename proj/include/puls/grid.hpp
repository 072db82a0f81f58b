#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>

namespace puls {

using Array = Eigen::ArrayXd;
using CArray = Eigen::ArrayXcd;

class Grid;
using GridPtr = std::shared_ptr<const Grid>;

// Uniform periodic tensor grid on the box [-L, L)^d, d = 2 or 3, with n points
// per axis. Values are stored flat in row-major axis order (axis 0 slowest).
//
// Transform convention: the forward transform divides by n^d, so the zero mode
// of a constant field c equals c, and differential operators are plain
// wavenumber multipliers with k in (pi/L) * (0, 1, ..., n/2-1, -n/2, ..., -1)
// per axis.
class Grid {
public:
  int dim() const { return d_; }
  int points_per_axis() const { return n_; }
  Eigen::Index size() const { return size_; }  // n^d
  double half_period() const { return L_; }
  double spacing() const { return h_; }        // 2L/n
  double cell_volume() const { return cell_volume_; }  // h^d, the quadrature weight

  const Array& axis_coords() const { return x_axis_; }
  const Array& axis_wavenumbers() const { return k_axis_; }
  const Array& ksq() const { return ksq_; }  // |k|^2 per flat spectral index

  // Coordinate of a flat index along one axis.
  double coord(Eigen::Index flat, int axis) const {
    return x_axis_[(flat / stride_[axis]) % n_];
  }

  bool same_as(const Grid& other) const {
    return d_ == other.d_ && n_ == other.n_ && L_ == other.L_;
  }

private:
  friend GridPtr make_grid(int d, int n, double L);
  Grid(int d, int n, double L);

  int d_, n_;
  double L_, h_, cell_volume_;
  Eigen::Index size_;
  Eigen::Index stride_[3];
  Array x_axis_, k_axis_, ksq_;
};

// Samples of a real function on a Grid; the universal value carrier.
struct RealField {
  GridPtr grid;
  Array values;
};

// Fourier coefficients of a RealField under the 1/n^d forward convention.
struct SpectralField {
  GridPtr grid;
  CArray coeffs;
};

// Rejects d outside {2,3}, odd or too-small n, non-positive L.
GridPtr make_grid(int d, int n, double L);

RealField make_field(GridPtr grid);                 // zero-initialized
RealField make_field(GridPtr grid, Array values);

void require_same_grid(const RealField& f, const RealField& g);

SpectralField to_spectral(const RealField& f);
RealField from_spectral(const SpectralField& fh);

// Inverse transform of mult(k) * fhat(k); mult is indexed like Grid::ksq().
RealField apply_spectral_multiplier(const RealField& f, const Array& mult);

RealField laplacian(const RealField& f);

// Multiplies fhat by sqrt(1 + |k|^4), so l2_norm(sobolev_scale(f)) == h2_norm(f).
RealField sobolev_scale(const RealField& f);

double sup_norm(const RealField& f);
double l2_norm(const RealField& f);                 // quadrature weight h^d
double l2_inner(const RealField& f, const RealField& g);

// sqrt(||f||_L2^2 + ||lap f||_L2^2), evaluated as the spectral sum
// (2L)^d * sum_k (1 + |k|^4) |fhat_k|^2; agrees with the quadrature route by
// Parseval.
double h2_norm(const RealField& f);

// max |fhat| over the outermost two wavenumber bands relative to max |fhat|;
// used to assert that grids resolve the fields they carry.
double spectral_tail_ratio(const RealField& f);

// Flat indices of the outermost `layers` grid layers in every axis.
std::vector<Eigen::Index> boundary_shell(const Grid& grid, int layers = 2);

}  // namespace puls
