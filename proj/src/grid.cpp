#include "puls/grid.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <stdexcept>

#include "puls/errors.hpp"

namespace puls {

Grid::Grid(int d, int n, double L) : d_(d), n_(n), L_(L) {
  h_ = 2.0 * L / n;
  cell_volume_ = std::pow(h_, d);
  size_ = 1;
  for (int a = 0; a < d; ++a) size_ *= n;
  // row-major: axis 0 slowest
  stride_[d - 1] = 1;
  for (int a = d - 2; a >= 0; --a) stride_[a] = stride_[a + 1] * n;

  x_axis_.resize(n);
  for (int i = 0; i < n; ++i) x_axis_[i] = -L + i * h_;

  k_axis_.resize(n);
  const double k0 = M_PI / L;
  for (int i = 0; i < n; ++i) {
    const int m = (i < n / 2) ? i : i - n;
    k_axis_[i] = k0 * m;
  }

  ksq_.resize(size_);
  for (Eigen::Index idx = 0; idx < size_; ++idx) {
    double s = 0.0;
    for (int a = 0; a < d; ++a) {
      const double k = k_axis_[(idx / stride_[a]) % n];
      s += k * k;
    }
    ksq_[idx] = s;
  }
}

GridPtr make_grid(int d, int n, double L) {
  if (d != 2 && d != 3) throw std::invalid_argument("grid dimension must be 2 or 3");
  if (n < 8 || n % 2 != 0) throw std::invalid_argument("points per axis must be even and >= 8");
  if (!(L > 0.0)) throw std::invalid_argument("half-period must be positive");
  return GridPtr(new Grid(d, n, L));
}

RealField make_field(GridPtr grid) {
  Array v = Array::Zero(grid->size());
  return RealField{std::move(grid), std::move(v)};
}

RealField make_field(GridPtr grid, Array values) {
  if (values.size() != grid->size()) throw std::invalid_argument("field size does not match grid");
  return RealField{std::move(grid), std::move(values)};
}

void require_same_grid(const RealField& f, const RealField& g) {
  if (!f.grid || !g.grid || !f.grid->same_as(*g.grid)) throw GridMismatch();
}

namespace {

// 1D FFTs along one axis of the flattened tensor; both directions unscaled.
void fft_axis(CArray& data, int n, Eigen::Index stride, Eigen::Index nouter, bool inverse) {
  thread_local Eigen::FFT<double> fft;  // plan cache per length
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  Eigen::VectorXcd line(n), out(n);
  const Eigen::Index block = static_cast<Eigen::Index>(n) * stride;
  for (Eigen::Index o = 0; o < nouter; ++o) {
    const Eigen::Index obase = o * block;
    for (Eigen::Index s = 0; s < stride; ++s) {
      const Eigen::Index base = obase + s;
      for (int j = 0; j < n; ++j) line[j] = data[base + j * stride];
      if (inverse)
        fft.inv(out, line);
      else
        fft.fwd(out, line);
      for (int j = 0; j < n; ++j) data[base + j * stride] = out[j];
    }
  }
}

void fft_all_axes(CArray& data, const Grid& g, bool inverse) {
  const int n = g.points_per_axis();
  Eigen::Index nouter = 1;
  Eigen::Index stride = g.size() / n;
  for (int a = 0; a < g.dim(); ++a) {
    fft_axis(data, n, stride, nouter, inverse);
    nouter *= n;
    stride /= n;
  }
}

}  // namespace

SpectralField to_spectral(const RealField& f) {
  CArray z = f.values.cast<std::complex<double>>();
  fft_all_axes(z, *f.grid, false);
  z /= static_cast<double>(f.grid->size());
  return SpectralField{f.grid, std::move(z)};
}

RealField from_spectral(const SpectralField& fh) {
  CArray z = fh.coeffs;
  fft_all_axes(z, *fh.grid, true);
  return RealField{fh.grid, z.real()};
}

RealField apply_spectral_multiplier(const RealField& f, const Array& mult) {
  CArray z = f.values.cast<std::complex<double>>();
  fft_all_axes(z, *f.grid, false);
  z *= mult.cast<std::complex<double>>();
  fft_all_axes(z, *f.grid, true);
  return RealField{f.grid, z.real() / static_cast<double>(f.grid->size())};
}

RealField laplacian(const RealField& f) {
  return apply_spectral_multiplier(f, -f.grid->ksq());
}

RealField sobolev_scale(const RealField& f) {
  const Array& k2 = f.grid->ksq();
  return apply_spectral_multiplier(f, (1.0 + k2.square()).sqrt());
}

double sup_norm(const RealField& f) { return f.values.abs().maxCoeff(); }

double l2_norm(const RealField& f) {
  return std::sqrt(f.grid->cell_volume() * f.values.square().sum());
}

double l2_inner(const RealField& f, const RealField& g) {
  require_same_grid(f, g);
  return f.grid->cell_volume() * (f.values * g.values).sum();
}

double h2_norm(const RealField& f) {
  SpectralField fh = to_spectral(f);
  const Array& k2 = f.grid->ksq();
  const double vol = std::pow(2.0 * f.grid->half_period(), f.grid->dim());
  return std::sqrt(vol * ((1.0 + k2.square()) * fh.coeffs.abs2()).sum());
}

double spectral_tail_ratio(const RealField& f) {
  SpectralField fh = to_spectral(f);
  const Grid& g = *f.grid;
  const int n = g.points_per_axis();
  double peak = 0.0, tail = 0.0;
  for (Eigen::Index idx = 0; idx < g.size(); ++idx) {
    const double mag = std::abs(fh.coeffs[idx]);
    peak = std::max(peak, mag);
    bool outer = false;
    Eigen::Index rem = idx;
    for (int a = g.dim() - 1; a >= 0; --a) {
      const int i = rem % n;
      rem /= n;
      const int m = (i < n / 2) ? i : i - n;  // integer frequency
      if (std::abs(m) >= n / 2 - 1) outer = true;
    }
    if (outer) tail = std::max(tail, mag);
  }
  return peak > 0.0 ? tail / peak : 0.0;
}

std::vector<Eigen::Index> boundary_shell(const Grid& g, int layers) {
  const int n = g.points_per_axis();
  std::vector<Eigen::Index> out;
  for (Eigen::Index idx = 0; idx < g.size(); ++idx) {
    Eigen::Index rem = idx;
    bool onshell = false;
    for (int a = g.dim() - 1; a >= 0; --a) {
      const int i = rem % n;
      rem /= n;
      if (i < layers || i >= n - layers) onshell = true;
    }
    if (onshell) out.push_back(idx);
  }
  return out;
}

}  // namespace puls
