#pragma once

#include "mildbank/grid.hpp"

namespace mildbank {

// The spectrum of an N-point window [t0, t0+N*h) lives on the centered
// frequency grid xi_k = k/(N*h), k = -N/2 .. N/2-1.
using Spectrum = SampledFunction;

Grid frequency_grid(const Grid& time_grid);

// Forward transform: the Riemann-sum approximation of
//   f^(s) = int f(t) e^{-2 pi i s t} dt
// evaluated at the frequency-grid nodes. Equals h^d * DFT with the window
// origin folded in as an analytic phase factor (no circular shifting).
Spectrum ft(const SampledFunction& f);

// Inverse transform back onto a time grid (default: the symmetric window the
// spectrum came from). The Riemann sum of the inversion integral over the
// frequency grid is the exact discrete inverse of ft.
SampledFunction ift(const Spectrum& s);
SampledFunction ift(const Spectrum& s, const Grid& time_grid);

enum class FtDirection { Forward, Inverse };
SampledFunction ft(const SampledFunction& f, FtDirection dir);

// Quadrature value of the transform at an arbitrary point, h^d sum f e^{-2pi i s.t}.
// O(N) per point; the cross-check oracle for the FFT path and the evaluator
// for off-grid lattice sums.
Complex ft_at(const SampledFunction& f, const Vec& s);

struct ResidualReport {
  double fundamental = 0.0;       // |int f g^ - int f^ g|
  double convolution = 0.0;       // sup |ft(f*g) - f^ g^|
  double parseval = 0.0;          // |<f^,g^> - <f,g>| (conjugated pairing)
  double parseval_printed = 0.0;  // |<f^,g^> - int f g| (no conjugate on g)
  double inversion = 0.0;         // sup |ift(ft(f)) - f|
};

// Residuals of the fundamental identity, the convolution theorem, Parseval
// and inversion for a pair on the same grid. The convolution side is computed
// by direct quadrature at the grid nodes, so FFT and quadrature cross-check
// each other.
ResidualReport identity_residuals(const SampledFunction& f,
                                  const SampledFunction& g);

// Direct-quadrature convolution (k*f)(t) = h sum k(s) f(t-s) with zero
// extension; O(N^2).
SampledFunction convolve(const SampledFunction& k, const SampledFunction& f);

struct PoissonResult {
  Complex lhs = 0.0;
  Complex rhs = 0.0;
  double gap() const { return std::abs(lhs - rhs); }
};

// Lattice-sum identity
//   int_{R^m} sum_{k in Z^{d-m}} f(A(x,k)) dx
//     = |det A|^{-1} sum_{k in Z^{d-m}} f^(A^dagger (0,k)),
// with m = 0 giving the plain summation formula. For (x,w) != 0 (and m = 0)
// the shifted form is evaluated:
//   sum_k e^{2 pi i Ak.w} f(Ak - x)
//     = e^{2 pi i w.x} |det A|^{-1} sum_k e^{-2 pi i A^dag k.x} f^(A^dag k - w).
// f is evaluated through its generator tag, f^ by quadrature (ft_at). Lattice
// sums are truncated where f's tail falls below 1e-14; TailTooFat otherwise.
PoissonResult poisson(const SampledFunction& f, const LatticeMatrix& A, int m,
                      const Vec& x = {0, 0}, const Vec& w = {0, 0});

// Both theta series of the Gaussian special case, evaluated directly:
//   sum_k e^{-pi(Ak.Ak - 2 Ak.(x+iw))}
//     = e^{pi (x+iw)^2} |det A|^{-1} sum_k e^{-pi(A^dag k.A^dag k - 2 A^dag k.(w+ix))}.
PoissonResult poisson_gauss(const LatticeMatrix& A, const Vec& x = {0, 0},
                            const Vec& w = {0, 0}, int dim = 1);

// In-place power-of-two complex FFT along a flat array (sign = -1 forward).
// Exposed for the feichtinger module's STFT columns.
void fft_pow2(std::vector<Complex>& data, int sign);

}  // namespace mildbank
