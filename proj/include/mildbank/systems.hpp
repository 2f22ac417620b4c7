#pragma once

#include "mildbank/fourier.hpp"
#include "mildbank/grid.hpp"
#include "mildbank/mild.hpp"

namespace mildbank {

// Translation-invariant linear system: convolution by a mild distribution,
// equivalently a Fourier multiplier by its transfer function. The impulse
// response and the cached transfer must agree path-wise on the battery.
struct Tils {
  MildDistribution impulse;
  MildDistribution transfer;  // dist_ft(impulse)
};

Tils make_tils(const MildDistribution& impulse);

enum class TilsPath { Time, Freq };

// Time path: (sigma * f)(x) = sigma(T_x flip f). Freq path: the transfer
// realised as a pointwise multiplier on the frequency grid (measured chirp
// spectrum for chirp systems), applied to ft(f) and inverted.
SampledFunction tils_apply(const Tils& sys, const SampledFunction& f,
                           TilsPath path);

// Both paths; throws PathDisagreement above tol, else returns the time path.
SampledFunction tils_apply_checked(const Tils& sys, const SampledFunction& f,
                                   double tol);
double tils_path_residual(const Tils& sys, const SampledFunction& f);

// The transfer function as a multiplier on the frequency grid. Defined for
// impulses whose transform is function-valued: atoms, embedded functions and
// chirps (measured spectrum); combs and pure frequencies have no multiplier.
SampledFunction transfer_multiplier(const Tils& sys, const Grid& freq_grid);

// Two-variable kernel K(x,y) on grid x grid, stored as a d=2 function.
struct KernelOperator {
  SampledFunction k;  // 2D; both axes carry the 1D base grid
  Grid base;
};

KernelOperator kernel_rank_one(const SampledFunction& f,
                               const SampledFunction& h);
KernelOperator kernel_ft(const Grid& grid);   // K(x,y) = e^{-2 pi i x y}
KernelOperator kernel_ift(const Grid& grid);  // K(x,y) = e^{+2 pi i x y}
KernelOperator kernel_zero(const Grid& grid);

// Function case: (Tu)(x) = int K(x,y) u(y) dy by quadrature. Distribution
// case: (T sigma)(x) = sigma(K(x, .)), the regularising action; recovers
// K(x,y) = (T delta_y)(x) exactly.
SampledFunction kernel_apply(const KernelOperator& K, const SampledFunction& u);
SampledFunction kernel_apply(const KernelOperator& K,
                             const MildDistribution& sigma);

// K(x,z) = int K2(x,y) K1(y,z) dy.
KernelOperator kernel_compose(const KernelOperator& K2,
                              const KernelOperator& K1);

// delta_Delta(F) = int F(x,x) dx for a two-variable function.
Complex diagonal_delta(const SampledFunction& F);

}  // namespace mildbank
