#pragma once

#include <optional>
#include <vector>

#include "mildbank/bupu.hpp"
#include "mildbank/grid.hpp"

namespace mildbank {

// Bounded measure: finitely many weighted point atoms plus an optional
// integrable density part. This class realises the whole dual of C0 that the
// checks exercise; the functional norm is sum |c_k| + ||density||_1, exact
// for separated atoms with a continuous density.
struct MeasureAtom {
  Vec pos{0, 0};
  Complex weight = 0.0;
};

struct BoundedMeasure {
  std::vector<MeasureAtom> atoms;
  std::optional<SampledFunction> density;
};

// Merges coincident atom positions.
BoundedMeasure make_measure(std::vector<MeasureAtom> atoms,
                            std::optional<SampledFunction> density = {});
BoundedMeasure dirac_measure(const Vec& x, Complex weight = 1.0);
// The embedding k -> mu_k of an integrable function.
BoundedMeasure embed_measure(const SampledFunction& g);

// mu(f) = sum c_k f(x_k) + int density * f.
Complex measure_apply(const BoundedMeasure& mu, const SampledFunction& f);

double measure_norm(const BoundedMeasure& mu);

enum class MeasureOp { Conjugate, Flip, Translate, Modulate, MatrixDilate };

BoundedMeasure measure_act(MeasureOp op, const std::vector<double>& params,
                           const BoundedMeasure& mu);
BoundedMeasure measure_act(MeasureOp op, const LatticeMatrix& A,
                           const BoundedMeasure& mu);
// (mu . h)(f) = mu(h f): atom weights pick up h(x_k), the density is
// multiplied pointwise.
BoundedMeasure measure_mul(const BoundedMeasure& mu, const SampledFunction& h);

// (mu * f)(x) = mu(T_x flip(f)) at every grid node. Atom parts are exact
// index shifts (bit-identical to translate), the density part is quadrature
// convolution.
SampledFunction measure_convolve(const BoundedMeasure& mu,
                                 const SampledFunction& f);

// The pieces mu . psi_n over the active cells; empty pieces are dropped.
// Norms sum back to measure_norm(mu) and the pieces sum back to mu in action.
std::vector<BoundedMeasure> measure_bupu_decompose(const BoundedMeasure& mu,
                                                   const Bupu& psi);

}  // namespace mildbank
