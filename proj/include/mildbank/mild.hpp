#pragma once

#include <variant>
#include <vector>

#include "mildbank/grid.hpp"
#include "mildbank/measures.hpp"

namespace mildbank {

// Symbolic components of a mild distribution. Every action is linear and
// bounded on decaying test functions; lattice sums and oscillatory
// quadratures carry their own convergence guards.

struct AtomComp {  // c * delta_x
  Vec x{0, 0};
  Complex c = 1.0;
};

// c * E_mod T_shift Shah_A: acts by c sum_k e^{2 pi i mod.(Ak+shift)} f(Ak+shift).
struct CombComp {
  LatticeMatrix A;
  Vec shift{0, 0};
  Vec mod{0, 0};
  Complex c = 1.0;
};

struct PureFreqComp {  // c * iota(e^{2 pi i x.t}), acting by c f^(-x)
  Vec x{0, 0};
  Complex c = 1.0;
};

// c * iota(ch_alpha(. - shift) e^{2 pi i mod .}) composed with ft_power
// applications of the Fourier transform on the argument. The transform of a
// chirp keeps no closed form here; it stays symbolic as this adjoint-action
// wrapper. Quadrature requires alpha*h*R <= 1/4 on the evaluation grid.
struct ChirpComp {
  double alpha = 1.0;
  Vec shift{0, 0};
  Vec mod{0, 0};
  Complex c = 1.0;
  int ft_power = 0;  // action evaluates on ft^power of the argument
};

struct RegularComp {  // iota(g)
  SampledFunction g;
};

using MildComponent =
    std::variant<AtomComp, CombComp, PureFreqComp, ChirpComp, RegularComp>;

struct MildDistribution {
  std::vector<MildComponent> comps;
};

MildDistribution dirac_dist(const Vec& x, Complex c = 1.0);
MildDistribution shah_dist(const LatticeMatrix& A, Complex c = 1.0);
MildDistribution pure_freq_dist(const Vec& x, Complex c = 1.0);
MildDistribution chirp_dist(double alpha, Complex c = 1.0);
MildDistribution embed_dist(const SampledFunction& g);
MildDistribution mild_from_measure(const BoundedMeasure& mu);
MildDistribution mild_sum(Complex a, const MildDistribution& s1, Complex b,
                          const MildDistribution& s2);

Complex dist_apply(const MildDistribution& sigma, const SampledFunction& f);

// Extended Fourier transform: symbolic rewrite per component, consistent with
// the adjoint rule (F sigma)(f) = sigma(F f) on the battery.
MildDistribution dist_ft(const MildDistribution& sigma);

enum class DistOp { Translate, Modulate, Flip, Conjugate, MatrixDilate };

MildDistribution dist_act(DistOp op, const std::vector<double>& params,
                          const MildDistribution& sigma);
MildDistribution dist_act(DistOp op, const LatticeMatrix& A,
                          const MildDistribution& sigma);

// The defining adjoint action applied to a test function: dist_act is checked
// against dist_apply(sigma, dist_adjoint_arg(op, params, f)).
SampledFunction dist_adjoint_arg(DistOp op, const std::vector<double>& params,
                                 const SampledFunction& f);

// (sigma * g)(t) = sigma(T_t flip(g)) as a function on g's grid.
SampledFunction dist_convolve(const MildDistribution& sigma,
                              const SampledFunction& g);

// (sigma . g)(f) = sigma(g f) as a distribution.
MildDistribution dist_mul(const MildDistribution& sigma,
                          const SampledFunction& g);

// max_f |sigma1(f) - sigma2(f)| over the battery.
double wstar_gap(const MildDistribution& s1, const MildDistribution& s2,
                 const std::vector<SampledFunction>& battery);

}  // namespace mildbank
