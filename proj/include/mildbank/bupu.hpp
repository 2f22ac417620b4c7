#pragma once

#include <array>

#include "mildbank/grid.hpp"

namespace mildbank {

// Regular bounded uniform partition of unity: lattice translates of one
// compactly supported, nonnegative window psi_0 along gamma*Z^d, summing to 1.
struct Bupu {
  Grid grid;
  double gamma = 0.5;
  SampledFunction base;                 // psi_0
  double radius = 0.5;                  // supp psi_0 in B_radius(0)
  std::array<int, 2> index_min{0, 0};   // active lattice range covering the window
  std::array<int, 2> index_max{0, 0};
};

enum class BupuKind { Tent, Custom };

// Tent kind builds the half-integer translate family (psi_n = tent(t - n/2)
// for gamma = 1/2; other gammas use the correspondingly dilated tent).
// Custom bases must be nonnegative (NegativeWindow) and must sum to 1 on the
// window interior to 1e-9 (NotAPartition). gamma must be a multiple of the
// grid spacing.
Bupu make_bupu(BupuKind kind, const Grid& grid, double gamma = 0.5);
Bupu make_bupu(const SampledFunction& base, double gamma);

// psi_n evaluated at a grid point.
double bupu_value(const Bupu& psi, const std::array<int, 2>& n, const Vec& t);

// Lattice node position gamma*n.
Vec bupu_node(const Bupu& psi, const std::array<int, 2>& n);

// Per-axis half-open grid-index window covering supp psi_n.
struct CellSupport {
  std::array<int, 2> lo{0, 0};
  std::array<int, 2> hi{0, 0};
};
CellSupport bupu_support(const Bupu& psi, const std::array<int, 2>& n);

// Visits every active lattice index.
template <typename Fn>
void for_each_cell(const Bupu& psi, Fn&& fn) {
  if (psi.grid.dim == 1) {
    for (int n = psi.index_min[0]; n <= psi.index_max[0]; ++n)
      fn(std::array<int, 2>{n, 0});
  } else {
    for (int n0 = psi.index_min[0]; n0 <= psi.index_max[0]; ++n0)
      for (int n1 = psi.index_min[1]; n1 <= psi.index_max[1]; ++n1)
        fn(std::array<int, 2>{n0, n1});
  }
}

// Spline-type quasi-interpolation Sp f(t) = sum_n f(gamma n) psi_n(t).
SampledFunction quasi_interpolate(const SampledFunction& f, const Bupu& psi);

enum class EnvelopeKind { Osc, MaxFn };

// osc_delta(f)(x) = max_{|y|<=delta} |f(x) - f(x+y)| over grid offsets;
// f#(x) = max_{|y|<=1} |f(x+y)|. Out-of-window accesses read 0; values in
// the outer collar of width max(delta,1) are edge artefacts and are excluded
// from the invariant checks.
SampledFunction envelope(const SampledFunction& f, EnvelopeKind kind,
                         double delta = 0.0);

}  // namespace mildbank
