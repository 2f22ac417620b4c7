#pragma once

#include <map>

#include "mildbank/bupu.hpp"
#include "mildbank/grid.hpp"

namespace mildbank {

enum class WienerVariant { Bupu, Box };

// Amalgam norm report: the norm is the sum of local sups, one per lattice
// cell; the per-cell table localises solidity/ideal failures.
struct WienerReport {
  double norm = 0.0;
  std::map<std::array<int, 2>, double> cell_sups;
  WienerVariant variant = WienerVariant::Bupu;
};

// Bupu variant: sum_n sup |f . psi_n|. Box variant: sum over unit-cube
// translates T_n 1_{[0,1)^d} of the local sup.
WienerReport wiener_norm(const SampledFunction& f, const Bupu& psi,
                         WienerVariant variant = WienerVariant::Bupu);
// Convenience: builds the default tent BUPU on f's grid.
WienerReport wiener_norm(const SampledFunction& f,
                         WienerVariant variant = WienerVariant::Bupu);

// R_1 f(x) = f(x, 0): the axis-0 slice of a 2D function through the second
// coordinate's origin.
SampledFunction restrict_slice(const SampledFunction& f);

// Empirical support constant: max over window positions of the sum of
// per-cell sups of the BUPU over a unit-cube translate, the constant
// controlling ||f||_W <= c_K ||f||_inf for supp f in K + x.
double support_constant(const Bupu& psi);

}  // namespace mildbank
