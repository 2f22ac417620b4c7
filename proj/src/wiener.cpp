#include "mildbank/wiener.hpp"

#include <algorithm>
#include <cmath>

namespace mildbank {

namespace {

struct SliceGen : GeneratorExpr {
  GenPtr inner;
  explicit SliceGen(GenPtr i) : inner(std::move(i)) {}
  Complex eval(const Vec& t, int) const override {
    return inner->eval({t[0], 0.0}, 2);
  }
};

}  // namespace

WienerReport wiener_norm(const SampledFunction& f, const Bupu& psi,
                         WienerVariant variant) {
  if (!(f.grid == psi.grid)) throw GridMismatch("wiener_norm");
  const Grid& g = f.grid;
  WienerReport rep;
  rep.variant = variant;
  if (variant == WienerVariant::Bupu) {
    for_each_cell(psi, [&](const std::array<int, 2>& n) {
      CellSupport s = bupu_support(psi, n);
      double sup = 0.0;
      for (int i0 = s.lo[0]; i0 < s.hi[0]; ++i0)
        for (int i1 = s.lo[1]; i1 < s.hi[1]; ++i1) {
          std::size_t idx = g.index(i0, i1);
          double p = bupu_value(psi, n, g.point(idx));
          if (p != 0.0)
            sup = std::max(sup, std::abs(f.values[idx]) * p);
        }
      if (sup > 0.0) rep.cell_sups[n] = sup;
    });
  } else {
    // unit cubes [n, n+1) per axis
    for (std::size_t i = 0; i < g.size(); ++i) {
      double a = std::abs(f.values[i]);
      if (a == 0.0) continue;
      Vec t = g.point(i);
      std::array<int, 2> n{static_cast<int>(std::floor(t[0])),
                           g.dim == 2 ? static_cast<int>(std::floor(t[1])) : 0};
      auto it = rep.cell_sups.find(n);
      if (it == rep.cell_sups.end())
        rep.cell_sups[n] = a;
      else
        it->second = std::max(it->second, a);
    }
  }
  for (const auto& [n, s] : rep.cell_sups) rep.norm += s;
  return rep;
}

WienerReport wiener_norm(const SampledFunction& f, WienerVariant variant) {
  Bupu psi = make_bupu(BupuKind::Tent, f.grid);
  return wiener_norm(f, psi, variant);
}

SampledFunction restrict_slice(const SampledFunction& f) {
  if (f.grid.dim != 2) throw BadAxis("restrict needs a 2D input");
  const Grid& g = f.grid;
  double u = -g.origin[1] / g.step[1];
  int j0 = static_cast<int>(std::round(u));
  if (std::abs(u - j0) > 1e-9 || j0 < 0 || j0 >= g.count[1])
    throw BadAxis("restrict: second axis does not contain 0");
  SampledFunction out;
  out.grid.dim = 1;
  out.grid.origin = {g.origin[0], 0.0};
  out.grid.step = {g.step[0], 1.0};
  out.grid.count = {g.count[0], 0};
  out.label = "R1(" + f.label + ")";
  if (f.gen) out.gen = std::make_shared<SliceGen>(f.gen);
  out.values.resize(g.count[0]);
  for (int i = 0; i < g.count[0]; ++i) out.values[i] = f.values[g.index(i, j0)];
  return out;
}

double support_constant(const Bupu& psi) {
  // Slide a unit cube across one period of the lattice and take the worst
  // sum of per-cell sups over the cube.
  const Grid& g = psi.grid;
  double worst = 0.0;
  int steps_per_gamma = commensurate_steps(psi.gamma, g.step[0]);
  for (int s = 0; s < steps_per_gamma * 2; ++s) {
    double x0 = s * g.step[0];
    double acc = 0.0;
    for_each_cell(psi, [&](const std::array<int, 2>& n) {
      double sup = 0.0;
      // sample psi_n over the cube [x0, x0+1)^d on grid points
      int m0 = static_cast<int>(std::round(1.0 / g.step[0]));
      int m1 = g.dim == 2 ? static_cast<int>(std::round(1.0 / g.step[1])) : 1;
      for (int i0 = 0; i0 < m0; ++i0)
        for (int i1 = 0; i1 < m1; ++i1) {
          Vec t = {x0 + i0 * g.step[0],
                   g.dim == 2 ? x0 + i1 * g.step[1] : 0.0};
          sup = std::max(sup, bupu_value(psi, n, t));
        }
      acc += sup;
    });
    worst = std::max(worst, acc);
  }
  return worst;
}

}  // namespace mildbank
