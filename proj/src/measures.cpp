#include "mildbank/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mildbank/fourier.hpp"

namespace mildbank {

namespace {

constexpr double kPi = std::numbers::pi;

// int g * f with f evaluated on g's grid (same-grid fast path included).
Complex integrate_product(const SampledFunction& g, const SampledFunction& f) {
  if (f.grid == g.grid) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < g.values.size(); ++i)
      acc += g.values[i] * f.values[i];
    return acc * g.grid.cell_volume();
  }
  Complex acc = 0.0;
  for (std::size_t i = 0; i < g.values.size(); ++i)
    acc += g.values[i] * value_at(f, g.grid.point(i));
  return acc * g.grid.cell_volume();
}

}  // namespace

BoundedMeasure make_measure(std::vector<MeasureAtom> atoms,
                            std::optional<SampledFunction> density) {
  BoundedMeasure mu;
  mu.density = std::move(density);
  for (const MeasureAtom& a : atoms) {
    bool merged = false;
    for (MeasureAtom& b : mu.atoms) {
      if (std::abs(a.pos[0] - b.pos[0]) < 1e-12 &&
          std::abs(a.pos[1] - b.pos[1]) < 1e-12) {
        b.weight += a.weight;
        merged = true;
        break;
      }
    }
    if (!merged) mu.atoms.push_back(a);
  }
  return mu;
}

BoundedMeasure dirac_measure(const Vec& x, Complex weight) {
  return make_measure({{x, weight}});
}

BoundedMeasure embed_measure(const SampledFunction& g) {
  return make_measure({}, g);
}

Complex measure_apply(const BoundedMeasure& mu, const SampledFunction& f) {
  Complex acc = 0.0;
  for (const MeasureAtom& a : mu.atoms) acc += a.weight * value_at(f, a.pos);
  if (mu.density) acc += integrate_product(*mu.density, f);
  return acc;
}

double measure_norm(const BoundedMeasure& mu) {
  double n = 0.0;
  for (const MeasureAtom& a : mu.atoms) n += std::abs(a.weight);
  if (mu.density) n += norms(*mu.density).l1;
  return n;
}

BoundedMeasure measure_act(MeasureOp op, const LatticeMatrix& A,
                           const BoundedMeasure& mu) {
  if (op != MeasureOp::MatrixDilate)
    throw BadParams("matrix argument only applies to matrix_dilate");
  BoundedMeasure out;
  double w = 1.0 / std::sqrt(std::abs(A.det));
  for (const MeasureAtom& a : mu.atoms)
    out.atoms.push_back({A.apply_inv(a.pos), a.weight * w});
  if (mu.density) out.density = act(OpKind::MatrixDilate, A, *mu.density);
  return out;
}

BoundedMeasure measure_act(MeasureOp op, const std::vector<double>& params,
                           const BoundedMeasure& mu) {
  BoundedMeasure out;
  switch (op) {
    case MeasureOp::Conjugate:
      for (const MeasureAtom& a : mu.atoms)
        out.atoms.push_back({a.pos, std::conj(a.weight)});
      if (mu.density) out.density = conjugate(*mu.density);
      return out;
    case MeasureOp::Flip:
      for (const MeasureAtom& a : mu.atoms)
        out.atoms.push_back({{-a.pos[0], -a.pos[1]}, a.weight});
      if (mu.density) out.density = flip(*mu.density);
      return out;
    case MeasureOp::Translate: {
      Vec y = vec1(params.at(0));
      if (mu.density && mu.density->grid.dim == 2) y[1] = params.at(1);
      else if (!mu.density && params.size() > 1) y[1] = params[1];
      for (const MeasureAtom& a : mu.atoms)
        out.atoms.push_back({{a.pos[0] + y[0], a.pos[1] + y[1]}, a.weight});
      if (mu.density) out.density = translate(*mu.density, y);
      return out;
    }
    case MeasureOp::Modulate: {
      Vec w = vec1(params.at(0));
      if (params.size() > 1) w[1] = params[1];
      for (const MeasureAtom& a : mu.atoms) {
        double phase = w[0] * a.pos[0] + w[1] * a.pos[1];
        out.atoms.push_back({a.pos, a.weight * std::polar(1.0, 2 * kPi * phase)});
      }
      if (mu.density) out.density = modulate(*mu.density, w);
      return out;
    }
    case MeasureOp::MatrixDilate: {
      int d = mu.density ? mu.density->grid.dim : (params.size() >= 4 ? 2 : 1);
      std::array<double, 4> e{1, 0, 0, 1};
      if (d == 1) e[0] = params.at(0);
      else for (int i = 0; i < 4; ++i) e[i] = params.at(i);
      return measure_act(MeasureOp::MatrixDilate, make_lattice(d, e), mu);
    }
  }
  throw BadParams("unknown measure operator");
}

BoundedMeasure measure_mul(const BoundedMeasure& mu, const SampledFunction& h) {
  BoundedMeasure out;
  for (const MeasureAtom& a : mu.atoms) {
    Complex w = a.weight * value_at(h, a.pos);
    if (w != Complex(0.0)) out.atoms.push_back({a.pos, w});
  }
  if (mu.density) out.density = pointwise(*mu.density, h, PwKind::Mul);
  return out;
}

SampledFunction measure_convolve(const BoundedMeasure& mu,
                                 const SampledFunction& f) {
  SampledFunction out = zero_function(f.grid);
  for (const MeasureAtom& a : mu.atoms) {
    SampledFunction shifted = translate(f, a.pos);
    for (std::size_t i = 0; i < out.values.size(); ++i)
      out.values[i] += a.weight * shifted.values[i];
  }
  if (mu.density) {
    if (!(mu.density->grid == f.grid))
      throw GridMismatch("measure_convolve: density grid mismatch");
    SampledFunction conv = convolve(*mu.density, f);
    for (std::size_t i = 0; i < out.values.size(); ++i)
      out.values[i] += conv.values[i];
  }
  // single unit atom at a node: keep bit-identity with translate()
  if (mu.atoms.size() == 1 && !mu.density && mu.atoms[0].weight == Complex(1.0))
    out = translate(f, mu.atoms[0].pos);
  return out;
}

std::vector<BoundedMeasure> measure_bupu_decompose(const BoundedMeasure& mu,
                                                   const Bupu& psi) {
  std::vector<BoundedMeasure> pieces;
  for_each_cell(psi, [&](const std::array<int, 2>& n) {
    BoundedMeasure piece;
    for (const MeasureAtom& a : mu.atoms) {
      double p = bupu_value(psi, n, a.pos);
      if (p != 0.0) piece.atoms.push_back({a.pos, a.weight * p});
    }
    if (mu.density) {
      CellSupport s = bupu_support(psi, n);
      bool any = false;
      SampledFunction dens = zero_function(mu.density->grid);
      for (int i0 = s.lo[0]; i0 < s.hi[0]; ++i0)
        for (int i1 = s.lo[1]; i1 < s.hi[1]; ++i1) {
          std::size_t idx = dens.grid.index(i0, i1);
          double p = bupu_value(psi, n, dens.grid.point(idx));
          if (p != 0.0 && mu.density->values[idx] != Complex(0.0)) {
            dens.values[idx] = mu.density->values[idx] * p;
            any = true;
          }
        }
      if (any) piece.density = std::move(dens);
    }
    if (!piece.atoms.empty() || piece.density) pieces.push_back(std::move(piece));
  });
  return pieces;
}

}  // namespace mildbank
