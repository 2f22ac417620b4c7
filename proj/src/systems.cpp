#include "mildbank/systems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mildbank {

namespace {

constexpr double kPi = std::numbers::pi;

Grid square_grid(const Grid& base) {
  if (base.dim != 1) throw GridMismatch("kernels take a 1D base grid");
  Grid g;
  g.dim = 2;
  g.origin = {base.origin[0], base.origin[0]};
  g.step = {base.step[0], base.step[0]};
  g.count = {base.count[0], base.count[0]};
  return g;
}

SampledFunction kernel_row(const KernelOperator& K, int i) {
  SampledFunction row;
  row.grid = K.base;
  int n = K.base.count[0];
  row.values.resize(n);
  for (int j = 0; j < n; ++j)
    row.values[j] = K.k.values[K.k.grid.index(i, j)];
  return row;
}

}  // namespace

Tils make_tils(const MildDistribution& impulse) {
  return {impulse, dist_ft(impulse)};
}

SampledFunction transfer_multiplier(const Tils& sys, const Grid& freq_grid) {
  SampledFunction mult = zero_function(freq_grid);
  mult.label = "transfer";
  for (const MildComponent& comp : sys.transfer.comps) {
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, PureFreqComp>) {
            // iota(c e^{2 pi i x.s}) as a multiplier
            for (std::size_t i = 0; i < mult.values.size(); ++i) {
              Vec s = freq_grid.point(i);
              mult.values[i] += c.c * std::polar(1.0, 2 * kPi * c.x[0] * s[0]);
            }
          } else if constexpr (std::is_same_v<T, RegularComp>) {
            for (std::size_t i = 0; i < mult.values.size(); ++i)
              mult.values[i] += value_at(c.g, freq_grid.point(i));
          } else if constexpr (std::is_same_v<T, ChirpComp>) {
            // measured chirp spectrum: transform the sampled chirp rather
            // than asserting a symbolic image
            if (c.ft_power % 4 != 1 || c.shift[0] != 0 || c.mod[0] != 0)
              throw BadKind("chirp transfer supported for plain chirps only");
            Grid time;
            time.dim = 1;
            time.count[0] = freq_grid.count[0];
            time.step[0] = 1.0 / (freq_grid.count[0] * freq_grid.step[0]);
            time.origin[0] = -time.count[0] * time.step[0] / 2;
            SampledFunction ch =
                sample_named("chirp", {c.alpha}, time);
            Spectrum sp = ft(ch);
            for (std::size_t i = 0; i < mult.values.size(); ++i)
              mult.values[i] += c.c * sp.values[i];
          } else {
            throw BadKind(
                "transfer is not a pointwise multiplier for this impulse");
          }
        },
        comp);
  }
  return mult;
}

SampledFunction tils_apply(const Tils& sys, const SampledFunction& f,
                           TilsPath path) {
  if (path == TilsPath::Time) return dist_convolve(sys.impulse, f);
  Grid fg = frequency_grid(f.grid);
  SampledFunction mult = transfer_multiplier(sys, fg);
  Spectrum s = ft(f);
  for (std::size_t i = 0; i < s.values.size(); ++i)
    s.values[i] *= mult.values[i];
  return ift(s, f.grid);
}

double tils_path_residual(const Tils& sys, const SampledFunction& f) {
  SampledFunction a = tils_apply(sys, f, TilsPath::Time);
  SampledFunction b = tils_apply(sys, f, TilsPath::Freq);
  double sup = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    sup = std::max(sup, std::abs(a.values[i] - b.values[i]));
  return sup;
}

SampledFunction tils_apply_checked(const Tils& sys, const SampledFunction& f,
                                   double tol) {
  SampledFunction a = tils_apply(sys, f, TilsPath::Time);
  SampledFunction b = tils_apply(sys, f, TilsPath::Freq);
  double sup = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    sup = std::max(sup, std::abs(a.values[i] - b.values[i]));
  if (sup > tol)
    throw PathDisagreement(
        "impulse and transfer paths disagree: residual " + std::to_string(sup),
        sup);
  return a;
}

KernelOperator kernel_rank_one(const SampledFunction& f,
                               const SampledFunction& h) {
  if (!(f.grid == h.grid)) throw GridMismatch("rank-one kernel");
  KernelOperator K;
  K.base = f.grid;
  K.k.grid = square_grid(f.grid);
  K.k.label = "rank_one";
  int n = f.grid.count[0];
  K.k.values.resize((std::size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      K.k.values[K.k.grid.index(i, j)] = f.values[i] * h.values[j];
  return K;
}

KernelOperator kernel_ft(const Grid& grid) {
  KernelOperator K;
  K.base = grid;
  K.k.grid = square_grid(grid);
  K.k.label = "ft_kernel";
  int n = grid.count[0];
  K.k.values.resize((std::size_t)n * n);
  for (int i = 0; i < n; ++i) {
    double x = grid.node(0, i);
    for (int j = 0; j < n; ++j)
      K.k.values[K.k.grid.index(i, j)] =
          std::polar(1.0, -2 * kPi * x * grid.node(0, j));
  }
  return K;
}

KernelOperator kernel_ift(const Grid& grid) {
  KernelOperator K = kernel_ft(grid);
  K.k.label = "ift_kernel";
  for (Complex& v : K.k.values) v = std::conj(v);
  return K;
}

KernelOperator kernel_zero(const Grid& grid) {
  KernelOperator K;
  K.base = grid;
  K.k.grid = square_grid(grid);
  K.k.label = "zero";
  K.k.values.assign(K.k.grid.size(), Complex(0.0));
  return K;
}

SampledFunction kernel_apply(const KernelOperator& K,
                             const SampledFunction& u) {
  if (!(u.grid == K.base)) throw GridMismatch("kernel_apply");
  int n = K.base.count[0];
  double h = K.base.step[0];
  SampledFunction out = zero_function(K.base);
  for (int i = 0; i < n; ++i) {
    Complex acc = 0.0;
    const Complex* row = K.k.values.data() + (std::size_t)i * n;
    for (int j = 0; j < n; ++j) acc += row[j] * u.values[j];
    out.values[i] = acc * h;
  }
  return out;
}

SampledFunction kernel_apply(const KernelOperator& K,
                             const MildDistribution& sigma) {
  int n = K.base.count[0];
  SampledFunction out = zero_function(K.base);
  for (int i = 0; i < n; ++i)
    out.values[i] = dist_apply(sigma, kernel_row(K, i));
  return out;
}

KernelOperator kernel_compose(const KernelOperator& K2,
                              const KernelOperator& K1) {
  if (!(K2.base == K1.base)) throw GridMismatch("kernel_compose");
  int n = K1.base.count[0];
  double h = K1.base.step[0];
  KernelOperator K = kernel_zero(K1.base);
  K.k.label = "compose";
  for (int i = 0; i < n; ++i) {
    Complex* out_row = K.k.values.data() + (std::size_t)i * n;
    const Complex* k2_row = K2.k.values.data() + (std::size_t)i * n;
    for (int y = 0; y < n; ++y) {
      Complex w = k2_row[y] * h;
      if (w == Complex(0.0)) continue;
      const Complex* k1_row = K1.k.values.data() + (std::size_t)y * n;
      for (int z = 0; z < n; ++z) out_row[z] += w * k1_row[z];
    }
  }
  return K;
}

Complex diagonal_delta(const SampledFunction& F) {
  if (F.grid.dim != 2 || F.grid.count[0] != F.grid.count[1])
    throw GridMismatch("diagonal pairing needs a square 2D function");
  Complex acc = 0.0;
  for (int i = 0; i < F.grid.count[0]; ++i)
    acc += F.values[F.grid.index(i, i)];
  return acc * F.grid.step[0];
}

}  // namespace mildbank
