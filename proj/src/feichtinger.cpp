#include "mildbank/feichtinger.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mildbank/wiener.hpp"

namespace mildbank {

namespace {

constexpr double kPi = std::numbers::pi;

struct TensorGen : GeneratorExpr {
  GenPtr g1, g2;
  TensorGen(GenPtr a, GenPtr b) : g1(std::move(a)), g2(std::move(b)) {}
  Complex eval(const Vec& t, int) const override {
    return g1->eval(vec1(t[0]), 1) * g2->eval(vec1(t[1]), 1);
  }
};

// f . conj(T_x g) assembled by index shift; shift in grid steps.
SampledFunction windowed_product(const SampledFunction& f,
                                 const SampledFunction& g, int shift) {
  SampledFunction out;
  out.grid = f.grid;
  int n = f.grid.count[0];
  out.values.assign(n, Complex(0.0));
  int lo = std::max(0, shift), hi = std::min(n, n + shift);
  for (int i = lo; i < hi; ++i)
    out.values[i] = f.values[i] * std::conj(g.values[i - shift]);
  return out;
}

void check_tail(const SampledFunction& f, const char* who) {
  if (edge_tail_mass(f) > 1e-10)
    throw TailTooFat(std::string(who) +
                     ": input has not decayed at the window edge");
}

}  // namespace

TfPlaneFunction stft(const SampledFunction& f, const SampledFunction& g,
                     int stride) {
  if (!(f.grid == g.grid)) throw GridMismatch("stft");
  if (f.grid.dim != 1) throw BadGrid("stft plane storage is d=1; use stft_at");
  if (stride < 1 || f.grid.count[0] % stride != 0)
    throw BadParams("stft stride must divide the grid count");
  TfPlaneFunction plane;
  plane.time_grid = f.grid;
  plane.freq_grid = frequency_grid(f.grid);
  plane.stride = stride;
  plane.x_count = f.grid.count[0] / stride;
  plane.values.resize((std::size_t)plane.x_count * f.grid.count[0]);
  int n = f.grid.count[0];
  for (int j = 0; j < plane.x_count; ++j) {
    int shift = j * stride - n / 2;  // x_j = t0 + j*stride*h = shift*h
    Spectrum col = ft(windowed_product(f, g, shift));
    std::copy(col.values.begin(), col.values.end(),
              plane.values.begin() + (std::size_t)j * n);
  }
  return plane;
}

Complex stft_at(const SampledFunction& f, const SampledFunction& g,
                const Vec& x, const Vec& w) {
  const Grid& gr = f.grid;
  Complex acc = 0.0;
  for (std::size_t i = 0; i < gr.size(); ++i) {
    Vec t = gr.point(i);
    Vec ts = {t[0] - x[0], t[1] - x[1]};
    double phase = w[0] * t[0] + (gr.dim == 2 ? w[1] * t[1] : 0.0);
    acc += f.values[i] * std::conj(value_at(g, ts)) *
           std::polar(1.0, -2.0 * kPi * phase);
  }
  return acc * gr.cell_volume();
}

double s0_norm(const SampledFunction& f, S0Variant variant, int stride) {
  check_tail(f, "s0_norm");
  GenPtr g0 = gen_named("gaussian", {});
  if (f.grid.dim == 1) {
    SampledFunction window = sample_generator(g0, f.grid, "g0");
    TfPlaneFunction plane = stft(f, window, stride);
    if (variant == S0Variant::L1) {
      double acc = 0.0;
      for (const Complex& v : plane.values) acc += std::abs(v);
      return acc * plane.cell_weight();
    }
    // Wiener norm of |V| over the plane BUPU
    Grid plane_grid;
    plane_grid.dim = 2;
    plane_grid.origin = {plane.time_grid.origin[0], plane.freq_grid.origin[0]};
    plane_grid.step = {plane.time_grid.step[0] * stride, plane.freq_grid.step[0]};
    plane_grid.count = {plane.x_count, plane.freq_grid.count[0]};
    SampledFunction v;
    v.grid = plane_grid;
    v.values = plane.values;
    Bupu psi = make_bupu(BupuKind::Tent, plane_grid);
    return wiener_norm(v, psi).norm;
  }
  // d=2: stream the plane integral over the 2D lattice of window positions
  if (variant != S0Variant::L1)
    throw BadKind("wiener-variant S0 norm is d=1 only");
  const Grid& gr = f.grid;
  Grid fg = frequency_grid(gr);
  SampledFunction window = sample_generator(g0, gr, "g0");
  int n0 = gr.count[0], n1 = gr.count[1];
  double acc = 0.0;
  std::vector<Complex> work(gr.size());
  for (int j0 = 0; j0 < n0 / stride; ++j0) {
    int s0 = j0 * stride - n0 / 2;
    for (int j1 = 0; j1 < n1 / stride; ++j1) {
      int s1 = j1 * stride - n1 / 2;
      std::fill(work.begin(), work.end(), Complex(0.0));
      for (int i0 = std::max(0, s0); i0 < std::min(n0, n0 + s0); ++i0)
        for (int i1 = std::max(0, s1); i1 < std::min(n1, n1 + s1); ++i1)
          work[gr.index(i0, i1)] =
              f.values[gr.index(i0, i1)] *
              std::conj(window.values[gr.index(i0 - s0, i1 - s1)]);
      SampledFunction col;
      col.grid = gr;
      col.values = work;
      Spectrum sp = ft(col);
      for (const Complex& v : sp.values) acc += std::abs(v);
    }
  }
  double w = stride * gr.step[0] * stride * gr.step[1] * fg.step[0] * fg.step[1];
  return acc * w;
}

SampledFunction tensor(const SampledFunction& f1, const SampledFunction& f2) {
  if (f1.grid.dim != 1 || f2.grid.dim != 1)
    throw GridMismatch("tensor: both factors must be 1D");
  if (f1.grid.count[0] != f2.grid.count[0] ||
      f1.grid.step[0] != f2.grid.step[0] ||
      f1.grid.origin[0] != f2.grid.origin[0])
    throw GridMismatch("tensor: incompatible 1D grids");
  SampledFunction out;
  out.grid.dim = 2;
  out.grid.origin = {f1.grid.origin[0], f2.grid.origin[0]};
  out.grid.step = {f1.grid.step[0], f2.grid.step[0]};
  out.grid.count = {f1.grid.count[0], f2.grid.count[0]};
  out.label = f1.label + "(x)" + f2.label;
  if (f1.gen && f2.gen) out.gen = std::make_shared<TensorGen>(f1.gen, f2.gen);
  int n = f1.grid.count[0];
  out.values.resize((std::size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.values[out.grid.index(i, j)] = f1.values[i] * f2.values[j];
  return out;
}

SampleSeq sample_integer_lattice(const SampledFunction& f) {
  if (f.grid.dim != 1) throw BadKind("integer-lattice sampling is d=1");
  const Grid& g = f.grid;
  double lo = g.origin[0], hi = g.origin[0] + g.step[0] * g.count[0];
  SampleSeq seq;
  seq.k_min = static_cast<int>(std::ceil(lo));
  int k_max = static_cast<int>(std::ceil(hi)) - 1;
  for (int k = seq.k_min; k <= k_max; ++k) {
    Complex v = value_at(f, vec1(k));
    seq.values.push_back(v);
    seq.abs_sum += std::abs(v);
  }
  return seq;
}

Periodization periodize(const SampledFunction& f) {
  if (f.grid.dim != 1) throw BadKind("periodization is d=1");
  const Grid& g = f.grid;
  int per = commensurate_steps(1.0, g.step[0]);  // samples per unit period
  if (per < 8 || (per & (per - 1)) != 0)
    throw BadGrid("periodization needs 1/h a power of two >= 8");
  double window_len = g.step[0] * g.count[0];
  if (window_len < 4.0)
    throw BadGrid("periodization needs the window to cover several periods");
  Periodization out;
  out.one_period.grid.dim = 1;
  out.one_period.grid.origin = {0.0, 0.0};
  out.one_period.grid.step = {g.step[0], 1.0};
  out.one_period.grid.count = {per, 0};
  out.one_period.label = "periodize(" + f.label + ")";
  out.one_period.values.assign(per, Complex(0.0));
  int k_lo = static_cast<int>(std::floor(g.origin[0])) - 1;
  int k_hi = static_cast<int>(std::ceil(g.origin[0] + window_len)) + 1;
  for (int i = 0; i < per; ++i) {
    double x = i * g.step[0];
    Complex acc = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) acc += value_at(f, vec1(x + k));
    out.one_period.values[i] = acc;
  }
  // Fourier coefficients c_m = int_0^1 P(x) e^{-2 pi i m x} dx by DFT
  std::vector<Complex> bins = out.one_period.values;
  fft_pow2(bins, -1);
  out.m_min = -per / 2;
  out.coefficients.resize(per);
  for (int m = out.m_min; m < out.m_min + per; ++m) {
    Complex c = bins[(m % per + per) % per] * g.step[0];
    out.coefficients[m - out.m_min] = c;
    out.coeff_abs_sum += std::abs(c);
  }
  return out;
}

SampledFunction partial_integral(const SampledFunction& f) {
  if (f.grid.dim != 2) throw BadKind("partial integration needs d=2");
  const Grid& g = f.grid;
  SampledFunction out;
  out.grid.dim = 1;
  out.grid.origin = {g.origin[0], 0.0};
  out.grid.step = {g.step[0], 1.0};
  out.grid.count = {g.count[0], 0};
  out.label = "P1(" + f.label + ")";
  out.values.resize(g.count[0]);
  for (int i = 0; i < g.count[0]; ++i) {
    Complex acc = 0.0;
    for (int j = 0; j < g.count[1]; ++j) acc += f.values[g.index(i, j)];
    out.values[i] = acc * g.step[1];
  }
  return out;
}

}  // namespace mildbank
