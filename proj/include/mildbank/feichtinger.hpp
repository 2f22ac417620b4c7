#pragma once

#include "mildbank/fourier.hpp"
#include "mildbank/grid.hpp"

namespace mildbank {

// Short-time Fourier transform over the time-frequency plane, d=1. The time
// lattice is the grid subsampled by an integer stride; the frequency axis is
// the full frequency grid. values are row-major, one row per lattice point x.
struct TfPlaneFunction {
  Grid time_grid;
  Grid freq_grid;
  int stride = 1;
  int x_count = 0;
  std::vector<Complex> values;

  double x_node(int j) const { return time_grid.node(0, j * stride); }
  Complex at(int j, int k) const {
    return values[(std::size_t)j * freq_grid.count[0] + k];
  }
  // plane quadrature weight per cell
  double cell_weight() const {
    return stride * time_grid.step[0] * freq_grid.step[0];
  }
};

// V_g f(x, w) = ft(f . conj(T_x g))(w) for every lattice x.
TfPlaneFunction stft(const SampledFunction& f, const SampledFunction& g,
                     int stride = 4);

// Single plane point by quadrature, any dimension. g is evaluated through its
// generator tag (or commensurate lookup).
Complex stft_at(const SampledFunction& f, const SampledFunction& g,
                const Vec& x, const Vec& w);

enum class S0Variant { L1, Wiener };

// ||f||_S0 = plane L1 norm of V_{g0} f (L1 variant) or the Wiener norm of
// V_{g0} f over the plane BUPU (wiener variant; d=1 only). The window is the
// standard Gaussian, fixed. d=2 streams the plane integral column by column.
double s0_norm(const SampledFunction& f, S0Variant variant = S0Variant::L1,
               int stride = 4);

// (f1 (x) f2)(x,y) = f1(x) f2(y).
SampledFunction tensor(const SampledFunction& f1, const SampledFunction& f2);

// f sampled on the integer lattice within the window.
struct SampleSeq {
  int k_min = 0;
  std::vector<Complex> values;
  double abs_sum = 0.0;
};
SampleSeq sample_integer_lattice(const SampledFunction& f);

// Periodization sum_k f(x+k) on one period [0,1), plus its Fourier
// coefficients (the A([0,1]) data: absolutely summable for S0 inputs).
struct Periodization {
  SampledFunction one_period;
  std::vector<Complex> coefficients;  // m = m_min .. m_min + size - 1
  int m_min = 0;
  double coeff_abs_sum = 0.0;
};
Periodization periodize(const SampledFunction& f);

// P_1 f(x) = int f(x,y) dy for d=2 input.
SampledFunction partial_integral(const SampledFunction& f);

}  // namespace mildbank
