#pragma once

#include "mildbank/fourier.hpp"
#include "mildbank/grid.hpp"

namespace mildbank {

// Passband I = [-b, b] inside the Nyquist band (-beta/2, beta/2); samples are
// taken on the lattice alpha Z with alpha = 1/beta.
struct BandSpec {
  double b = 0.5;
  double beta = 1.0;
  double alpha() const { return 1.0 / beta; }
};

BandSpec make_band_spec(double b, double beta);

// Spectral projection onto the passband: ift(ft(f) . 1_I).
SampledFunction bandlimit(const SampledFunction& f, const BandSpec& spec);

enum class WindowProfile { RaisedCosine, Smoothstep };

// Reconstruction window: g^ = 1 on [-b,b], a smooth transition on
// b <= |s| <= beta/2, 0 beyond; g = ift(g^), real and even. The smoothstep
// profile of order r has C^{r-1} junctions, so |g(t)| = O(|t|^{-r}); raised
// cosine is the order-2 default. The measured tail constant and log-log
// decay exponent are recorded.
struct ReconWindow {
  SampledFunction g;
  Spectrum ghat;
  BandSpec spec;
  WindowProfile profile = WindowProfile::RaisedCosine;
  int order = 2;
  double decay_constant = 0.0;  // max over the tail of |g(t)| (1+|t|)^order
  double decay_exponent = 0.0;  // fitted slope of log|g| vs log|t|
};

ReconWindow design_window(const BandSpec& spec, const Grid& grid,
                          WindowProfile profile = WindowProfile::RaisedCosine,
                          int order = 2);

// Samples of f on alpha Z inside the window. Guards the Nyquist condition:
// spectrum mass outside (-beta/2, beta/2) above 1e-10 throws
// NyquistViolation carrying the measured mass.
struct SampleSet {
  double alpha = 1.0;
  int k_min = 0;
  std::vector<Complex> values;
};
SampleSet take_samples(const SampledFunction& f, const BandSpec& spec);

enum class ReconKernel { Sinc, Window };

// f_rec(t) = alpha sum_k v_k g(t - alpha k), the series truncated to
// in-window samples (optionally to |k| <= truncation_radius). The window
// kernel's argument is evaluated circularly on the window, realising the
// finite-window alias identity exactly; the sinc kernel uses the closed form.
SampledFunction reconstruct(const SampleSet& samples, ReconKernel kernel,
                            const Grid& eval_grid,
                            const ReconWindow* window = nullptr,
                            double truncation_radius = 0.0);

// sup over the frequency grid of |(Shah_beta * f^) g^ - f^|, the spectral
// alias identity behind the reconstruction formula.
double alias_identity_residual(const SampledFunction& f,
                               const ReconWindow& window);

// Max reconstruction error over the central half-window against a reference.
double central_error(const SampledFunction& recon,
                     const SampledFunction& reference);

}  // namespace mildbank
