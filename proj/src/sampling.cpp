#include "mildbank/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mildbank {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc1(double t) {
  double r = std::round(t);
  if (t == r) return r == 0.0 ? 1.0 : 0.0;
  return std::sin(kPi * t) / (kPi * t);
}

// order-r smoothstep: first r-1 derivatives vanish at both ends
double smoothstep(double u, int order) {
  u = std::clamp(u, 0.0, 1.0);
  int n = order - 1;
  double acc = 0.0;
  auto binom = [](int a, int b) {
    double r = 1.0;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  for (int k = 0; k <= n; ++k)
    acc += binom(n + k, k) * binom(2 * n + 1, n - k) * std::pow(-u, k);
  return std::pow(u, n + 1) * acc;
}

}  // namespace

BandSpec make_band_spec(double b, double beta) {
  if (b <= 0 || beta <= 0) throw BadParams("band edges must be positive");
  if (b >= beta / 2)
    throw NoTransitionRoom("passband must sit strictly inside (-beta/2, beta/2)");
  return {b, beta};
}

SampledFunction bandlimit(const SampledFunction& f, const BandSpec& spec) {
  if (f.grid.dim != 1) throw BadGrid("bandlimit is d=1");
  Spectrum s = ft(f);
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    double xi = s.grid.point(i)[0];
    if (std::abs(xi) > spec.b + 1e-12) s.values[i] = 0.0;
  }
  SampledFunction out = ift(s, f.grid);
  out.label = "bandlimit(" + f.label + ")";
  return out;
}

ReconWindow design_window(const BandSpec& spec, const Grid& grid,
                          WindowProfile profile, int order) {
  if (grid.dim != 1) throw BadGrid("design_window is d=1");
  if (order < 1) throw BadParams("profile order must be >= 1");
  ReconWindow w;
  w.spec = spec;
  w.profile = profile;
  w.order = profile == WindowProfile::RaisedCosine ? 2 : order;
  Grid fg = frequency_grid(grid);
  double half = spec.beta / 2;
  if (half >= -fg.origin[0])
    throw BadGrid("frequency window too narrow for the stopband edge");
  w.ghat.grid = fg;
  w.ghat.label = "window^";
  w.ghat.values.resize(fg.size());
  for (std::size_t i = 0; i < fg.size(); ++i) {
    double s = std::abs(fg.point(i)[0]);
    double v;
    if (s <= spec.b)
      v = 1.0;
    else if (s >= half)
      v = 0.0;
    else {
      double u = (half - s) / (half - spec.b);
      v = profile == WindowProfile::RaisedCosine
              ? std::cos(kPi / 2 * (1.0 - u)) * std::cos(kPi / 2 * (1.0 - u))
              : smoothstep(u, order);
    }
    w.ghat.values[i] = v;
  }
  SampledFunction g = ift(w.ghat, grid);
  // real even spectrum: the imaginary residue is pure rounding
  double imag_max = 0.0;
  for (Complex& v : g.values) {
    imag_max = std::max(imag_max, std::abs(v.imag()));
    v = Complex(v.real(), 0.0);
  }
  if (imag_max > 1e-12)
    throw BadGrid("window synthesis produced a non-real kernel");
  g.label = "window";
  w.g = std::move(g);

  // measured tail decay: constant for the advertised order, slope fit
  double c = 0.0;
  std::vector<double> lr, lv;
  for (std::size_t i = 0; i < w.g.values.size(); ++i) {
    double t = std::abs(w.g.grid.point(i)[0]);
    double a = std::abs(w.g.values[i].real());
    if (t >= 4.0 && a > 0) {
      c = std::max(c, a * std::pow(1.0 + t, w.order));
      lr.push_back(std::log(t));
      lv.push_back(std::log(a));
    }
  }
  w.decay_constant = c;
  if (lr.size() > 4) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lr.size(); ++i) { mx += lr[i]; my += lv[i]; }
    mx /= lr.size();
    my /= lr.size();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < lr.size(); ++i) {
      num += (lr[i] - mx) * (lv[i] - my);
      den += (lr[i] - mx) * (lr[i] - mx);
    }
    w.decay_exponent = -num / den;
  }
  return w;
}

SampleSet take_samples(const SampledFunction& f, const BandSpec& spec) {
  if (f.grid.dim != 1) throw BadGrid("take_samples is d=1");
  Spectrum s = ft(f);
  double mass = 0.0;
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (std::abs(s.grid.point(i)[0]) >= spec.beta / 2)
      mass += std::abs(s.values[i]) * s.grid.step[0];
  }
  if (mass > 1e-10)
    throw NyquistViolation("spectrum mass outside the Nyquist band: " +
                               std::to_string(mass),
                           mass);
  double alpha = spec.alpha();
  const Grid& g = f.grid;
  commensurate_steps(alpha, g.step[0]);
  double lo = g.origin[0], hi = g.origin[0] + g.step[0] * g.count[0];
  SampleSet set;
  set.alpha = alpha;
  set.k_min = static_cast<int>(std::ceil(lo / alpha));
  int k_max = static_cast<int>(std::ceil(hi / alpha)) - 1;
  for (int k = set.k_min; k <= k_max; ++k)
    set.values.push_back(value_at(f, vec1(alpha * k)));
  return set;
}

SampledFunction reconstruct(const SampleSet& samples, ReconKernel kernel,
                            const Grid& eval_grid, const ReconWindow* window,
                            double truncation_radius) {
  if (eval_grid.dim != 1) throw BadGrid("reconstruct is d=1");
  if (kernel == ReconKernel::Window && window == nullptr)
    throw BadParams("window kernel needs a designed window");
  if (kernel == ReconKernel::Sinc && std::abs(samples.alpha - 1.0) > 1e-12)
    throw BadParams("sinc kernel requires alpha = 1");
  SampledFunction out = zero_function(eval_grid);
  out.label = "reconstruction";
  double alpha = samples.alpha;
  double len = eval_grid.step[0] * eval_grid.count[0];
  double lo = eval_grid.origin[0];
  for (std::size_t m = 0; m < samples.values.size(); ++m) {
    int k = samples.k_min + static_cast<int>(m);
    if (truncation_radius > 0 && std::abs(k * alpha) > truncation_radius)
      continue;
    Complex v = samples.values[m];
    if (v == Complex(0.0)) continue;
    for (int i = 0; i < eval_grid.count[0]; ++i) {
      double t = eval_grid.node(0, i);
      double u = t - alpha * k;
      Complex kv;
      if (kernel == ReconKernel::Sinc) {
        kv = sinc1(u);
      } else {
        // wrap into the window: the finite model is the torus the FFT uses
        double uw = u - len * std::floor((u - lo) / len);
        kv = value_at(window->g, vec1(uw));
      }
      out.values[i] += alpha * v * kv;
    }
  }
  return out;
}

double alias_identity_residual(const SampledFunction& f,
                               const ReconWindow& window) {
  Spectrum s = ft(f);
  const Grid& fg = s.grid;
  if (!(fg == window.ghat.grid))
    throw GridMismatch("alias residual: window designed on another grid");
  int shift = commensurate_steps(window.spec.beta, fg.step[0]);
  int n = fg.count[0];
  double sup = 0.0;
  for (int i = 0; i < n; ++i) {
    Complex periodized = 0.0;
    for (int k = -(n / shift + 1); k <= n / shift + 1; ++k) {
      int j = i - k * shift;
      if (j >= 0 && j < n) periodized += s.values[j];
    }
    sup = std::max(sup,
                   std::abs(periodized * window.ghat.values[i] - s.values[i]));
  }
  return sup;
}

double central_error(const SampledFunction& recon,
                     const SampledFunction& reference) {
  if (!(recon.grid == reference.grid)) throw GridMismatch("central_error");
  const Grid& g = recon.grid;
  double quarter = g.step[0] * g.count[0] / 4;
  double err = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (std::abs(g.point(i)[0]) <= quarter)
      err = std::max(err, std::abs(recon.values[i] - reference.values[i]));
  }
  return err;
}

}  // namespace mildbank
