#include "mildbank/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "mildbank/bupu.hpp"
#include "mildbank/corpus.hpp"
#include "mildbank/feichtinger.hpp"
#include "mildbank/fourier.hpp"
#include "mildbank/measures.hpp"
#include "mildbank/mild.hpp"
#include "mildbank/sampling.hpp"
#include "mildbank/systems.hpp"
#include "mildbank/wiener.hpp"

namespace mildbank {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

struct Suite {
  std::vector<CheckResult> checks;
  double tol_scale = 1.0;

  void add(const std::string& name, const std::string& anchor, double residual,
           double tol) {
    checks.push_back({name, anchor, residual, tol * tol_scale,
                      residual <= tol * tol_scale});
  }
  // pass iff a sequence is strictly decreasing; residual is the smallest
  // decrement (negative when the sequence fails to decrease)
  void add_decreasing(const std::string& name, const std::string& anchor,
                      const std::vector<double>& seq) {
    double worst = seq.size() > 1 ? seq[0] : 0.0;
    bool ok = seq.size() > 1;
    for (std::size_t i = 1; i < seq.size(); ++i) {
      worst = std::min(worst, seq[i - 1] - seq[i]);
      if (seq[i] >= seq[i - 1]) ok = false;
    }
    checks.push_back({name, anchor, seq.empty() ? 0.0 : seq.back(),
                      worst, ok});
  }
};

double sup_diff(const SampledFunction& a, const SampledFunction& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

SampledFunction gauss_on(const Grid& g) {
  return sample_named("gaussian", {}, g);
}

// ---------------------------------------------------------------- fourier

void fourier_suite(Suite& s, const RunConfig& cfg) {
  Grid g = cfg.grid();
  SampledFunction g0 = gauss_on(g);

  Spectrum g0h = ft(g0);
  SampledFunction g0_on_freq = gauss_on(g0h.grid);
  s.add("fourier/gaussian-invariance", "Gaussian Fourier invariance",
        sup_diff(g0h, g0_on_freq), 1e-9);

  auto mixtures = seeded_mixtures(cfg.seed, 40, g);
  ResidualReport worst;
  for (int i = 0; i < 20; ++i) {
    ResidualReport r = identity_residuals(mixtures[2 * i], mixtures[2 * i + 1]);
    worst.fundamental = std::max(worst.fundamental, r.fundamental);
    worst.convolution = std::max(worst.convolution, r.convolution);
    worst.parseval = std::max(worst.parseval, r.parseval);
    worst.inversion = std::max(worst.inversion, r.inversion);
  }
  s.add("fourier/fundamental-identity", "fundamental identity of Fourier analysis",
        worst.fundamental, 1e-8);
  s.add("fourier/convolution-theorem", "convolution theorem",
        worst.convolution, 1e-8);
  s.add("fourier/parseval", "Parseval identity", worst.parseval, 1e-8);
  s.add("fourier/inversion", "Fourier inversion formula", worst.inversion, 1e-8);

  // exchange rules under translation and modulation
  double xr = 0.0;
  double freq_step = 1.0 / (g.count[0] * g.step[0]);
  for (int i = 0; i < 4; ++i) {
    const SampledFunction& f = mixtures[i];
    double x = (i + 1) * 0.5;
    double w = (i + 1) * 0.25;
    xr = std::max(xr, sup_diff(ft(translate(f, vec1(x))),
                               modulate(ft(f), vec1(-x))));
    double wq = std::round(w / freq_step) * freq_step;
    xr = std::max(xr, sup_diff(ft(modulate(f, vec1(wq))),
                               translate(ft(f), vec1(wq))));
  }
  s.add("fourier/shift-exchange", "translation/modulation exchange under ft",
        xr, 1e-10);

  double dr = 0.0;
  for (double rho : {2.0, 4.0})
    dr = std::max(dr, sup_diff(ft(stretch(g0, rho)), value_dilate(g0h, rho)));
  s.add("fourier/dilation-exchange", "mass/value dilation exchange under ft",
        dr, 1e-9);

  // Riemann-sum refinement
  Grid g2 = make_grid(cfg.h / 2, 2 * cfg.n);
  double refine = std::abs(integrate(gauss_on(g2)) - integrate(g0));
  s.add("fourier/riemann-refinement", "Riemann-sum refinement stability",
        refine, 1e-10);

  // Dirac approximation S_rho g0 * f -> f
  std::vector<double> gaps;
  for (double rho : {0.5, 0.25, 0.125})
    gaps.push_back(sup_diff(convolve(stretch(g0, rho), g0), g0));
  s.add_decreasing("fourier/dirac-approximation",
                   "Dirac approximation by compressed Gaussians", gaps);

  // Fourier-invariant-space score: W norm of f plus W norm of ft f,
  // refinement-stable at the discrete-sup convergence rate O(h^2)
  Bupu psi = make_bupu(BupuKind::Tent, g);
  Bupu psi_f = make_bupu(BupuKind::Tent, g0h.grid);
  double score = wiener_norm(g0, psi).norm + wiener_norm(g0h, psi_f).norm;
  Bupu psi2 = make_bupu(BupuKind::Tent, g2);
  Spectrum g0h2 = ft(gauss_on(g2));
  Bupu psi2f = make_bupu(BupuKind::Tent, g0h2.grid);
  double score2 = wiener_norm(gauss_on(g2), psi2).norm +
                  wiener_norm(g0h2, psi2f).norm;
  s.add("fourier/invariant-space-score", "time+frequency Wiener score stability",
        std::abs(score - score2) / score, 1e-2);
}

// ---------------------------------------------------------------- poisson

void poisson_suite(Suite& s, const RunConfig& cfg) {
  Grid g = cfg.grid();
  LatticeMatrix I1 = scaled_identity(1, 1.0);

  double theta = 0.0;
  for (double a : {0.5, 2.0, 3.0}) {
    double w = 1.0 / std::sqrt(a);
    SampledFunction f =
        sample_named("gaussian_mixture", {1.0, 0.0, 0.0, w}, g);
    theta = std::max(theta, poisson(f, I1, 0).gap());
  }
  s.add("poisson/theta-identity", "Poisson summation formula", theta, 1e-12);

  SampledFunction g0 = gauss_on(g);
  SeededRng rng(cfg.seed + 7);
  double freq_step = 1.0 / (g.count[0] * g.step[0]);
  double shifted = 0.0;
  for (int i = 0; i < 5; ++i) {
    Vec x = vec1(rng.quantized(-2.0, 2.0, g.step[0]));
    Vec w = vec1(rng.quantized(-2.0, 2.0, freq_step));
    shifted = std::max(shifted, poisson(g0, I1, 0, x, w).gap());
  }
  s.add("poisson/shifted-form", "Poisson summation for time-frequency shifts",
        shifted, 1e-10);

  Grid g2 = make_grid(cfg.h, 256, 2);
  SampledFunction gg = tensor(gauss_on(make_grid(cfg.h, 256)),
                              gauss_on(make_grid(cfg.h, 256)));
  LatticeMatrix I2 = scaled_identity(2, 1.0);
  s.add("poisson/partial-form", "mixed integral/sum Poisson formula",
        poisson(gg, I2, 1).gap(), 1e-10);
  (void)g2;

  double gauss_form = 0.0;
  gauss_form = std::max(gauss_form,
                        poisson_gauss(I1, vec1(0.25), vec1(0.125)).gap());
  gauss_form = std::max(gauss_form,
                        poisson_gauss(scaled_identity(1, 2.0), vec1(0.5)).gap());
  s.add("poisson/gauss-theta", "Gaussian theta-series identity", gauss_form,
        1e-12);
}

// ---------------------------------------------------------------- wiener

void wiener_suite(Suite& s, const RunConfig& cfg) {
  Grid g = cfg.grid();
  Bupu psi = make_bupu(BupuKind::Tent, g);

  std::vector<SampledFunction> corpus = seeded_mixtures(cfg.seed, 20, g);
  {
    auto tents = seeded_tents(cfg.seed + 1, 5, g);
    auto mods = seeded_modulated_gaussians(cfg.seed + 2, 5, g);
    corpus.insert(corpus.end(), tents.begin(), tents.end());
    corpus.insert(corpus.end(), mods.begin(), mods.end());
  }
  std::vector<double> wn;
  for (const SampledFunction& f : corpus)
    wn.push_back(wiener_norm(f, psi).norm);

  double solidity = 0.0, ideal = 0.0, algebra = 0.0, modiso = 0.0,
         transl = 0.0, sandwich_lo = 1e300, sandwich_hi = 0.0, intb = 0.0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const SampledFunction& f = corpus[i];
    // solidity on |f|, Re f, Im f
    SampledFunction mods[3] = {f, f, f};
    for (std::size_t k = 0; k < f.values.size(); ++k) {
      mods[0].values[k] = std::abs(f.values[k]);
      mods[1].values[k] = f.values[k].real();
      mods[2].values[k] = f.values[k].imag();
    }
    for (auto& m : mods) {
      m.gen = nullptr;
      solidity = std::max(solidity, wiener_norm(m, psi).norm - wn[i]);
    }
    const SampledFunction& h = corpus[(i + 7) % corpus.size()];
    double prod = wiener_norm(pointwise(h, f, PwKind::Mul), psi).norm;
    ideal = std::max(ideal, prod - norms(h).sup * wn[i]);
    algebra = std::max(algebra, prod - wn[(i + 7) % corpus.size()] * wn[i]);
    modiso = std::max(
        modiso, std::abs(wiener_norm(modulate(f, vec1(0.375)), psi).norm - wn[i]));
    double tr = wiener_norm(translate(f, vec1(1.0 + (i % 3) * 0.5)), psi).norm;
    transl = std::max(transl, tr / wn[i]);
    double fs = wiener_norm(envelope(f, EnvelopeKind::MaxFn), psi).norm / wn[i];
    sandwich_lo = std::min(sandwich_lo, fs);
    sandwich_hi = std::max(sandwich_hi, fs);
    intb = std::max(intb, std::abs(integrate(f)) - norms(f).l1);
    intb = std::max(intb, norms(f).l1 - wn[i]);
  }
  s.add("wiener/solidity", "Wiener norm solidity", solidity, 1e-12);
  s.add("wiener/ideal-bound", "pointwise ideal bound sup(h).||f||_W", ideal,
        1e-12);
  s.add("wiener/algebra-bound", "pointwise Banach algebra bound", algebra,
        1e-12);
  s.add("wiener/modulation-isometry", "modulation isometry of the Wiener norm",
        modiso, 1e-12);
  s.add("wiener/translation-ratio", "translation bound 4^d on the Wiener norm",
        std::max(0.0, transl - 4.0), 1e-12);
  s.add("wiener/maximal-sandwich-lower",
        "local maximal function dominates: ||f||_W <= ||f#||_W",
        std::max(0.0, 1.0 - sandwich_lo), 1e-12);
  s.add("wiener/maximal-sandwich-upper",
        "local maximal function bound ||f#||_W <= 8^d ||f||_W",
        std::max(0.0, sandwich_hi - 8.0), 1e-12);
  s.add("wiener/integral-bound", "|int f| <= ||f||_1 <= ||f||_W", intb, 1e-12);

  SampledFunction tent = sample_named("tent", {}, g);
  s.add("wiener/tent-closed-form", "tent Wiener norm 3/2",
        std::abs(wiener_norm(tent, psi).norm - 1.5), 1e-9);

  SampledFunction g0 = gauss_on(g);
  std::vector<double> osc_norms;
  for (double d : {0.5, 0.25, 0.125, 0.0625})
    osc_norms.push_back(
        wiener_norm(envelope(g0, EnvelopeKind::Osc, d), psi).norm);
  s.add_decreasing("wiener/oscillation-decay",
                   "oscillation Wiener norm vanishes with the radius",
                   osc_norms);

  // convolution bounds
  double convb = 0.0, l1b = 0.0;
  for (int i = 0; i < 5; ++i) {
    const SampledFunction& k = corpus[i];
    const SampledFunction& f = corpus[i + 5];
    SampledFunction kf = convolve(k, f);
    convb = std::max(convb, wiener_norm(kf, psi).norm -
                                4.0 * wiener_norm(k, psi).norm *
                                    wiener_norm(f, psi).norm);
    l1b = std::max(l1b, norms(kf).l1 - norms(k).l1 * norms(f).l1);
  }
  s.add("wiener/convolution-bound", "convolution Banach algebra bound 4^d",
        convb, 1e-10);
  s.add("wiener/l1-convolution-bound", "L1 convolution inequality", l1b, 1e-10);

  double ck = support_constant(psi);
  s.add("wiener/support-constant", "compact-support norm constant c_K <= 3^d",
        std::max(0.0, ck - 3.0), 1e-12);
  double measconv = 0.0;
  {
    BoundedMeasure mu = make_measure({{vec1(0.5), Complex(1.5, 0)},
                                      {vec1(-1.25), Complex(0, -0.5)}});
    for (int i = 0; i < 3; ++i) {
      const SampledFunction& f = corpus[i];
      double lhs = wiener_norm(measure_convolve(mu, f), psi).norm;
      measconv = std::max(measconv, lhs - ck * measure_norm(mu) *
                                              wiener_norm(f, psi).norm);
    }
  }
  s.add("wiener/measure-convolution-bound",
        "measure convolution bound c_K ||mu|| ||f||_W", measconv, 1e-10);

  // tent vs box variant mutual bound
  double ratio_hi = 0.0, ratio_lo = 1e300;
  for (int i = 0; i < 8; ++i) {
    double r = wiener_norm(corpus[i], psi).norm /
               wiener_norm(corpus[i], psi, WienerVariant::Box).norm;
    ratio_hi = std::max(ratio_hi, r);
    ratio_lo = std::min(ratio_lo, r);
  }
  s.add("wiener/variant-equivalence",
        "tent and box amalgam norms mutually bounded by 4^d",
        std::max(ratio_hi - 4.0, 1.0 / (4.0 * ratio_lo) - 1.0), 1e-12);

  // restriction inequality on separable products
  Grid g1 = make_grid(cfg.h, 256);
  Grid gg = make_grid(cfg.h, 256, 2);
  Bupu psi1 = make_bupu(BupuKind::Tent, g1);
  Bupu psi2 = make_bupu(BupuKind::Tent, gg);
  auto facs = seeded_mixtures(cfg.seed + 3, 10, g1);
  double restr = 0.0;
  for (int i = 0; i < 5; ++i) {
    SampledFunction prod = tensor(facs[2 * i], facs[2 * i + 1]);
    double full = wiener_norm(prod, psi2).norm;
    double slice = wiener_norm(restrict_slice(prod), psi1).norm;
    restr = std::max(restr, slice - full);
  }
  s.add("wiener/restriction", "restriction does not increase the Wiener norm",
        restr, 1e-10);
}

// ---------------------------------------------------------------- measures

void measures_suite(Suite& s, const RunConfig& cfg) {
  Grid g = cfg.grid();
  Bupu psi = make_bupu(BupuKind::Tent, g);
  auto battery = seeded_mixtures(cfg.seed + 11, 32, g);
  {
    auto tents = seeded_tents(cfg.seed + 12, 8, g);
    battery.insert(battery.end(), tents.begin(), tents.end());
  }

  auto mus = seeded_measures(cfg.seed, 10, g);
  double norm_gap = 0.0, action_gap = 0.0;
  for (const BoundedMeasure& mu : mus) {
    auto pieces = measure_bupu_decompose(mu, psi);
    double sum = 0.0;
    for (const auto& p : pieces) sum += measure_norm(p);
    norm_gap = std::max(norm_gap, std::abs(sum - measure_norm(mu)));
    for (int i = 0; i < 4; ++i) {
      const SampledFunction& f = battery[i * 9];
      Complex whole = measure_apply(mu, f);
      Complex parts = 0.0;
      for (const auto& p : pieces) parts += measure_apply(p, f);
      action_gap = std::max(action_gap, std::abs(whole - parts));
    }
  }
  s.add("measures/decomposition-norms",
        "absolutely convergent BUPU series of a measure", norm_gap, 1e-12);
  s.add("measures/decomposition-action", "BUPU pieces sum back to the measure",
        action_gap, 1e-12);

  // delta convolution is translation, bitwise
  double dconv = 0.0;
  for (int i = 0; i < 5; ++i) {
    Vec x = vec1((i - 2) * 0.75);
    dconv = std::max(dconv, sup_diff(measure_convolve(dirac_measure(x),
                                                      battery[i]),
                                     translate(battery[i], x)));
  }
  s.add("measures/delta-convolution", "delta convolution is translation",
        dconv, 0.0);

  // natural rules and operator consistency on an embedded function
  double rules = 0.0;
  {
    Vec x = vec1(0.5), y = vec1(-1.25);
    const SampledFunction& f = battery[3];
    rules = std::max(rules,
                     std::abs(measure_apply(measure_act(MeasureOp::Translate,
                                                        {y[0]},
                                                        dirac_measure(x)),
                                            f) -
                              value_at(f, vec1(x[0] + y[0]))));
    rules = std::max(
        rules, std::abs(measure_apply(measure_act(MeasureOp::Flip, {},
                                                  dirac_measure(x)),
                                      f) -
                        value_at(f, vec1(-x[0]))));
    rules = std::max(
        rules,
        std::abs(measure_apply(measure_mul(dirac_measure(x), battery[5]), f) -
                 value_at(battery[5], x) * value_at(f, x)));
    SampledFunction gfun = battery[7];
    BoundedMeasure mug = embed_measure(gfun);
    struct OpCase {
      MeasureOp op;
      std::vector<double> params;
      SampledFunction acted;
    };
    std::vector<OpCase> cases;
    cases.push_back({MeasureOp::Conjugate, {}, conjugate(gfun)});
    cases.push_back({MeasureOp::Flip, {}, flip(gfun)});
    cases.push_back({MeasureOp::Translate, {0.5}, translate(gfun, vec1(0.5))});
    cases.push_back({MeasureOp::Modulate, {0.75}, modulate(gfun, vec1(0.75))});
    cases.push_back({MeasureOp::MatrixDilate, {2.0},
                     act(OpKind::MatrixDilate, {2.0}, gfun)});
    for (auto& c : cases) {
      BoundedMeasure lhs = measure_act(c.op, c.params, mug);
      BoundedMeasure rhs = embed_measure(c.acted);
      for (int i = 0; i < 4; ++i) {
        const SampledFunction& f = battery[i * 5 + 1];
        rules = std::max(rules, std::abs(measure_apply(lhs, f) -
                                         measure_apply(rhs, f)));
      }
    }
  }
  s.add("measures/operator-consistency",
        "measure operators match the function operators", rules, 1e-10);

  // product norm bound and translation commutation
  double prodb = 0.0, commut = 0.0, embed_gap = 0.0, plateau_gap = 0.0;
  for (int i = 0; i < 5; ++i) {
    const BoundedMeasure& mu = mus[i];
    const SampledFunction& h = battery[i * 3];
    prodb = std::max(prodb, measure_norm(measure_mul(mu, h)) -
                                norms(h).sup * measure_norm(mu));
    const SampledFunction& f = battery[i * 4 + 2];
    Vec x = vec1(1.5);
    commut = std::max(commut,
                      sup_diff(measure_convolve(mu, translate(f, x)),
                               translate(measure_convolve(mu, f), x)));
    const SampledFunction& gfun = battery[i + 20];
    embed_gap = std::max(
        embed_gap, std::abs(measure_apply(embed_measure(gfun), f) -
                            inner(f, conjugate(gfun))));
  }
  s.add("measures/product-norm-bound", "||mu.h|| <= sup(h) ||mu||", prodb,
        1e-12);
  s.add("measures/convolution-translation",
        "measure convolution commutes with translation", commut, 1e-12);
  s.add("measures/embedding-consistency",
        "embedded functions act by the inner product", embed_gap, 1e-12);

  // plateau: a large enough finite BUPU sum captures the measure
  {
    SampledFunction plateau = zero_function(g);
    for_each_cell(psi, [&](const std::array<int, 2>& n) {
      if (std::abs(bupu_node(psi, n)[0]) > 16.0) return;
      CellSupport cs = bupu_support(psi, n);
      for (int i = cs.lo[0]; i < cs.hi[0]; ++i)
        plateau.values[i] += bupu_value(psi, n, g.point(i));
    });
    for (int i = 0; i < 5; ++i) {
      const BoundedMeasure& mu = mus[i];
      BoundedMeasure mup = measure_mul(mu, plateau);
      for (int j = 0; j < 4; ++j) {
        const SampledFunction& f = battery[j * 7];
        plateau_gap = std::max(plateau_gap,
                               std::abs(measure_apply(mu, f) -
                                        measure_apply(mup, f)));
      }
    }
  }
  s.add("measures/plateau", "plateau-type truncation captures the measure",
        plateau_gap, 1e-8);
}

// ------------------------------------------------------------- feichtinger

void feichtinger_suite(Suite& s, const RunConfig& cfg) {
  Grid g = cfg.grid();
  SampledFunction g0 = gauss_on(g);

  s.add("feichtinger/gauss-s0-norm", "S0 norm of the standard Gaussian",
        std::abs(s0_norm(g0) - kSqrt2), 1e-6);
  s.add("feichtinger/stft-value", "Gaussian autocorrelation STFT value 2^{-1/2}",
        std::abs(stft_at(g0, g0, {0, 0}, {0, 0}) - Complex(1.0 / kSqrt2)),
        1e-9);

  auto corpus = seeded_mixtures(cfg.seed + 21, 8, g);
  {
    auto mods = seeded_modulated_gaussians(cfg.seed + 22, 4, g);
    corpus.insert(corpus.end(), mods.begin(), mods.end());
  }
  double freq_step = 1.0 / (g.count[0] * g.step[0]);
  double tf_iso = 0.0, ft_iso = 0.0, cf_iso = 0.0;
  double ratio_lo = 1e300, ratio_hi = 0.0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const SampledFunction& f = corpus[i];
    double base = s0_norm(f);
    double x = (static_cast<int>(i % 5) - 2) * 0.5;
    double w = std::round(((static_cast<int>(i % 7) - 3) * 0.25) / freq_step) *
               freq_step;
    double shifted = s0_norm(modulate(translate(f, vec1(x)), vec1(w)));
    tf_iso = std::max(tf_iso, std::abs(shifted - base) / base);
    ft_iso = std::max(ft_iso, std::abs(s0_norm(ft(f)) - base) / base);
    cf_iso = std::max(cf_iso, std::abs(s0_norm(conjugate(f)) - base) / base);
    cf_iso = std::max(cf_iso, std::abs(s0_norm(flip(f)) - base) / base);
    double r = s0_norm(f, S0Variant::Wiener) / base;
    ratio_lo = std::min(ratio_lo, r);
    ratio_hi = std::max(ratio_hi, r);
  }
  s.add("feichtinger/tf-shift-isometry",
        "time-frequency shifts are S0 isometries", tf_iso, 1e-6);
  s.add("feichtinger/fourier-isometry", "Fourier transform is an S0 isometry",
        ft_iso, 1e-6);
  s.add("feichtinger/conjugation-flip-isometry",
        "conjugation and flip are S0 isometries", cf_iso, 1e-8);
  s.add("feichtinger/norm-variant-ratio",
        "L1 and amalgam S0 norms mutually equivalent",
        ratio_hi / ratio_lo - 1.0, 15.0);

  // covariance of the STFT under TF shifts
  {
    const SampledFunction& f = corpus[0];
    SampledFunction window = g0;
    double x = 1.0;
    double w = std::round(0.5 / freq_step) * freq_step;
    TfPlaneFunction v = stft(f, window, 4);
    TfPlaneFunction vs = stft(modulate(translate(f, vec1(x)), vec1(w)), window, 4);
    int xs = static_cast<int>(std::round(x / (v.stride * g.step[0])));
    int ws = static_cast<int>(std::round(w / freq_step));
    double cov = 0.0;
    int nf = v.freq_grid.count[0];
    for (int j = 0; j < v.x_count; ++j) {
      for (int k = 0; k < nf; ++k) {
        int js = j - xs, ks = k - ws;
        Complex ref = 0.0;
        if (js >= 0 && js < v.x_count && ks >= 0 && ks < nf) {
          double sfreq = v.freq_grid.node(0, k);
          ref = std::polar(1.0, 2 * kPi * x * (w - sfreq)) * v.at(js, ks);
        }
        cov = std::max(cov, std::abs(vs.at(j, k) - ref));
      }
    }
    s.add("feichtinger/stft-covariance",
          "STFT covariance under time-frequency shifts", cov, 1e-9);
  }

  // algebra bounds
  double mulb = 0.0, convb = 0.0;
  for (int i = 0; i < 3; ++i) {
    const SampledFunction& a = corpus[i];
    const SampledFunction& b = corpus[i + 3];
    double na = s0_norm(a), nb = s0_norm(b);
    mulb = std::max(mulb, s0_norm(pointwise(a, b, PwKind::Mul)) - na * nb);
    convb = std::max(convb, s0_norm(convolve(a, b)) - na * nb);
  }
  s.add("feichtinger/multiplication-algebra",
        "pointwise multiplication S0 algebra bound", mulb, 1e-9);
  s.add("feichtinger/convolution-algebra", "convolution S0 algebra bound",
        convb, 1e-9);

  // tensor factorization
  {
    Grid gs = make_grid(1.0 / 8, 128);
    SampledFunction a = gauss_on(gs);
    SampledFunction prod = tensor(a, a);
    s.add("feichtinger/tensor-s0-norm",
          "S0 norm of a separable tensor factorises",
          std::abs(s0_norm(prod) - 2.0), 1e-6);
    auto f1 = seeded_mixtures(cfg.seed + 23, 2, gs);
    SampledFunction fp = tensor(f1[0], f1[1]);
    SampledFunction window2 = tensor(a, a);
    double fact = 0.0;
    for (int i = 0; i < 4; ++i) {
      Vec x = {0.5 * i - 1.0, 0.5 - 0.25 * i};
      Vec w = {0.25 * i - 0.5, 0.125 * i};
      Complex lhs = stft_at(fp, window2, x, w);
      Complex rhs = stft_at(f1[0], a, vec1(x[0]), vec1(w[0])) *
                    stft_at(f1[1], a, vec1(x[1]), vec1(w[1]));
      fact = std::max(fact, std::abs(lhs - rhs));
    }
    s.add("feichtinger/tensor-stft-factorisation",
          "STFT of separable tensors factorises", fact, 1e-9);
  }

  // structure maps
  {
    SampleSeq seq = sample_integer_lattice(g0);
    PoissonResult pr = poisson(g0, scaled_identity(1, 1.0), 0);
    Complex lattice_sum = 0.0;
    for (const Complex& v : seq.values) lattice_sum += v;
    s.add("feichtinger/sampling-map",
          "integer sampling matches the lattice sum",
          std::abs(lattice_sum - pr.lhs), 1e-12);
    double c_ratio = seq.abs_sum / s0_norm(g0);
    s.add("feichtinger/sampling-l1-bound",
          "sampled sequence l1-bounded by the S0 norm (ratio reported)",
          c_ratio, 10.0);

    SampledFunction tent = sample_named("tent", {}, g);
    Periodization per = periodize(tent);
    double pres = std::abs(per.one_period.values[0] - Complex(1.0));
    int quarter = per.one_period.grid.count[0] / 4;
    pres = std::max(pres,
                    std::abs(per.one_period.values[quarter] - Complex(0.5)));
    s.add("feichtinger/periodization-values",
          "tent periodization point values", pres, 1e-12);
    s.add("feichtinger/periodization-coefficients",
          "periodized Fourier coefficients absolutely summable (ratio)",
          per.coeff_abs_sum / s0_norm(tent), 10.0);

    Grid gs = make_grid(cfg.h, 256);
    SampledFunction a = gauss_on(gs);
    SampledFunction prod = tensor(a, a);
    s.add("feichtinger/partial-integration",
          "partial integration of the separable Gaussian",
          sup_diff(partial_integral(prod), a), 1e-10);
  }
}

// ---------------------------------------------------------------- mild

struct NamedDist {
  std::string name;
  MildDistribution sigma;
  bool spectrally_concentrated_battery;  // comb-in-frequency needs it
};

void mild_suite(Suite& s, const RunConfig& cfg) {
  Grid g = cfg.grid();
  auto battery = standard_battery(cfg.seed, g);
  auto smooth = seeded_mixtures(cfg.seed, 16, g);
  {
    auto mods = seeded_modulated_gaussians(cfg.seed + 2, 4, g);
    smooth.insert(smooth.end(), mods.begin(), mods.end());
  }

  std::vector<NamedDist> dists;
  dists.push_back({"atom", dirac_dist(vec1(0.5), Complex(1.5, -0.5)), false});
  dists.push_back({"comb", shah_dist(scaled_identity(1, 2.0)), true});
  dists.push_back(
      {"comb-shifted",
       dist_act(DistOp::Modulate, {0.25},
                dist_act(DistOp::Translate, {0.5},
                         shah_dist(scaled_identity(1, 2.0)))),
       true});
  dists.push_back({"pure-frequency", pure_freq_dist(vec1(0.75)), false});
  dists.push_back({"regular", embed_dist(smooth[0]), false});

  // dual pairing of the extended Fourier transform
  double ftgap = 0.0;
  for (const NamedDist& nd : dists) {
    MildDistribution hat = dist_ft(nd.sigma);
    const auto& testers = nd.spectrally_concentrated_battery ? smooth : battery;
    for (const SampledFunction& f : testers) {
      Complex lhs = dist_apply(hat, f);
      Complex rhs = dist_apply(nd.sigma, ft(f));
      ftgap = std::max(ftgap, std::abs(lhs - rhs));
    }
  }
  s.add("mild/fourier-dual-pairing",
        "extended Fourier transform matches its adjoint definition", ftgap,
        1e-9);

  // dual pairing of the other extended operators
  double opgap = 0.0;
  struct OpSpec {
    DistOp op;
    std::vector<double> params;
  };
  std::vector<OpSpec> ops = {{DistOp::Translate, {0.5}},
                             {DistOp::Modulate, {0.75}},
                             {DistOp::Flip, {}},
                             {DistOp::Conjugate, {}},
                             {DistOp::MatrixDilate, {2.0}}};
  for (const NamedDist& nd : dists) {
    for (const OpSpec& op : ops) {
      MildDistribution acted = dist_act(op.op, op.params, nd.sigma);
      for (int i = 0; i < 8; ++i) {
        const SampledFunction& f = battery[i * 5];
        Complex lhs = dist_apply(acted, f);
        Complex rhs;
        if (op.op == DistOp::Conjugate) {
          rhs = std::conj(dist_apply(nd.sigma, conjugate(f)));
        } else {
          rhs = dist_apply(nd.sigma, dist_adjoint_arg(op.op, op.params, f));
        }
        opgap = std::max(opgap, std::abs(lhs - rhs));
      }
    }
  }
  s.add("mild/operator-dual-pairing",
        "extended operators match their adjoint definitions", opgap, 1e-9);

  // comb transform: F(Shah_2) = (1/2) Shah_{1/2} in action
  {
    MildDistribution lhs = dist_ft(shah_dist(scaled_identity(1, 2.0)));
    MildDistribution rhs = shah_dist(scaled_identity(1, 0.5), 0.5);
    s.add("mild/comb-transform", "comb transforms to the reciprocal comb",
          wstar_gap(lhs, rhs, smooth), 1e-10);
  }

  // exchange identities between convolution and multiplication
  double exch = 0.0;
  {
    SampledFunction win = gauss_on(g);
    std::vector<MildDistribution> sigmas = {
        dirac_dist(vec1(0.5), Complex(0.5, 1.0)),
        shah_dist(scaled_identity(1, 2.0))};
    for (const MildDistribution& sigma : sigmas) {
      SampledFunction conv = dist_convolve(sigma, win);
      MildDistribution lhs1 = dist_ft(embed_dist(conv));
      MildDistribution rhs1 = dist_mul(dist_ft(sigma), ft(win));
      MildDistribution lhs2 = dist_ft(dist_mul(sigma, win));
      MildDistribution rhs2 = embed_dist(dist_convolve(dist_ft(sigma), ft(win)));
      for (int i = 0; i < 10; ++i) {
        const SampledFunction& f = smooth[i];
        exch = std::max(exch, std::abs(dist_apply(lhs1, f) -
                                       dist_apply(rhs1, f)));
        exch = std::max(exch, std::abs(dist_apply(lhs2, f) -
                                       dist_apply(rhs2, f)));
      }
    }
  }
  s.add("mild/convolution-multiplication-exchange",
        "transform exchanges convolution and multiplication", exch, 1e-9);

  // linearity and the period-4 transform
  {
    double lin = 0.0;
    MildDistribution both = mild_sum(Complex(2.0, 1.0), dists[0].sigma,
                                     Complex(0.0, -3.0), dists[4].sigma);
    for (int i = 0; i < 8; ++i) {
      const SampledFunction& f = battery[i * 3];
      Complex lhs = dist_apply(both, f);
      Complex rhs = Complex(2.0, 1.0) * dist_apply(dists[0].sigma, f) +
                    Complex(0.0, -3.0) * dist_apply(dists[4].sigma, f);
      lin = std::max(lin, std::abs(lhs - rhs));
    }
    s.add("mild/linearity", "linearity of the action", lin, 1e-12);

    double invol = 0.0;
    for (const NamedDist& nd : dists) {
      MildDistribution four =
          dist_ft(dist_ft(dist_ft(dist_ft(nd.sigma))));
      const auto& testers = nd.spectrally_concentrated_battery ? smooth : battery;
      for (int i = 0; i < 6; ++i) {
        const SampledFunction& f = testers[i * 3];
        invol = std::max(invol, std::abs(dist_apply(four, f) -
                                         dist_apply(nd.sigma, f)));
      }
    }
    s.add("mild/transform-period-four",
          "fourth power of the transform is the identity", invol, 1e-8);
  }

  // measure embedding and the extension property
  {
    auto mus = seeded_measures(cfg.seed + 31, 4, g);
    double emb = 0.0;
    for (const BoundedMeasure& mu : mus) {
      MildDistribution lifted = mild_from_measure(mu);
      for (int i = 0; i < 6; ++i) {
        const SampledFunction& f = battery[i * 7];
        emb = std::max(emb, std::abs(dist_apply(lifted, f) -
                                     measure_apply(mu, f)));
      }
    }
    s.add("mild/measure-embedding",
          "bounded measures embed with identical action", emb, 1e-12);

    double ext = 0.0;
    SampledFunction gfun = smooth[1];
    struct ExtCase {
      DistOp op;
      std::vector<double> params;
      SampledFunction acted;
    };
    std::vector<ExtCase> cases;
    cases.push_back({DistOp::Translate, {0.5}, translate(gfun, vec1(0.5))});
    cases.push_back({DistOp::Modulate, {0.75}, modulate(gfun, vec1(0.75))});
    cases.push_back({DistOp::Flip, {}, flip(gfun)});
    cases.push_back({DistOp::Conjugate, {}, conjugate(gfun)});
    cases.push_back({DistOp::MatrixDilate, {0.5},
                     act(OpKind::MatrixDilate, {0.5}, gfun)});
    for (const ExtCase& c : cases) {
      MildDistribution lhs = dist_act(c.op, c.params, embed_dist(gfun));
      MildDistribution rhs = embed_dist(c.acted);
      for (int i = 0; i < 6; ++i) {
        const SampledFunction& f = battery[i * 5 + 2];
        ext = std::max(ext,
                       std::abs(dist_apply(lhs, f) - dist_apply(rhs, f)));
      }
    }
    s.add("mild/extension-property",
          "extended operators restrict to the function operators", ext, 1e-10);
  }

  // chirp: transform measured in action against the reflected chirp
  {
    Grid cg = make_grid(1.0 / 128, 4096);
    auto cbattery = seeded_mixtures(cfg.seed + 41, 8, cg);
    MildDistribution ch = chirp_dist(1.0);
    MildDistribution ch_hat = dist_ft(ch);
    MildDistribution ch_reflect = chirp_dist(-1.0);
    Complex phase = 0.0;
    double constancy = 0.0;
    for (int i = 0; i < 8; ++i) {
      Complex num = dist_apply(ch_hat, cbattery[i]);
      Complex den = dist_apply(ch_reflect, cbattery[i]);
      Complex r = num / den;
      if (i == 0) phase = r;
      constancy = std::max(constancy, std::abs(r - phase));
    }
    s.add("mild/chirp-transform-phase",
          "chirp transform is the reflected chirp up to one constant phase",
          constancy, 1e-6);
    s.add("mild/chirp-phase-value",
          "measured chirp phase constant e^{i pi/4}",
          std::abs(phase - std::polar(1.0, kPi / 4)), 1e-6);
  }

  // weak-* refinement sequences on the fine grid
  {
    Grid wg = make_grid(1.0 / 64, 4096);
    auto wb = standard_battery(cfg.seed, wg);
    SampledFunction g0w = gauss_on(wg);
    MildDistribution delta0 = dirac_dist({0, 0});

    std::vector<double> gaps;
    for (double rho : {0.5, 0.25, 0.125, 0.0625})
      gaps.push_back(wstar_gap(embed_dist(stretch(g0w, rho)), delta0, wb));
    s.add_decreasing("mild/wstar-dirac-approximation",
                     "compressed Gaussians converge to the Dirac in action",
                     gaps);

    gaps.clear();
    for (int n = 2; n <= 5; ++n)
      gaps.push_back(wstar_gap(dirac_dist(vec1(1.0 / n)), delta0, wb));
    s.add_decreasing("mild/wstar-moving-atoms",
                     "moving atoms converge to the Dirac in action", gaps);

    gaps.clear();
    MildDistribution full = shah_dist(scaled_identity(1, 1.0));
    for (int radius : {1, 2, 3, 4}) {
      MildDistribution truncated;
      for (int k = -radius; k <= radius; ++k)
        truncated.comps.push_back(AtomComp{vec1(double(k)), 1.0});
      gaps.push_back(wstar_gap(truncated, full, wb));
    }
    s.add_decreasing("mild/wstar-truncated-combs",
                     "truncated combs converge to the comb in action", gaps);
  }
}

// ---------------------------------------------------------------- sampling

void sampling_suite(Suite& s, const RunConfig& cfg) {
  Grid g = cfg.grid();
  SampledFunction g0 = gauss_on(g);
  BandSpec spec = make_band_spec(0.4, 1.0);
  ReconWindow win = design_window(spec, g);

  SampledFunction f = bandlimit(g0, spec);
  // spectral projection sanity
  {
    Spectrum sf = ft(f);
    double outside = 0.0;
    for (std::size_t i = 0; i < sf.values.size(); ++i)
      if (std::abs(sf.grid.point(i)[0]) > spec.b + sf.grid.step[0])
        outside = std::max(outside, std::abs(sf.values[i]));
    s.add("sampling/bandlimit-support", "projected spectrum vanishes outside",
          outside, 1e-12);
    s.add("sampling/bandlimit-idempotent", "spectral projection idempotent",
          sup_diff(bandlimit(f, spec), f), 1e-10);
  }

  SampleSet samples = take_samples(f, spec);
  SampledFunction recon = reconstruct(samples, ReconKernel::Window, g, &win);
  s.add("sampling/windowed-reconstruction",
        "oversampled reconstruction with a localised window",
        central_error(recon, f), 1e-8);

  // classical cardinal series reproduces sinc from its own samples
  {
    SampledFunction sincf = sample_named("sinc", {}, g);
    SampleSet ss;
    ss.alpha = 1.0;
    ss.k_min = static_cast<int>(std::ceil(g.origin[0]));
    int k_max = static_cast<int>(std::ceil(g.origin[0] + g.step[0] * g.count[0])) - 1;
    for (int k = ss.k_min; k <= k_max; ++k)
      ss.values.push_back(value_at(sincf, vec1(double(k))));
    SampledFunction srecon = reconstruct(ss, ReconKernel::Sinc, g);
    s.add("sampling/sinc-reconstruction",
          "cardinal series reproduces the cardinal function",
          central_error(srecon, sincf), 1e-3);
  }

  s.add("sampling/alias-identity",
        "periodised spectrum times the window returns the spectrum",
        alias_identity_residual(f, win), 1e-10);

  // window facts
  s.add("sampling/window-normalisation", "window integrates to 1",
        std::abs(integrate(win.g) - Complex(1.0)), 1e-12);
  {
    double realeven = 0.0;
    SampledFunction flipped = flip(win.g);
    realeven = sup_diff(win.g, flipped);
    s.add("sampling/window-symmetry", "window is real and even", realeven,
          1e-12);
  }

  // guard fires on out-of-band energy
  {
    bool fired = false;
    double mass = 0.0;
    SampledFunction bad = modulate(g0, vec1(0.75));
    try {
      take_samples(bad, spec);
    } catch (const NyquistViolation& e) {
      fired = true;
      mass = e.out_of_band_mass;
    }
    s.add("sampling/nyquist-guard", "out-of-band energy is rejected",
          fired && mass > 1e-10 ? 0.0 : 1.0, 0.5);
  }

  // truncation rates: windowed kernel beats the cardinal kernel
  {
    auto small_region_error = [&](const SampledFunction& r) {
      double e = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (std::abs(g.point(i)[0]) <= 4.0)
          e = std::max(e, std::abs(r.values[i] - f.values[i]));
      return e;
    };
    std::vector<double> sinc_err, win_err;
    for (double radius : {8.0, 16.0}) {
      sinc_err.push_back(small_region_error(
          reconstruct(samples, ReconKernel::Sinc, g, nullptr, radius)));
      win_err.push_back(small_region_error(
          reconstruct(samples, ReconKernel::Window, g, &win, radius)));
    }
    double sinc_ratio = sinc_err[1] / sinc_err[0];
    double win_ratio = win_err[1] / win_err[0];
    s.add("sampling/sinc-truncation-rate",
          "cardinal kernel truncation decays like 1/radius",
          std::abs(sinc_ratio - 0.5), 0.35);
    s.add("sampling/window-truncation-rate",
          "window kernel truncation decays at the design rate",
          std::max(0.0, win_ratio - 0.3), 1e-12);
    s.add("sampling/window-beats-sinc",
          "window kernel truncation error below the cardinal kernel's",
          std::max(0.0, win_err[1] / sinc_err[1] - 0.5), 1e-12);
  }

  // oversampling monotonicity: more transition room, no worse error
  {
    std::vector<double> errs;
    for (double beta : {1.0, 2.0}) {
      BandSpec sp = make_band_spec(0.4, beta);
      ReconWindow w2 = design_window(sp, g);
      SampleSet ss = take_samples(f, sp);
      errs.push_back(central_error(
          reconstruct(ss, ReconKernel::Window, g, &w2), f));
    }
    s.add("sampling/oversampling-monotone",
          "wider transition room never increases the error",
          std::max(0.0, errs[1] - errs[0]), 1e-12);
  }

  // time-side alias identity through the distribution machinery
  {
    MildDistribution lattice = shah_dist(scaled_identity(1, samples.alpha));
    MildDistribution sampled = dist_mul(lattice, f);
    SampledFunction series = dist_convolve(sampled, win.g);
    double err = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (std::abs(g.point(i)[0]) <= 4.0)
        err = std::max(err, std::abs(samples.alpha * series.values[i] -
                                     f.values[i]));
    s.add("sampling/time-side-identity",
          "comb-sampled convolution identity (open-series form)", err, 1e-4);
  }
}

// ---------------------------------------------------------------- systems

void systems_suite(Suite& s, const RunConfig& cfg) {
  Grid g = cfg.grid();
  SampledFunction g0 = gauss_on(g);
  auto corpus = seeded_mixtures(cfg.seed + 51, 10, g);

  // delta system: both paths are the translation
  {
    Tils sys = make_tils(dirac_dist(vec1(1.5)));
    double res = 0.0, exact = 0.0;
    for (int i = 0; i < 4; ++i) {
      res = std::max(res, tils_path_residual(sys, corpus[i]));
      exact = std::max(exact, sup_diff(tils_apply(sys, corpus[i], TilsPath::Time),
                                       translate(corpus[i], vec1(1.5))));
    }
    s.add("systems/delta-paths", "delta system: impulse equals transfer path",
          res, 1e-10);
    s.add("systems/delta-is-translation", "delta convolution is translation",
          exact, 0.0);
  }

  // regularising system
  {
    Tils sys = make_tils(embed_dist(g0));
    double res = 0.0;
    for (const SampledFunction& f : corpus)
      res = std::max(res, tils_path_residual(sys, f));
    s.add("systems/impulse-transfer-agreement",
          "impulse response and transfer function paths agree", res, 1e-8);

    double commut = 0.0;
    for (int i = 0; i < 3; ++i) {
      Vec x = vec1(1.0 + 0.5 * i);
      commut = std::max(
          commut, sup_diff(tils_apply(sys, translate(corpus[i], x), TilsPath::Time),
                           translate(tils_apply(sys, corpus[i], TilsPath::Time), x)));
    }
    s.add("systems/translation-commutation",
          "the system commutes with translations", commut, 1e-10);

    double mod_commut = 0.0;
    for (int i = 0; i < 3; ++i) {
      const SampledFunction& u = corpus[i];
      const SampledFunction& v = corpus[i + 3];
      mod_commut = std::max(
          mod_commut, sup_diff(tils_apply(sys, convolve(u, v), TilsPath::Time),
                               convolve(u, tils_apply(sys, v, TilsPath::Time))));
    }
    s.add("systems/module-homomorphism",
          "the system commutes with convolution", mod_commut, 1e-8);

    // operator-norm witness, stable under refinement
    auto witness = [](const Tils& sys2, const std::vector<SampledFunction>& fs) {
      double w = 0.0;
      for (const auto& f : fs)
        w = std::max(w, norms(tils_apply(sys2, f, TilsPath::Time)).sup /
                            s0_norm(f));
      return w;
    };
    Grid g2 = make_grid(cfg.h / 2, 2 * cfg.n);
    auto corpus2 = seeded_mixtures(cfg.seed + 51, 4, g2);
    Tils sys2 = make_tils(embed_dist(gauss_on(g2)));
    std::vector<SampledFunction> head(corpus.begin(), corpus.begin() + 4);
    double w1 = witness(sys, head);
    double w2 = witness(sys2, corpus2);
    s.add("systems/operator-norm-witness",
          "operator norm witness stable under grid refinement",
          std::abs(w1 - w2) / w1, 1e-6);
  }

  // chirp system on its resolution-compliant grid
  {
    Grid cg = make_grid(1.0 / 128, 4096);
    Tils sys = make_tils(chirp_dist(1.0));
    SampledFunction cg0 = gauss_on(cg);
    s.add("systems/chirp-paths", "chirp system: quadrature equals transfer path",
          tils_path_residual(sys, cg0), 1e-6);
  }

  // kernel calculus on the self-dual grid
  {
    Grid kg = make_grid(cfg.h, 256);
    auto kc = seeded_mixtures(cfg.seed + 52, 8, kg);
    SampledFunction kg0 = gauss_on(kg);

    KernelOperator k1 = kernel_rank_one(kc[0], kc[1]);
    KernelOperator k2 = kernel_rank_one(kc[2], kc[3]);
    KernelOperator k3 = kernel_rank_one(kc[4], kc[5]);

    double comp = 0.0;
    KernelOperator k21 = kernel_compose(k2, k1);
    for (int i = 0; i < 3; ++i)
      comp = std::max(comp,
                      sup_diff(kernel_apply(k21, kc[5 + i % 3]),
                               kernel_apply(k2, kernel_apply(k1, kc[5 + i % 3]))));
    s.add("systems/kernel-composition",
          "composed kernels equal composed operators", comp, 1e-10);

    double assoc = sup_diff(kernel_compose(kernel_compose(k3, k2), k1).k,
                            kernel_compose(k3, kernel_compose(k2, k1)).k);
    s.add("systems/kernel-associativity", "kernel composition associativity",
          assoc, 1e-10);

    KernelOperator id = kernel_compose(kernel_ift(kg), kernel_ft(kg));
    double ident = 0.0;
    std::vector<SampledFunction> seven(kc.begin(), kc.begin() + 6);
    seven.push_back(kg0);
    for (const SampledFunction& u : seven)
      ident = std::max(ident, sup_diff(kernel_apply(id, u), u));
    s.add("systems/inverse-transform-kernel",
          "composed transform kernels act as the identity", ident, 1e-8);

    double col = 0.0;
    for (double y : {-1.0, 0.5, 2.25}) {
      SampledFunction column = kernel_apply(k1, dirac_dist(vec1(y)));
      SampledFunction expect = scale(kc[0], value_at(kc[1], vec1(y)));
      col = std::max(col, sup_diff(column, expect));
    }
    s.add("systems/kernel-column-recovery",
          "kernel columns are the delta responses", col, 1e-12);

    double diag = 0.0;
    for (int i = 0; i < 3; ++i) {
      Complex lhs = diagonal_delta(tensor(kc[i], kc[i + 1]));
      Complex rhs = integrate(pointwise(kc[i], kc[i + 1], PwKind::Mul));
      diag = std::max(diag, std::abs(lhs - rhs));
    }
    s.add("systems/diagonal-delta", "diagonal pairing integrates the product",
          diag, 1e-10);

    // regularising spot check: weak-* convergent inputs give norm-convergent
    // outputs through a kernel operator
    KernelOperator reg = kernel_rank_one(kg0, kg0);
    auto out_gap = [&](const MildDistribution& a, const MildDistribution& b) {
      return sup_diff(kernel_apply(reg, a), kernel_apply(reg, b));
    };
    MildDistribution delta0 = dirac_dist({0, 0});
    std::vector<double> seq;
    for (double rho : {1.0, 0.5, 0.25, 0.125})
      seq.push_back(out_gap(embed_dist(stretch(kg0, rho)), delta0));
    s.add_decreasing("systems/regularising-dirac",
                     "kernel output converges for Dirac approximations", seq);
    seq.clear();
    for (int n = 2; n <= 5; ++n)
      seq.push_back(out_gap(dirac_dist(vec1(1.0 / n)), delta0));
    s.add_decreasing("systems/regularising-atoms",
                     "kernel output converges for moving atoms", seq);
    seq.clear();
    MildDistribution full = shah_dist(scaled_identity(1, 1.0));
    for (int radius : {1, 2, 3, 4}) {
      MildDistribution truncated;
      for (int k = -radius; k <= radius; ++k)
        truncated.comps.push_back(AtomComp{vec1(double(k)), 1.0});
      seq.push_back(out_gap(truncated, full));
    }
    s.add_decreasing("systems/regularising-combs",
                     "kernel output converges for truncated combs", seq);
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"feichtinger", "fourier", "measures", "mild",
          "poisson",     "sampling", "systems", "wiener"};
}

Report run_suite(const std::string& suite, const RunConfig& cfg) {
  Suite s;
  s.tol_scale = cfg.tol_scale;
  auto t0 = std::chrono::steady_clock::now();
  if (suite == "fourier") fourier_suite(s, cfg);
  else if (suite == "poisson") poisson_suite(s, cfg);
  else if (suite == "wiener") wiener_suite(s, cfg);
  else if (suite == "measures") measures_suite(s, cfg);
  else if (suite == "feichtinger") feichtinger_suite(s, cfg);
  else if (suite == "mild") mild_suite(s, cfg);
  else if (suite == "sampling") sampling_suite(s, cfg);
  else if (suite == "systems") systems_suite(s, cfg);
  else throw UnknownSuite("unknown suite: " + suite);
  auto t1 = std::chrono::steady_clock::now();

  Report rep;
  rep.suite = suite;
  rep.checks = std::move(s.checks);
  rep.h = cfg.h;
  rep.n = cfg.n;
  rep.seed = cfg.seed;
  rep.version = "mildbank 0.1.0";
  rep.wall_ms =
      std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() /
      1000.0;
  return rep;
}

Report run_verify(const std::string& suite_or_all, const RunConfig& cfg) {
  if (suite_or_all != "all") {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite_or_all) == names.end())
      throw UnknownSuite("unknown suite: " + suite_or_all);
    return run_suite(suite_or_all, cfg);
  }
  Report all;
  all.suite = "all";
  all.h = cfg.h;
  all.n = cfg.n;
  all.seed = cfg.seed;
  all.version = "mildbank 0.1.0";
  for (const std::string& name : suite_names()) {
    Report r = run_suite(name, cfg);
    all.wall_ms += r.wall_ms;
    for (CheckResult& c : r.checks) all.checks.push_back(std::move(c));
  }
  return all;
}

}  // namespace mildbank
