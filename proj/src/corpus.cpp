#include "mildbank/corpus.hpp"

#include <algorithm>
#include <cmath>

namespace mildbank {

double SeededRng::quantized(double lo, double hi, double quantum) {
  double v = uniform(lo, hi);
  double q = std::round(v / quantum) * quantum;
  return std::clamp(q, std::ceil(lo / quantum) * quantum,
                    std::floor(hi / quantum) * quantum);
}

namespace {

// Keeps corpus functions concentrated well inside the window so transforms,
// lattice sums and plane integrals are converged at the window edge.
struct CorpusScales {
  double center_max;
  double mod_max;
};

CorpusScales scales_for(const Grid& grid) {
  double radius = grid.step[0] * grid.count[0] / 2;
  double c = std::min(2.0, radius / 8);
  return {c, c};
}

}  // namespace

std::vector<SampledFunction> seeded_mixtures(std::uint64_t seed, int count,
                                             const Grid& grid,
                                             bool complex_weights) {
  SeededRng rng(seed);
  CorpusScales sc = scales_for(grid);
  std::vector<SampledFunction> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    int terms = rng.uniform_int(1, 3);
    std::vector<double> params;
    for (int j = 0; j < terms; ++j) {
      double re = rng.uniform(-1.0, 1.0);
      double im = complex_weights ? rng.uniform(-1.0, 1.0) : 0.0;
      double center = rng.quantized(-sc.center_max, sc.center_max, grid.step[0]);
      double width = rng.uniform(0.6, 1.6);
      params.insert(params.end(), {re, im, center, width});
    }
    SampledFunction f = sample_named("gaussian_mixture", params, grid);
    f.label = "mixture#" + std::to_string(i);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<SampledFunction> seeded_tents(std::uint64_t seed, int count,
                                          const Grid& grid) {
  SeededRng rng(seed);
  CorpusScales sc = scales_for(grid);
  std::vector<SampledFunction> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    double center = rng.quantized(-sc.center_max, sc.center_max, grid.step[0]);
    int log_w = rng.uniform_int(-1, 1);
    double rho = std::pow(2.0, log_w);
    GenPtr g = gen_named("tent", {});
    SampledFunction f =
        sample_generator(gen_translate(vec1(center), g), grid, "tent");
    f = value_dilate(f, 1.0 / rho);
    f.label = "tent#" + std::to_string(i);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<SampledFunction> seeded_modulated_gaussians(std::uint64_t seed,
                                                        int count,
                                                        const Grid& grid) {
  SeededRng rng(seed);
  CorpusScales sc = scales_for(grid);
  double freq_step = 1.0 / (grid.count[0] * grid.step[0]);
  std::vector<SampledFunction> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    double center = rng.quantized(-sc.center_max, sc.center_max, grid.step[0]);
    double mod = rng.quantized(-sc.mod_max, sc.mod_max, freq_step);
    GenPtr g = gen_named("gaussian", {});
    g = gen_translate(vec1(center), g);
    g = gen_modulate(vec1(mod), g);
    SampledFunction f = sample_generator(g, grid, "modgauss#" + std::to_string(i));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<SampledFunction> standard_battery(std::uint64_t seed,
                                              const Grid& grid) {
  std::vector<SampledFunction> battery = seeded_mixtures(seed, 32, grid);
  auto tents = seeded_tents(seed + 1, 8, grid);
  auto mods = seeded_modulated_gaussians(seed + 2, 8, grid);
  battery.insert(battery.end(), tents.begin(), tents.end());
  battery.insert(battery.end(), mods.begin(), mods.end());
  return battery;
}

std::vector<BoundedMeasure> seeded_measures(std::uint64_t seed, int count,
                                            const Grid& grid) {
  SeededRng rng(seed);
  CorpusScales sc = scales_for(grid);
  std::vector<BoundedMeasure> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<MeasureAtom> atoms;
    int n_atoms = rng.uniform_int(1, 4);
    for (int j = 0; j < n_atoms; ++j) {
      Vec pos = vec1(rng.quantized(-sc.center_max, sc.center_max, grid.step[0]));
      Complex w(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
      atoms.push_back({pos, w});
    }
    std::optional<SampledFunction> density;
    if (i % 2 == 0) {
      auto dens = seeded_mixtures(seed * 131 + i, 1, grid);
      density = std::move(dens[0]);
    }
    out.push_back(make_measure(std::move(atoms), std::move(density)));
  }
  return out;
}

}  // namespace mildbank
