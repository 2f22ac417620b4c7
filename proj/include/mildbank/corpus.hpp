#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mildbank/grid.hpp"
#include "mildbank/measures.hpp"

namespace mildbank {

// Deterministic uniform stream. mt19937_64's raw output is fully specified
// by the standard and the (x >> 11) * 2^-53 mapping avoids library
// distribution objects, so seeded corpora are byte-identical across
// platforms.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return (engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform() * (hi - lo + 1));
  }
  // k*quantum closest to a uniform draw, clamped into [lo, hi]
  double quantized(double lo, double hi, double quantum);

 private:
  std::mt19937_64 engine_;
};

// Gaussian mixtures with commensurate centers/modulations, bounded widths,
// complex weights; generator-tagged.
std::vector<SampledFunction> seeded_mixtures(std::uint64_t seed, int count,
                                             const Grid& grid,
                                             bool complex_weights = true);

// Tents with varied (commensurate) centers and dyadic widths.
std::vector<SampledFunction> seeded_tents(std::uint64_t seed, int count,
                                          const Grid& grid);

// Modulated Gaussians.
std::vector<SampledFunction> seeded_modulated_gaussians(std::uint64_t seed,
                                                        int count,
                                                        const Grid& grid);

// The fixed test battery: 32 Gaussian mixtures + 8 tents + 8 modulated
// Gaussians; generator-backed so distribution components can evaluate
// anywhere.
std::vector<SampledFunction> standard_battery(std::uint64_t seed,
                                              const Grid& grid);

// Seeded atoms+density measures with commensurate atom positions.
std::vector<BoundedMeasure> seeded_measures(std::uint64_t seed, int count,
                                            const Grid& grid);

}  // namespace mildbank
