#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "mildbank/errors.hpp"

namespace mildbank {

using Complex = std::complex<double>;

// A point in R^d with d <= 2; the unused coordinate is kept at 0.
using Vec = std::array<double, 2>;

inline Vec vec1(double x) { return {x, 0.0}; }
inline Vec vec2(double x, double y) { return {x, y}; }

// Closed-form evaluator attached to a SampledFunction. Keeps exact pointwise
// evaluation available after grid operations (translation, modulation,
// dilation, sums, products), which is what lattice sums, measure actions and
// resampling rely on.
class GeneratorExpr {
 public:
  virtual ~GeneratorExpr() = default;
  virtual Complex eval(const Vec& t, int dim) const = 0;
};

using GenPtr = std::shared_ptr<const GeneratorExpr>;

// Uniform grid over the half-open window [origin, origin + count*step) per
// axis. count is a power of two (FFT), step is commensurate with the
// half-integer BUPU lattice: 1/(2*step) must be an integer.
struct Grid {
  int dim = 1;
  std::array<double, 2> origin{0.0, 0.0};
  std::array<double, 2> step{1.0, 1.0};
  std::array<int, 2> count{0, 0};

  std::size_t size() const {
    std::size_t n = static_cast<std::size_t>(count[0]);
    if (dim == 2) n *= static_cast<std::size_t>(count[1]);
    return n;
  }
  double node(int axis, int i) const { return origin[axis] + step[axis] * i; }
  Vec point(std::size_t flat) const {
    if (dim == 1) return vec1(node(0, static_cast<int>(flat)));
    int n1 = count[1];
    return vec2(node(0, static_cast<int>(flat) / n1),
                node(1, static_cast<int>(flat) % n1));
  }
  std::size_t index(int i0, int i1 = 0) const {
    return dim == 1 ? static_cast<std::size_t>(i0)
                    : static_cast<std::size_t>(i0) * count[1] + i1;
  }
  // Quadrature weight of one cell, step^d.
  double cell_volume() const {
    return dim == 1 ? step[0] : step[0] * step[1];
  }
  bool operator==(const Grid& o) const {
    return dim == o.dim && origin == o.origin && step == o.step &&
           count == o.count;
  }
};

// Complex-valued function sampled on a Grid; the discrete stand-in for
// elements of C0, W, W_F and S0. values are row-major for d=2. gen, when
// present, evaluates the same function in closed form at arbitrary points.
struct SampledFunction {
  Grid grid;
  std::vector<Complex> values;
  std::string label;
  GenPtr gen;
};

// Invertible real d x d matrix with cached inverse and inverse transpose.
struct LatticeMatrix {
  int dim = 1;
  std::array<double, 4> a{1, 0, 0, 1};         // row-major
  std::array<double, 4> inv{1, 0, 0, 1};
  std::array<double, 4> inv_t{1, 0, 0, 1};
  double det = 1.0;

  Vec apply(const Vec& v) const {
    if (dim == 1) return vec1(a[0] * v[0]);
    return vec2(a[0] * v[0] + a[1] * v[1], a[2] * v[0] + a[3] * v[1]);
  }
  Vec apply_inv(const Vec& v) const {
    if (dim == 1) return vec1(inv[0] * v[0]);
    return vec2(inv[0] * v[0] + inv[1] * v[1], inv[2] * v[0] + inv[3] * v[1]);
  }
  Vec apply_inv_t(const Vec& v) const {
    if (dim == 1) return vec1(inv_t[0] * v[0]);
    return vec2(inv_t[0] * v[0] + inv_t[1] * v[1],
                inv_t[2] * v[0] + inv_t[3] * v[1]);
  }
};

LatticeMatrix make_lattice(int dim, std::array<double, 4> entries);
LatticeMatrix scaled_identity(int dim, double s);

enum class OpKind {
  Translate,     // T_x f(t) = f(t-x), x commensurate with the grid
  Modulate,      // E_w f(t) = e^{2 pi i w.t} f(t)
  Flip,          // f(-t), circular at the window edge
  Conjugate,     // conj(f)
  Stretch,       // S_rho f(t) = rho^{-d} f(t/rho), mass preserving
  ValueDilate,   // D_rho f(t) = f(rho t), sup preserving
  MatrixDilate,  // alpha_A f(t) = |det A|^{1/2} f(A t)
};

enum class PwKind { Mul, Add, Sub };

struct NormTriple {
  double sup = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
};

Grid make_grid(double t0, double h, int n, int d = 1);
Grid make_grid(double h, int n, int d = 1);  // symmetric window, t0 = -n*h/2

// Pointwise evaluation of a named closed-form generator. Names: tent,
// gaussian, sinc, box, chirp, pure_frequency, raised_cosine_spectrum,
// gaussian_mixture.
SampledFunction sample_named(const std::string& name,
                             const std::vector<double>& params,
                             const Grid& grid);

// Samples an arbitrary generator expression and keeps the tag.
SampledFunction sample_generator(const GenPtr& gen, const Grid& grid,
                                 const std::string& label = "");

// Riemann sum h^d * sum(values).
Complex integrate(const SampledFunction& f);
// Riemann-sum inner product h^d * sum f * conj(g); grids must match.
Complex inner(const SampledFunction& f, const SampledFunction& g);
NormTriple norms(const SampledFunction& f);

SampledFunction act(OpKind kind, const std::vector<double>& params,
                    const SampledFunction& f);
SampledFunction act(OpKind kind, const LatticeMatrix& m,
                    const SampledFunction& f);

SampledFunction pointwise(const SampledFunction& f, const SampledFunction& g,
                          PwKind kind);

// Named wrappers over act() used throughout the library.
SampledFunction translate(const SampledFunction& f, const Vec& x);
SampledFunction modulate(const SampledFunction& f, const Vec& w);
SampledFunction flip(const SampledFunction& f);
SampledFunction conjugate(const SampledFunction& f);
SampledFunction stretch(const SampledFunction& f, double rho);
SampledFunction value_dilate(const SampledFunction& f, double rho);

SampledFunction scale(const SampledFunction& f, Complex c);
SampledFunction zero_function(const Grid& grid);

// Exact pointwise value: generator evaluation when tagged, otherwise a
// commensurate grid lookup (zero outside the window). Throws
// NonCommensurateShift when neither applies.
Complex value_at(const SampledFunction& f, const Vec& t);

// Evaluates f on the nodes of a target grid via value_at.
SampledFunction resample_on(const SampledFunction& f, const Grid& grid);

// Largest |value| within the outermost `fraction` collar of the window;
// the tail-decay guard used by transforms and lattice sums.
double edge_tail_mass(const SampledFunction& f, double fraction = 0.05);

// Flat indices at distance >= margin (in window units) from every window
// edge. Envelope and shift invariants are checked on this interior set.
std::vector<std::size_t> interior_indices(const Grid& grid, double margin);

// Rounds x to an integer multiple of h; throws NonCommensurateShift if it is
// not one (relative tolerance 1e-9).
int commensurate_steps(double x, double h);

// Generator constructors (shared with the corpus and test code).
GenPtr gen_named(const std::string& name, const std::vector<double>& params);
GenPtr gen_scale(Complex c, GenPtr inner);
GenPtr gen_sum(std::vector<std::pair<Complex, GenPtr>> terms);
GenPtr gen_translate(const Vec& x, GenPtr inner);
GenPtr gen_modulate(const Vec& w, GenPtr inner);

}  // namespace mildbank
