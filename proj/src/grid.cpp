#include "mildbank/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mildbank {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double sinc1(double t) {
  // Exact cardinal values on integers; dyadic grids hit them exactly.
  double r = std::round(t);
  if (t == r) return r == 0.0 ? 1.0 : 0.0;
  return std::sin(kPi * t) / (kPi * t);
}

struct TentGen : GeneratorExpr {
  Complex eval(const Vec& t, int dim) const override {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= std::max(1.0 - 2.0 * std::abs(t[a]), 0.0);
    return v;
  }
};

struct GaussianGen : GeneratorExpr {
  Complex eval(const Vec& t, int dim) const override {
    double q = t[0] * t[0];
    if (dim == 2) q += t[1] * t[1];
    return std::exp(-kPi * q);
  }
};

struct SincGen : GeneratorExpr {
  Complex eval(const Vec& t, int dim) const override {
    double v = sinc1(t[0]);
    if (dim == 2) v *= sinc1(t[1]);
    return v;
  }
};

struct BoxGen : GeneratorExpr {
  double width;
  explicit BoxGen(double w) : width(w) {}
  Complex eval(const Vec& t, int dim) const override {
    // Half-open box [-w/2, w/2) so lattice translates tile exactly.
    for (int a = 0; a < dim; ++a)
      if (t[a] < -width / 2 || t[a] >= width / 2) return 0.0;
    return 1.0;
  }
};

struct ChirpGen : GeneratorExpr {
  double alpha;
  explicit ChirpGen(double a) : alpha(a) {}
  Complex eval(const Vec& t, int dim) const override {
    double q = t[0] * t[0];
    if (dim == 2) q += t[1] * t[1];
    return std::polar(1.0, kPi * alpha * q);
  }
};

struct PureFreqGen : GeneratorExpr {
  Vec x;
  explicit PureFreqGen(const Vec& x_) : x(x_) {}
  Complex eval(const Vec& t, int dim) const override {
    double phase = x[0] * t[0];
    if (dim == 2) phase += x[1] * t[1];
    return std::polar(1.0, 2.0 * kPi * phase);
  }
};

// Time-domain pulse whose spectrum is 1 on [-b,b], a cos^2 roll-off on
// b <= |s| <= bb and 0 beyond. Normalised so the integral equals 1.
struct RaisedCosineGen : GeneratorExpr {
  double b, bb;
  RaisedCosineGen(double b_, double bb_) : b(b_), bb(bb_) {}
  Complex eval(const Vec& t_, int) const override {
    double t = t_[0];
    double sum = b + bb, diff = bb - b;
    double c = std::cos(kPi * diff * t);
    double den = 1.0 - 4.0 * diff * diff * t * t;
    if (std::abs(den) < 1e-8) {
      // limit at t = 1/(2*diff): cos term -> 0 like the denominator
      double tt = 1.0 / (2.0 * diff);
      return sum * sinc1(sum * tt) * kPi / 4.0;
    }
    return sum * sinc1(sum * t) * c / den;
  }
};

struct ScaleGen : GeneratorExpr {
  Complex c;
  GenPtr inner;
  ScaleGen(Complex c_, GenPtr i) : c(c_), inner(std::move(i)) {}
  Complex eval(const Vec& t, int dim) const override {
    return c * inner->eval(t, dim);
  }
};

struct SumGen : GeneratorExpr {
  std::vector<std::pair<Complex, GenPtr>> terms;
  explicit SumGen(std::vector<std::pair<Complex, GenPtr>> t)
      : terms(std::move(t)) {}
  Complex eval(const Vec& t, int dim) const override {
    Complex acc = 0.0;
    for (const auto& [c, g] : terms) acc += c * g->eval(t, dim);
    return acc;
  }
};

struct ProductGen : GeneratorExpr {
  GenPtr lhs, rhs;
  ProductGen(GenPtr l, GenPtr r) : lhs(std::move(l)), rhs(std::move(r)) {}
  Complex eval(const Vec& t, int dim) const override {
    return lhs->eval(t, dim) * rhs->eval(t, dim);
  }
};

struct TranslateGen : GeneratorExpr {
  Vec x;
  GenPtr inner;
  TranslateGen(const Vec& x_, GenPtr i) : x(x_), inner(std::move(i)) {}
  Complex eval(const Vec& t, int dim) const override {
    return inner->eval({t[0] - x[0], t[1] - x[1]}, dim);
  }
};

struct ModulateGen : GeneratorExpr {
  Vec w;
  GenPtr inner;
  ModulateGen(const Vec& w_, GenPtr i) : w(w_), inner(std::move(i)) {}
  Complex eval(const Vec& t, int dim) const override {
    double phase = w[0] * t[0];
    if (dim == 2) phase += w[1] * t[1];
    return std::polar(1.0, 2.0 * kPi * phase) * inner->eval(t, dim);
  }
};

struct FlipGen : GeneratorExpr {
  GenPtr inner;
  explicit FlipGen(GenPtr i) : inner(std::move(i)) {}
  Complex eval(const Vec& t, int dim) const override {
    return inner->eval({-t[0], -t[1]}, dim);
  }
};

struct ConjGen : GeneratorExpr {
  GenPtr inner;
  explicit ConjGen(GenPtr i) : inner(std::move(i)) {}
  Complex eval(const Vec& t, int dim) const override {
    return std::conj(inner->eval(t, dim));
  }
};

struct StretchGen : GeneratorExpr {
  double rho;
  GenPtr inner;
  StretchGen(double r, GenPtr i) : rho(r), inner(std::move(i)) {}
  Complex eval(const Vec& t, int dim) const override {
    double w = dim == 1 ? 1.0 / rho : 1.0 / (rho * rho);
    return w * inner->eval({t[0] / rho, t[1] / rho}, dim);
  }
};

struct ValueDilateGen : GeneratorExpr {
  double rho;
  GenPtr inner;
  ValueDilateGen(double r, GenPtr i) : rho(r), inner(std::move(i)) {}
  Complex eval(const Vec& t, int dim) const override {
    return inner->eval({t[0] * rho, t[1] * rho}, dim);
  }
};

struct MatrixDilateGen : GeneratorExpr {
  LatticeMatrix m;
  GenPtr inner;
  MatrixDilateGen(const LatticeMatrix& m_, GenPtr i)
      : m(m_), inner(std::move(i)) {}
  Complex eval(const Vec& t, int dim) const override {
    return std::sqrt(std::abs(m.det)) * inner->eval(m.apply(t), dim);
  }
};

void require_same_grid(const SampledFunction& f, const SampledFunction& g,
                       const char* what) {
  if (!(f.grid == g.grid))
    throw GridMismatch(std::string(what) + ": operands live on different grids");
}

// Resamples f at t -> map(t), by generator when tagged, by exact grid lookup
// when every source point is a node, by multilinear interpolation otherwise.
template <typename MapFn>
SampledFunction resample(const SampledFunction& f, MapFn&& map, double weight,
                         GenPtr new_gen, const std::string& label) {
  const Grid& g = f.grid;
  SampledFunction out;
  out.grid = g;
  out.label = label;
  out.gen = std::move(new_gen);
  out.values.resize(g.size());
  if (out.gen) {
    for (std::size_t i = 0; i < g.size(); ++i)
      out.values[i] = out.gen->eval(g.point(i), g.dim);
    return out;
  }
  auto lookup = [&](const Vec& t) -> Complex {
    // exact node lookup with zero extension
    std::array<int, 2> idx{0, 0};
    for (int a = 0; a < g.dim; ++a) {
      double u = (t[a] - g.origin[a]) / g.step[a];
      double r = std::round(u);
      if (std::abs(u - r) > 1e-9) return std::nan("");
      if (r < 0 || r >= g.count[a]) return 0.0;
      idx[a] = static_cast<int>(r);
    }
    return f.values[g.index(idx[0], idx[1])];
  };
  auto interp = [&](const Vec& t) -> Complex {
    // multilinear with zero extension
    std::array<int, 2> i0{0, 0};
    std::array<double, 2> frac{0.0, 0.0};
    for (int a = 0; a < g.dim; ++a) {
      double u = (t[a] - g.origin[a]) / g.step[a];
      double fl = std::floor(u);
      i0[a] = static_cast<int>(fl);
      frac[a] = u - fl;
    }
    auto at = [&](int i, int j) -> Complex {
      if (i < 0 || i >= g.count[0]) return 0.0;
      if (g.dim == 2 && (j < 0 || j >= g.count[1])) return 0.0;
      return f.values[g.index(i, j)];
    };
    if (g.dim == 1)
      return (1 - frac[0]) * at(i0[0], 0) + frac[0] * at(i0[0] + 1, 0);
    return (1 - frac[0]) * (1 - frac[1]) * at(i0[0], i0[1]) +
           (1 - frac[0]) * frac[1] * at(i0[0], i0[1] + 1) +
           frac[0] * (1 - frac[1]) * at(i0[0] + 1, i0[1]) +
           frac[0] * frac[1] * at(i0[0] + 1, i0[1] + 1);
  };
  for (std::size_t i = 0; i < g.size(); ++i) {
    Vec t = map(g.point(i));
    Complex v = lookup(t);
    if (std::isnan(v.real())) v = interp(t);
    out.values[i] = weight * v;
  }
  return out;
}

}  // namespace

LatticeMatrix make_lattice(int dim, std::array<double, 4> entries) {
  LatticeMatrix m;
  m.dim = dim;
  m.a = entries;
  if (dim == 1) {
    m.det = entries[0];
    if (m.det == 0.0) throw SingularMatrix("lattice matrix is singular");
    m.inv = {1.0 / m.det, 0, 0, 1};
    m.inv_t = m.inv;
  } else {
    m.det = entries[0] * entries[3] - entries[1] * entries[2];
    if (std::abs(m.det) < 1e-14)
      throw SingularMatrix("lattice matrix is singular");
    m.inv = {entries[3] / m.det, -entries[1] / m.det, -entries[2] / m.det,
             entries[0] / m.det};
    m.inv_t = {m.inv[0], m.inv[2], m.inv[1], m.inv[3]};
  }
  return m;
}

LatticeMatrix scaled_identity(int dim, double s) {
  return make_lattice(dim, {s, 0, 0, s});
}

Grid make_grid(double t0, double h, int n, int d) {
  if (h <= 0) throw BadParams("grid spacing must be positive");
  if (d != 1 && d != 2) throw BadParams("grid dimension must be 1 or 2");
  if (n < 8 || !is_power_of_two(n))
    throw BadCount("grid count must be a power of two >= 8");
  double half_lattice = 1.0 / (2.0 * h);
  if (std::abs(half_lattice - std::round(half_lattice)) > 1e-9)
    throw NonCommensurateSpacing(
        "1/(2h) must be an integer so half-integer BUPU nodes land on grid "
        "points");
  Grid g;
  g.dim = d;
  for (int a = 0; a < d; ++a) {
    g.origin[a] = t0;
    g.step[a] = h;
    g.count[a] = n;
  }
  return g;
}

Grid make_grid(double h, int n, int d) { return make_grid(-n * h / 2, h, n, d); }

GenPtr gen_named(const std::string& name, const std::vector<double>& params) {
  if (name == "tent") return std::make_shared<TentGen>();
  if (name == "gaussian") return std::make_shared<GaussianGen>();
  if (name == "sinc") return std::make_shared<SincGen>();
  if (name == "box") {
    double w = params.empty() ? 1.0 : params[0];
    if (w <= 0) throw BadParams("box width must be positive");
    return std::make_shared<BoxGen>(w);
  }
  if (name == "chirp") {
    double a = params.empty() ? 1.0 : params[0];
    if (a == 0) throw BadParams("chirp rate must be nonzero");
    return std::make_shared<ChirpGen>(a);
  }
  if (name == "pure_frequency") {
    if (params.empty()) throw BadParams("pure_frequency needs a frequency");
    Vec x = vec1(params[0]);
    if (params.size() > 1) x[1] = params[1];
    return std::make_shared<PureFreqGen>(x);
  }
  if (name == "raised_cosine_spectrum") {
    if (params.size() < 2)
      throw BadParams("raised_cosine_spectrum needs passband and stopband edges");
    double b = params[0], bb = params[1];
    if (!(0 < b && b < bb))
      throw BadParams("raised_cosine_spectrum requires 0 < b < B");
    return std::make_shared<RaisedCosineGen>(b, bb);
  }
  if (name == "gaussian_mixture") {
    // flat (w_re, w_im, center, width) quadruples, d=1
    if (params.empty() || params.size() % 4 != 0)
      throw BadParams("gaussian_mixture needs (re,im,center,width) quadruples");
    std::vector<std::pair<Complex, GenPtr>> terms;
    for (std::size_t i = 0; i < params.size(); i += 4) {
      double w = params[i + 3];
      if (w <= 0) throw BadParams("gaussian_mixture width must be positive");
      GenPtr g = std::make_shared<GaussianGen>();
      g = std::make_shared<ValueDilateGen>(1.0 / w, g);
      g = std::make_shared<TranslateGen>(vec1(params[i + 2]), g);
      terms.emplace_back(Complex(params[i], params[i + 1]), g);
    }
    return std::make_shared<SumGen>(std::move(terms));
  }
  throw UnknownGenerator("unknown generator: " + name);
}

GenPtr gen_scale(Complex c, GenPtr inner) {
  return std::make_shared<ScaleGen>(c, std::move(inner));
}
GenPtr gen_sum(std::vector<std::pair<Complex, GenPtr>> terms) {
  return std::make_shared<SumGen>(std::move(terms));
}
GenPtr gen_translate(const Vec& x, GenPtr inner) {
  return std::make_shared<TranslateGen>(x, std::move(inner));
}
GenPtr gen_modulate(const Vec& w, GenPtr inner) {
  return std::make_shared<ModulateGen>(w, std::move(inner));
}

SampledFunction sample_generator(const GenPtr& gen, const Grid& grid,
                                 const std::string& label) {
  SampledFunction f;
  f.grid = grid;
  f.label = label;
  f.gen = gen;
  f.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    f.values[i] = gen->eval(grid.point(i), grid.dim);
  return f;
}

SampledFunction sample_named(const std::string& name,
                             const std::vector<double>& params,
                             const Grid& grid) {
  return sample_generator(gen_named(name, params), grid, name);
}

Complex integrate(const SampledFunction& f) {
  Complex acc = 0.0;
  for (const Complex& v : f.values) acc += v;
  return acc * f.grid.cell_volume();
}

Complex inner(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g, "inner");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    acc += f.values[i] * std::conj(g.values[i]);
  return acc * f.grid.cell_volume();
}

NormTriple norms(const SampledFunction& f) {
  NormTriple n;
  double sq = 0.0;
  for (const Complex& v : f.values) {
    double a = std::abs(v);
    n.sup = std::max(n.sup, a);
    n.l1 += a;
    sq += a * a;
  }
  double w = f.grid.cell_volume();
  n.l1 *= w;
  n.l2 = std::sqrt(w * sq);
  return n;
}

int commensurate_steps(double x, double h) {
  double u = x / h;
  double r = std::round(u);
  if (std::abs(u - r) > 1e-9 * std::max(1.0, std::abs(u)))
    throw NonCommensurateShift("offset is not an integer multiple of the grid spacing");
  return static_cast<int>(r);
}

SampledFunction translate(const SampledFunction& f, const Vec& x) {
  const Grid& g = f.grid;
  std::array<int, 2> shift{0, 0};
  for (int a = 0; a < g.dim; ++a) shift[a] = commensurate_steps(x[a], g.step[a]);
  SampledFunction out;
  out.grid = g;
  out.label = f.label;
  if (f.gen) out.gen = std::make_shared<TranslateGen>(x, f.gen);
  out.values.assign(g.size(), Complex(0.0));
  // zero extension outside the window
  if (g.dim == 1) {
    for (int i = 0; i < g.count[0]; ++i) {
      int j = i - shift[0];
      if (j >= 0 && j < g.count[0]) out.values[i] = f.values[j];
    }
  } else {
    for (int i = 0; i < g.count[0]; ++i) {
      int si = i - shift[0];
      if (si < 0 || si >= g.count[0]) continue;
      for (int j = 0; j < g.count[1]; ++j) {
        int sj = j - shift[1];
        if (sj >= 0 && sj < g.count[1])
          out.values[g.index(i, j)] = f.values[g.index(si, sj)];
      }
    }
  }
  return out;
}

SampledFunction modulate(const SampledFunction& f, const Vec& w) {
  SampledFunction out;
  out.grid = f.grid;
  out.label = f.label;
  if (f.gen) out.gen = std::make_shared<ModulateGen>(w, f.gen);
  out.values.resize(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    Vec t = f.grid.point(i);
    double phase = w[0] * t[0];
    if (f.grid.dim == 2) phase += w[1] * t[1];
    out.values[i] = std::polar(1.0, 2.0 * kPi * phase) * f.values[i];
  }
  return out;
}

SampledFunction flip(const SampledFunction& f) {
  // Circular flip: index i -> (N-i) mod N per axis. The window's left edge is
  // its own mirror (the same [-L/2, L/2) ~ torus identification the FFT
  // uses), which keeps flip an exact involution.
  const Grid& g = f.grid;
  SampledFunction out;
  out.grid = g;
  out.label = f.label;
  if (f.gen) out.gen = std::make_shared<FlipGen>(f.gen);
  out.values.resize(g.size());
  if (g.dim == 1) {
    for (int i = 0; i < g.count[0]; ++i)
      out.values[i] = f.values[(g.count[0] - i) % g.count[0]];
  } else {
    for (int i = 0; i < g.count[0]; ++i)
      for (int j = 0; j < g.count[1]; ++j)
        out.values[g.index(i, j)] = f.values[g.index(
            (g.count[0] - i) % g.count[0], (g.count[1] - j) % g.count[1])];
  }
  return out;
}

SampledFunction conjugate(const SampledFunction& f) {
  SampledFunction out;
  out.grid = f.grid;
  out.label = f.label;
  if (f.gen) out.gen = std::make_shared<ConjGen>(f.gen);
  out.values.resize(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i)
    out.values[i] = std::conj(f.values[i]);
  return out;
}

SampledFunction stretch(const SampledFunction& f, double rho) {
  if (rho <= 0) throw BadParams("stretch factor must be positive");
  double w = f.grid.dim == 1 ? 1.0 / rho : 1.0 / (rho * rho);
  GenPtr gen = f.gen ? std::make_shared<StretchGen>(rho, f.gen) : nullptr;
  return resample(
      f, [rho](const Vec& t) { return Vec{t[0] / rho, t[1] / rho}; }, w, gen,
      f.label);
}

SampledFunction value_dilate(const SampledFunction& f, double rho) {
  if (rho <= 0) throw BadParams("dilation factor must be positive");
  GenPtr gen = f.gen ? std::make_shared<ValueDilateGen>(rho, f.gen) : nullptr;
  return resample(
      f, [rho](const Vec& t) { return Vec{t[0] * rho, t[1] * rho}; }, 1.0, gen,
      f.label);
}

SampledFunction act(OpKind kind, const LatticeMatrix& m,
                    const SampledFunction& f) {
  if (kind != OpKind::MatrixDilate)
    throw BadParams("matrix argument only applies to matrix_dilate");
  if (m.dim != f.grid.dim) throw GridMismatch("matrix dimension mismatch");
  GenPtr gen = f.gen ? std::make_shared<MatrixDilateGen>(m, f.gen) : nullptr;
  double w = std::sqrt(std::abs(m.det));
  return resample(
      f, [&m](const Vec& t) { return m.apply(t); }, w, gen, f.label);
}

SampledFunction act(OpKind kind, const std::vector<double>& params,
                    const SampledFunction& f) {
  switch (kind) {
    case OpKind::Translate: {
      Vec x = vec1(params.at(0));
      if (f.grid.dim == 2) x[1] = params.at(1);
      return translate(f, x);
    }
    case OpKind::Modulate: {
      Vec w = vec1(params.at(0));
      if (f.grid.dim == 2) w[1] = params.at(1);
      return modulate(f, w);
    }
    case OpKind::Flip:
      return flip(f);
    case OpKind::Conjugate:
      return conjugate(f);
    case OpKind::Stretch:
      return stretch(f, params.at(0));
    case OpKind::ValueDilate:
      return value_dilate(f, params.at(0));
    case OpKind::MatrixDilate: {
      std::array<double, 4> e{1, 0, 0, 1};
      if (f.grid.dim == 1) {
        e[0] = params.at(0);
      } else {
        for (int i = 0; i < 4; ++i) e[i] = params.at(i);
      }
      return act(OpKind::MatrixDilate, make_lattice(f.grid.dim, e), f);
    }
  }
  throw BadParams("unknown operator kind");
}

SampledFunction pointwise(const SampledFunction& f, const SampledFunction& g,
                          PwKind kind) {
  require_same_grid(f, g, "pointwise");
  SampledFunction out;
  out.grid = f.grid;
  out.values.resize(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    switch (kind) {
      case PwKind::Mul: out.values[i] = f.values[i] * g.values[i]; break;
      case PwKind::Add: out.values[i] = f.values[i] + g.values[i]; break;
      case PwKind::Sub: out.values[i] = f.values[i] - g.values[i]; break;
    }
  }
  if (f.gen && g.gen) {
    switch (kind) {
      case PwKind::Mul:
        out.gen = std::make_shared<ProductGen>(f.gen, g.gen);
        break;
      case PwKind::Add:
        out.gen = gen_sum({{1.0, f.gen}, {1.0, g.gen}});
        break;
      case PwKind::Sub:
        out.gen = gen_sum({{1.0, f.gen}, {-1.0, g.gen}});
        break;
    }
  }
  return out;
}

SampledFunction scale(const SampledFunction& f, Complex c) {
  SampledFunction out;
  out.grid = f.grid;
  out.label = f.label;
  if (f.gen) out.gen = gen_scale(c, f.gen);
  out.values.resize(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i)
    out.values[i] = c * f.values[i];
  return out;
}

SampledFunction zero_function(const Grid& grid) {
  SampledFunction f;
  f.grid = grid;
  f.label = "zero";
  f.values.assign(grid.size(), Complex(0.0));
  return f;
}

Complex value_at(const SampledFunction& f, const Vec& t) {
  if (f.gen) return f.gen->eval(t, f.grid.dim);
  const Grid& g = f.grid;
  std::array<int, 2> idx{0, 0};
  for (int a = 0; a < g.dim; ++a) {
    double u = (t[a] - g.origin[a]) / g.step[a];
    double r = std::round(u);
    if (std::abs(u - r) > 1e-9)
      throw NonCommensurateShift(
          "point evaluation requires a generator tag or a grid node");
    if (r < 0 || r >= g.count[a]) return 0.0;
    idx[a] = static_cast<int>(r);
  }
  return f.values[g.index(idx[0], idx[1])];
}

SampledFunction resample_on(const SampledFunction& f, const Grid& grid) {
  SampledFunction out;
  out.grid = grid;
  out.label = f.label;
  out.gen = f.gen;
  out.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    out.values[i] = value_at(f, grid.point(i));
  return out;
}

double edge_tail_mass(const SampledFunction& f, double fraction) {
  const Grid& g = f.grid;
  double m = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Vec t = g.point(i);
    bool collar = false;
    for (int a = 0; a < g.dim; ++a) {
      double lo = g.origin[a], hi = g.origin[a] + g.step[a] * g.count[a];
      double margin = (hi - lo) * fraction;
      if (t[a] < lo + margin || t[a] >= hi - margin) collar = true;
    }
    if (collar) m = std::max(m, std::abs(f.values[i]));
  }
  return m;
}

std::vector<std::size_t> interior_indices(const Grid& grid, double margin) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Vec t = grid.point(i);
    bool interior = true;
    for (int a = 0; a < grid.dim; ++a) {
      double lo = grid.origin[a];
      double hi = grid.origin[a] + grid.step[a] * grid.count[a];
      if (t[a] < lo + margin || t[a] >= hi - margin) interior = false;
    }
    if (interior) out.push_back(i);
  }
  return out;
}

}  // namespace mildbank
