#include "mildbank/bupu.hpp"

#include <algorithm>
#include <cmath>

namespace mildbank {

namespace {

struct DilatedTentGen : GeneratorExpr {
  double gamma;
  explicit DilatedTentGen(double g) : gamma(g) {}
  Complex eval(const Vec& t, int dim) const override {
    // tent(t/(2 gamma)) per axis: support [-gamma, gamma], peak 1 at 0
    double v = 1.0;
    for (int a = 0; a < dim; ++a)
      v *= std::max(1.0 - std::abs(t[a]) / gamma, 0.0);
    return v;
  }
};

double support_radius(const SampledFunction& base) {
  double r = 0.0;
  for (std::size_t i = 0; i < base.values.size(); ++i) {
    if (std::abs(base.values[i]) > 0.0) {
      Vec t = base.grid.point(i);
      for (int a = 0; a < base.grid.dim; ++a)
        r = std::max(r, std::abs(t[a]));
    }
  }
  return r;
}

void set_index_range(Bupu& b) {
  for (int a = 0; a < b.grid.dim; ++a) {
    double lo = b.grid.origin[a];
    double hi = b.grid.origin[a] + b.grid.step[a] * b.grid.count[a];
    b.index_min[a] = static_cast<int>(std::ceil((lo - b.radius) / b.gamma));
    b.index_max[a] = static_cast<int>(std::floor((hi + b.radius) / b.gamma));
  }
}

void validate_partition(const Bupu& b) {
  // Sum of translates must be 1 on the interior; edge cells see truncated
  // neighbours and are excluded. Only cells whose support reaches the point
  // can contribute.
  double margin = b.radius + b.gamma;
  double worst = 0.0;
  for (std::size_t i : interior_indices(b.grid, margin)) {
    Vec t = b.grid.point(i);
    double s = 0.0;
    std::array<int, 2> lo{0, 0}, hi{0, 0};
    for (int a = 0; a < b.grid.dim; ++a) {
      lo[a] = static_cast<int>(std::ceil((t[a] - b.radius) / b.gamma));
      hi[a] = static_cast<int>(std::floor((t[a] + b.radius) / b.gamma));
    }
    for (int n0 = lo[0]; n0 <= hi[0]; ++n0) {
      if (b.grid.dim == 1) {
        s += bupu_value(b, {n0, 0}, t);
      } else {
        for (int n1 = lo[1]; n1 <= hi[1]; ++n1)
          s += bupu_value(b, {n0, n1}, t);
      }
    }
    worst = std::max(worst, std::abs(s - 1.0));
  }
  if (worst > 1e-9)
    throw NotAPartition("translates do not sum to 1 on the interior (max deviation " +
                        std::to_string(worst) + ")");
}

}  // namespace

Bupu make_bupu(BupuKind kind, const Grid& grid, double gamma) {
  if (kind == BupuKind::Custom)
    throw BadParams("custom BUPU needs an explicit base window");
  if (gamma <= 0) throw BadParams("BUPU spacing must be positive");
  for (int a = 0; a < grid.dim; ++a) commensurate_steps(gamma, grid.step[a]);
  Bupu b;
  b.grid = grid;
  b.gamma = gamma;
  b.radius = gamma;
  b.base = sample_generator(std::make_shared<DilatedTentGen>(gamma), grid, "tent-bupu");
  set_index_range(b);
  validate_partition(b);
  return b;
}

Bupu make_bupu(const SampledFunction& base, double gamma) {
  if (gamma <= 0) throw BadParams("BUPU spacing must be positive");
  for (int a = 0; a < base.grid.dim; ++a)
    commensurate_steps(gamma, base.grid.step[a]);
  for (const Complex& v : base.values) {
    if (v.imag() != 0.0 || v.real() < 0.0)
      throw NegativeWindow("BUPU base must be real and nonnegative");
  }
  Bupu b;
  b.grid = base.grid;
  b.gamma = gamma;
  b.base = base;
  b.radius = support_radius(base);
  if (b.radius == 0.0) throw BadParams("BUPU base is identically zero");
  set_index_range(b);
  validate_partition(b);
  return b;
}

Vec bupu_node(const Bupu& psi, const std::array<int, 2>& n) {
  return {psi.gamma * n[0], psi.grid.dim == 2 ? psi.gamma * n[1] : 0.0};
}

double bupu_value(const Bupu& psi, const std::array<int, 2>& n, const Vec& t) {
  Vec node = bupu_node(psi, n);
  Vec u = {t[0] - node[0], t[1] - node[1]};
  for (int a = 0; a < psi.grid.dim; ++a)
    if (std::abs(u[a]) > psi.radius) return 0.0;
  return value_at(psi.base, u).real();
}

CellSupport bupu_support(const Bupu& psi, const std::array<int, 2>& n) {
  CellSupport s;
  for (int a = 0; a < psi.grid.dim; ++a) {
    double center = psi.gamma * n[a];
    double lo = center - psi.radius, hi = center + psi.radius;
    const Grid& g = psi.grid;
    int ilo = static_cast<int>(std::ceil((lo - g.origin[a]) / g.step[a]));
    int ihi = static_cast<int>(std::floor((hi - g.origin[a]) / g.step[a])) + 1;
    s.lo[a] = std::clamp(ilo, 0, g.count[a]);
    s.hi[a] = std::clamp(ihi, 0, g.count[a]);
  }
  if (psi.grid.dim == 1) {
    s.lo[1] = 0;
    s.hi[1] = 1;
  }
  return s;
}

SampledFunction quasi_interpolate(const SampledFunction& f, const Bupu& psi) {
  if (!(f.grid == psi.grid)) throw GridMismatch("quasi_interpolate");
  SampledFunction out = zero_function(f.grid);
  out.label = "Sp(" + f.label + ")";
  for_each_cell(psi, [&](const std::array<int, 2>& n) {
    Complex fn = value_at(f, bupu_node(psi, n));
    if (fn == Complex(0.0)) return;
    CellSupport s = bupu_support(psi, n);
    for (int i0 = s.lo[0]; i0 < s.hi[0]; ++i0)
      for (int i1 = s.lo[1]; i1 < s.hi[1]; ++i1) {
        std::size_t idx = f.grid.index(i0, i1);
        double p = bupu_value(psi, n, f.grid.point(idx));
        if (p != 0.0) out.values[idx] += fn * p;
      }
  });
  return out;
}

SampledFunction envelope(const SampledFunction& f, EnvelopeKind kind,
                         double delta) {
  const Grid& g = f.grid;
  double radius = kind == EnvelopeKind::MaxFn ? 1.0 : delta;
  if (kind == EnvelopeKind::Osc) {
    if (delta <= 0) throw BadDelta("oscillation radius must be positive");
    if (delta < g.step[0] - 1e-12)
      throw BadDelta("oscillation radius must be at least the grid spacing");
    for (int a = 0; a < g.dim; ++a) commensurate_steps(delta, g.step[a]);
  }
  // grid offsets within the Euclidean ball of the given radius
  std::vector<std::array<int, 2>> offsets;
  int r0 = static_cast<int>(std::floor(radius / g.step[0] + 1e-9));
  int r1 = g.dim == 2 ? static_cast<int>(std::floor(radius / g.step[1] + 1e-9)) : 0;
  for (int j0 = -r0; j0 <= r0; ++j0)
    for (int j1 = -r1; j1 <= r1; ++j1) {
      double y0 = j0 * g.step[0], y1 = g.dim == 2 ? j1 * g.step[1] : 0.0;
      if (y0 * y0 + y1 * y1 <= radius * radius + 1e-12)
        offsets.push_back({j0, j1});
    }
  auto at = [&](int i0, int i1) -> Complex {
    if (i0 < 0 || i0 >= g.count[0]) return 0.0;
    if (g.dim == 2 && (i1 < 0 || i1 >= g.count[1])) return 0.0;
    return f.values[g.index(i0, i1)];
  };
  SampledFunction out = zero_function(g);
  out.label = (kind == EnvelopeKind::Osc ? "osc(" : "maxfn(") + f.label + ")";
  int n0 = g.count[0], n1 = g.dim == 2 ? g.count[1] : 1;
  for (int i0 = 0; i0 < n0; ++i0)
    for (int i1 = 0; i1 < n1; ++i1) {
      double m = 0.0;
      Complex center = at(i0, i1);
      for (const auto& off : offsets) {
        Complex v = at(i0 + off[0], i1 + off[1]);
        double cand = kind == EnvelopeKind::Osc ? std::abs(center - v)
                                                : std::abs(v);
        m = std::max(m, cand);
      }
      out.values[g.index(i0, i1)] = m;
    }
  return out;
}

}  // namespace mildbank
