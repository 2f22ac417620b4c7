#include "mildbank/mild.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mildbank/fourier.hpp"

namespace mildbank {

namespace {

constexpr double kPi = std::numbers::pi;

double dot(const Vec& a, const Vec& b, int dim) {
  return a[0] * b[0] + (dim == 2 ? a[1] * b[1] : 0.0);
}

Complex unit_phase(double turns) { return std::polar(1.0, 2.0 * kPi * turns); }

// Lattice points Ak + shift inside the window of g, with the outermost-shell
// convergence guard applied by the caller.
struct LatticePoint {
  Vec p;
  std::array<int, 2> k;
};

std::vector<LatticePoint> comb_points(const CombComp& comb, const Grid& g,
                                      double expand = 0.0) {
  double radius = 0.0;
  for (int a = 0; a < g.dim; ++a)
    radius = std::max(radius,
                      std::max(std::abs(g.origin[a]),
                               std::abs(g.origin[a] + g.step[a] * g.count[a])));
  radius += expand;
  double norm_inv = 0.0;
  for (double e : comb.A.inv) norm_inv = std::max(norm_inv, std::abs(e));
  double smag = std::max(std::abs(comb.shift[0]), std::abs(comb.shift[1]));
  int bound =
      static_cast<int>(std::ceil((g.dim == 1 ? 1 : 2) * norm_inv * (radius + smag))) + 1;
  std::vector<LatticePoint> out;
  auto inside = [&](const Vec& p) {
    for (int a = 0; a < g.dim; ++a) {
      double lo = g.origin[a] - expand;
      double hi = g.origin[a] + g.step[a] * g.count[a] + expand;
      if (p[a] < lo || p[a] >= hi) return false;
    }
    return true;
  };
  int b1 = g.dim == 2 ? bound : 0;
  for (int k0 = -bound; k0 <= bound; ++k0)
    for (int k1 = -b1; k1 <= b1; ++k1) {
      Vec ak = comb.A.apply(vec2(k0, k1));
      Vec p = {ak[0] + comb.shift[0], ak[1] + comb.shift[1]};
      if (inside(p)) out.push_back({p, {k0, k1}});
    }
  return out;
}

void chirp_resolution_guard(double alpha, const Grid& g) {
  double radius = 0.0;
  for (int a = 0; a < g.dim; ++a)
    radius = std::max(radius,
                      std::max(std::abs(g.origin[a]),
                               std::abs(g.origin[a] + g.step[a] * g.count[a])));
  double v = std::abs(alpha) * g.step[0] * radius;
  if (v > 0.25 + 1e-12)
    throw TailTooFat(
        "chirp quadrature unresolved: need alpha*h*(window radius) <= 1/4, got " +
        std::to_string(v));
}

Complex chirp_quadrature(const ChirpComp& ch, const SampledFunction& f) {
  const Grid& g = f.grid;
  chirp_resolution_guard(ch.alpha, g);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Vec t = g.point(i);
    Vec u = {t[0] - ch.shift[0], t[1] - ch.shift[1]};
    double q = u[0] * u[0] + (g.dim == 2 ? u[1] * u[1] : 0.0);
    double phase = kPi * ch.alpha * q + 2.0 * kPi * dot(ch.mod, t, g.dim);
    acc += std::polar(1.0, phase) * f.values[i];
  }
  return ch.c * acc * g.cell_volume();
}

Complex apply_component(const MildComponent& comp, const SampledFunction& f) {
  return std::visit(
      [&](const auto& c) -> Complex {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, AtomComp>) {
          return c.c * value_at(f, c.x);
        } else if constexpr (std::is_same_v<T, CombComp>) {
          auto pts = comb_points(c, f.grid);
          if (pts.empty()) return 0.0;
          int kmax = 0;
          for (auto& lp : pts)
            kmax = std::max({kmax, std::abs(lp.k[0]), std::abs(lp.k[1])});
          Complex acc = 0.0;
          double shell = 0.0;
          for (auto& lp : pts) {
            Complex v = value_at(f, lp.p);
            acc += unit_phase(dot(c.mod, lp.p, f.grid.dim)) * v;
            if (std::max(std::abs(lp.k[0]), std::abs(lp.k[1])) == kmax)
              shell = std::max(shell, std::abs(v));
          }
          if (kmax > 0 && shell > 1e-14)
            throw TailTooFat("comb action: lattice sum not converged in window");
          return c.c * acc;
        } else if constexpr (std::is_same_v<T, PureFreqComp>) {
          return c.c * ft_at(f, {-c.x[0], -c.x[1]});
        } else if constexpr (std::is_same_v<T, ChirpComp>) {
          SampledFunction arg = f;
          for (int p = 0; p < c.ft_power % 4; ++p) arg = ft(arg);
          return chirp_quadrature(c, arg);
        } else {
          // RegularComp: quadrature on the component's own grid, the test
          // function evaluated there.
          const SampledFunction& g = c.g;
          if (f.grid == g.grid) {
            Complex acc = 0.0;
            for (std::size_t i = 0; i < g.values.size(); ++i)
              acc += g.values[i] * f.values[i];
            return acc * g.grid.cell_volume();
          }
          Complex acc = 0.0;
          for (std::size_t i = 0; i < g.values.size(); ++i)
            acc += g.values[i] * value_at(f, g.grid.point(i));
          return acc * g.grid.cell_volume();
        }
      },
      comp);
}

}  // namespace

MildDistribution dirac_dist(const Vec& x, Complex c) {
  return {{AtomComp{x, c}}};
}
MildDistribution shah_dist(const LatticeMatrix& A, Complex c) {
  return {{CombComp{A, {0, 0}, {0, 0}, c}}};
}
MildDistribution pure_freq_dist(const Vec& x, Complex c) {
  return {{PureFreqComp{x, c}}};
}
MildDistribution chirp_dist(double alpha, Complex c) {
  return {{ChirpComp{alpha, {0, 0}, {0, 0}, c, 0}}};
}
MildDistribution embed_dist(const SampledFunction& g) {
  return {{RegularComp{g}}};
}

MildDistribution mild_from_measure(const BoundedMeasure& mu) {
  MildDistribution out;
  for (const MeasureAtom& a : mu.atoms) out.comps.push_back(AtomComp{a.pos, a.weight});
  if (mu.density) out.comps.push_back(RegularComp{*mu.density});
  return out;
}

MildDistribution mild_sum(Complex a, const MildDistribution& s1, Complex b,
                          const MildDistribution& s2) {
  MildDistribution out;
  auto push_scaled = [&out](Complex w, const MildDistribution& s) {
    for (const MildComponent& comp : s.comps) {
      MildComponent c = comp;
      std::visit(
          [&](auto& cc) {
            using T = std::decay_t<decltype(cc)>;
            if constexpr (std::is_same_v<T, RegularComp>) {
              cc.g = scale(cc.g, w);
            } else {
              cc.c *= w;
            }
          },
          c);
      out.comps.push_back(std::move(c));
    }
  };
  push_scaled(a, s1);
  push_scaled(b, s2);
  return out;
}

Complex dist_apply(const MildDistribution& sigma, const SampledFunction& f) {
  Complex acc = 0.0;
  for (const MildComponent& c : sigma.comps) acc += apply_component(c, f);
  return acc;
}

MildDistribution dist_ft(const MildDistribution& sigma) {
  MildDistribution out;
  for (const MildComponent& comp : sigma.comps) {
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, AtomComp>) {
            out.comps.push_back(PureFreqComp{{-c.x[0], -c.x[1]}, c.c});
          } else if constexpr (std::is_same_v<T, PureFreqComp>) {
            out.comps.push_back(AtomComp{c.x, c.c});
          } else if constexpr (std::is_same_v<T, CombComp>) {
            int d = c.A.dim;
            LatticeMatrix Ad = make_lattice(d, c.A.inv_t);
            Complex w = c.c * unit_phase(dot(c.shift, c.mod, d)) / std::abs(c.A.det);
            out.comps.push_back(CombComp{Ad, c.mod,
                                         {-c.shift[0], -c.shift[1]}, w});
          } else if constexpr (std::is_same_v<T, ChirpComp>) {
            ChirpComp n = c;
            n.ft_power = (c.ft_power + 1) % 4;
            out.comps.push_back(n);
          } else {
            out.comps.push_back(RegularComp{ft(c.g)});
          }
        },
        comp);
  }
  return out;
}

namespace {

// Extended operators on a single component. The chirp wrapper commutes the
// operator through its pending transforms first:
//   T_z F = F E_z,  E_w F = F T_{-w},  flip F = F flip,
//   conj F^p = F^{4-p} conj,  alpha_A F = F alpha_{A^dagger}.
MildComponent act_component(DistOp op, const Vec& v, const LatticeMatrix* A,
                            const MildComponent& comp);

MildComponent act_chirp(DistOp op, Vec v, const LatticeMatrix* A,
                        ChirpComp c) {
  int d = A ? A->dim : 1;
  LatticeMatrix local;
  for (int p = 0; p < c.ft_power % 4; ++p) {
    switch (op) {
      case DistOp::Translate:
        op = DistOp::Modulate;
        break;
      case DistOp::Modulate:
        op = DistOp::Translate;
        v = {-v[0], -v[1]};
        break;
      case DistOp::Flip:
        break;
      case DistOp::Conjugate:
        // handled below by power reversal
        break;
      case DistOp::MatrixDilate:
        local = make_lattice(d, A->inv_t);
        A = &local;
        break;
    }
  }
  int power = c.ft_power;
  c.ft_power = 0;
  MildComponent inner = act_component(op, v, A, MildComponent(c));
  ChirpComp& out = std::get<ChirpComp>(inner);
  out.ft_power = (op == DistOp::Conjugate && power > 0) ? (4 - power) % 4 : power;
  return inner;
}

MildComponent act_component(DistOp op, const Vec& v, const LatticeMatrix* A,
                            const MildComponent& comp) {
  return std::visit(
      [&](const auto& c) -> MildComponent {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, AtomComp>) {
          switch (op) {
            case DistOp::Translate:
              return AtomComp{{c.x[0] + v[0], c.x[1] + v[1]}, c.c};
            case DistOp::Modulate:
              return AtomComp{c.x, c.c * unit_phase(dot(v, c.x, 2))};
            case DistOp::Flip:
              return AtomComp{{-c.x[0], -c.x[1]}, c.c};
            case DistOp::Conjugate:
              return AtomComp{c.x, std::conj(c.c)};
            case DistOp::MatrixDilate:
              return AtomComp{A->apply_inv(c.x),
                              c.c / std::sqrt(std::abs(A->det))};
          }
        } else if constexpr (std::is_same_v<T, PureFreqComp>) {
          switch (op) {
            case DistOp::Translate:
              return PureFreqComp{c.x, c.c * unit_phase(-dot(v, c.x, 2))};
            case DistOp::Modulate:
              return PureFreqComp{{c.x[0] + v[0], c.x[1] + v[1]}, c.c};
            case DistOp::Flip:
              return PureFreqComp{{-c.x[0], -c.x[1]}, c.c};
            case DistOp::Conjugate:
              return PureFreqComp{{-c.x[0], -c.x[1]}, std::conj(c.c)};
            case DistOp::MatrixDilate: {
              Vec y = {A->a[0] * c.x[0] + A->a[2] * c.x[1],
                       A->a[1] * c.x[0] + A->a[3] * c.x[1]};  // A^T x
              return PureFreqComp{y, c.c * std::sqrt(std::abs(A->det))};
            }
          }
        } else if constexpr (std::is_same_v<T, CombComp>) {
          int d = c.A.dim;
          switch (op) {
            case DistOp::Translate:
              return CombComp{c.A,
                              {c.shift[0] + v[0], c.shift[1] + v[1]},
                              c.mod,
                              c.c * unit_phase(-dot(c.mod, v, d))};
            case DistOp::Modulate:
              return CombComp{c.A, c.shift,
                              {c.mod[0] + v[0], c.mod[1] + v[1]}, c.c};
            case DistOp::Flip:
              return CombComp{c.A,
                              {-c.shift[0], -c.shift[1]},
                              {-c.mod[0], -c.mod[1]},
                              c.c};
            case DistOp::Conjugate:
              return CombComp{c.A, c.shift, {-c.mod[0], -c.mod[1]},
                              std::conj(c.c)};
            case DistOp::MatrixDilate: {
              // B^{-1} A lattice, B^{-1} shift, B^T mod
              std::array<double, 4> prod{};
              const auto& bi = A->inv;
              const auto& aa = c.A.a;
              prod[0] = bi[0] * aa[0] + bi[1] * aa[2];
              prod[1] = bi[0] * aa[1] + bi[1] * aa[3];
              prod[2] = bi[2] * aa[0] + bi[3] * aa[2];
              prod[3] = bi[2] * aa[1] + bi[3] * aa[3];
              if (d == 1) prod = {bi[0] * aa[0], 0, 0, 1};
              Vec bmod = {A->a[0] * c.mod[0] + A->a[2] * c.mod[1],
                          A->a[1] * c.mod[0] + A->a[3] * c.mod[1]};
              return CombComp{make_lattice(d, prod), A->apply_inv(c.shift),
                              bmod, c.c / std::sqrt(std::abs(A->det))};
            }
          }
        } else if constexpr (std::is_same_v<T, ChirpComp>) {
          if (c.ft_power % 4 != 0) return act_chirp(op, v, A, c);
          switch (op) {
            case DistOp::Translate:
              return ChirpComp{c.alpha,
                               {c.shift[0] + v[0], c.shift[1] + v[1]},
                               c.mod,
                               c.c * unit_phase(-dot(c.mod, v, 2)),
                               0};
            case DistOp::Modulate:
              return ChirpComp{c.alpha, c.shift,
                               {c.mod[0] + v[0], c.mod[1] + v[1]}, c.c, 0};
            case DistOp::Flip:
              return ChirpComp{c.alpha,
                               {-c.shift[0], -c.shift[1]},
                               {-c.mod[0], -c.mod[1]},
                               c.c,
                               0};
            case DistOp::Conjugate:
              return ChirpComp{-c.alpha, c.shift,
                               {-c.mod[0], -c.mod[1]}, std::conj(c.c), 0};
            case DistOp::MatrixDilate: {
              if (A->dim != 1)
                throw BadParams("chirp dilation implemented for d=1");
              double a = A->a[0];
              // ch_alpha(a u - y) = e^{i pi alpha y^2} ch_{alpha a^2}(u) e^{-2 pi i alpha a y u}
              double alpha2 = c.alpha * a * a;
              Complex w = c.c * std::sqrt(std::abs(a)) *
                          std::polar(1.0, kPi * c.alpha * c.shift[0] * c.shift[0]);
              Vec mod2 = {c.mod[0] * a - c.alpha * a * c.shift[0], 0.0};
              return ChirpComp{alpha2, {0, 0}, mod2, w, 0};
            }
          }
        } else {
          const RegularComp& r = std::get<RegularComp>(comp);
          switch (op) {
            case DistOp::Translate:
              return RegularComp{translate(r.g, v)};
            case DistOp::Modulate:
              return RegularComp{modulate(r.g, v)};
            case DistOp::Flip:
              return RegularComp{flip(r.g)};
            case DistOp::Conjugate:
              return RegularComp{conjugate(r.g)};
            case DistOp::MatrixDilate:
              return RegularComp{act(OpKind::MatrixDilate, *A, r.g)};
          }
        }
        throw BadParams("unknown distribution operator");
      },
      comp);
}

}  // namespace

MildDistribution dist_act(DistOp op, const LatticeMatrix& A,
                          const MildDistribution& sigma) {
  if (op != DistOp::MatrixDilate)
    throw BadParams("matrix argument only applies to matrix_dilate");
  MildDistribution out;
  for (const MildComponent& c : sigma.comps)
    out.comps.push_back(act_component(op, {0, 0}, &A, c));
  return out;
}

MildDistribution dist_act(DistOp op, const std::vector<double>& params,
                          const MildDistribution& sigma) {
  if (op == DistOp::MatrixDilate) {
    std::array<double, 4> e{1, 0, 0, 1};
    int d = params.size() >= 4 ? 2 : 1;
    if (d == 1) e[0] = params.at(0);
    else for (int i = 0; i < 4; ++i) e[i] = params.at(i);
    return dist_act(op, make_lattice(d, e), sigma);
  }
  Vec v{0, 0};
  if (op == DistOp::Translate || op == DistOp::Modulate) {
    v[0] = params.at(0);
    if (params.size() > 1) v[1] = params[1];
  }
  MildDistribution out;
  for (const MildComponent& c : sigma.comps)
    out.comps.push_back(act_component(op, v, nullptr, c));
  return out;
}

SampledFunction dist_adjoint_arg(DistOp op, const std::vector<double>& params,
                                 const SampledFunction& f) {
  switch (op) {
    case DistOp::Translate: {
      Vec v = vec1(-params.at(0));
      if (params.size() > 1 && f.grid.dim == 2) v[1] = -params[1];
      return translate(f, v);
    }
    case DistOp::Modulate: {
      Vec v = vec1(params.at(0));
      if (params.size() > 1 && f.grid.dim == 2) v[1] = params[1];
      return modulate(f, v);
    }
    case DistOp::Flip:
      return flip(f);
    case DistOp::Conjugate:
      return conjugate(f);
    case DistOp::MatrixDilate: {
      std::array<double, 4> e{1, 0, 0, 1};
      if (f.grid.dim == 1) e[0] = params.at(0);
      else for (int i = 0; i < 4; ++i) e[i] = params.at(i);
      LatticeMatrix A = make_lattice(f.grid.dim, e);
      return act(OpKind::MatrixDilate, make_lattice(f.grid.dim, A.inv), f);
    }
  }
  throw BadParams("unknown distribution operator");
}

SampledFunction dist_convolve(const MildDistribution& sigma,
                              const SampledFunction& g) {
  SampledFunction out = zero_function(g.grid);
  const Grid& gr = g.grid;
  for (const MildComponent& comp : sigma.comps) {
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, AtomComp>) {
            SampledFunction sh = translate(g, c.x);
            for (std::size_t i = 0; i < out.values.size(); ++i)
              out.values[i] += c.c * sh.values[i];
          } else if constexpr (std::is_same_v<T, CombComp>) {
            // (comb * g)(t) = c sum phase(p) g(t - p), lattice expanded by a
            // window length so edge nodes see all contributing points
            double expand = gr.step[0] * gr.count[0];
            auto pts = comb_points(c, gr, expand);
            for (auto& lp : pts) {
              Complex w = c.c * unit_phase(dot(c.mod, lp.p, gr.dim));
              for (std::size_t i = 0; i < out.values.size(); ++i) {
                Vec t = gr.point(i);
                out.values[i] +=
                    w * value_at(g, {t[0] - lp.p[0], t[1] - lp.p[1]});
              }
            }
          } else if constexpr (std::is_same_v<T, PureFreqComp>) {
            // conv with a pure frequency projects onto it
            Complex amp = c.c * ft_at(g, c.x);
            GenPtr e = gen_named("pure_frequency", {c.x[0], c.x[1]});
            SampledFunction wave = sample_generator(e, gr);
            for (std::size_t i = 0; i < out.values.size(); ++i)
              out.values[i] += amp * wave.values[i];
          } else if constexpr (std::is_same_v<T, ChirpComp>) {
            if (c.ft_power % 4 != 0)
              throw BadKind("convolution with a transformed chirp has no "
                            "direct quadrature; use the transfer path");
            chirp_resolution_guard(c.alpha, gr);
            for (std::size_t i = 0; i < out.values.size(); ++i) {
              // sigma(T_t flip g) by quadrature
              Vec t = gr.point(i);
              Complex acc = 0.0;
              for (std::size_t j = 0; j < gr.size(); ++j) {
                Vec s = gr.point(j);
                Vec u = {s[0] - c.shift[0], s[1] - c.shift[1]};
                double q = u[0] * u[0] + (gr.dim == 2 ? u[1] * u[1] : 0.0);
                double ph = kPi * c.alpha * q + 2 * kPi * dot(c.mod, s, gr.dim);
                acc += std::polar(1.0, ph) *
                       value_at(g, {t[0] - s[0], t[1] - s[1]});
              }
              out.values[i] += c.c * acc * gr.cell_volume();
            }
          } else {
            const RegularComp& r = std::get<RegularComp>(comp);
            if (!(r.g.grid == gr))
              throw GridMismatch("dist_convolve: density grid mismatch");
            SampledFunction conv = convolve(r.g, g);
            for (std::size_t i = 0; i < out.values.size(); ++i)
              out.values[i] += conv.values[i];
          }
        },
        comp);
  }
  return out;
}

MildDistribution dist_mul(const MildDistribution& sigma,
                          const SampledFunction& g) {
  MildDistribution out;
  for (const MildComponent& comp : sigma.comps) {
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, AtomComp>) {
            Complex w = c.c * value_at(g, c.x);
            if (w != Complex(0.0)) out.comps.push_back(AtomComp{c.x, w});
          } else if constexpr (std::is_same_v<T, CombComp>) {
            // weighted atoms at the lattice points inside the window
            auto pts = comb_points(c, g.grid);
            for (auto& lp : pts) {
              Complex w = c.c * unit_phase(dot(c.mod, lp.p, g.grid.dim)) *
                          value_at(g, lp.p);
              if (w != Complex(0.0)) out.comps.push_back(AtomComp{lp.p, w});
            }
          } else if constexpr (std::is_same_v<T, PureFreqComp>) {
            SampledFunction dens = scale(modulate(g, c.x), c.c);
            out.comps.push_back(RegularComp{dens});
          } else if constexpr (std::is_same_v<T, ChirpComp>) {
            if (c.ft_power % 4 != 0)
              throw BadKind("product with a transformed chirp stays symbolic");
            chirp_resolution_guard(c.alpha, g.grid);
            SampledFunction dens = zero_function(g.grid);
            for (std::size_t i = 0; i < dens.values.size(); ++i) {
              Vec t = g.grid.point(i);
              Vec u = {t[0] - c.shift[0], t[1] - c.shift[1]};
              double q = u[0] * u[0] + (g.grid.dim == 2 ? u[1] * u[1] : 0.0);
              double ph = kPi * c.alpha * q + 2 * kPi * dot(c.mod, t, g.grid.dim);
              dens.values[i] = c.c * std::polar(1.0, ph) * g.values[i];
            }
            out.comps.push_back(RegularComp{dens});
          } else {
            const RegularComp& r = std::get<RegularComp>(comp);
            if (!(r.g.grid == g.grid))
              throw GridMismatch("dist_mul: density grid mismatch");
            out.comps.push_back(RegularComp{pointwise(r.g, g, PwKind::Mul)});
          }
        },
        comp);
  }
  return out;
}

double wstar_gap(const MildDistribution& s1, const MildDistribution& s2,
                 const std::vector<SampledFunction>& battery) {
  if (battery.empty()) throw EmptyBattery("weak-* gap needs a nonempty battery");
  double gap = 0.0;
  for (const SampledFunction& f : battery)
    gap = std::max(gap, std::abs(dist_apply(s1, f) - dist_apply(s2, f)));
  return gap;
}

}  // namespace mildbank
