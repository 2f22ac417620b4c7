#include "mildbank/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mildbank {

namespace {

constexpr double kPi = std::numbers::pi;

// Phase factor folding the window origin into the transform, per axis:
// e^{-2 pi i xi_k t0} at centered frequency index k.
Complex origin_phase(double xi, double t0) {
  return std::polar(1.0, -2.0 * kPi * xi * t0);
}

void check_pow2_grid(const Grid& g) {
  for (int a = 0; a < g.dim; ++a) {
    int n = g.count[a];
    if (n < 8 || (n & (n - 1)) != 0)
      throw BadGrid("transform requires power-of-two counts");
  }
}

// Applies the FFT along one axis of a (possibly 2D, row-major) array.
void fft_axis(std::vector<Complex>& data, const Grid& g, int axis, int sign) {
  int n0 = g.count[0];
  int n1 = g.dim == 2 ? g.count[1] : 1;
  std::vector<Complex> line;
  if (axis == 0) {
    line.resize(n0);
    for (int j = 0; j < n1; ++j) {
      for (int i = 0; i < n0; ++i) line[i] = data[(std::size_t)i * n1 + j];
      fft_pow2(line, sign);
      for (int i = 0; i < n0; ++i) data[(std::size_t)i * n1 + j] = line[i];
    }
  } else {
    line.resize(n1);
    for (int i = 0; i < n0; ++i) {
      for (int j = 0; j < n1; ++j) line[j] = data[(std::size_t)i * n1 + j];
      fft_pow2(line, sign);
      for (int j = 0; j < n1; ++j) data[(std::size_t)i * n1 + j] = line[j];
    }
  }
}

}  // namespace

void fft_pow2(std::vector<Complex>& data, int sign) {
  const std::size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw BadGrid("fft length must be a power of two");
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * kPi / static_cast<double>(len);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        // per-index twiddle keeps rounding error independent of position
        Complex w = std::polar(1.0, ang * static_cast<double>(j));
        Complex u = data[i + j];
        Complex v = data[i + j + len / 2] * w;
        data[i + j] = u + v;
        data[i + j + len / 2] = u - v;
      }
    }
  }
}

Grid frequency_grid(const Grid& g) {
  Grid f;
  f.dim = g.dim;
  for (int a = 0; a < g.dim; ++a) {
    f.count[a] = g.count[a];
    f.step[a] = 1.0 / (g.count[a] * g.step[a]);
    f.origin[a] = -0.5 / g.step[a];
  }
  return f;
}

Spectrum ft(const SampledFunction& f) {
  check_pow2_grid(f.grid);
  const Grid& g = f.grid;
  Grid fg = frequency_grid(g);
  std::vector<Complex> work = f.values;
  for (int a = 0; a < g.dim; ++a) fft_axis(work, g, a, -1);

  Spectrum out;
  out.grid = fg;
  out.label = f.label.empty() ? "" : f.label + "^";
  out.values.resize(work.size());
  int n0 = g.count[0];
  int n1 = g.dim == 2 ? g.count[1] : 1;
  double weight = g.cell_volume();
  for (int c0 = 0; c0 < n0; ++c0) {
    int j0 = (c0 + n0 / 2) % n0;  // DFT bin of centered index c0
    Complex p0 = origin_phase(fg.node(0, c0), g.origin[0]);
    for (int c1 = 0; c1 < n1; ++c1) {
      int j1 = (c1 + n1 / 2) % n1;
      Complex p = p0;
      if (g.dim == 2) p *= origin_phase(fg.node(1, c1), g.origin[1]);
      out.values[(std::size_t)c0 * n1 + c1] =
          weight * p * work[(std::size_t)j0 * n1 + j1];
    }
  }
  return out;
}

SampledFunction ift(const Spectrum& s, const Grid& time_grid) {
  check_pow2_grid(s.grid);
  const Grid& fg = s.grid;
  if (time_grid.dim != fg.dim) throw GridMismatch("ift: dimension mismatch");
  for (int a = 0; a < fg.dim; ++a) {
    if (time_grid.count[a] != fg.count[a])
      throw GridMismatch("ift: count mismatch");
    double h = 1.0 / (fg.count[a] * fg.step[a]);
    if (std::abs(time_grid.step[a] - h) > 1e-12 * h)
      throw GridMismatch("ift: time grid spacing incompatible with spectrum");
  }
  // Riemann sum of the inversion integral:
  //   f(t_n) = dxi^d sum_c S_c e^{2 pi i xi_c t_n}
  // which reduces to a forward-phase twist followed by an unnormalised
  // inverse FFT and a per-node (-1)^n factor per axis.
  int n0 = fg.count[0];
  int n1 = fg.dim == 2 ? fg.count[1] : 1;
  std::vector<Complex> work(s.values.size());
  for (int c0 = 0; c0 < n0; ++c0) {
    Complex p0 = std::conj(origin_phase(fg.node(0, c0), time_grid.origin[0]));
    for (int c1 = 0; c1 < n1; ++c1) {
      Complex p = p0;
      if (fg.dim == 2)
        p *= std::conj(origin_phase(fg.node(1, c1), time_grid.origin[1]));
      work[(std::size_t)c0 * n1 + c1] = p * s.values[(std::size_t)c0 * n1 + c1];
    }
  }
  for (int a = 0; a < fg.dim; ++a) fft_axis(work, fg, a, +1);
  SampledFunction out;
  out.grid = time_grid;
  out.values.resize(work.size());
  double weight = fg.cell_volume();
  for (int i0 = 0; i0 < n0; ++i0) {
    double s0 = (i0 % 2 == 0) ? 1.0 : -1.0;
    for (int i1 = 0; i1 < n1; ++i1) {
      double sgn = s0 * ((fg.dim == 2 && i1 % 2 != 0) ? -1.0 : 1.0);
      out.values[(std::size_t)i0 * n1 + i1] =
          weight * sgn * work[(std::size_t)i0 * n1 + i1];
    }
  }
  return out;
}

SampledFunction ift(const Spectrum& s) {
  Grid tg;
  tg.dim = s.grid.dim;
  for (int a = 0; a < s.grid.dim; ++a) {
    tg.count[a] = s.grid.count[a];
    tg.step[a] = 1.0 / (s.grid.count[a] * s.grid.step[a]);
    tg.origin[a] = -tg.count[a] * tg.step[a] / 2;
  }
  return ift(s, tg);
}

SampledFunction ft(const SampledFunction& f, FtDirection dir) {
  return dir == FtDirection::Forward ? ft(f) : ift(f);
}

Complex ft_at(const SampledFunction& f, const Vec& s) {
  const Grid& g = f.grid;
  int n0 = g.count[0];
  int n1 = g.dim == 2 ? g.count[1] : 1;
  std::vector<Complex> p0(n0), p1(n1, Complex(1.0));
  for (int i = 0; i < n0; ++i)
    p0[i] = std::polar(1.0, -2.0 * kPi * s[0] * g.node(0, i));
  if (g.dim == 2)
    for (int j = 0; j < n1; ++j)
      p1[j] = std::polar(1.0, -2.0 * kPi * s[1] * g.node(1, j));
  Complex acc = 0.0;
  for (int i = 0; i < n0; ++i) {
    Complex row = 0.0;
    for (int j = 0; j < n1; ++j) row += f.values[(std::size_t)i * n1 + j] * p1[j];
    acc += p0[i] * row;
  }
  return acc * g.cell_volume();
}

SampledFunction convolve(const SampledFunction& k, const SampledFunction& f) {
  if (!(k.grid == f.grid)) throw GridMismatch("convolve: grid mismatch");
  if (k.grid.dim != 1) throw BadGrid("convolve: implemented for d=1");
  int n = k.grid.count[0];
  double h = k.grid.step[0];
  // t_i - t_j is a node iff i - j + N/2 in range; zero extension otherwise.
  SampledFunction out;
  out.grid = k.grid;
  out.values.assign(n, Complex(0.0));
  for (int i = 0; i < n; ++i) {
    Complex acc = 0.0;
    // i - j + N/2 in [0, N) <=> j in (i - N/2, i + N/2]
    int jlo = std::max(0, i - n / 2 + 1);
    int jhi = std::min(n - 1, i + n / 2);
    for (int j = jlo; j <= jhi; ++j) acc += k.values[j] * f.values[i - j + n / 2];
    out.values[i] = acc * h;
  }
  return out;
}

ResidualReport identity_residuals(const SampledFunction& f,
                                  const SampledFunction& g) {
  if (!(f.grid == g.grid)) throw GridMismatch("identity_residuals");
  ResidualReport r;
  Spectrum fh = ft(f), gh = ft(g);

  // fundamental: int f g^ = int f^ g, each side on its own natural grid;
  // needs the time nodes to land on the frequency grid (N h^2 integral).
  SampledFunction gh_t = resample_on(gh, f.grid);
  SampledFunction fh_t = resample_on(fh, f.grid);
  Complex lhs = integrate(pointwise(f, gh_t, PwKind::Mul));
  Complex rhs = integrate(pointwise(fh_t, g, PwKind::Mul));
  r.fundamental = std::abs(lhs - rhs);

  // convolution theorem, quadrature convolution vs FFT product
  SampledFunction conv = convolve(f, g);
  Spectrum conv_hat = ft(conv);
  double sup = 0.0;
  for (std::size_t i = 0; i < conv_hat.values.size(); ++i)
    sup = std::max(sup,
                   std::abs(conv_hat.values[i] - fh.values[i] * gh.values[i]));
  r.convolution = sup;

  // Parseval, conjugated pairing and the conjugate-free variant
  Complex plane = inner(fh, gh);
  r.parseval = std::abs(plane - inner(f, g));
  r.parseval_printed = std::abs(plane - integrate(pointwise(f, g, PwKind::Mul)));

  // inversion
  SampledFunction back = ift(fh, f.grid);
  double sup_inv = 0.0;
  for (std::size_t i = 0; i < back.values.size(); ++i)
    sup_inv = std::max(sup_inv, std::abs(back.values[i] - f.values[i]));
  r.inversion = sup_inv;
  return r;
}

namespace {

// Integer points k with A(k) + shift inside the window of g (per-axis),
// d = lattice dimension (1 or 2). Brute enumeration over the box bound
// |k_a| <= ||A^{-1}||_inf * (window radius + |shift|).
std::vector<std::array<int, 2>> lattice_range(const LatticeMatrix& A,
                                              const Vec& shift, const Grid& g,
                                              int lat_dim) {
  double radius = 0.0;
  for (int a = 0; a < g.dim; ++a)
    radius = std::max(radius, std::max(std::abs(g.origin[a]),
                                       std::abs(g.origin[a] + g.step[a] * g.count[a])));
  double norm_inv = 0.0;
  for (double e : A.inv) norm_inv = std::max(norm_inv, std::abs(e));
  double shift_mag = std::max(std::abs(shift[0]), std::abs(shift[1]));
  int bound = static_cast<int>(std::ceil((lat_dim == 1 ? 1 : 2) * norm_inv *
                                         (radius + shift_mag))) + 1;
  auto inside = [&](const Vec& p) {
    for (int a = 0; a < g.dim; ++a) {
      double lo = g.origin[a], hi = g.origin[a] + g.step[a] * g.count[a];
      if (p[a] < lo || p[a] >= hi) return false;
    }
    return true;
  };
  std::vector<std::array<int, 2>> out;
  if (lat_dim == 1) {
    for (int k = -bound; k <= bound; ++k) {
      Vec p = A.apply(vec1(k));
      p[0] += shift[0];
      p[1] += shift[1];
      if (inside(p)) out.push_back({k, 0});
    }
  } else {
    for (int k0 = -bound; k0 <= bound; ++k0)
      for (int k1 = -bound; k1 <= bound; ++k1) {
        Vec p = A.apply(vec2(k0, k1));
        p[0] += shift[0];
        p[1] += shift[1];
        if (inside(p)) out.push_back({k0, k1});
      }
  }
  return out;
}

}  // namespace

PoissonResult poisson(const SampledFunction& f, const LatticeMatrix& A, int m,
                      const Vec& x, const Vec& w) {
  const Grid& g = f.grid;
  int d = g.dim;
  if (m < 0 || m > d) throw BadParams("poisson: need 0 <= m <= d");
  if (A.dim != d) throw GridMismatch("poisson: matrix dimension mismatch");
  PoissonResult res;
  bool shifted = (x[0] != 0 || x[1] != 0 || w[0] != 0 || w[1] != 0);
  if (shifted && m != 0)
    throw BadParams("poisson: shifted form only for m = 0");

  Grid fg = frequency_grid(g);
  auto guard = [](double biggest_shell_value, const char* side) {
    if (biggest_shell_value > 1e-14)
      throw TailTooFat(std::string("poisson: lattice sum not converged within "
                                   "the window on the ") + side + " side");
  };

  if (m == 0) {
    // lhs: sum over Ak - x inside the time window
    auto pts = lattice_range(A, {-x[0], -x[1]}, g, d);
    Complex lhs = 0.0;
    double shell = 0.0;
    int kmax = 0;
    for (auto& k : pts) kmax = std::max({kmax, std::abs(k[0]), std::abs(k[1])});
    for (auto& k : pts) {
      Vec ak = A.apply(vec2(k[0], k[1]));
      Vec p = {ak[0] - x[0], ak[1] - x[1]};
      Complex v = value_at(f, p);
      double phase = ak[0] * w[0] + (d == 2 ? ak[1] * w[1] : 0.0);
      lhs += std::polar(1.0, 2.0 * kPi * phase) * v;
      if (std::max(std::abs(k[0]), std::abs(k[1])) == kmax)
        shell = std::max(shell, std::abs(v));
    }
    if (kmax > 0) guard(shell, "time");
    res.lhs = lhs;

    // rhs: sum over A^dag k - w inside the frequency window
    LatticeMatrix Ad = make_lattice(d, A.inv_t);
    auto fpts = lattice_range(Ad, {-w[0], -w[1]}, fg, d);
    Complex rhs = 0.0;
    double fshell = 0.0;
    int fkmax = 0;
    for (auto& k : fpts)
      fkmax = std::max({fkmax, std::abs(k[0]), std::abs(k[1])});
    for (auto& k : fpts) {
      Vec adk = Ad.apply(vec2(k[0], k[1]));
      Vec p = {adk[0] - w[0], adk[1] - w[1]};
      Complex v = ft_at(f, p);
      double phase = -(adk[0] * x[0] + (d == 2 ? adk[1] * x[1] : 0.0));
      rhs += std::polar(1.0, 2.0 * kPi * phase) * v;
      if (std::max(std::abs(k[0]), std::abs(k[1])) == fkmax)
        fshell = std::max(fshell, std::abs(v));
    }
    if (fkmax > 0) guard(fshell, "frequency");
    double wx = w[0] * x[0] + (d == 2 ? w[1] * x[1] : 0.0);
    res.rhs = std::polar(1.0, 2.0 * kPi * wx) / std::abs(A.det) * rhs;
    return res;
  }

  if (m == d) {
    res.lhs = integrate(f) / std::abs(A.det);
    res.rhs = ft_at(f, {0, 0}) / std::abs(A.det);
    return res;
  }

  // m = 1, d = 2: integrate over the first coordinate, sum over the second.
  double h0 = g.step[0];
  Complex lhs = 0.0;
  double hi1 = g.origin[1] + g.step[1] * g.count[1];
  double norm_inv = 0.0;
  for (double e : A.inv) norm_inv = std::max(norm_inv, std::abs(e));
  int bound = static_cast<int>(std::ceil(2 * norm_inv *
                                         std::max(std::abs(g.origin[1]), hi1))) + 1;
  for (int i = 0; i < g.count[0]; ++i) {
    double xi = g.node(0, i);
    for (int k = -bound; k <= bound; ++k) {
      Vec p = A.apply(vec2(xi, k));
      if (p[0] < g.origin[0] || p[0] >= g.origin[0] + h0 * g.count[0]) continue;
      if (p[1] < g.origin[1] || p[1] >= hi1) continue;
      lhs += value_at(f, p);
    }
  }
  res.lhs = lhs * h0;
  guard(edge_tail_mass(f), "time");

  LatticeMatrix Ad = make_lattice(d, A.inv_t);
  Complex rhs = 0.0;
  double fshell = 0.0;
  double fhi = fg.origin[1] + fg.step[1] * fg.count[1];
  std::vector<int> used;
  double ad_inv_norm = 0.0;
  for (double e : Ad.inv) ad_inv_norm = std::max(ad_inv_norm, std::abs(e));
  int fbound = static_cast<int>(std::ceil(2 * ad_inv_norm * std::abs(fhi))) + 1;
  for (int k = -fbound; k <= fbound; ++k) {
    Vec p = Ad.apply(vec2(0.0, k));
    if (p[0] < fg.origin[0] || p[0] >= fg.origin[0] + fg.step[0] * fg.count[0])
      continue;
    if (p[1] < fg.origin[1] || p[1] >= fhi) continue;
    used.push_back(k);
    rhs += ft_at(f, p);
  }
  if (used.empty()) throw TailTooFat("poisson: empty frequency lattice");
  int fkmax = std::max(std::abs(used.front()), std::abs(used.back()));
  for (int k : used)
    if (std::abs(k) == fkmax)
      fshell = std::max(fshell, std::abs(ft_at(f, Ad.apply(vec2(0.0, k)))));
  guard(fshell, "frequency");
  res.rhs = rhs / std::abs(A.det);
  return res;
}

PoissonResult poisson_gauss(const LatticeMatrix& A, const Vec& x, const Vec& w,
                            int dim) {
  if (A.dim != dim) throw GridMismatch("poisson_gauss: dimension mismatch");
  // term exponent: -pi (Ak.Ak - 2 Ak.z), z = x + i w
  auto series = [dim](const LatticeMatrix& M, Complex z0, Complex z1) {
    Complex acc = 0.0;
    int bound = 1;
    double shell = 1.0;
    while (shell > 1e-18 && bound < 4096) {
      bound *= 2;
      shell = 0.0;
      acc = 0.0;
      auto term = [&](int k0, int k1) {
        Vec mk = M.apply(vec2(k0, k1));
        Complex dot = mk[0] * z0 + (dim == 2 ? mk[1] * z1 : Complex(0.0));
        double q = mk[0] * mk[0] + (dim == 2 ? mk[1] * mk[1] : 0.0);
        return std::exp(-kPi * (q - 2.0 * dot));
      };
      if (dim == 1) {
        for (int k = -bound; k <= bound; ++k) {
          Complex t = term(k, 0);
          acc += t;
          if (std::abs(k) == bound) shell = std::max(shell, std::abs(t));
        }
      } else {
        for (int k0 = -bound; k0 <= bound; ++k0)
          for (int k1 = -bound; k1 <= bound; ++k1) {
            Complex t = term(k0, k1);
            acc += t;
            if (std::max(std::abs(k0), std::abs(k1)) == bound)
              shell = std::max(shell, std::abs(t));
          }
      }
    }
    if (shell > 1e-18) throw TailTooFat("poisson_gauss: series did not converge");
    return acc;
  };
  PoissonResult r;
  Complex z0(x[0], w[0]), z1(x[1], w[1]);
  r.lhs = series(A, z0, z1);
  LatticeMatrix Ad = make_lattice(dim, A.inv_t);
  Complex y0(w[0], x[0]), y1(w[1], x[1]);
  Complex zsq = z0 * z0 + (dim == 2 ? z1 * z1 : Complex(0.0));
  r.rhs = std::exp(kPi * zsq) / std::abs(A.det) * series(Ad, y0, y1);
  return r;
}

}  // namespace mildbank
