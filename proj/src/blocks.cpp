#include "qblocks/blocks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>

namespace qblocks {

namespace {

using real = long double;

constexpr real kPi = std::numbers::pi_v<real>;
constexpr int kSeriesCap = 100000;
constexpr real kSeriesTol = 1e-21L;
constexpr real kPoleGuard = 1e-9L;

bool near_integer(real x, real tol = kPoleGuard) { return std::fabs(x - std::round(x)) < tol; }

bool near_nonpositive_integer(real x, real tol = kPoleGuard) { return x < 0.5L && near_integer(x, tol); }

real gamma_checked(real x) {
  if (near_nonpositive_integer(x, 1e-14L)) throw std::domain_error("gamma function pole at " + std::to_string(static_cast<double>(x)));
  return std::tgamma(x);
}

// Series in z about 0 (|z| < 1).
real series(real a, real b, real c, real z) {
  real term = 1;
  real sum = 1;
  for (int k = 0; k < kSeriesCap; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
    sum += term;
    if (term == 0 || std::fabs(term) <= kSeriesTol * std::fabs(sum)) return sum;
  }
  throw ConvergenceError("hyp2f1 series did not converge");
}

void check_c(real c) {
  if (near_nonpositive_integer(c, 1e-12L)) throw std::domain_error("hyp2f1: c is a nonpositive integer");
}

// Transformation to w = 1 - z, with w passed exactly.
real connection(real a, real b, real c, real w) {
  const real d = c - a - b;
  if (near_integer(d, 1e-12L)) throw std::domain_error("hyp2f1: c - a - b is an integer");
  const real gc = gamma_checked(c);
  const real a1 = gc * gamma_checked(d) * rgamma(c - a) * rgamma(c - b);
  const real a2 = gc * gamma_checked(-d) * rgamma(a) * rgamma(b);
  real value = a1 * series(a, b, 1 - d, w);
  if (a2 != 0) value += std::pow(w, d) * a2 * series(c - a, c - b, d + 1, w);
  return value;
}

real hyp2f1_at(real a, real b, real c, real z, real w) {
  check_c(c);
  // Integer c - a - b has no two-term connection formula; the direct series still converges.
  if (z <= 0.5L || near_integer(c - a - b, 1e-12L)) return series(a, b, c, z);
  return connection(a, b, c, w);
}

struct HypParams {
  real a, b, c;
  real prefactor;  // C coefficients
  real z_power;
};

real h_of(int lambda, real kappa) { return conformal_weight(lambda, kappa); }

}  // namespace

long double conformal_weight(int lambda, long double kappa) {
  const real l = lambda;
  return (l * l + 2 * l) / kappa - l / 2;
}

long double central_charge(long double kappa) { return (3 * kappa - 8) * (6 - kappa) / (2 * kappa); }

long double rgamma(long double x) {
  if (near_nonpositive_integer(x, 1e-14L)) return 0;
  return 1 / std::tgamma(x);
}

long double hyp2f1_series(long double a, long double b, long double c, long double z) {
  check_c(c);
  if (!(std::fabs(z) < 1)) throw std::domain_error("hyp2f1_series: |z| must be below 1");
  return series(a, b, c, z);
}

long double hyp2f1_connection(long double a, long double b, long double c, long double z) {
  check_c(c);
  if (!(z > 0 && z <= 1)) throw std::domain_error("hyp2f1_connection: z must lie in (0, 1]");
  return connection(a, b, c, 1 - z);
}

long double hyp2f1(long double a, long double b, long double c, long double z) {
  if (!(z >= 0 && z < 1)) throw std::domain_error("hyp2f1: z must lie in [0, 1)");
  return hyp2f1_at(a, b, c, z, 1 - z);
}

// --------------------------------------------------------------- BlockContext

LocalShape parse_block_shape(const std::string& s) {
  if (s == "uw") return LocalShape::UpWedge;
  if (s == "dw") return LocalShape::DownWedge;
  if (s == "us") return LocalShape::UpSlope;
  if (s == "ds") return LocalShape::DownSlope;
  throw std::invalid_argument("shape must be one of uw, dw, us, ds");
}

const char* block_shape_code(LocalShape s) {
  switch (s) {
    case LocalShape::UpWedge:
      return "uw";
    case LocalShape::DownWedge:
      return "dw";
    case LocalShape::UpSlope:
      return "us";
    case LocalShape::DownSlope:
      return "ds";
  }
  return "?";
}

namespace {

HypParams wedge_params(const BlockContext& ctx) {
  const real k = ctx.kappa();
  const real l = ctx.lambda();
  if (ctx.shape() == LocalShape::UpWedge) {
    return {(k - 4) / k, 4 * l / k, (4 * l + 4) / k, ctx.c_minus(ctx.lambda() + 1), 2 * l / k};
  }
  return {(k - 4) / k, (2 * k - 8 - 4 * l) / k, (2 * k - 4 * l - 4) / k, ctx.c_minus(ctx.lambda()),
          (k - 2 * l - 4) / k};
}

}  // namespace

BlockContext::BlockContext(long double kappa, int lambda, LocalShape shape)
    : kappa_(kappa), lambda_(lambda), shape_(shape) {
  if (!(kappa > 0 && kappa < 8)) throw std::invalid_argument("kappa must lie in (0, 8)");
  if (lambda < 0) throw std::invalid_argument("lambda must be nonnegative");
  if (shape == LocalShape::DownWedge && lambda < 1) throw std::invalid_argument("down-wedge requires lambda >= 1");
  if (shape == LocalShape::DownSlope && lambda < 2) throw std::invalid_argument("down-slope requires lambda >= 2");
  auto reject = [&](const char* what) {
    throw std::invalid_argument(std::string("kappa = ") + std::to_string(static_cast<double>(kappa)) +
                                " hits a gamma pole (" + what + ")");
  };
  if (near_integer((8 - kappa) / kappa)) reject("(8 - kappa)/kappa is an integer");
  if (near_nonpositive_integer(4 / kappa)) reject("4/kappa");
  std::vector<int> needed;
  if (shape == LocalShape::UpWedge) needed = {lambda + 1};
  if (shape == LocalShape::DownWedge) needed = {lambda};
  if (shape == LocalShape::DownSlope) needed = {lambda, lambda - 1};
  for (int l : needed) {
    if (near_nonpositive_integer((4 - kappa + 4 * l) / kappa)) reject("C- numerator");
  }
  if (is_wedge(shape)) {
    const auto p = wedge_params(*this);
    if (near_nonpositive_integer(p.c)) reject("hypergeometric c");
  }
}

int BlockContext::sigma1() const { return shape_ == LocalShape::UpWedge || shape_ == LocalShape::UpSlope ? lambda_ + 1 : lambda_ - 1; }

int BlockContext::sigma2() const {
  switch (shape_) {
    case LocalShape::UpSlope:
      return lambda_ + 2;
    case LocalShape::DownSlope:
      return lambda_ - 2;
    default:
      return lambda_;
  }
}

long double BlockContext::c_minus(int l) const {
  if (l < 1) throw std::invalid_argument("C-_lambda is defined for lambda >= 1");
  const real k = kappa_;
  return gamma_checked((4 - k + 4 * l) / k) * gamma_checked(4 / k) * rgamma(4 * l / k) * rgamma((8 - k) / k);
}

// ------------------------------------------------------------------ g and ODEs

namespace {

// (1 - z)^((6 - kappa)/kappa) g(z) for the wedges, with w = 1 - z exact.
real wedge_scaled(const BlockContext& ctx, real z, real w) {
  const auto p = wedge_params(ctx);
  return p.prefactor * std::pow(z, p.z_power) * hyp2f1_at(p.a, p.b, p.c, z, w);
}

}  // namespace

long double block_g(const BlockContext& ctx, long double z) {
  if (!(z > 0 && z < 1)) throw std::domain_error("block_g: z must lie in (0, 1)");
  const real k = ctx.kappa();
  const int l = ctx.lambda();
  const real h = h_of(1, k);
  switch (ctx.shape()) {
    case LocalShape::UpSlope:
      return std::pow(1 - z, 2 / k) * std::pow(z, h_of(l + 1, k) - h_of(l, k) - h);
    case LocalShape::DownSlope:
      return ctx.c_minus(l) * ctx.c_minus(l - 1) * std::pow(1 - z, 2 / k) *
             std::pow(z, h_of(l - 1, k) - h_of(l, k) - h);
    default:
      return std::pow(1 - z, (k - 6) / k) * wedge_scaled(ctx, z, 1 - z);
  }
}

std::pair<OdeCoefficients, OdeCoefficients> ode_coefficients(const BlockContext& ctx, long double z) {
  const real k = ctx.kappa();
  const real h = h_of(1, k);
  const real h0 = h_of(ctx.lambda(), k);
  const real h2 = h_of(ctx.sigma2(), k);
  const real d = h2 - h0 - 2 * h;
  const real zz = z * z * (z - 1) * (z - 1);
  OdeCoefficients first{k * zz, 8 * z * (z - 1) * (z - 0.5L),
                        4 * (z * (z - 2) * h - z * (z - 1) * h2 + (z - 1) * h0)};
  OdeCoefficients second{k * zz, -2 * z * (z - 1) * (k * (d - 1) * (z - 1) + 2 * (z - 2)),
                         (k * d * (d - 1) + 4 * d - 4 * h0) * (z - 1) * (z - 1) - 4 * h};
  return {first, second};
}

std::pair<long double, long double> ode_residual(const std::function<long double(long double)>& g,
                                                 const BlockContext& ctx, long double z, long double step) {
  if (!(step > 0) || !(z - 2 * step > 0) || !(z + 2 * step < 1)) {
    throw std::domain_error("ode_residual: stencil must stay inside (0, 1)");
  }
  const real gm2 = g(z - 2 * step);
  const real gm1 = g(z - step);
  const real g0 = g(z);
  const real gp1 = g(z + step);
  const real gp2 = g(z + 2 * step);
  const real d1 = (-gp2 + 8 * gp1 - 8 * gm1 + gm2) / (12 * step);
  const real d2 = (-gp2 + 16 * gp1 - 30 * g0 + 16 * gm1 - gm2) / (12 * step * step);
  const auto [c1, c2] = ode_coefficients(ctx, z);
  return {c1.a2 * d2 + c1.a1 * d1 + c1.a0 * g0, c2.a2 * d2 + c2.a1 * d1 + c2.a0 * g0};
}

std::pair<long double, long double> ode_residual(const BlockContext& ctx, long double z, long double step) {
  return ode_residual([&](long double x) { return block_g(ctx, x); }, ctx, z, step);
}

// ------------------------------------------------------------------ asymptotics

namespace {

// Solve a small dense system with partial pivoting.
template <std::size_t N>
std::array<real, N> solve(std::array<std::array<real, N + 1>, N> m) {
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t p = col;
    for (std::size_t r = col + 1; r < N; ++r) {
      if (std::fabs(m[r][col]) > std::fabs(m[p][col])) p = r;
    }
    if (m[p][col] == 0) throw ConvergenceError("extrapolation system is singular");
    std::swap(m[p], m[col]);
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col) continue;
      const real f = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= N; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::array<real, N> x{};
  for (std::size_t i = 0; i < N; ++i) x[i] = m[i][N] / m[i][i];
  return x;
}

// Fit L + sum_i c_i eps^exps[i] through eps = 10^-(first_k + r), r = 0..3.
real extrapolate(const BlockContext& ctx, const std::vector<real>& exps, real first_k) {
  constexpr std::size_t Terms = 3;
  constexpr std::size_t N = Terms + 1;
  std::array<std::array<real, N + 1>, N> m{};
  for (std::size_t r = 0; r < N; ++r) {
    const real eps = std::pow(10.0L, -(first_k + static_cast<real>(r)));
    m[r][0] = 1;
    for (std::size_t i = 0; i < Terms; ++i) m[r][i + 1] = std::pow(eps, exps[i]);
    m[r][N] = wedge_scaled(ctx, 1 - eps, eps);
  }
  return solve<N>(m)[0];
}

}  // namespace

long double wedge_asymptotic(const BlockContext& ctx) {
  if (!is_wedge(ctx.shape())) throw std::invalid_argument("wedge_asymptotic requires a wedge shape");
  const real s = (8 - ctx.kappa()) / ctx.kappa();
  std::vector<real> exps{1, 2, 3, s, s + 1, s + 2};
  std::sort(exps.begin(), exps.end());
  const real value = extrapolate(ctx, exps, 3);
  const real shifted = extrapolate(ctx, exps, 3.5L);
  if (!std::isfinite(value) || std::fabs(value - shifted) > 1e-6L * std::max<real>(1, std::fabs(value))) {
    throw ConvergenceError("wedge asymptotic extrapolation did not settle");
  }
  return value;
}

long double expected_wedge_limit(const BlockContext& ctx) {
  if (ctx.shape() == LocalShape::UpWedge) return 1;
  if (ctx.shape() != LocalShape::DownWedge) throw std::invalid_argument("expected_wedge_limit requires a wedge shape");
  const real k = ctx.kappa();
  const real l = ctx.lambda();
  const real den = std::sin(4 * kPi * (l + 1) / k);
  if (std::fabs(den) < 1e-12L) throw std::domain_error("[lambda + 1] vanishes at this kappa");
  return -std::sin(4 * kPi * l / k) / den;
}

long double uasy_coefficient(const DyckPath& alpha, int j, long double kappa) {
  switch (local_shape(alpha, j)) {
    case LocalShape::UpWedge:
      return 1;
    case LocalShape::DownWedge: {
      const real a = alpha[j];
      const real den = std::sin(4 * kPi * (a + 2) / kappa);
      if (std::fabs(den) < 1e-12L) throw std::domain_error("[alpha(j) + 2] vanishes at this kappa");
      return -std::sin(4 * kPi * (a + 1) / kappa) / den;
    }
    default:
      return 0;
  }
}

// ------------------------------------------------------------------ grid sweeps

namespace {

constexpr std::array<LocalShape, 4> kShapes{LocalShape::UpWedge, LocalShape::DownWedge, LocalShape::UpSlope,
                                            LocalShape::DownSlope};

int min_lambda(LocalShape s) {
  if (s == LocalShape::DownWedge) return 1;
  if (s == LocalShape::DownSlope) return 2;
  return 0;
}

template <class Row, class Task, class Fn>
std::vector<Row> run_tasks(const std::vector<Task>& tasks, Exec exec, Fn&& fn) {
  std::vector<Row> rows(tasks.size());
  std::exception_ptr error;
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < tasks.size(); ++i) rows[i] = fn(tasks[i]);
    return rows;
  }
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(tasks.size()); ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = fn(tasks[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(qblocks_grid_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

}  // namespace

std::vector<OdeRow> ode_grid(const BlockGrid& grid, Exec exec) {
  struct Task {
    real kappa;
    int lambda;
    LocalShape shape;
    real z;
  };
  std::vector<Task> tasks;
  for (LocalShape s : kShapes) {
    for (real k : grid.kappas) {
      for (int l : grid.lambdas) {
        if (l < min_lambda(s)) continue;
        for (real z : grid.zs) tasks.push_back({k, l, s, z});
      }
    }
  }
  return run_tasks<OdeRow>(tasks, exec, [&](const Task& t) {
    const BlockContext ctx(t.kappa, t.lambda, t.shape);
    const auto [r1, r2] = ode_residual(ctx, t.z, grid.step);
    return OdeRow{t.kappa, t.lambda, t.shape, t.z, r1, r2};
  });
}

std::vector<AsymptoticRow> asymptotic_grid(const BlockGrid& grid, Exec exec) {
  struct Task {
    real kappa;
    int lambda;
    LocalShape shape;
  };
  std::vector<Task> tasks;
  for (LocalShape s : {LocalShape::UpWedge, LocalShape::DownWedge}) {
    for (real k : grid.kappas) {
      for (int l : grid.lambdas) {
        if (l >= min_lambda(s)) tasks.push_back({k, l, s});
      }
    }
  }
  return run_tasks<AsymptoticRow>(tasks, exec, [](const Task& t) {
    const BlockContext ctx(t.kappa, t.lambda, t.shape);
    const real value = wedge_asymptotic(ctx);
    const real expected = expected_wedge_limit(ctx);
    return AsymptoticRow{t.kappa, t.lambda, t.shape, value, expected, std::fabs(value - expected)};
  });
}

}  // namespace qblocks
