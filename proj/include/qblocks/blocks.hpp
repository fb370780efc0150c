#pragma once

// Closed-form two-point conformal block functions g(z), z in (0, 1), and
// the numerical checks that tie them to their ODEs and to the q-integers.
//
// Normalisation: C+_lambda = 1 for every lambda, so
//   C-_lambda = G((4 - k + 4 lambda)/k) G(4/k) / (G(4 lambda/k) G((8 - k)/k)).
// Other conventions rescale each g by a constant.
//
// Shapes, with sigma = (lambda, sigma1, sigma2):
//   up-wedge   (lambda, lambda+1, lambda)      down-wedge (lambda, lambda-1, lambda)
//   up-slope   (lambda, lambda+1, lambda+2)    down-slope (lambda, lambda-1, lambda-2)
//
// Evaluation is carried out in long double.

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qblocks/dyck.hpp"
#include "qblocks/exec.hpp"

namespace qblocks {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// h(lambda) = (lambda^2 + 2 lambda)/kappa - lambda/2.
long double conformal_weight(int lambda, long double kappa);
/// c = (3 kappa - 8)(6 - kappa) / (2 kappa).
long double central_charge(long double kappa);

/// Gauss hypergeometric 2F1 on [0, 1): power series for z <= 1/2 and the
/// two-term transformation to 1 - z above. Throws std::domain_error at a
/// parameter pole and ConvergenceError after the iteration cap.
long double hyp2f1(long double a, long double b, long double c, long double z);
long double hyp2f1_series(long double a, long double b, long double c, long double z);
long double hyp2f1_connection(long double a, long double b, long double c, long double z);

/// 1 / Gamma(x), zero at the poles of Gamma.
long double rgamma(long double x);

class BlockContext {
 public:
  /// Throws std::invalid_argument for kappa outside (0, 8), an invalid
  /// lambda for the shape, or a kappa at which a gamma factor hits a pole.
  BlockContext(long double kappa, int lambda, LocalShape shape);

  long double kappa() const { return kappa_; }
  int lambda() const { return lambda_; }
  LocalShape shape() const { return shape_; }
  int sigma1() const;
  int sigma2() const;

  /// C-_l under the C+ = 1 convention, l >= 1.
  long double c_minus(int l) const;

 private:
  long double kappa_;
  int lambda_;
  LocalShape shape_;
};

/// Parse "uw", "dw", "us", "ds".
LocalShape parse_block_shape(const std::string& s);
const char* block_shape_code(LocalShape s);

long double block_g(const BlockContext& ctx, long double z);

struct OdeCoefficients {
  long double a2;  // multiplies g''
  long double a1;  // multiplies g'
  long double a0;  // multiplies g
};

/// Coefficients of the first and second ODE at z.
std::pair<OdeCoefficients, OdeCoefficients> ode_coefficients(const BlockContext& ctx, long double z);

/// Residuals of both ODEs with derivatives from a five-point central stencil.
std::pair<long double, long double> ode_residual(const BlockContext& ctx, long double z, long double step);
std::pair<long double, long double> ode_residual(const std::function<long double(long double)>& g,
                                                 const BlockContext& ctx, long double z, long double step);

/// lim_{z -> 1} (1 - z)^((6 - kappa)/kappa) g(z) for the wedge shapes, by
/// extrapolation from z = 1 - 10^-k, k = 3..6, with the known exponents of
/// the expansion in 1 - z.
long double wedge_asymptotic(const BlockContext& ctx);

/// Expected wedge limit: 1 for the up-wedge, -sin(4 pi l/k)/sin(4 pi (l+1)/k) for the down-wedge.
long double expected_wedge_limit(const BlockContext& ctx);

/// Case coefficient of the recursive asymptotics at position j of alpha:
/// 0 at slopes, 1 at up-wedges, -[a(j)+1]/[a(j)+2] at down-wedges,
/// with [n] = sin(4 pi n/kappa)/sin(4 pi/kappa).
long double uasy_coefficient(const DyckPath& alpha, int j, long double kappa);

struct OdeRow {
  long double kappa;
  int lambda;
  LocalShape shape;
  long double z;
  long double residual1;
  long double residual2;
};

struct AsymptoticRow {
  long double kappa;
  int lambda;
  LocalShape shape;
  long double value;
  long double expected;
  long double error;
};

struct BlockGrid {
  std::vector<long double> kappas{2.5L, 3.7L, 5.3L, 6.9L};
  std::vector<int> lambdas{0, 1, 2, 3};
  std::vector<long double> zs{0.2L, 0.4L, 0.6L, 0.8L};
  long double step = 1e-4L;
};

/// Every valid (shape, kappa, lambda, z) of the grid, in that nesting order.
std::vector<OdeRow> ode_grid(const BlockGrid& grid, Exec exec = Exec::Parallel);
std::vector<AsymptoticRow> asymptotic_grid(const BlockGrid& grid, Exec exec = Exec::Parallel);

}  // namespace qblocks
