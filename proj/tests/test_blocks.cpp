#include <gtest/gtest.h>

#include <boost/math/special_functions/expm1.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_pFq.hpp>
#include <cmath>

#include "qblocks/blocks.hpp"
#include "qblocks/qfield.hpp"
#include "test_util.hpp"

using namespace qblocks;
using qblocks::testing::br;
using qblocks::testing::P;

TEST(Weights, ConformalWeight) {
  for (long double k : {2.5L, 3.7L, 6.9L}) {
    EXPECT_NEAR(conformal_weight(0, k), 0.0L, 1e-15L);
    EXPECT_NEAR(conformal_weight(1, k), (6 - k) / (2 * k), 1e-15L);
    EXPECT_NEAR(conformal_weight(2, k), (8 - k) / k, 1e-15L);
  }
}

TEST(Weights, CentralCharge) {
  EXPECT_NEAR(central_charge(2.0L), -2.0L, 1e-15L);
  EXPECT_NEAR(central_charge(6.0L), 0.0L, 1e-15L);
  EXPECT_NEAR(central_charge(8.0L / 3.0L), 0.0L, 1e-15L);
}

TEST(Hyp2f1, Examples) {
  EXPECT_DOUBLE_EQ(static_cast<double>(hyp2f1(0.3L, 0.7L, 1.9L, 0.0L)), 1.0);
  EXPECT_NEAR(hyp2f1(1, 1, 2, 0.5L), 2 * std::log(2.0L), 1e-15L);
  for (long double z : {0.1L, 0.45L, 0.55L, 0.9L}) {
    EXPECT_NEAR(hyp2f1(1, 1, 2, z), -std::log1p(-z) / z, 1e-14L);
  }
}

TEST(Hyp2f1, AgreesWithBoostPFQ) {
  using boost::math::hypergeometric_pFq;
  for (double k : {2.5, 3.7, 5.3, 6.9}) {
    for (int l = 0; l <= 3; ++l) {
      const std::pair<double, double> ab[] = {{(k - 4) / k, 4 * l / k}, {(k - 4) / k, (2 * k - 8 - 4 * l) / k}};
      const double cs[] = {(4 * l + 4) / k, (2 * k - 4 * l - 4) / k};
      for (int s = 0; s < 2; ++s) {
        const auto [a, b] = ab[s];
        const double c = cs[s];
        if (c <= 0 && std::floor(c) == c) continue;
        for (double z : {0.1, 0.3, 0.5, 0.7, 0.9}) {
          const double oracle = hypergeometric_pFq({a, b}, {c}, z);
          const double ours = static_cast<double>(hyp2f1(a, b, c, z));
          EXPECT_NEAR(ours, oracle, 1e-9 * std::max(1.0, std::fabs(oracle))) << a << " " << b << " " << c << " " << z;
        }
      }
    }
  }
}

TEST(Hyp2f1, IntegerGapUsesSeries) {
  // c - a - b = 1: the two-term connection formula is singular.
  EXPECT_THROW(hyp2f1_connection(-0.2L, 0.8L, 1.6L, 0.7L), std::domain_error);
  EXPECT_NEAR(hyp2f1(1, 1, 3, 0.8L), 2 * (0.8L + 0.2L * std::log(0.2L)) / (0.8L * 0.8L), 1e-15L);
}

TEST(Hyp2f1, ContinuousAcrossSwitch) {
  const long double a = -0.2L, b = 0.8L, c = 1.7L;
  EXPECT_NEAR(hyp2f1_series(a, b, c, 0.5L), hyp2f1_connection(a, b, c, 0.5L), 1e-13L);
}

TEST(Context, Validation) {
  EXPECT_THROW(BlockContext(8.5, 1, LocalShape::UpWedge), std::invalid_argument);
  EXPECT_THROW(BlockContext(0.0, 1, LocalShape::UpWedge), std::invalid_argument);
  EXPECT_THROW(BlockContext(3.7, 0, LocalShape::DownWedge), std::invalid_argument);
  EXPECT_THROW(BlockContext(3.7, 1, LocalShape::DownSlope), std::invalid_argument);
  EXPECT_THROW(BlockContext(3.7, -1, LocalShape::UpSlope), std::invalid_argument);
  EXPECT_NO_THROW(BlockContext(3.7, 1, LocalShape::DownWedge));
}

TEST(Shape, Codes) {
  EXPECT_EQ(parse_block_shape("uw"), LocalShape::UpWedge);
  EXPECT_EQ(parse_block_shape("ds"), LocalShape::DownSlope);
  EXPECT_STREQ(block_shape_code(LocalShape::DownWedge), "dw");
  EXPECT_THROW(parse_block_shape("xx"), std::invalid_argument);
}

TEST(BlockG, UpSlopePrefactor) {
  for (long double k : {2.5L, 3.7L, 5.3L}) {
    for (int l = 0; l <= 2; ++l) {
      const BlockContext ctx(k, l, LocalShape::UpSlope);
      const long double h = conformal_weight(1, k);
      const long double ex = conformal_weight(l + 1, k) - conformal_weight(l, k) - h;
      for (long double z : {0.1L, 0.5L, 0.9L}) {
        EXPECT_NEAR(block_g(ctx, z) / (std::pow(1 - z, 2 / k) * std::pow(z, ex)), 1.0L, 1e-14L);
      }
    }
  }
}

TEST(BlockG, UpWedgeSmallZ) {
  const long double k = 3.7L;
  const BlockContext ctx(k, 1, LocalShape::UpWedge);
  const long double ex = conformal_weight(2, k) - 2 * conformal_weight(1, k);
  const auto ratio = [&](long double z) { return block_g(ctx, z) / std::pow(z, ex); };
  // Leading correction is linear in z.
  const long double r1 = ratio(1e-4L), r2 = ratio(1e-5L);
  const long double limit = r2 - (r1 - r2) / 9;
  EXPECT_NEAR(limit, ctx.c_minus(2), 1e-9L);
}

TEST(Ode, Examples) {
  {
    const BlockContext ctx(2.5, 0, LocalShape::UpSlope);
    const auto [r1, r2] = ode_residual(ctx, 0.4L, 1e-4L);
    EXPECT_LT(std::fabs(r1), 1e-6L);
    EXPECT_LT(std::fabs(r2), 1e-6L);
  }
  {
    const BlockContext ctx(3.7, 1, LocalShape::UpWedge);
    const auto [r1, r2] = ode_residual(ctx, 0.5L, 1e-4L);
    EXPECT_LT(std::fabs(r1), 1e-6L);
    EXPECT_LT(std::fabs(r2), 1e-6L);
  }
}

TEST(Ode, DetectsPerturbation) {
  const BlockContext ctx(3.7, 1, LocalShape::UpWedge);
  const auto [r1, r2] = ode_residual([&](long double z) { return block_g(ctx, z) * (1 + 1e-3L * z); }, ctx, 0.5L, 1e-4L);
  EXPECT_GT(std::fabs(r1), 1e-4L);
  EXPECT_GT(std::fabs(r2), 1e-4L);
}

TEST(Ode, StencilMustStayInside) {
  const BlockContext ctx(3.7, 1, LocalShape::UpWedge);
  EXPECT_THROW(ode_residual(ctx, 1e-5L, 1e-4L), std::domain_error);
}

TEST(Ode, GridResiduals) {
  for (const auto& r : ode_grid(BlockGrid{})) {
    EXPECT_LT(std::fabs(r.residual1), 1e-6L) << block_shape_code(r.shape) << " " << r.kappa << " " << r.lambda << " " << r.z;
    EXPECT_LT(std::fabs(r.residual2), 1e-6L);
  }
}

TEST(Asymptotics, UpWedgeIsOne) {
  for (long double k : {2.5L, 3.7L, 5.3L, 6.9L}) {
    for (int l = 0; l <= 3; ++l) EXPECT_NEAR(wedge_asymptotic(BlockContext(k, l, LocalShape::UpWedge)), 1.0L, 1e-6L);
  }
}

TEST(Asymptotics, DownWedgeExamples) {
  const long double k = 3.7L;
  const long double expected = -std::sin(4 * M_PIl / k) / std::sin(8 * M_PIl / k);
  EXPECT_NEAR(wedge_asymptotic(BlockContext(k, 1, LocalShape::DownWedge)), expected, 1e-6L);

  const auto exact = eval_at_kappa(br(2) / br(3), QNumeric::from_kappa(5.3));
  EXPECT_NEAR(wedge_asymptotic(BlockContext(5.3L, 2, LocalShape::DownWedge)), -exact.real(), 1e-6L);
  EXPECT_NEAR(expected_wedge_limit(BlockContext(5.3L, 2, LocalShape::DownWedge)), -exact.real(), 1e-12L);
}

TEST(Asymptotics, Grid) {
  for (const auto& r : asymptotic_grid(BlockGrid{})) EXPECT_LT(r.error, 1e-6L);
}

TEST(Asymptotics, SlopesRejected) {
  EXPECT_THROW(wedge_asymptotic(BlockContext(3.7, 1, LocalShape::UpSlope)), std::invalid_argument);
}

TEST(Uasy, Cases) {
  EXPECT_EQ(uasy_coefficient(P("UDUD"), 1, 3.7L), 1.0L);
  EXPECT_EQ(uasy_coefficient(P("UUDD"), 1, 3.7L), 0.0L);
  EXPECT_NEAR(uasy_coefficient(P("UDUD"), 2, 3.7L), -1 / (2 * std::cos(4 * M_PIl / 3.7L)), 1e-14L);
}

TEST(Grid, SerialMatchesParallel) {
  const auto s = ode_grid(BlockGrid{}, Exec::Serial);
  const auto p = ode_grid(BlockGrid{}, Exec::Parallel);
  ASSERT_EQ(s.size(), p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s[i].residual1, p[i].residual1);
    EXPECT_EQ(s[i].z, p[i].z);
  }
}
