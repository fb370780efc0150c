#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qblocks/qfield.hpp"
#include "qblocks/qfield_io.hpp"
#include "qblocks/verify.hpp"
#include "test_util.hpp"

using namespace qblocks;
using qblocks::testing::br;

TEST(QInteger, SmallValues) {
  EXPECT_TRUE(q_integer(0).is_zero());
  EXPECT_EQ(q_integer(1), LaurentPoly::constant(1));
  EXPECT_EQ(q_integer(2), LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
  EXPECT_EQ(q_integer(3), LaurentPoly::monomial(2) + LaurentPoly::constant(1) + LaurentPoly::monomial(-2));
}

TEST(QInteger, RejectsNegative) { EXPECT_THROW(q_integer(-1), std::invalid_argument); }

TEST(RatQ, FieldExamples) {
  EXPECT_TRUE((br(2).inverse() * br(2)).is_one());
  EXPECT_TRUE((br(2) * br(2) - (br(3) + RatQ(1))).is_zero());
  const RatQ x = br(3) / br(2);
  EXPECT_TRUE((x + (-x)).is_zero());
}

TEST(RatQ, CanonicalFormIsUnique) {
  const RatQ a = br(2) / br(4);
  const RatQ b = (br(2) * br(3)) / (br(4) * br(3));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.num(), b.num());
  EXPECT_EQ(a.den(), b.den());
  // [4]/[2] = q^2 + q^-2 is a Laurent polynomial.
  EXPECT_TRUE((br(4) / br(2)).is_laurent());
  EXPECT_FALSE((br(2) / br(4)).is_laurent());
}

TEST(RatQ, DivisionByZeroThrows) {
  EXPECT_THROW(br(2) / RatQ(0), DivisionByZero);
  EXPECT_THROW(RatQ(0).inverse(), DivisionByZero);
}

TEST(RatQ, QPowers) {
  EXPECT_TRUE((RatQ::q_power(3) * RatQ::q_power(-3)).is_one());
  EXPECT_EQ(br(2), RatQ::q_power(1) + RatQ::q_power(-1));
  EXPECT_EQ(br(2).mul_q_power(2), br(2) * RatQ::q_power(2));
}

TEST(RatQ, RationalEvaluation) {
  EXPECT_EQ(br(3).evaluate(mpq_class(1)), mpq_class(3));
  EXPECT_EQ((br(2) / br(3)).evaluate(mpq_class(1)), mpq_class(2, 3));
  EXPECT_EQ(br(2).evaluate(mpq_class(2)), mpq_class(5, 2));
}

TEST(EvalAtKappa, Examples) {
  const auto k4 = QNumeric::from_kappa(4.0);
  EXPECT_NEAR(eval_at_kappa(br(2), k4).real(), -2.0, 1e-12);
  EXPECT_NEAR(eval_at_kappa(br(3), k4).real(), 3.0, 1e-12);
  const auto k163 = QNumeric::from_kappa(16.0 / 3.0);
  const auto v = eval_at_kappa(br(2), k163);
  EXPECT_NEAR(v.real(), -std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(v.imag(), 0.0, 1e-12);
}

TEST(EvalAtKappa, SineFormula) {
  for (double k : {2.5, 3.7, 5.3, 6.9}) {
    const auto ctx = QNumeric::from_kappa(k);
    for (int n = 1; n < 6; ++n) {
      const double expected = std::sin(4 * M_PI * n / k) / std::sin(4 * M_PI / k);
      EXPECT_NEAR(eval_at_kappa(br(n), ctx).real(), expected, 1e-10);
    }
  }
}

TEST(EvalAtKappa, PoleDetected) {
  // q = exp(2 pi i / 3) at kappa = 6 makes [3] vanish.
  EXPECT_THROW(eval_at_kappa(br(3).inverse(), QNumeric::from_kappa(6.0)), PoleError);
  EXPECT_NO_THROW(eval_at_kappa(br(2).inverse(), QNumeric::from_kappa(6.0)));
}

TEST(EvalAtKappa, RejectsKappaOutsideRange) {
  EXPECT_THROW(QNumeric::from_kappa(0.0), std::invalid_argument);
  EXPECT_THROW(QNumeric::from_kappa(-1.0), std::invalid_argument);
}

TEST(EvalAtKappa, Homomorphism) {
  std::mt19937_64 rng(7);
  const auto ctx = QNumeric::from_kappa(5.3);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const RatQ a = random_ratq(rng), b = random_ratq(rng);
    try {
      const auto lhs = eval_at_kappa(a * b, ctx);
      const auto rhs = eval_at_kappa(a, ctx) * eval_at_kappa(b, ctx);
      EXPECT_LT(std::abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(rhs)));
      ++checked;
    } catch (const PoleError&) {
    }
  }
  EXPECT_GT(checked, 150);
}

TEST(QFieldIo, JsonRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const RatQ a = random_ratq(rng);
    const auto j = to_json(a);
    ASSERT_TRUE(is_ratq_json(j));
    EXPECT_EQ(ratq_from_json(nlohmann::json::parse(j.dump())), a);
  }
}

TEST(QFieldIo, JsonRejectsMalformed) {
  EXPECT_THROW(ratq_from_json(nlohmann::json::parse(R"({"num": [1]})")), std::invalid_argument);
  EXPECT_FALSE(is_ratq_json(nlohmann::json::parse("[1, 2]")));
}

TEST(QFieldIo, BracketProducts) {
  EXPECT_EQ(to_bracket_text(br(2).inverse()), "1/[2]");
  EXPECT_EQ(to_bracket_text(br(2) / br(3)), "[2]/[3]");
  EXPECT_EQ(to_bracket_text(-br(2).inverse()), "-1/[2]");
  EXPECT_EQ(to_bracket_text(RatQ(0)), "0");
  EXPECT_EQ(to_bracket_text(RatQ(1)), "1");
  EXPECT_EQ(to_latex(br(2).inverse()), "\\frac{1}{[2]}");
}

TEST(QFieldIo, Text) {
  EXPECT_EQ(to_text(RatQ(0)), "0");
  EXPECT_EQ(to_text(RatQ(1)), "1");
}
