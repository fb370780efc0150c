#include <gtest/gtest.h>

#include <random>

#include "qblocks/uqsl2.hpp"
#include "qblocks/verify.hpp"
#include "test_util.hpp"

using namespace qblocks;
using qblocks::testing::br;
using qblocks::testing::P;

namespace {

TensorVec mono(const std::string& bits, const RatQ& c = RatQ(1)) {
  return TensorVec::basis(static_cast<int>(bits.size()), TensorVec::key_from_bits(bits), c);
}

const RatQ q = RatQ::q_power(1);
const RatQ qinv = RatQ::q_power(-1);

}  // namespace

TEST(TensorVec, BitOrder) {
  // Factor 1 is the rightmost character and the lowest bit.
  EXPECT_EQ(TensorVec::key_from_bits("01"), 1u);
  EXPECT_EQ(TensorVec::key_from_bits("10"), 2u);
  EXPECT_EQ(TensorVec::bits_from_key(1, 3), "001");
  EXPECT_EQ(tensor(mono("1"), mono("0")), mono("10"));
}

TEST(TensorVec, Arithmetic) {
  const auto v = mono("01", br(2)) + mono("10");
  EXPECT_TRUE((v - v).is_zero());
  EXPECT_EQ(v.coefficient(TensorVec::key_from_bits("01")), br(2));
  EXPECT_TRUE(v.coefficient(0).is_zero());
}

TEST(Action, Examples) {
  EXPECT_EQ(act(Generator::F, mono("00")), mono("10") + mono("01", qinv));
  EXPECT_EQ(act(Generator::K, mono("01")), mono("01"));
  EXPECT_EQ(act(Generator::E, mono("11")), mono("01", qinv) + mono("10"));
  EXPECT_EQ(act(Generator::E, mono("10")), mono("00", q));
  EXPECT_EQ(act(Generator::K, mono("00")), mono("00", RatQ::q_power(2)));
  EXPECT_TRUE(act(Generator::E, mono("00")).is_zero());
  EXPECT_TRUE(act(Generator::F, mono("11")).is_zero());
}

TEST(Action, Triplet) {
  EXPECT_EQ(act(Generator::F, triplet_plus()), triplet_zero());
  EXPECT_TRUE(act(Generator::E, triplet_plus()).is_zero());
  EXPECT_TRUE(act(Generator::F, triplet_minus()).is_zero());
}

TEST(Action, Relations) {
  const auto r = check_relations(5, 100, 2, 6);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(HighestWeight, Examples) {
  EXPECT_TRUE(is_highest_weight(mono("00"), 2));
  EXPECT_TRUE(is_highest_weight(singlet(), 0));
  EXPECT_FALSE(is_highest_weight(mono("10"), 0));
  EXPECT_FALSE(is_highest_weight(mono("00"), 0));
}

TEST(Singlet, Form) {
  const RatQ inv = (q - qinv).inverse();
  EXPECT_EQ(singlet(), (mono("10") - mono("01", q)) * inv);
  EXPECT_TRUE(act(Generator::E, singlet()).is_zero());
  EXPECT_TRUE(act(Generator::F, singlet()).is_zero());
}

TEST(PiHat, MonomialValues) {
  EXPECT_TRUE(pi_hat(mono("00"), 1).is_zero());
  EXPECT_TRUE(pi_hat(mono("11"), 1).is_zero());
  EXPECT_EQ(pi_hat(mono("01"), 1).coefficient(0), (qinv - q) / br(2));
  EXPECT_EQ(pi_hat(mono("10"), 1).coefficient(0), (RatQ(1) - RatQ::q_power(-2)) / br(2));
  for (const char* bits : {"00", "01", "10", "11"}) {
    EXPECT_EQ(pi_hat(mono(bits), 1).coefficient(0), singlet_component(mono(bits))) << bits;
  }
}

TEST(PiHat, SingletValues) {
  const auto one = pi_hat(singlet(), 1);
  EXPECT_EQ(one.n(), 0);
  EXPECT_TRUE(one.coefficient(0).is_one());
  EXPECT_EQ(pi_hat(tensor(singlet(), singlet()), 2), singlet() * (-br(2).inverse()));
  EXPECT_EQ(pi_hat(tensor(singlet(), singlet()), 1), singlet());
  EXPECT_EQ(pi_hat(tensor(singlet(), singlet()), 3), singlet());
}

TEST(PiHat, RejectsBadColumn) {
  EXPECT_THROW(pi_hat(mono("0101"), 0), std::out_of_range);
  EXPECT_THROW(pi_hat(mono("0101"), 4), std::out_of_range);
}

TEST(CAlpha, Examples) {
  EXPECT_TRUE(c_alpha(DyckPath()).is_one());
  EXPECT_EQ(c_alpha(P("UD")), br(2).inverse());
  EXPECT_EQ(c_alpha(P("UUDD")), br(3).inverse());
  EXPECT_EQ(c_alpha(P("UDUD")), br(2).inverse() * br(2).inverse() * br(1));
}

TEST(BuildU, Examples) {
  const auto empty = build_u(DyckPath());
  EXPECT_EQ(empty.vec.n(), 0);
  EXPECT_TRUE(empty.vec.coefficient(0).is_one());
  EXPECT_EQ(build_u(P("UD")).vec, singlet());
  EXPECT_TRUE(build_u(P("UD")).normalization.is_one());
  EXPECT_EQ(build_u(P("UDUD")).vec, tensor(singlet(), singlet()));
}

TEST(BuildU, PrefixesHighestWeight) {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& p : enumerate_paths(n)) {
      const auto b = build_u(p);
      ASSERT_EQ(b.prefixes.size(), static_cast<std::size_t>(p.steps_count() + 1));
      for (int k = 0; k <= p.steps_count(); ++k) EXPECT_TRUE(is_highest_weight(b.prefixes[k], p[k]));
      EXPECT_TRUE(verify_prefixes(b));
    }
  }
}

TEST(Projections, Examples) {
  const auto report = verify_projections(P("UDUD"));
  ASSERT_EQ(report.checks.size(), 3u);
  EXPECT_EQ(report.failures(), 0);
  EXPECT_TRUE(report.checks[0].predicted.is_one());
  EXPECT_EQ(report.checks[1].predicted, -(br(1) / br(2)));
  EXPECT_TRUE(projection_coefficient(P("UUDD"), 1).is_zero());
  EXPECT_TRUE(pi_hat(build_u(P("UUDD")).vec, 1).is_zero());
}

TEST(Projections, AllPathsSerialAndParallel) {
  for (int n = 0; n <= 4; ++n) {
    const auto serial = verify_all_projections(n, Exec::Serial);
    const auto parallel = verify_all_projections(n, Exec::Parallel);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      EXPECT_EQ(serial[i].failures(), 0) << serial[i].path.steps();
      EXPECT_EQ(serial[i].path, parallel[i].path);
      EXPECT_EQ(serial[i].failures(), parallel[i].failures());
    }
  }
}

TEST(Basis, RankAndKernel) {
  EXPECT_EQ(basis_rank(1), 1u);
  EXPECT_EQ(basis_rank(2), 2u);
  EXPECT_EQ(basis_rank(3), 5u);
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(trivial_subspace_dimension(n), static_cast<std::size_t>(catalan(n)));
    EXPECT_TRUE(homogeneous_kernel_trivial(n));
  }
}
