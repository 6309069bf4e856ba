#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace polyadic;
using fixtures::sum_mod;

namespace {

// Brute-force solution of mu[g,..,g,x] = g.
Label quer_oracle(const NaryOp& op, Label g) {
  for (Label x = 0; x < op.order(); ++x) {
    std::vector<Label> args(op.arity(), g);
    args.back() = x;
    if (op(args) == g) return x;
  }
  return op.order();
}

}  // namespace

TEST(SkeletalGroupModel, TernarySumModFour) {
  const SkeletalGroupModel m(sum_mod(3, 4));
  for (Label g = 0; g < 4; ++g) {
    EXPECT_EQ(m.quer(g), (4 - g) % 4);
    EXPECT_EQ(m.quer(g), quer_oracle(m.op(), g));
  }
  EXPECT_EQ(m.unit(), Label{0});
  const auto r = check_groupal_model(m);
  EXPECT_TRUE(r.passed()) << to_text(r);
  for (const char* id : {"diag6-1", "diag6-2", "diag6-3", "diag7", "diag15", "diag19", "diag14"})
    EXPECT_TRUE(r.find(id) && r.find(id)->passed()) << id;
  EXPECT_EQ(r.find("diag14")->fact("unit"), "0");
}

// a+b+c+1 mod 3 has e = 1 as a unit: mu[1,1,x] = x + 3 = x.
TEST(SkeletalGroupModel, ShiftedTernarySumModThreeHasUnit) {
  const auto op = sum_mod(3, 3, 1);
  const SkeletalGroupModel m(op);
  for (Label g = 0; g < 3; ++g) {
    EXPECT_EQ(m.quer(g), quer_oracle(op, g));
    EXPECT_EQ(m.quer(g), oracle::mod(-static_cast<long long>(g) - 1, 3));
  }
  for (Label x = 0; x < 3; ++x) EXPECT_EQ(op({1, 1, x}), x);
  EXPECT_EQ(m.unit(), Label{1});
  const auto r = check_groupal_model(m);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.find("diag14")->passed());
}

TEST(SkeletalGroupModel, UnitlessModelSkipsUnitTriangle) {
  const auto op = sum_mod(3, 2, 1);
  // mu[e,e,x] = x + 2e + 1 = x + 1: no element is neutral
  for (Label e = 0; e < 2; ++e) EXPECT_NE(op({e, e, 0}), 0u);
  const SkeletalGroupModel m(op);
  EXPECT_FALSE(m.unit());
  const auto r = check_groupal_model(m);
  EXPECT_TRUE(r.passed()) << to_text(r);
  const auto* d14 = r.find("diag14");
  ASSERT_TRUE(d14);
  EXPECT_EQ(d14->status, Status::skipped);
  EXPECT_NE(d14->note.find("not-applicable"), std::string::npos);
  EXPECT_TRUE(r.find("diag19")->passed());
}

TEST(SkeletalGroupModel, BinaryDegenerate) {
  const SkeletalGroupModel m(sum_mod(2, 2));
  EXPECT_EQ(m.quer(0), 0u);
  EXPECT_EQ(m.quer(1), 0u);
  const auto r = check_groupal_model(m);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.find("diag10")->passed());
  EXPECT_EQ(r.find("diag19")->status, Status::skipped);
}

TEST(SkeletalGroupModel, NonAbelianBinaryGroup) {
  const SkeletalGroupModel m(fixtures::s3());
  EXPECT_EQ(m.unit(), Label{0});
  EXPECT_TRUE(check_groupal_model(m).passed());
}

TEST(SkeletalGroupModel, QuaternaryGroup) {
  const SkeletalGroupModel m(sum_mod(4, 3));
  const auto r = check_groupal_model(m);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.find("diag6-4"));
  EXPECT_EQ(r.fact("arity"), "4");
}

TEST(SkeletalGroupModel, RejectsNonGroups) {
  EXPECT_THROW(SkeletalGroupModel(fixtures::subtraction_mod(3)), ContractError);
  EXPECT_THROW(SkeletalGroupModel(fixtures::product_mod(3)), ContractError);
}

TEST(ObjectDiagram, FailureCarriesWitness) {
  const SkeletalGroupModel m(sum_mod(3, 4));
  const auto x = BracketTree::leaf(0);
  ObjectDiagram d{"bad", x, {{}, {ObjectStep::quer({})}}};
  const auto r = check_object_diagram(m, d);
  ASSERT_TRUE(r.failed());
  // q(0) = 0, so the first element that differs from its querelement is 1
  EXPECT_EQ(r.witness->input.front(), 1);
  const auto good = quertor_diagram(3, 1);
  EXPECT_TRUE(check_object_diagram(m, good).passed());
}
