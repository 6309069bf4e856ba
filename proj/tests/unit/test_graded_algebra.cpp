#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace polyadic;
using fixtures::grassmann2;
using fixtures::super_sign;
using fixtures::trivial_factor;

namespace {

// Algebra whose basis products follow a magma table.
GradedAlgebra magma_algebra(const NaryOp& op, std::uint32_t p) {
  std::vector<StructureEntry> st;
  oracle::tuples(op.arity(), op.order(), [&](const std::vector<unsigned>& t) {
    const std::vector<Label> args(t.begin(), t.end());
    st.push_back({std::vector<Basis>(t.begin(), t.end()), {{op(args), 1}}});
  });
  return GradedAlgebra(op.arity(), op.order(), p, AbelianGroup(), std::vector<GroupElement>(op.order(), 0), st);
}

bool cocycle_oracle(const std::vector<std::int64_t>& s, unsigned m, unsigned p) {
  bool ok = true;
  oracle::tuples(3, m, [&](const std::vector<unsigned>& t) {
    auto at = [&](unsigned a, unsigned b) { return s[a * m + b] % p; };
    ok &= at(t[0], t[1]) * at((t[0] + t[1]) % m, t[2]) % p == at(t[0], (t[1] + t[2]) % m) * at(t[1], t[2]) % p;
  });
  return ok;
}

}  // namespace

TEST(GradedAlgebra, GrassmannProductsMatchOracle) {
  const auto g = fixtures::grassmann(3);
  for (Basis a = 0; a < 8; ++a)
    for (Basis b = 0; b < 8; ++b) {
      const auto [idx, sign] = oracle::wedge(a, b);
      Element want = g.zero();
      if (idx >= 0) want.coeffs[idx] = oracle::mod(sign, 3);
      EXPECT_EQ(g.mul({g.basis(a), g.basis(b)}), want) << a << "," << b;
    }
}

TEST(GradedAlgebra, RejectsMalformedInput) {
  EXPECT_THROW(GradedAlgebra(2, 2, 4, AbelianGroup(), {0, 0}, {}), ContractError);
  EXPECT_THROW(GradedAlgebra(2, 2, 3, AbelianGroup(), {0}, {}), ContractError);
  EXPECT_THROW(GradedAlgebra(2, 2, 3, AbelianGroup({2}), {0, 2}, {}), ContractError);
  EXPECT_THROW(GradedAlgebra(2, 2, 3, AbelianGroup(), {0, 0}, {{{0, 0}, {{2, 1}}}}), ContractError);
  EXPECT_THROW(GradedAlgebra(2, 2, 3, AbelianGroup(), {0, 0}, {}, 0), ContractError);
  const auto g = grassmann2();
  const Element mixed = g.add(g.basis(0), g.basis(1));
  EXPECT_FALSE(g.is_homogeneous(mixed));
  EXPECT_THROW(g.grade_of(mixed), ContractError);
}

TEST(CheckGraded, Examples) {
  EXPECT_TRUE(check_graded(grassmann2()).passed());
  const auto g = grassmann2();
  const GradedAlgebra bad(2, 4, 3, AbelianGroup({2}), {0, 1, 1, 1}, g.entries(), 0);
  const auto r = check_graded(bad);
  ASSERT_TRUE(r.failed());
  EXPECT_EQ(r.witness->input, (std::vector<std::int64_t>{1, 2}));
  EXPECT_TRUE(check_graded(fixtures::group_algebra(3, 7)).passed());
}

TEST(CheckGraded, HigherGradingIsWeaker) {
  const auto g = grassmann2();
  EXPECT_TRUE(check_graded(g, GradingKind::higher).passed());
  EXPECT_EQ(check_graded(g, GradingKind::higher).law, "m4a");
}

TEST(CheckAssociativity, Examples) {
  EXPECT_TRUE(check_associativity(grassmann2()).passed());
  EXPECT_TRUE(check_associativity(fixtures::truncated_poly(1, 5, 1)).passed());
  const auto r = check_associativity(magma_algebra(fixtures::subtraction_mod(3), 3));
  ASSERT_TRUE(r.failed());
  // (e0 e0) e1 = e2 but e0 (e0 e1) = e1
  EXPECT_EQ(r.witness->input, (std::vector<std::int64_t>{0, 0, 1}));
}

TEST(CheckAssociativity, TernaryAndFourAry) {
  EXPECT_TRUE(check_associativity(magma_algebra(fixtures::sum_mod(3, 3), 5)).passed());
  EXPECT_EQ(check_associativity(magma_algebra(fixtures::sum_mod(4, 2), 3)).law, "mm4");
  const NaryOp not_assoc = NaryOp::from_function(3, 2, [](std::span<const Label> a) { return a[0] & (a[1] ^ a[2]); });
  EXPECT_TRUE(check_associativity(magma_algebra(not_assoc, 3)).failed());
}

TEST(TwistedProduct, Examples) {
  const auto g = grassmann2();
  const auto same = twisted_product(g, trivial_factor(2, g.group(), 3));
  EXPECT_EQ(same.entries().size(), g.entries().size());
  for (std::size_t i = 0; i < g.entries().size(); ++i) EXPECT_EQ(same.entries()[i].out, g.entries()[i].out);

  const auto t = twisted_product(g, super_sign());
  // t1 t2 = t12 becomes -t12; t2 t1 = -t12 becomes t12
  EXPECT_EQ(t.mul({t.basis(1), t.basis(2)}), t.scale(t.basis(3), 2u));
  EXPECT_EQ(t.mul({t.basis(2), t.basis(1)}), t.basis(3));
  EXPECT_EQ(t.mul({t.basis(0), t.basis(1)}), t.basis(1));
  EXPECT_THROW(twisted_product(g, trivial_factor(3, g.group(), 3)), ContractError);
}

// All products of F_p[Z_m] are nonzero, so its twist is associative exactly
// when the twist is a cocycle.
TEST(TwistedProduct, AssociativeIffCocycle) {
  const auto alg = fixtures::graded_group_algebra(2, 5);
    int assoc = 0;
  oracle::tuples(4, 4, [&](const std::vector<unsigned>& t) {
    const std::vector<std::int64_t> raw{t[0] + 1, t[1] + 1, t[2] + 1, t[3] + 1};
    const auto sigma = fixtures::table2(AbelianGroup({2}), 5, raw);
    const bool cocycle = cocycle_oracle(raw, 2, 5);
    EXPECT_EQ(check_cocycle(sigma).passed(), cocycle);
    const bool a = check_associativity(twisted_product(alg, sigma)).passed();
    EXPECT_EQ(a, cocycle);
    assoc += a;
  });
  EXPECT_GT(assoc, 0);
}

TEST(TwistedProduct, CocycleTwistOfCommutativeAlgebraStaysAssociative) {
  const auto alg = fixtures::truncated_poly(4, 5, 2);
  const auto sigma = build_bicharacter(AbelianGroup({2}), {{1}}, ScalarBackend::prime_field(5));
  EXPECT_TRUE(check_associativity(twisted_product(alg, sigma)).passed());
}

TEST(AlmostCommutative, Examples) {
  EXPECT_TRUE(check_almost_commutative(grassmann2(), super_sign()).passed());
  const auto comm = fixtures::truncated_poly(4, 3, 1);
  EXPECT_TRUE(check_almost_commutative(comm, trivial_factor(2, comm.group(), 3)).passed());
  const auto r = check_almost_commutative(grassmann2(), trivial_factor(2, AbelianGroup({2}), 3));
  ASSERT_TRUE(r.failed());
  EXPECT_EQ(r.witness->input, (std::vector<std::int64_t>{1, 2}));
}

TEST(AlmostMedial, Examples) {
  const auto g = grassmann2();
  const auto r = check_almost_medial(g, bridge_factor(super_sign()));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.probes, 256u);
  const auto comm = fixtures::truncated_poly(3, 3, 1);
  EXPECT_TRUE(check_almost_medial(comm, trivial_factor(4, comm.group(), 3)).passed());
}

TEST(AlmostMedial, TrivialFactorFailsAtOracleQuadruple) {
  // first (a,b,c,d) with a b c d != a c b d in the exterior algebra
  std::vector<unsigned> hit;
  oracle::tuples(4, 4, [&](const std::vector<unsigned>& t) {
    if (!hit.empty()) return;
    if (oracle::wedge_word({t[0], t[1], t[2], t[3]}) != oracle::wedge_word({t[0], t[2], t[1], t[3]})) hit = t;
  });
  const auto r = check_almost_medial(grassmann2(), trivial_factor(4, AbelianGroup({2}), 3));
  ASSERT_TRUE(r.failed());
  EXPECT_EQ(r.witness->input, std::vector<std::int64_t>(hit.begin(), hit.end()));
  EXPECT_EQ(hit, (std::vector<unsigned>{0, 1, 2, 0}));
}

// Every eps-commutative algebra is rho-medial for the bridge factor.
TEST(AlmostMedial, BridgeForEpsCommutativeAlgebras) {
  for (unsigned gens = 1; gens <= 3; ++gens) {
    const auto g = fixtures::grassmann(gens);
    ASSERT_TRUE(check_almost_commutative(g, super_sign()).passed());
    EXPECT_TRUE(check_almost_medial(g, bridge_factor(super_sign())).passed()) << gens;
  }
  const auto comm = fixtures::truncated_poly(4, 5, 2);
  const auto one = trivial_factor(2, comm.group(), 5);
  EXPECT_TRUE(check_almost_medial(comm, bridge_factor(one)).passed());
}

// With four generators the product t1 t2 t3 t4 is nonzero and the medial
// swap t1 t3 t2 t4 differs by a sign, so any factor making r2 hold must take
// the value -1 on four odd grades.
TEST(AlmostMedial, FourGeneratorsForceNegativeDiagonal) {
  const auto g = fixtures::grassmann(4);
  const auto r = check_almost_medial(g, bridge_factor(super_sign()));
  EXPECT_TRUE(r.passed());
  const auto lhs = oracle::wedge_word({1, 2, 4, 8}), rhs = oracle::wedge_word({1, 4, 2, 8});
  ASSERT_EQ(lhs.first, rhs.first);
  EXPECT_EQ(lhs.second, -rhs.second);
  EXPECT_EQ(bridge_factor(super_sign())({1, 1, 1, 1}).value, 2u);
}

TEST(AlmostMedial, SubsetRestrictsScan) {
  const std::vector<Basis> subset{0, 1};
  const auto r = check_almost_medial(grassmann2(), trivial_factor(4, AbelianGroup({2}), 3), {}, subset);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.probes, 16u);
}

TEST(AlmostMedial, BudgetExceeded) {
  RunConfig cfg;
  cfg.budget = 10;
  EXPECT_EQ(check_almost_medial(grassmann2(), bridge_factor(super_sign()), cfg).status, Status::budget_exceeded);
}

// Trivial grading and trivial factors reduce the laws to the magma laws.
TEST(DegenerateGrading, MatchesInducedMagma) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t q = 2 + trial % 2;
    std::vector<Label> t(q * q);
    for (auto& x : t) x = rng() % q;
    const NaryOp op(2, q, t);
    const auto alg = magma_algebra(op, 3);
    const auto induced = induced_magma(alg);
    ASSERT_TRUE(induced);
    EXPECT_EQ(*induced, op);
    const auto med = check_mediality(op);
    const auto am = check_almost_medial(alg, trivial_factor(4, AbelianGroup(), 3));
    EXPECT_EQ(am.passed(), med.passed());
    if (med.failed()) EXPECT_EQ(am.witness->input, med.witness->input);
    bool commutative = true;
    for (Label a = 0; a < q; ++a)
      for (Label b = 0; b < q; ++b) commutative &= op({a, b}) == op({b, a});
    EXPECT_EQ(check_almost_commutative(alg, trivial_factor(2, AbelianGroup(), 3)).passed(), commutative);
  }
  EXPECT_FALSE(induced_magma(grassmann2()));
}

TEST(BasisCancellative, Examples) {
  EXPECT_TRUE(check_basis_cancellative(fixtures::group_algebra(3, 7)).passed());
  EXPECT_TRUE(check_basis_cancellative(grassmann2()).failed());
}

TEST(MatrixProduct, RowMajorThenOuter) {
  const auto g = grassmann2();
  const std::vector<Element> m{g.basis(0), g.basis(1), g.basis(2), g.basis(0)};
  EXPECT_EQ(matrix_product(g, m), g.basis(3));
  const std::vector<Element> t{g.basis(0), g.basis(2), g.basis(1), g.basis(0)};
  EXPECT_EQ(matrix_product(g, t), g.scale(g.basis(3), 2u));
}
