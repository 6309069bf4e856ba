#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace polyadic;
using fixtures::super_sign;
using fixtures::trivial_factor;

namespace {

NaryOp from_square(unsigned q, const std::vector<unsigned>& sq) {
  return NaryOp(2, q, std::vector<Label>(sq.begin(), sq.end()));
}

oracle::Table as_table(const std::vector<unsigned>& sq, unsigned q) {
  return [&sq, q](const std::vector<unsigned>& a) { return sq[a[0] * q + a[1]]; };
}

std::vector<unsigned> units_mod(unsigned q) {
  std::vector<unsigned> u;
  for (unsigned k = 1; k < q; ++k)
    if (std::gcd(k, q) == 1) u.push_back(k);
  if (q == 1) u.push_back(0);
  return u;
}

// Z2 x Z2 with labels a + 2b for (a, b).
LinearPresentation klein(const std::vector<Label>& phi, const std::vector<Label>& psi, Label c) {
  LinearPresentation p;
  p.invariant_factors = {2, 2};
  for (Label x = 0; x < 4; ++x)
    for (Label y = 0; y < 4; ++y) p.group.push_back(x ^ y);
  p.maps = {phi, psi};
  p.c = c;
  return p;
}

BasisMap scaled(std::vector<Basis> perm, std::vector<std::uint32_t> scale) { return {std::move(perm), std::move(scale)}; }

}  // namespace

TEST(BuildLinearQuasigroup, Examples) {
  EXPECT_EQ(build_linear_quasigroup(LinearPresentation::cyclic(5, {2, 3}, 1)), fixtures::linear_mod(5, 2, 3, 1));
  EXPECT_EQ(build_linear_quasigroup(LinearPresentation::cyclic(3, {1, 1}, 0)), fixtures::sum_mod(2, 3));
  const auto z4 = build_linear_quasigroup(LinearPresentation::cyclic(4, {3, 3}, 2));
  EXPECT_TRUE(check_quasigroup(z4).passed());
  EXPECT_TRUE(check_mediality(z4).passed());
  // 6g + 2 = g mod 4 has the single solution g = 2
  EXPECT_EQ(find_idempotents(z4), (std::vector<Label>{2}));
  EXPECT_EQ(build_linear_quasigroup(LinearPresentation::cyclic(3, {1, 1, 1}, 1)), fixtures::sum_mod(3, 3, 1));
}

TEST(BuildLinearQuasigroup, AlwaysMedialQuasigroup) {
  for (unsigned q = 2; q <= 7; ++q)
    for (auto a : units_mod(q))
      for (auto b : units_mod(q)) {
        const auto op = build_linear_quasigroup(LinearPresentation::cyclic(q, {a, b}, q - 1));
        EXPECT_TRUE(check_quasigroup(op).passed());
        EXPECT_TRUE(check_mediality(op).passed());
      }
}

TEST(BuildLinearQuasigroup, RejectsBadPresentations) {
  EXPECT_THROW(build_linear_quasigroup(LinearPresentation::cyclic(4, {2, 1}, 0)), ContractError);
  auto out_of_range = LinearPresentation::cyclic(4, {1, 1}, 0);
  out_of_range.c = 4;
  EXPECT_THROW(build_linear_quasigroup(out_of_range), ContractError);
  // (a,b) -> (b,a) and (a,b) -> (a, a+b) do not commute
  EXPECT_THROW(build_linear_quasigroup(klein({0, 2, 1, 3}, {0, 3, 2, 1}, 0)), ContractError);
  EXPECT_NO_THROW(build_linear_quasigroup(klein({0, 2, 1, 3}, {0, 1, 2, 3}, 0)));
  auto bad = klein({0, 1, 2, 3}, {0, 1, 2, 3}, 0);
  bad.group[1] = 0;
  EXPECT_THROW(validate(bad), ContractError);
}

TEST(ToyodaDecompose, Examples) {
  const auto p = toyoda_decompose(fixtures::linear_mod(5, 2, 3, 1));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->invariant_factors, (std::vector<std::uint32_t>{5}));
  EXPECT_EQ(p->phi(), (std::vector<Label>{0, 2, 4, 1, 3}));
  EXPECT_EQ(p->psi(), (std::vector<Label>{0, 3, 1, 4, 2}));
  EXPECT_EQ(p->c, 1u);

  const auto add4 = toyoda_decompose(fixtures::sum_mod(2, 4));
  ASSERT_TRUE(add4);
  EXPECT_EQ(*add4, LinearPresentation::cyclic(4, {1, 1}, 0));

  EXPECT_FALSE(toyoda_decompose(fixtures::s3()));
}

TEST(ToyodaDecompose, Contracts) {
  EXPECT_THROW(toyoda_decompose(fixtures::product_mod(3)), ContractError);
  EXPECT_THROW(toyoda_decompose(fixtures::sum_mod(2, 7)), BudgetExceeded);
  EXPECT_TRUE(toyoda_decompose(fixtures::sum_mod(2, 7), {}, 7));
}

TEST(ToyodaDecompose, RoundTripCyclic) {
  for (unsigned q = 1; q <= 6; ++q)
    for (auto a : units_mod(q))
      for (auto b : units_mod(q))
        for (Label c = 0; c < q; ++c) {
          const auto op = build_linear_quasigroup(LinearPresentation::cyclic(q, {a, b}, c));
          const auto p = toyoda_decompose(op);
          ASSERT_TRUE(p) << q << " " << a << " " << b << " " << c;
          EXPECT_EQ(build_linear_quasigroup(*p), op);
        }
}

TEST(ToyodaDecompose, RoundTripKlein) {
  const std::vector<std::vector<Label>> autos{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2},
                                              {0, 3, 2, 1}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  int built = 0;
  for (const auto& f : autos)
    for (const auto& g : autos)
      for (Label c = 0; c < 4; ++c) {
        const auto pres = klein(f, g, c);
        std::optional<NaryOp> op;
        try {
          op = build_linear_quasigroup(pres);
        } catch (const ContractError&) {
          continue;
        }
        ++built;
        const auto p = toyoda_decompose(*op);
        ASSERT_TRUE(p);
        EXPECT_EQ(build_linear_quasigroup(*p), *op);
        EXPECT_EQ(p->invariant_factors, (std::vector<std::uint32_t>{2, 2}));
      }
  EXPECT_GT(built, 0);
}

TEST(ToyodaDecompose, TernaryRoundTrip) {
  for (Label c = 0; c < 5; ++c) {
    const auto op = build_linear_quasigroup(LinearPresentation::cyclic(5, {1, 2, 4}, c));
    const auto p = toyoda_decompose(op);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->maps.size(), 3u);
    EXPECT_EQ(build_linear_quasigroup(*p), op);
  }
}

TEST(ToyodaDecompose, CompleteAtOrderThree) {
  const auto squares = oracle::latin_squares(3);
  ASSERT_EQ(squares.size(), 12u);
  for (const auto& sq : squares) {
    const auto op = from_square(3, sq);
    const auto p = toyoda_decompose(op);
    ASSERT_TRUE(p);
    EXPECT_EQ(build_linear_quasigroup(*p), op);
  }
}

TEST(ToyodaDecompose, OrderFourMatchesMedialFilter) {
  const auto squares = oracle::latin_squares(4);
  ASSERT_EQ(squares.size(), 576u);
  std::set<std::vector<unsigned>> medial, decomposed;
  for (const auto& sq : squares) {
    if (oracle::medial(as_table(sq, 4), 2, 4)) medial.insert(sq);
    const auto op = from_square(4, sq);
    if (const auto p = toyoda_decompose(op)) {
      EXPECT_EQ(build_linear_quasigroup(*p), op);
      decomposed.insert(sq);
    }
  }
  EXPECT_EQ(decomposed, medial);
  EXPECT_LT(medial.size(), squares.size());
}

TEST(ToyodaDecompose, NeverAcceptsNonMedial) {
  const auto squares = oracle::latin_squares(5);
  std::size_t rejected = 0;
  for (std::size_t i = 0; i < squares.size(); i += 97) {
    const auto op = from_square(5, squares[i]);
    const auto p = toyoda_decompose(op);
    EXPECT_EQ(p.has_value(), check_mediality(op).passed());
    rejected += !p;
  }
  EXPECT_GT(rejected, 0u);
}

TEST(TheoremProduct, TernaryMatchesExteriorWords) {
  const auto g = fixtures::grassmann(3);
  const std::vector<BasisMap> ids(3, BasisMap::identity(8));
  const auto mu = theorem_product(g, ids, g.basis(0));
  EXPECT_EQ(mu.arity(), 3u);
  oracle::tuples(3, 8, [&](const std::vector<unsigned>& t) {
    const auto [idx, sign] = oracle::wedge_word({t[0], t[1], t[2]});
    Element want = mu.zero();
    if (idx >= 0) want.coeffs[idx] = oracle::mod(sign, 3);
    EXPECT_EQ(mu.mul_basis(std::vector<Basis>{t[0], t[1], t[2]}), want);
  });
}

TEST(VerifyTheoremBinary, Examples) {
  const auto z3 = fixtures::group_algebra(3, 7);
  const auto id3 = BasisMap::identity(3);
  const auto r = verify_theorem_binary(z3, trivial_factor(2, z3.group(), 7), id3, id3, z3.basis(0));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.find("cancellative")->passed());
  const std::vector<BasisMap> ids{id3, id3};
  EXPECT_EQ(theorem_product(z3, ids, z3.basis(0)).entries().size(), z3.entries().size());

  const auto g = fixtures::grassmann2();
  // a -> eps(1,a') a
  const auto sign = scaled({0, 1, 2, 3}, {1, 2, 2, 1});
  const auto s = verify_theorem_binary(g, super_sign(), sign, BasisMap::identity(4), g.basis(0));
  EXPECT_TRUE(s.passed()) << to_text(s);
  EXPECT_EQ(s.find("cancellative")->status, Status::skipped);
  EXPECT_EQ(s.find("r2")->probes, 256u);
}

TEST(VerifyTheoremBinary, TrivialFactorOnExteriorAlgebraFails) {
  const auto g = fixtures::grassmann2();
  const auto id = BasisMap::identity(4);
  const auto r = verify_theorem_binary(g, trivial_factor(2, g.group(), 3), id, id, g.basis(0));
  ASSERT_TRUE(r.failed());
  EXPECT_EQ(r.find("r2")->witness->input, (std::vector<std::int64_t>{0, 1, 2, 0}));
}

TEST(VerifyTheoremBinary, Contracts) {
  const auto g = fixtures::grassmann2();
  const auto id = BasisMap::identity(4);
  const auto swap = scaled({0, 2, 1, 3}, {1, 1, 1, 2});
  const auto neg1 = scaled({0, 1, 2, 3}, {1, 2, 1, 2});
  EXPECT_NO_THROW(verify_theorem_binary(g, super_sign(), swap, id, g.basis(0)));
  EXPECT_THROW(verify_theorem_binary(g, super_sign(), swap, neg1, g.basis(0)), ContractError);
  EXPECT_THROW(verify_theorem_binary(g, super_sign(), scaled({1, 0, 2, 3}, {1, 1, 1, 1}), id, g.basis(0)),
               ContractError);
  // grade preserving but not multiplicative
  EXPECT_THROW(verify_theorem_binary(g, super_sign(), scaled({0, 2, 1, 3}, {1, 1, 1, 1}), id, g.basis(0)),
               ContractError);
  EXPECT_THROW(verify_theorem_binary(g, super_sign(), id, id, g.add(g.basis(0), g.basis(1))), ContractError);
}

// Six-factor rho against a direct evaluation of the same formula on
// super-sign grades and exterior-algebra words.
TEST(VerifyTheoremTernary, SixFactorRhoMatchesOracle) {
  const auto g = fixtures::grassmann2();
  const auto id = BasisMap::identity(4);
  const std::vector<Basis> subset{0, 1, 2};
  const auto r = verify_theorem_ternary(g, super_sign(), id, id, id, g.basis(0), {}, nullptr, subset);

  auto e = [](unsigned x, unsigned y) { return (__builtin_popcount(x) & __builtin_popcount(y) & 1) ? -1 : 1; };
  std::vector<unsigned> hit;
  std::uint64_t index = 0, hit_index = 0;
  oracle::tuples(9, 3, [&](const std::vector<unsigned>& a) {
    ++index;
    if (!hit.empty()) return;
    auto at = [&](unsigned i, unsigned j) { return a[(i - 1) * 3 + (j - 1)]; };
    const int rho = e(at(1, 2), at(3, 1)) * e(at(1, 2), at(2, 1)) * e(at(1, 3), at(3, 1)) *
                    e(at(1, 3), at(3, 2)) * e(at(2, 3), at(3, 2)) * e(at(2, 3), at(3, 1));
    std::vector<unsigned> t(9);
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = 0; j < 3; ++j) t[j * 3 + i] = a[i * 3 + j];
    const auto lhs = oracle::wedge_word(a), rhs = oracle::wedge_word(t);
    if (lhs.first != rhs.first || rho * lhs.second != rhs.second) {
      hit = a;
      hit_index = index;
    }
  });
  // the six-factor form misses three inversion pairs, see ternary_theorem_factor
  ASSERT_FALSE(hit.empty());
  const auto* rn2 = r.find("rn2");
  ASSERT_TRUE(rn2);
  ASSERT_TRUE(rn2->failed());
  EXPECT_EQ(rn2->probes, hit_index);
  EXPECT_EQ(rn2->witness->input, std::vector<std::int64_t>(hit.begin(), hit.end()));
}

TEST(VerifyTheoremTernary, InversionFactorPasses) {
  const auto g = fixtures::grassmann2();
  const auto id = BasisMap::identity(4);
  const auto rho = medial_reorder_factor(super_sign(), 3);
  const std::vector<Basis> subset{0, 1, 2};
  const auto r = verify_theorem_ternary(g, super_sign(), id, id, id, g.basis(0), {}, &rho, subset);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find("rn2")->probes, 19683u);
}

TEST(VerifyTheoremTernary, TrivialGrading) {
  const auto z3 = fixtures::group_algebra(3, 7);
  const auto id = BasisMap::identity(3);
  const auto r = verify_theorem_ternary(z3, trivial_factor(2, z3.group(), 7), id, id, id, z3.basis(0));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(ternary_theorem_factor(trivial_factor(2, z3.group(), 7))({0, 0, 0, 0, 0, 0, 0, 0, 0}).is_one());
}

TEST(VerifyTheoremTernary, DroppedFactorMutationsFail) {
  const auto g = fixtures::grassmann2();
  const auto id = BasisMap::identity(4);
  const std::vector<Basis> subset{0, 1, 2};
  for (unsigned k = 0; k < 6; ++k) {
    const auto rho = ternary_theorem_factor_without(super_sign(), k);
    const auto r = verify_theorem_ternary(g, super_sign(), id, id, id, g.basis(0), {}, &rho, subset);
    EXPECT_TRUE(r.failed()) << k;
  }
}
