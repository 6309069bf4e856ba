#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace polyadic;

namespace {

BracketTree L(Atom a) { return BracketTree::leaf(a); }
BracketTree N(std::vector<BracketTree> c) { return BracketTree::node(std::move(c)); }

std::vector<Atom> iota_atoms(std::size_t n) {
  std::vector<Atom> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Atom>(i);
  return v;
}

void internal_paths(const BracketTree& t, Path& cur, std::vector<Path>& out) {
  if (t.is_leaf()) return;
  out.push_back(cur);
  for (unsigned k = 0; k < t.children().size(); ++k) {
    cur.push_back(k);
    internal_paths(t.children()[k], cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST(BracketTree, Basics) {
  const auto t = N({N({L(0), L(1)}), L(kUnitAtom)});
  EXPECT_EQ(t.to_string(), "[[0,1],E]");
  EXPECT_EQ(t.leaf_count(), 3u);
  EXPECT_EQ(t.leaves(), (std::vector<Atom>{0, 1, kUnitAtom}));
  EXPECT_TRUE(t.has_arity(2));
  EXPECT_FALSE(t.has_arity(3));
  EXPECT_EQ(t.at({0, 1}), L(1));
  EXPECT_EQ(t.replaced({0}, L(7)).to_string(), "[7,E]");
  EXPECT_EQ(left_comb(2, 4).to_string(), "[[[0,1],2],3]");
  EXPECT_EQ(right_comb(3, 5).to_string(), "[0,1,[2,3,4]]");
}

TEST(EnumerateBracketings, Examples) {
  EXPECT_EQ(enumerate_bracketings(2, 4).size(), 5u);
  EXPECT_EQ(enumerate_bracketings(3, 7).size(), 12u);
  EXPECT_EQ(enumerate_bracketings(2, 2).size(), 1u);
  EXPECT_EQ(enumerate_bracketings(3, 1).size(), 1u);
  EXPECT_THROW(enumerate_bracketings(3, 4), ContractError);
  EXPECT_THROW(enumerate_bracketings(2, 0), ContractError);
}

TEST(EnumerateBracketings, FussCatalanAndShape) {
  for (unsigned n = 2; n <= 4; ++n)
    for (unsigned k = 0; k <= 5 - (n > 3 ? 1 : 0); ++k) {
      const unsigned leaves = k * (n - 1) + 1;
      const auto trees = enumerate_bracketings(n, leaves);
      EXPECT_EQ(trees.size(), oracle::fuss_catalan(n, k)) << n << " " << k;
      EXPECT_EQ(fuss_catalan(n, k), oracle::fuss_catalan(n, k));
      std::set<std::string> seen;
      for (const auto& t : trees) {
        EXPECT_TRUE(t.has_arity(n));
        EXPECT_EQ(t.leaves(), iota_atoms(leaves));
        seen.insert(t.to_string());
      }
      EXPECT_EQ(seen.size(), trees.size());
      EXPECT_EQ(enumerate_bracketings(n, leaves), trees);
    }
}

TEST(AssociatorMove, Examples) {
  EXPECT_EQ(associator_move(left_comb(2, 3), {}, 0).to_string(), "[0,[1,2]]");
  const auto t = N({N({L(0), L(1), L(2)}), L(3), L(4)});
  const auto a1 = associator_move(t, {}, 0);
  EXPECT_EQ(a1.to_string(), "[0,[1,2,3],4]");
  const auto a2 = associator_move(a1, {}, 1);
  EXPECT_EQ(a2.to_string(), "[0,1,[2,3,4]]");
  EXPECT_EQ(associator_move(a2, {}, 1, true), a1);
  EXPECT_EQ(associator_move(a1, {}, 0, true), t);
}

TEST(AssociatorMove, PatternMismatch) {
  const auto t = N({L(0), L(1), N({L(2), L(3), L(4)})});
  EXPECT_THROW(associator_move(t, {}, 0), ContractError);
  EXPECT_THROW(associator_move(t, {}, 2), ContractError);
  EXPECT_THROW(associator_move(t, {0}, 0), ContractError);
  EXPECT_THROW(associator_move(N({N({L(0), L(1)}), L(2), L(3)}), {}, 0), ContractError);
}

TEST(AssociatorMove, PreservesRealizationAndInverts) {
  for (unsigned n = 2; n <= 3; ++n)
    for (const auto& t : enumerate_bracketings(n, 3 * (n - 1) + 1)) {
      std::vector<Path> paths;
      Path cur;
      internal_paths(t, cur, paths);
      for (const auto& p : paths)
        for (unsigned i = 0; i + 1 < n; ++i) {
          if (t.at(p).children()[i].is_leaf()) continue;
          const auto moved = associator_move(t, p, i);
          EXPECT_EQ(moved.leaves(), t.leaves());
          EXPECT_TRUE(moved.has_arity(n));
          EXPECT_EQ(associator_move(moved, p, i, true), t);
        }
    }
}
