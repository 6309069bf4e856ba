#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyadic {

using Atom = std::uint32_t;
// The unit object E: a leaf realized by the empty word.
inline constexpr Atom kUnitAtom = 0xFFFFFFFFu;

// Child indices from the root.
using Path = std::vector<unsigned>;

// Leaf (atom) or internal node; the arity is the child count of internal nodes.
class BracketTree {
 public:
  static BracketTree leaf(Atom a);
  static BracketTree node(std::vector<BracketTree> children);

  bool is_leaf() const { return children_.empty(); }
  Atom atom() const { return atom_; }
  const std::vector<BracketTree>& children() const { return children_; }

  std::size_t leaf_count() const;
  // Left-to-right leaf sequence (the realization).
  std::vector<Atom> leaves() const;
  // True if every internal node has exactly n children.
  bool has_arity(unsigned n) const;

  const BracketTree& at(const Path& path) const;
  BracketTree replaced(const Path& path, BracketTree subtree) const;

  // "[[0,1],2]" with "E" for the unit atom.
  std::string to_string() const;

  friend bool operator==(const BracketTree&, const BracketTree&) = default;
  friend auto operator<=>(const BracketTree& a, const BracketTree& b) {
    return a.to_string() <=> b.to_string();
  }

 private:
  Atom atom_ = 0;
  std::vector<BracketTree> children_;
};

// All n-ary trees on leaves 0..L-1 in a fixed recursive order. Throws
// ContractError unless L = k(n-1)+1.
std::vector<BracketTree> enumerate_bracketings(unsigned n, unsigned leaves);

// Fuss-Catalan count of n-ary trees with k internal nodes.
std::uint64_t fuss_catalan(unsigned n, unsigned k);

// Trees nested in the first (left comb) or last (right comb) child.
BracketTree left_comb(unsigned n, unsigned leaves);
BracketTree right_comb(unsigned n, unsigned leaves);

// Associator at `path`: the internal child at index i (0-based) is moved to
// index i+1 across the 2n-1 slots of the node; the inverse moves the internal
// child at i+1 to i. Throws ContractError on a pattern mismatch.
BracketTree associator_move(const BracketTree& t, const Path& path, unsigned i,
                            bool inverse = false);

}  // namespace polyadic
