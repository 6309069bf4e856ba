#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyadic/bracket_tree.hpp"
#include "polyadic/config.hpp"
#include "polyadic/pos_map.hpp"
#include "polyadic/report.hpp"

namespace polyadic {

enum class MoveKind { associate, associate_inverse, braid, mediate, unitor };

// A structural isomorphism applied at the node addressed by `path`.
struct Move {
  MoveKind kind = MoveKind::associate;
  Path path;
  // associate*: inner position; unitor: index of the retained child.
  unsigned index = 0;
  // braid: child k goes to slot perm[k]. mediate: optional block permutation
  // replacing the transpose in the realization (used for mutation tests).
  std::vector<unsigned> perm;

  static Move assoc(Path p, unsigned i) { return {MoveKind::associate, std::move(p), i, {}}; }
  static Move assoc_inv(Path p, unsigned i) {
    return {MoveKind::associate_inverse, std::move(p), i, {}};
  }
  static Move braid(Path p, std::vector<unsigned> sigma) {
    return {MoveKind::braid, std::move(p), 0, std::move(sigma)};
  }
  static Move mediate(Path p) { return {MoveKind::mediate, std::move(p), 0, {}}; }
  static Move unitor(Path p, unsigned keep) { return {MoveKind::unitor, std::move(p), keep, {}}; }

  std::string to_string() const;
};

// Word lengths indexed by atom; the unit atom always has length 0.
using BlockLengths = std::vector<std::size_t>;

std::size_t realized_length(const BracketTree& t, const BlockLengths& lengths);

struct RealizedStep {
  BracketTree tree;
  PosMap map;
};

// Applies one move; throws ContractError on a pattern mismatch.
RealizedStep apply_move(const BracketTree& t, const Move& m, const BlockLengths& lengths);

// Composite of a move sequence (identity for an empty sequence).
RealizedStep run_moves(const BracketTree& start, std::span<const Move> moves,
                       const BlockLengths& lengths);

// Every path starts at `start`; the diagram commutes when all paths end at
// the same tree with the same composite realization.
struct Diagram {
  std::string id;
  BracketTree start;
  std::vector<std::vector<Move>> paths;
};

// Checks a diagram for every assignment of lengths min_len..max_len to the
// non-unit atoms 0..atoms-1.
VerificationReport check_diagram(const Diagram& d, std::size_t atoms, std::size_t min_len,
                                 std::size_t max_len);

// Rewrite graph on bracketings; edges are forward associator moves.
struct RewriteGraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    Move move;
  };
  std::vector<BracketTree> vertices;
  std::vector<Edge> edges;
};

RewriteGraph bracketing_graph(unsigned n, unsigned leaves);

// The (n^2+1)-gon from the left comb on 3(n-1)+1 leaves: an upper path of
// associators inside the first child, at the root and inside the last child,
// and a lower path of root associators.
Diagram polygon_diagram(unsigned n);

// Graph connectivity, the explicit polygon (diag1 for n=2, diag4 for n=3) and
// identity realization around every fundamental cycle. `leaves` defaults to
// 3(n-1)+1.
VerificationReport check_polygon(unsigned n, unsigned leaves = 0);

// The diagrams used by the suites below, exposed for tests.
Diagram triangle_diagram();        // diag2
Diagram triangle_right_unit();     // diag3, left square
Diagram triangle_left_unit();      // diag3, right square
Diagram unit_normalization(unsigned n);  // uu
Diagram ternary_triangle();        // diag8
Diagram hexagon_diagram(bool inverse_associator = false);  // diag9
Diagram braiding_decagon_diagram();  // diag12 with the reversal braiding
Diagram medial_diagram(const std::vector<unsigned>& medialing = {});  // diag16
Diagram medial_unit_diagram(const std::vector<unsigned>& medialing = {});  // diag18

// n=2: diag2, diag3 and uu; n=3: diag8 and uu. Word lengths 0..3.
VerificationReport check_triangle_units(unsigned n);

// diag9 for the associator and its inverse; block lengths 0..2.
VerificationReport check_hexagon();

// diag12 with the order reversing ternary braiding; block lengths 0..2.
VerificationReport check_braiding_decagon();

// (n+1)-factor braid relation on 2n-1 strands; sigma is embedded at offsets
// 0,1,...,n-1,0 on the left and n-1,0,1,...,n-1 on the right (rightmost
// factor applied first). Facts record both composites and whether sigma is
// an involution (symmetric case).
VerificationReport check_braid_relation(unsigned n, const std::vector<unsigned>& sigma);

// b . b* . b = b; the fact "inverse" records whether b* = b^{-1}.
VerificationReport check_regular_braiding(const PosMap& b, const PosMap& b_star);

// diag16 and diag18 with block lengths 0..2. A non-empty `medialing`
// replaces the transpose block permutation in every medialing edge.
VerificationReport check_medial_coherence(const std::vector<unsigned>& medialing = {});

}  // namespace polyadic
