#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyadic/bracket_tree.hpp"
#include "polyadic/coherence.hpp"
#include "polyadic/config.hpp"
#include "polyadic/nary_core.hpp"
#include "polyadic/report.hpp"

namespace polyadic {

// Skeletal model of a groupal category: objects are the elements of an
// n-ary group, the tensor product is mu, and Q sends g to its querelement.
class SkeletalGroupModel {
 public:
  // Throws ContractError unless `op` is a quasigroup and totally associative.
  explicit SkeletalGroupModel(NaryOp op, const RunConfig& cfg = {});

  const NaryOp& op() const { return op_; }
  unsigned arity() const { return op_.arity(); }
  Label quer(Label g) const { return quer_.at(g); }
  std::optional<Label> unit() const { return unit_; }

  // Value of a tree whose leaves are elements.
  Label evaluate(const BracketTree& t) const;

 private:
  NaryOp op_;
  std::vector<Label> quer_;
  std::optional<Label> unit_;
};

enum class ObjectStepKind {
  // A structural isomorphism from the word model (associator, braiding,
  // medialing, unitor with the unit element as E).
  iso,
  // Leaf x -> querelement of x (the querfunctor on one factor).
  quer,
  // Node [x,..,qx at index,..,x] -> x.
  quertor,
  // Leaf x -> [x,...,x].
  diagonal,
  // Node [x,...,x] -> x.
  projection,
};

struct ObjectStep {
  ObjectStepKind kind = ObjectStepKind::iso;
  Move move;  // iso steps; for the others only path and index are used

  static ObjectStep iso(Move m) { return {ObjectStepKind::iso, std::move(m)}; }
  static ObjectStep quer(Path p) { return {ObjectStepKind::quer, Move{MoveKind::associate, std::move(p), 0, {}}}; }
  static ObjectStep quertor(Path p, unsigned i) {
    return {ObjectStepKind::quertor, Move{MoveKind::associate, std::move(p), i, {}}};
  }
  static ObjectStep diagonal(Path p) {
    return {ObjectStepKind::diagonal, Move{MoveKind::associate, std::move(p), 0, {}}};
  }
  static ObjectStep projection(Path p) {
    return {ObjectStepKind::projection, Move{MoveKind::associate, std::move(p), 0, {}}};
  }
};

// Paths of object steps from a start shape whose leaves are all the atom 0
// (standing for X); the diagram holds for x when every isomorphism step joins
// objects of equal value and all paths end at the same object tree.
struct ObjectDiagram {
  std::string id;
  BracketTree start;
  std::vector<std::vector<ObjectStep>> paths;
};

ObjectDiagram quertor_diagram(unsigned n, unsigned position);  // diag6
ObjectDiagram quertor_associator_diagram(unsigned n);          // diag7
ObjectDiagram braided_quertor_diagram(unsigned n);             // diag15
ObjectDiagram medialed_quertor_diagram();                      // diag19 (n=3)
ObjectDiagram braided_unit_diagram(unsigned n);                // diag10 / diag14

VerificationReport check_object_diagram(const SkeletalGroupModel& g, const ObjectDiagram& d);

// diag6 in every position, diag7, diag15 and (n=3) diag19 exhaustively over
// the elements; diag10 (n=2) or diag14 (n>=3) when the model has a unit,
// reported as skipped otherwise.
VerificationReport check_groupal_model(const SkeletalGroupModel& g);

}  // namespace polyadic
