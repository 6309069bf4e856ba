#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "polyadic/config.hpp"
#include "polyadic/report.hpp"

namespace polyadic {

using Label = std::uint32_t;

// An n-ary operation on the labels 0..q-1, stored as a full table indexed in
// row-major order (the last argument varies fastest).
class NaryOp {
 public:
  NaryOp(unsigned arity, std::uint32_t order, std::vector<Label> table);

  static NaryOp from_function(unsigned arity, std::uint32_t order,
                              const std::function<Label(std::span<const Label>)>& f);

  unsigned arity() const { return arity_; }
  std::uint32_t order() const { return order_; }
  const std::vector<Label>& table() const { return table_; }

  std::uint64_t index_of(std::span<const Label> args) const;
  Label operator()(std::span<const Label> args) const { return table_[index_of(args)]; }
  Label operator()(std::initializer_list<Label> args) const {
    return (*this)(std::span<const Label>(args.begin(), args.size()));
  }

  friend bool operator==(const NaryOp&, const NaryOp&) = default;

 private:
  unsigned arity_;
  std::uint32_t order_;
  std::vector<Label> table_;
};

// n x n array of labels, row-major.
class MatrixPolyad {
 public:
  MatrixPolyad(unsigned n, std::vector<Label> entries);

  unsigned size() const { return n_; }
  Label at(unsigned i, unsigned j) const { return entries_[i * n_ + j]; }
  std::span<const Label> row(unsigned i) const {
    return std::span<const Label>(entries_).subspan(i * n_, n_);
  }
  const std::vector<Label>& entries() const { return entries_; }

  friend bool operator==(const MatrixPolyad&, const MatrixPolyad&) = default;

 private:
  unsigned n_;
  std::vector<Label> entries_;
};

// mu applied to the n row products.
Label eval_matrix_polyad(const NaryOp& op, const MatrixPolyad& m);

// Transpose.
MatrixPolyad medial_twist(const MatrixPolyad& m);

VerificationReport check_total_associativity(const NaryOp& op, const RunConfig& cfg = {});
VerificationReport check_mediality(const NaryOp& op, const RunConfig& cfg = {});
VerificationReport check_cancellative(const NaryOp& op, const RunConfig& cfg = {});
VerificationReport check_quasigroup(const NaryOp& op, const RunConfig& cfg = {});

struct Querelement {
  Label value;
  // False when the solution of mu[g,...,g,x] = g fails with x in some other slot.
  bool holds_in_every_position;
  std::vector<unsigned> failing_positions;
};

// Unique x with mu[g,...,g,x] = g. Throws ContractError when there is no
// solution or more than one.
Querelement querelement(const NaryOp& op, Label g);

std::vector<Label> find_idempotents(const NaryOp& op);

// Identity element e with mu[e,...,e,x,e,...,e] = x for x in every slot.
std::optional<Label> find_unit(const NaryOp& op);

// A totally associative operation; flat polyads of admissible length
// k(n-1)+1 can be evaluated without choosing a bracketing.
class AssociativeOp {
 public:
  // Throws ContractError if `op` fails check_total_associativity.
  explicit AssociativeOp(NaryOp op, const RunConfig& cfg = {});

  const NaryOp& op() const { return op_; }
  Label eval(std::span<const Label> polyad) const;

 private:
  NaryOp op_;
};

}  // namespace polyadic
