#pragma once

#include <span>
#include <vector>

#include "polyadic/config.hpp"
#include "polyadic/factor_map.hpp"
#include "polyadic/graded_algebra.hpp"
#include "polyadic/report.hpp"

namespace polyadic {

struct TensorProduct {
  GradedAlgebra algebra;
  // components[i][j]: basis index in algebra j of product basis element i.
  std::vector<std::vector<Basis>> components;
  // "rb", "abe-assoc", "rm-medial" and, for a 2-ary factor, "em".
  VerificationReport checks;
};

// Tensor product of n n-ary algebras sharing grading group and field. For
// basis inputs x_1..x_n with grade matrix B (row r = input r, column j =
// component j) the product is factor(B)^{-1} times the tensor of the column
// products mu^(j)[column j]. A 2-ary factor is read as eps0 and evaluated at
// (B[0][1], B[1][0]) (binary case only); otherwise the factor has arity n^2.
TensorProduct tensor_product_graded(std::span<const GradedAlgebra> algs, const FactorMap& factor,
                                    const RunConfig& cfg = {});

}  // namespace polyadic
