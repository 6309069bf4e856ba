#pragma once

#include <cstdint>
#include <functional>

#include "polyadic/nary_core.hpp"

namespace polyadic {

// Visitor returns false to stop the enumeration early.
using TableVisitor = std::function<bool(const NaryOp&)>;

// Every n-ary quasigroup (Latin square / hypercube) of the given order, in
// lexicographic order of the row-major table. Returns the number visited.
// Throws BudgetExceeded when the search tree exceeds `node_budget` nodes.
std::uint64_t for_each_quasigroup(unsigned arity, std::uint32_t order, const TableVisitor& visit,
                                  std::uint64_t node_budget = 100'000'000);

// Every table whatsoever; refuses more than `budget` tables.
std::uint64_t for_each_magma(unsigned arity, std::uint32_t order, const TableVisitor& visit,
                             std::uint64_t budget = 10'000'000);

}  // namespace polyadic
