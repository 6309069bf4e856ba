#include "polyadic/enumerate.hpp"

#include <vector>

#include "polyadic/errors.hpp"
#include "polyadic/scan.hpp"

namespace polyadic {

namespace {

struct LatinSearch {
  unsigned n;
  std::uint32_t q;
  std::uint64_t cells;
  std::uint64_t line_count;
  std::vector<Label> table;
  std::vector<std::uint64_t> used;  // bitmask per (slot, line)
  std::vector<std::uint64_t> stride;
  const TableVisitor& visit;
  std::uint64_t nodes = 0;
  std::uint64_t budget;
  std::uint64_t found = 0;
  bool stopped = false;

  // Line through `cell` along coordinate `slot`: the cell index with that
  // coordinate removed.
  std::uint64_t line(std::uint64_t cell, unsigned slot) const {
    const std::uint64_t s = stride[slot];
    const std::uint64_t high = cell / (s * q), low = cell % s;
    return slot * line_count + high * s + low;
  }

  void run(std::uint64_t cell) {
    if (stopped) return;
    if (++nodes > budget) throw BudgetExceeded("quasigroup enumeration exceeded node budget");
    if (cell == cells) {
      ++found;
      if (!visit(NaryOp(n, q, table))) stopped = true;
      return;
    }
    std::uint64_t blocked = 0;
    for (unsigned k = 0; k < n; ++k) blocked |= used[line(cell, k)];
    for (Label v = 0; v < q && !stopped; ++v) {
      const std::uint64_t bit = 1ull << v;
      if (blocked & bit) continue;
      for (unsigned k = 0; k < n; ++k) used[line(cell, k)] |= bit;
      table[cell] = v;
      run(cell + 1);
      for (unsigned k = 0; k < n; ++k) used[line(cell, k)] &= ~bit;
    }
  }
};

}  // namespace

std::uint64_t for_each_quasigroup(unsigned arity, std::uint32_t order, const TableVisitor& visit,
                                  std::uint64_t node_budget) {
  if (arity < 2 || order < 1) throw ContractError("bad arity or order");
  if (order > 64) throw BudgetExceeded("quasigroup enumeration supports order <= 64");
  const auto cells = detail::checked_pow(order, arity, 1ull << 24);
  if (!cells) throw BudgetExceeded("table too large to enumerate");
  LatinSearch s{arity, order, *cells, *cells / order, std::vector<Label>(*cells),
                std::vector<std::uint64_t>(arity * (*cells / order), 0), {}, visit,
                0, node_budget};
  // stride[k] = q^(n-1-k): weight of coordinate k in the cell index.
  s.stride.resize(arity);
  std::uint64_t w = 1;
  for (unsigned k = arity; k-- > 0;) {
    s.stride[k] = w;
    w *= order;
  }
  s.run(0);
  return s.found;
}

std::uint64_t for_each_magma(unsigned arity, std::uint32_t order, const TableVisitor& visit,
                             std::uint64_t budget) {
  if (arity < 2 || order < 1) throw ContractError("bad arity or order");
  const auto cells = detail::checked_pow(order, arity, 64);
  if (!cells) throw BudgetExceeded("too many magmas to enumerate");
  const auto total = detail::checked_pow(order, *cells, budget);
  if (!total) throw BudgetExceeded("too many magmas to enumerate");
  std::vector<Label> table(*cells);
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < *total; ++t) {
    detail::decode(t, order, table);
    ++count;
    if (!visit(NaryOp(arity, order, table))) break;
  }
  return count;
}

}  // namespace polyadic
