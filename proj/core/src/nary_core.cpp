#include "polyadic/nary_core.hpp"

#include <algorithm>
#include <string>

#include "polyadic/errors.hpp"
#include "polyadic/scan.hpp"

namespace polyadic {

namespace {

constexpr std::uint64_t kMaxTable = 1ull << 28;

std::uint64_t table_size(unsigned arity, std::uint32_t order) {
  const auto n = detail::checked_pow(order, arity, kMaxTable);
  if (!n) throw BudgetExceeded("operation table larger than 2^28 entries");
  return *n;
}

std::vector<std::int64_t> widen(std::span<const Label> xs) {
  return {xs.begin(), xs.end()};
}

}  // namespace

NaryOp::NaryOp(unsigned arity, std::uint32_t order, std::vector<Label> table)
    : arity_(arity), order_(order), table_(std::move(table)) {
  if (arity_ < 2) throw ContractError("arity must be at least 2");
  if (order_ < 1) throw ContractError("carrier order must be at least 1");
  if (table_.size() != table_size(arity_, order_))
    throw ContractError("table must have order^arity entries");
  for (Label v : table_)
    if (v >= order_) throw ContractError("table entry outside the carrier");
}

NaryOp NaryOp::from_function(unsigned arity, std::uint32_t order,
                             const std::function<Label(std::span<const Label>)>& f) {
  if (arity < 2 || order < 1) throw ContractError("bad arity or order");
  const std::uint64_t size = table_size(arity, order);
  std::vector<Label> table(size);
  std::vector<Label> args(arity);
  for (std::uint64_t i = 0; i < size; ++i) {
    detail::decode(i, order, args);
    table[i] = f(args);
  }
  return NaryOp(arity, order, std::move(table));
}

std::uint64_t NaryOp::index_of(std::span<const Label> args) const {
  if (args.size() != arity_) throw ContractError("wrong number of arguments");
  std::uint64_t idx = 0;
  for (Label a : args) {
    if (a >= order_) throw ContractError("argument outside the carrier");
    idx = idx * order_ + a;
  }
  return idx;
}

MatrixPolyad::MatrixPolyad(unsigned n, std::vector<Label> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(n_) * n_)
    throw ContractError("matrix polyad needs n*n entries");
}

Label eval_matrix_polyad(const NaryOp& op, const MatrixPolyad& m) {
  const unsigned n = op.arity();
  if (m.size() != n) throw ContractError("matrix polyad dimension does not match arity");
  std::vector<Label> rows(n);
  for (unsigned i = 0; i < n; ++i) rows[i] = op(m.row(i));
  return op(rows);
}

MatrixPolyad medial_twist(const MatrixPolyad& m) {
  const unsigned n = m.size();
  std::vector<Label> t(m.entries().size());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) t[j * n + i] = m.at(i, j);
  return MatrixPolyad(n, std::move(t));
}

namespace {

// Value of the (2n-1)-word with the inner product starting at `pos`.
Label placement(const NaryOp& op, std::span<const Label> word, unsigned pos,
                std::vector<Label>& outer) {
  const unsigned n = op.arity();
  outer.clear();
  for (unsigned k = 0; k < pos; ++k) outer.push_back(word[k]);
  outer.push_back(op(word.subspan(pos, n)));
  for (unsigned k = pos + n; k < word.size(); ++k) outer.push_back(word[k]);
  return op(outer);
}

}  // namespace

VerificationReport check_total_associativity(const NaryOp& op, const RunConfig& cfg) {
  const unsigned n = op.arity(), len = 2 * n - 1;
  const std::uint32_t q = op.order();
  auto make = [&] {
    return [&op, n, len, q, word = std::vector<Label>(len), outer = std::vector<Label>()](
               std::uint64_t i) mutable {
      detail::decode(i, q, word);
      const Label first = placement(op, word, 0, outer);
      for (unsigned pos = 1; pos < n; ++pos)
        if (placement(op, word, pos, outer) != first) return true;
      return false;
    };
  };
  auto describe = [&](std::uint64_t i) {
    std::vector<Label> word(len), outer;
    detail::decode(i, q, word);
    const Label first = placement(op, word, 0, outer);
    unsigned pos = 1;
    while (placement(op, word, pos, outer) == first) ++pos;
    return Witness{widen(word), "placement 0 = " + std::to_string(first),
                   "placement " + std::to_string(pos) + " = " +
                       std::to_string(placement(op, word, pos, outer))};
  };
  return detail::run_scan("mass", detail::checked_pow(q, len, cfg.budget + 1),
                          cfg, make, describe);
}

VerificationReport check_mediality(const NaryOp& op, const RunConfig& cfg) {
  const unsigned n = op.arity();
  const std::uint32_t q = op.order();
  auto sides = [&op, n](std::span<const Label> a, std::vector<Label>& rows,
                        std::vector<Label>& col) {
    for (unsigned i = 0; i < n; ++i) rows[i] = op(a.subspan(i * n, n));
    const Label lhs = op(rows);
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned i = 0; i < n; ++i) col[i] = a[i * n + j];
      rows[j] = op(col);
    }
    return std::pair<Label, Label>(lhs, op(rows));
  };
  auto make = [&] {
    return [&, a = std::vector<Label>(n * n), rows = std::vector<Label>(n),
            col = std::vector<Label>(n)](std::uint64_t i) mutable {
      detail::decode(i, q, a);
      const auto [l, r] = sides(a, rows, col);
      return l != r;
    };
  };
  auto describe = [&](std::uint64_t i) {
    std::vector<Label> a(n * n), rows(n), col(n);
    detail::decode(i, q, a);
    const auto [l, r] = sides(a, rows, col);
    return Witness{widen(a), std::to_string(l), std::to_string(r)};
  };
  return detail::run_scan(n == 2 ? "mm" : "mna", detail::checked_pow(q, n * n, cfg.budget + 1),
                          cfg, make, describe);
}

namespace {

// Sections are indexed by (slot, assignment of the other n-1 arguments).
// Returns the first pair of colliding inputs of the section, or nullopt.
std::optional<std::pair<Label, Label>> section_collision(const NaryOp& op, unsigned slot,
                                                         std::span<const Label> others,
                                                         std::vector<Label>& args,
                                                         std::vector<Label>& seen) {
  const unsigned n = op.arity();
  const std::uint32_t q = op.order();
  constexpr Label kNone = ~Label{0};
  std::fill(seen.begin(), seen.end(), kNone);
  for (Label x = 0; x < q; ++x) {
    for (unsigned k = 0, o = 0; k < n; ++k) args[k] = (k == slot) ? x : others[o++];
    const Label v = op(args);
    if (seen[v] != kNone) return std::pair<Label, Label>(seen[v], x);
    seen[v] = x;
  }
  return std::nullopt;
}

VerificationReport scan_sections(const NaryOp& op, const RunConfig& cfg, std::string law) {
  const unsigned n = op.arity();
  const std::uint32_t q = op.order();
  const auto per_slot = detail::checked_pow(q, n - 1, cfg.budget + 1);
  std::optional<std::uint64_t> domain;
  if (per_slot) domain = *per_slot * n;
  const std::uint64_t ps = per_slot.value_or(1);
  auto make = [&] {
    return [&, others = std::vector<Label>(n - 1), args = std::vector<Label>(n),
            seen = std::vector<Label>(q)](std::uint64_t i) mutable {
      detail::decode(i % ps, q, others);
      return section_collision(op, static_cast<unsigned>(i / ps), others, args, seen)
          .has_value();
    };
  };
  auto describe = [&](std::uint64_t i) {
    std::vector<Label> others(n - 1), args(n), seen(q);
    const auto slot = static_cast<unsigned>(i / ps);
    detail::decode(i % ps, q, others);
    const auto [x, y] = *section_collision(op, slot, others, args, seen);
    std::vector<std::int64_t> in{slot};
    in.insert(in.end(), others.begin(), others.end());
    for (unsigned k = 0, o = 0; k < n; ++k) args[k] = (k == slot) ? x : others[o++];
    const Label v = op(args);
    return Witness{in,
                   "slot " + std::to_string(slot) + " value " + std::to_string(x) + " -> " +
                       std::to_string(v),
                   "slot " + std::to_string(slot) + " value " + std::to_string(y) + " -> " +
                       std::to_string(v)};
  };
  return detail::run_scan(std::move(law), domain, cfg, make, describe);
}

}  // namespace

VerificationReport check_cancellative(const NaryOp& op, const RunConfig& cfg) {
  return scan_sections(op, cfg, "cancellative");
}

VerificationReport check_quasigroup(const NaryOp& op, const RunConfig& cfg) {
  // On a finite carrier a section is bijective iff it is injective; the
  // witness is the collision that leaves some value unreached.
  return scan_sections(op, cfg, "quasigroup");
}

Querelement querelement(const NaryOp& op, Label g) {
  const unsigned n = op.arity();
  const std::uint32_t q = op.order();
  if (g >= q) throw ContractError("element outside the carrier");
  std::vector<Label> args(n, g);
  std::vector<Label> solutions;
  for (Label x = 0; x < q; ++x) {
    args[n - 1] = x;
    if (op(args) == g) solutions.push_back(x);
  }
  if (solutions.empty())
    throw ContractError("no querelement for " + std::to_string(g) + ": not an n-ary group");
  if (solutions.size() > 1)
    throw ContractError("querelement of " + std::to_string(g) +
                        " is not unique: not an n-ary group");
  Querelement out{solutions.front(), true, {}};
  for (unsigned slot = 0; slot + 1 < n; ++slot) {
    std::fill(args.begin(), args.end(), g);
    args[slot] = out.value;
    if (op(args) != g) {
      out.holds_in_every_position = false;
      out.failing_positions.push_back(slot);
    }
  }
  return out;
}

std::vector<Label> find_idempotents(const NaryOp& op) {
  std::vector<Label> out;
  std::vector<Label> args(op.arity());
  for (Label g = 0; g < op.order(); ++g) {
    std::fill(args.begin(), args.end(), g);
    if (op(args) == g) out.push_back(g);
  }
  return out;
}

std::optional<Label> find_unit(const NaryOp& op) {
  const unsigned n = op.arity();
  std::vector<Label> args(n);
  for (Label e = 0; e < op.order(); ++e) {
    bool ok = true;
    for (unsigned slot = 0; ok && slot < n; ++slot)
      for (Label x = 0; ok && x < op.order(); ++x) {
        std::fill(args.begin(), args.end(), e);
        args[slot] = x;
        ok = op(args) == x;
      }
    if (ok) return e;
  }
  return std::nullopt;
}

AssociativeOp::AssociativeOp(NaryOp op, const RunConfig& cfg) : op_(std::move(op)) {
  const auto r = check_total_associativity(op_, cfg);
  if (!r.passed()) throw ContractError("operation is not totally associative");
}

Label AssociativeOp::eval(std::span<const Label> polyad) const {
  const unsigned n = op_.arity();
  if (polyad.empty() || (polyad.size() - 1) % (n - 1) != 0)
    throw ContractError("polyad length must be k(n-1)+1");
  Label acc = polyad[0];
  std::vector<Label> args(n);
  for (std::size_t pos = 1; pos < polyad.size(); pos += n - 1) {
    args[0] = acc;
    std::copy_n(polyad.begin() + static_cast<std::ptrdiff_t>(pos), n - 1, args.begin() + 1);
    acc = op_(args);
  }
  return acc;
}

}  // namespace polyadic
