#include "polyadic/coherence.hpp"

#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "polyadic/errors.hpp"

namespace polyadic {

namespace {

std::size_t leaf_length(Atom a, const BlockLengths& lengths) {
  if (a == kUnitAtom) return 0;
  if (a >= lengths.size()) throw ContractError("no length for atom " + std::to_string(a));
  return lengths[a];
}

std::size_t offset_of(const BracketTree& t, const Path& path, const BlockLengths& lengths) {
  std::size_t off = 0;
  const BracketTree* node = &t;
  for (auto i : path) {
    if (i >= node->children().size()) throw ContractError("path leaves the tree");
    for (unsigned k = 0; k < i; ++k) off += realized_length(node->children()[k], lengths);
    node = &node->children()[i];
  }
  return off;
}

// Position-level word: (atom, index within its block).
std::vector<std::pair<Atom, std::size_t>> expanded_word(const BracketTree& t,
                                                        const BlockLengths& lengths) {
  std::vector<std::pair<Atom, std::size_t>> w;
  for (auto a : t.leaves())
    for (std::size_t j = 0; j < leaf_length(a, lengths); ++j) w.emplace_back(a, j);
  return w;
}

std::string lengths_text(const BlockLengths& l) {
  std::ostringstream os;
  os << "lengths=(";
  for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
  os << ')';
  return os.str();
}

std::string step_text(const RealizedStep& s) { return s.tree.to_string() + " " + s.map.to_string(); }

}  // namespace

std::string Move::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case MoveKind::associate: os << "A" << index + 1; break;
    case MoveKind::associate_inverse: os << "A" << index + 1 << "^-1"; break;
    case MoveKind::braid: os << "B"; break;
    case MoveKind::mediate: os << "M"; break;
    case MoveKind::unitor: os << "U" << index + 1; break;
  }
  os << '@';
  if (path.empty()) os << "root";
  for (std::size_t i = 0; i < path.size(); ++i) os << (i ? "." : "") << path[i];
  if (!perm.empty()) {
    os << '(';
    for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? "," : "") << perm[i];
    os << ')';
  }
  return os.str();
}

std::size_t realized_length(const BracketTree& t, const BlockLengths& lengths) {
  std::size_t n = 0;
  for (auto a : t.leaves()) n += leaf_length(a, lengths);
  return n;
}

RealizedStep apply_move(const BracketTree& t, const Move& m, const BlockLengths& lengths) {
  const BracketTree& node = t.at(m.path);
  const std::size_t total = realized_length(t, lengths);
  const std::size_t off = offset_of(t, m.path, lengths);
  const std::size_t len = realized_length(node, lengths);
  auto local = [&](const PosMap& inner) {
    const PosMap parts[] = {PosMap::identity(off), inner, PosMap::identity(total - off - len)};
    return tensor(parts);
  };
  switch (m.kind) {
    case MoveKind::associate:
    case MoveKind::associate_inverse:
      return {associator_move(t, m.path, m.index, m.kind == MoveKind::associate_inverse),
              PosMap::identity(total)};
    case MoveKind::braid: {
      if (node.is_leaf() || m.perm.size() != node.children().size())
        throw ContractError("braiding pattern mismatch");
      std::vector<BracketTree> out(node.children().size(), BracketTree::leaf(0));
      std::vector<std::size_t> lens;
      for (std::size_t k = 0; k < node.children().size(); ++k) {
        out.at(m.perm[k]) = node.children()[k];
        lens.push_back(realized_length(node.children()[k], lengths));
      }
      PosMap inner = block_permutation(lens, m.perm);
      return {t.replaced(m.path, BracketTree::node(std::move(out))), local(inner)};
    }
    case MoveKind::mediate: {
      const auto k = static_cast<unsigned>(node.children().size());
      if (node.is_leaf()) throw ContractError("medialing pattern mismatch");
      std::vector<BracketTree> grand;
      std::vector<std::size_t> lens;
      for (const auto& c : node.children()) {
        if (c.is_leaf() || c.children().size() != k) throw ContractError("medialing pattern mismatch");
        for (const auto& g : c.children()) {
          grand.push_back(g);
          lens.push_back(realized_length(g, lengths));
        }
      }
      std::vector<BracketTree> rows;
      for (unsigned j = 0; j < k; ++j) {
        std::vector<BracketTree> row;
        for (unsigned i = 0; i < k; ++i) row.push_back(grand[i * k + j]);
        rows.push_back(BracketTree::node(std::move(row)));
      }
      const auto perm = m.perm.empty() ? transpose_permutation(k) : m.perm;
      PosMap inner = block_permutation(lens, perm);
      return {t.replaced(m.path, BracketTree::node(std::move(rows))), local(inner)};
    }
    case MoveKind::unitor: {
      if (node.is_leaf() || m.index >= node.children().size())
        throw ContractError("unitor pattern mismatch");
      for (std::size_t k = 0; k < node.children().size(); ++k)
        if (k != m.index && !(node.children()[k].is_leaf() && node.children()[k].atom() == kUnitAtom))
          throw ContractError("unitor pattern mismatch");
      return {t.replaced(m.path, node.children()[m.index]), PosMap::identity(total)};
    }
  }
  throw ContractError("unknown move");
}

RealizedStep run_moves(const BracketTree& start, std::span<const Move> moves,
                       const BlockLengths& lengths) {
  RealizedStep cur{start, PosMap::identity(realized_length(start, lengths))};
  for (const auto& m : moves) {
    auto next = apply_move(cur.tree, m, lengths);
    cur.map = then(cur.map, next.map);
    cur.tree = std::move(next.tree);
  }
  return cur;
}

VerificationReport check_diagram(const Diagram& d, std::size_t atoms, std::size_t min_len,
                                 std::size_t max_len) {
  VerificationReport r;
  r.law = d.id;
  const std::size_t span = max_len - min_len + 1;
  std::uint64_t domain = 1;
  for (std::size_t i = 0; i < atoms; ++i) domain *= span;
  r.domain = domain;
  r.facts.emplace_back("paths", std::to_string(d.paths.size()));

  BlockLengths lengths(atoms, min_len);
  for (std::uint64_t probe = 0; probe < domain; ++probe) {
    std::uint64_t rest = probe;
    for (std::size_t i = atoms; i-- > 0;) {
      lengths[i] = min_len + rest % span;
      rest /= span;
    }
    r.probes = probe + 1;
    std::optional<RealizedStep> first;
    for (std::size_t p = 0; p < d.paths.size(); ++p) {
      RealizedStep got;
      try {
        got = run_moves(d.start, d.paths[p], lengths);
      } catch (const ContractError& e) {
        r.status = Status::fail;
        r.witness = Witness{{lengths.begin(), lengths.end()}, "path " + std::to_string(p), e.what()};
        return r;
      }
      // The composite must carry the start word onto the end word.
      const auto from = expanded_word(d.start, lengths);
      const auto to = expanded_word(got.tree, lengths);
      bool consistent = got.map.is_bijection() && from.size() == to.size();
      for (std::size_t i = 0; consistent && i < from.size(); ++i)
        consistent = to[got.map(i)] == from[i];
      if (!consistent) {
        r.status = Status::fail;
        r.note = "path " + std::to_string(p) + " realization does not match its end word; " +
                 lengths_text(lengths);
        r.witness = Witness{{lengths.begin(), lengths.end()}, step_text(got), got.tree.to_string()};
        return r;
      }
      if (!first) {
        first = std::move(got);
        continue;
      }
      if (!(got.tree == first->tree) || !(got.map == first->map)) {
        r.status = Status::fail;
        r.note = "path 0 and path " + std::to_string(p) + " differ";
        r.witness = Witness{{lengths.begin(), lengths.end()}, step_text(*first), step_text(got)};
        return r;
      }
    }
  }
  return r;
}

RewriteGraph bracketing_graph(unsigned n, unsigned leaves) {
  RewriteGraph g;
  g.vertices = enumerate_bracketings(n, leaves);
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) index.emplace(g.vertices[v].to_string(), v);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    // All internal node paths, preorder.
    std::vector<Path> stack{{}};
    while (!stack.empty()) {
      Path p = stack.back();
      stack.pop_back();
      const BracketTree& node = g.vertices[v].at(p);
      if (node.is_leaf()) continue;
      for (unsigned i = 0; i + 1 < n; ++i) {
        const auto& c = node.children()[i];
        if (c.is_leaf()) continue;
        const auto to = associator_move(g.vertices[v], p, i);
        g.edges.push_back({v, index.at(to.to_string()), Move::assoc(p, i)});
      }
      for (unsigned k = n; k-- > 0;) {
        Path q = p;
        q.push_back(k);
        stack.push_back(std::move(q));
      }
    }
  }
  return g;
}

Diagram polygon_diagram(unsigned n) {
  if (n < 2) throw ContractError("arity must be at least 2");
  Diagram d{n == 2 ? "diag1" : n == 3 ? "diag4" : "polygon", left_comb(n, 3 * (n - 1) + 1), {}};
  std::vector<Move> upper, lower;
  for (unsigned i = 0; i + 1 < n; ++i) upper.push_back(Move::assoc({0}, i));
  for (unsigned i = 0; i + 1 < n; ++i) upper.push_back(Move::assoc({}, i));
  for (unsigned i = 0; i + 1 < n; ++i) upper.push_back(Move::assoc({n - 1}, i));
  for (int rep = 0; rep < 2; ++rep)
    for (unsigned i = 0; i + 1 < n; ++i) lower.push_back(Move::assoc({}, i));
  d.paths = {std::move(upper), std::move(lower)};
  return d;
}

VerificationReport check_polygon(unsigned n, unsigned leaves) {
  if (n < 2 || n > 4) throw BudgetExceeded("polygon check supports arities 2..4");
  if (leaves == 0) leaves = 3 * (n - 1) + 1;
  const RewriteGraph g = bracketing_graph(n, leaves);
  const std::size_t V = g.vertices.size();
  BlockLengths ones(leaves, 1);
  std::vector<VerificationReport> children;

  // Every edge keeps the leaf word.
  {
    VerificationReport r;
    r.law = "realization";
    r.domain = g.edges.size();
    for (const auto& e : g.edges) {
      ++r.probes;
      if (g.vertices[e.from].leaves() != g.vertices[e.to].leaves()) {
        r.status = Status::fail;
        r.witness = Witness{{static_cast<std::int64_t>(e.from), static_cast<std::int64_t>(e.to)},
                            g.vertices[e.from].to_string(), g.vertices[e.to].to_string()};
        break;
      }
    }
    children.push_back(std::move(r));
  }

  // Connectivity and a BFS spanning tree.
  std::vector<std::vector<std::size_t>> adj(V);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    adj[g.edges[k].from].push_back(k);
    adj[g.edges[k].to].push_back(k);
  }
  std::vector<std::optional<std::size_t>> parent_edge(V);
  std::vector<bool> seen(V, false);
  std::vector<bool> tree_edge(g.edges.size(), false);
  std::queue<std::size_t> q;
  seen[0] = true;
  q.push(0);
  std::size_t reached = 1;
  while (!q.empty()) {
    const auto v = q.front();
    q.pop();
    for (auto k : adj[v]) {
      const auto w = g.edges[k].from == v ? g.edges[k].to : g.edges[k].from;
      if (seen[w]) continue;
      seen[w] = true;
      parent_edge[w] = k;
      tree_edge[k] = true;
      ++reached;
      q.push(w);
    }
  }
  {
    VerificationReport r;
    r.law = "connected";
    r.domain = r.probes = V;
    if (reached != V) {
      r.status = Status::fail;
      r.note = std::to_string(reached) + " of " + std::to_string(V) + " bracketings reachable";
    }
    children.push_back(std::move(r));
  }

  // The explicit (n^2+1)-gon.
  if (leaves == 3 * (n - 1) + 1 && (n == 2 || n == 3)) {
    const Diagram d = polygon_diagram(n);
    auto r = check_diagram(d, leaves, 1, 1);
    std::set<std::string> visited{d.start.to_string()};
    for (const auto& path : d.paths) {
      BracketTree cur = d.start;
      for (const auto& m : path) {
        cur = apply_move(cur, m, ones).tree;
        visited.insert(cur.to_string());
      }
    }
    r.facts.emplace_back("polygon_vertices", std::to_string(visited.size()));
    if (r.status == Status::pass && visited.size() != n * n + 1) {
      r.status = Status::fail;
      r.note = "polygon has " + std::to_string(visited.size()) + " vertices";
    }
    children.push_back(std::move(r));
  } else {
    children.push_back(skipped(n == 2 ? "diag1" : n == 3 ? "diag4" : "polygon",
                               "no explicit polygon for this size; cycle space checked instead"));
  }

  // Fundamental cycles: walk u -> root, root -> v along the tree, close with
  // the non-tree edge, and compose the realizations.
  {
    VerificationReport r;
    r.law = "cycle-space";
    auto to_root = [&](std::size_t v) {
      std::vector<std::pair<std::size_t, bool>> steps;  // (edge, forward)
      while (parent_edge[v]) {
        const auto k = *parent_edge[v];
        const bool forward = g.edges[k].from == v;
        steps.emplace_back(k, forward);
        v = forward ? g.edges[k].to : g.edges[k].from;
      }
      return steps;
    };
    auto edge_move = [&](std::size_t k, bool forward) {
      Move m = g.edges[k].move;
      if (!forward) m.kind = MoveKind::associate_inverse;
      return m;
    };
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      if (tree_edge[k] || !seen[g.edges[k].from]) continue;
      ++r.domain;
      std::vector<Move> cycle;
      for (auto [e, fwd] : to_root(g.edges[k].to)) cycle.push_back(edge_move(e, fwd));
      auto back = to_root(g.edges[k].from);
      for (auto it = back.rbegin(); it != back.rend(); ++it) cycle.push_back(edge_move(it->first, !it->second));
      cycle.push_back(g.edges[k].move);
      const BracketTree& start = g.vertices[g.edges[k].to];
      ++r.probes;
      RealizedStep got = run_moves(start, cycle, ones);
      if (!(got.tree == start) || !got.map.is_identity()) {
        r.status = Status::fail;
        r.witness = Witness{{static_cast<std::int64_t>(k)}, start.to_string(), step_text(got)};
        break;
      }
    }
    r.facts.emplace_back("cycle_rank", std::to_string(r.domain));
    children.push_back(std::move(r));
  }

  auto report = combine("polygon", std::move(children));
  report.facts.emplace_back("arity", std::to_string(n));
  report.facts.emplace_back("vertices", std::to_string(V));
  report.facts.emplace_back("edges", std::to_string(g.edges.size()));
  return report;
}

Diagram triangle_diagram() {
  const auto X1 = BracketTree::leaf(0), X2 = BracketTree::leaf(1), E = BracketTree::leaf(kUnitAtom);
  return {"diag2",
          BracketTree::node({BracketTree::node({X1, E}), X2}),
          {{Move::unitor({0}, 0)}, {Move::assoc({}, 0), Move::unitor({1}, 1)}}};
}

Diagram triangle_right_unit() {
  const auto X1 = BracketTree::leaf(0), X2 = BracketTree::leaf(1), E = BracketTree::leaf(kUnitAtom);
  return {"diag3-right-unit",
          BracketTree::node({BracketTree::node({X1, X2}), E}),
          {{Move::unitor({}, 0)}, {Move::assoc({}, 0), Move::unitor({1}, 0)}}};
}

Diagram triangle_left_unit() {
  const auto X1 = BracketTree::leaf(0), X2 = BracketTree::leaf(1), E = BracketTree::leaf(kUnitAtom);
  return {"diag3-left-unit",
          BracketTree::node({BracketTree::node({E, X1}), X2}),
          {{Move::unitor({0}, 1)}, {Move::assoc({}, 0), Move::unitor({}, 1)}}};
}

Diagram unit_normalization(unsigned n) {
  if (n < 2) throw ContractError("arity must be at least 2");
  Diagram d{"uu", BracketTree::node(std::vector<BracketTree>(n, BracketTree::leaf(kUnitAtom))), {}};
  for (unsigned i = 0; i < n; ++i) d.paths.push_back({Move::unitor({}, i)});
  return d;
}

Diagram ternary_triangle() {
  const auto X = BracketTree::leaf(0), E = BracketTree::leaf(kUnitAtom);
  return {"diag8",
          BracketTree::node({BracketTree::node({E, E, X}), E, E}),
          {
              {Move::unitor({}, 0), Move::unitor({}, 2)},
              {Move::assoc({}, 0), Move::unitor({}, 1), Move::unitor({}, 1)},
              {Move::assoc({}, 0), Move::assoc({}, 1), Move::unitor({}, 2), Move::unitor({}, 0)},
              {Move::assoc({}, 0), Move::unitor({1}, 1), Move::unitor({}, 1)},
              {Move::assoc({}, 0), Move::assoc({}, 1), Move::unitor({2}, 0), Move::unitor({}, 2)},
          }};
}

Diagram hexagon_diagram(bool inverse_associator) {
  const auto X1 = BracketTree::leaf(0), X2 = BracketTree::leaf(1), X3 = BracketTree::leaf(2);
  const std::vector<unsigned> swap{1, 0};
  if (!inverse_associator)
    return {"diag9",
            BracketTree::node({BracketTree::node({X1, X2}), X3}),
            {{Move::braid({0}, swap), Move::assoc({}, 0), Move::braid({1}, swap)},
             {Move::assoc({}, 0), Move::braid({}, swap), Move::assoc({}, 0)}}};
  return {"diag9-inverse",
          BracketTree::node({X1, BracketTree::node({X2, X3})}),
          {{Move::braid({1}, swap), Move::assoc_inv({}, 0), Move::braid({0}, swap)},
           {Move::assoc_inv({}, 0), Move::braid({}, swap), Move::assoc_inv({}, 0)}}};
}

Diagram braiding_decagon_diagram() {
  std::vector<BracketTree> x;
  for (Atom a = 0; a < 5; ++a) x.push_back(BracketTree::leaf(a));
  const auto rev = reversal(3);
  return {"diag12",
          BracketTree::node({BracketTree::node({x[0], x[1], x[2]}), x[3], x[4]}),
          {{Move::braid({0}, rev), Move::assoc({}, 0), Move::braid({1}, rev), Move::assoc({}, 1),
            Move::braid({2}, rev)},
           {Move::assoc({}, 0), Move::assoc({}, 1), Move::braid({}, rev), Move::assoc({}, 0),
            Move::assoc({}, 1)}}};
}

Diagram medial_diagram(const std::vector<unsigned>& medialing) {
  std::vector<BracketTree> x;
  for (Atom a = 0; a < 5; ++a) x.push_back(BracketTree::leaf(a));
  auto M = [&](Path p) {
    Move m = Move::mediate(std::move(p));
    m.perm = medialing;
    return m;
  };
  using N = std::vector<BracketTree>;
  const auto start =
      BracketTree::node(N{BracketTree::node(N{BracketTree::node(N{BracketTree::node(N{x[0], x[1]}), x[2]}), x[3]}), x[4]});
  return {"diag16",
          start,
          {{Move::assoc({0}, 0), M({0}), Move::assoc({}, 0), M({}), Move::assoc_inv({0}, 0),
            Move::assoc_inv({}, 0), Move::assoc({0}, 0), M({0}), Move::assoc({}, 0),
            Move::assoc({1}, 0), Move::assoc({}, 0)},
           {Move::assoc({0, 0}, 0), Move::assoc({}, 0), M({}), Move::assoc({}, 0),
            Move::assoc({1, 1}, 0)}}};
}

Diagram medial_unit_diagram(const std::vector<unsigned>& medialing) {
  const auto X1 = BracketTree::leaf(0), X = BracketTree::leaf(1), X2 = BracketTree::leaf(2),
             E = BracketTree::leaf(kUnitAtom);
  Move m = Move::mediate({});
  m.perm = medialing;
  return {"diag18",
          BracketTree::node({BracketTree::node({X1, E}), BracketTree::node({X, X2})}),
          {{Move::assoc({}, 0), Move::assoc_inv({1}, 0), Move::unitor({1, 0}, 1)},
           {m, Move::assoc({}, 0), Move::assoc_inv({1}, 0), Move::unitor({1, 0}, 0)}}};
}

VerificationReport check_triangle_units(unsigned n) {
  if (n == 2) {
    return combine("triangle", {check_diagram(triangle_diagram(), 2, 0, 3),
                                check_diagram(triangle_right_unit(), 2, 0, 3),
                                check_diagram(triangle_left_unit(), 2, 0, 3),
                                check_diagram(unit_normalization(2), 0, 0, 0)});
  }
  if (n == 3) {
    return combine("triangle", {check_diagram(ternary_triangle(), 1, 0, 3),
                                check_diagram(unit_normalization(3), 0, 0, 0)});
  }
  throw ContractError("triangle diagrams are drawn for arities 2 and 3");
}

VerificationReport check_hexagon() {
  return combine("hexagon", {check_diagram(hexagon_diagram(false), 3, 0, 2),
                             check_diagram(hexagon_diagram(true), 3, 0, 2)});
}

VerificationReport check_braiding_decagon() {
  return combine("braiding-decagon", {check_diagram(braiding_decagon_diagram(), 5, 0, 2)});
}

VerificationReport check_braid_relation(unsigned n, const std::vector<unsigned>& sigma) {
  if (n < 2 || sigma.size() != n) throw ContractError("sigma must be a permutation of n points");
  {
    std::vector<bool> hit(n, false);
    for (auto s : sigma) {
      if (s >= n || hit[s]) throw ContractError("sigma must be a permutation of n points");
      hit[s] = true;
    }
  }
  const std::size_t strands = 2 * n - 1;
  std::vector<std::size_t> left_offsets, right_offsets;
  for (unsigned k = 0; k < n; ++k) left_offsets.push_back(k);
  left_offsets.push_back(0);
  right_offsets.push_back(n - 1);
  for (unsigned k = 0; k < n; ++k) right_offsets.push_back(k);
  // Written left to right; the rightmost factor acts first.
  auto side = [&](const std::vector<std::size_t>& offsets) {
    PosMap acc = PosMap::identity(strands);
    for (auto it = offsets.rbegin(); it != offsets.rend(); ++it)
      acc = then(acc, embed(sigma, strands, *it));
    return acc;
  };
  const PosMap lhs = side(left_offsets), rhs = side(right_offsets);
  VerificationReport r;
  r.law = n == 2 ? "yb2" : "braid-relation";
  r.domain = r.probes = 1;
  if (!(lhs == rhs)) {
    r.status = Status::fail;
    r.witness = Witness{{}, lhs.to_string(), rhs.to_string()};
  }
  const PosMap s = embed(sigma, n, 0);
  r.facts.emplace_back("arity", std::to_string(n));
  r.facts.emplace_back("strands", std::to_string(strands));
  r.facts.emplace_back("lhs", lhs.to_string());
  r.facts.emplace_back("rhs", rhs.to_string());
  r.facts.emplace_back("symmetric", compose(s, s).is_identity() ? "yes" : "no");
  return r;
}

VerificationReport check_regular_braiding(const PosMap& b, const PosMap& b_star) {
  if (b_star.source_len() != b.target_len() || b_star.target_len() != b.source_len())
    throw ContractError("b and b* have mismatched shapes");
  VerificationReport r;
  r.law = "regular-braiding";
  r.domain = r.probes = 1;
  const PosMap bbb = compose(b, compose(b_star, b));
  if (!(bbb == b)) {
    r.status = Status::fail;
    r.witness = Witness{{}, bbb.to_string(), b.to_string()};
  }
  const bool inverse = b.is_bijection() && b_star == b.inverse();
  r.facts.emplace_back("inverse", inverse ? "yes" : "no");
  return r;
}

VerificationReport check_medial_coherence(const std::vector<unsigned>& medialing) {
  auto r = combine("medial-coherence", {check_diagram(medial_diagram(medialing), 5, 0, 2),
                                        check_diagram(medial_unit_diagram(medialing), 3, 0, 2)});
  if (!medialing.empty()) r.note = "mutated medialing";
  return r;
}

}  // namespace polyadic
