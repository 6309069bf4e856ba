#include "polyadic/groupal.hpp"

#include "polyadic/errors.hpp"
#include "polyadic/pos_map.hpp"

namespace polyadic {

namespace {

std::vector<BracketTree> xs(unsigned n) { return std::vector<BracketTree>(n, BracketTree::leaf(0)); }

BracketTree instantiate(const BracketTree& t, Label x) {
  if (t.is_leaf()) return t.atom() == kUnitAtom ? t : BracketTree::leaf(x);
  std::vector<BracketTree> ch;
  for (const auto& c : t.children()) ch.push_back(instantiate(c, x));
  return BracketTree::node(std::move(ch));
}

struct Failure {
  std::string what;
};

}  // namespace

SkeletalGroupModel::SkeletalGroupModel(NaryOp op, const RunConfig& cfg) : op_(std::move(op)) {
  if (check_quasigroup(op_, cfg).status != Status::pass)
    throw ContractError("groupal model needs a quasigroup");
  if (check_total_associativity(op_, cfg).status != Status::pass)
    throw ContractError("groupal model needs a totally associative operation");
  for (Label g = 0; g < op_.order(); ++g) quer_.push_back(querelement(op_, g).value);
  unit_ = find_unit(op_);
}

Label SkeletalGroupModel::evaluate(const BracketTree& t) const {
  if (t.is_leaf()) {
    if (t.atom() == kUnitAtom) {
      if (!unit_) throw ContractError("unit object used in a model without a unit");
      return *unit_;
    }
    return t.atom();
  }
  if (t.children().size() != arity()) throw ContractError("node arity differs from the model");
  std::vector<Label> args;
  for (const auto& c : t.children()) args.push_back(evaluate(c));
  return op_(args);
}

ObjectDiagram quertor_diagram(unsigned n, unsigned position) {
  if (position >= n) throw ContractError("quer position out of range");
  return {"diag6-" + std::to_string(position + 1),
          BracketTree::node(xs(n)),
          {{ObjectStep::quer({position}), ObjectStep::quertor({}, position)},
           {ObjectStep::projection({})}}};
}

ObjectDiagram quertor_associator_diagram(unsigned n) {
  // Inner block at j covers slots j..j+n-1 of 2n-1; the quer sits in the middle slot n-1.
  ObjectDiagram d{"diag7", BracketTree::node(xs(n)), {}};
  for (unsigned j = 0; j < n; ++j) {
    const unsigned local = n - 1 - j;
    d.paths.push_back({ObjectStep::diagonal({j}), ObjectStep::quer({j, local}),
                       ObjectStep::quertor({j}, local)});
    if (j == 0) continue;
    std::vector<ObjectStep> before{ObjectStep::diagonal({0})};
    std::vector<ObjectStep> after{ObjectStep::diagonal({0}), ObjectStep::quer({0, n - 1})};
    for (unsigned k = 0; k < j; ++k) {
      before.push_back(ObjectStep::iso(Move::assoc({}, k)));
      after.push_back(ObjectStep::iso(Move::assoc({}, k)));
    }
    before.push_back(ObjectStep::quer({j, local}));
    before.push_back(ObjectStep::quertor({j}, local));
    after.push_back(ObjectStep::quertor({j}, local));
    d.paths.push_back(std::move(before));
    d.paths.push_back(std::move(after));
  }
  return d;
}

ObjectDiagram braided_quertor_diagram(unsigned n) {
  return {"diag15",
          BracketTree::node(xs(n)),
          {{ObjectStep::quer({0}), ObjectStep::quertor({}, 0)},
           {ObjectStep::quer({0}), ObjectStep::iso(Move::braid({}, reversal(n))),
            ObjectStep::quertor({}, n - 1)},
           {ObjectStep::quer({n - 1}), ObjectStep::quertor({}, n - 1)}}};
}

ObjectDiagram medialed_quertor_diagram() {
  const auto row = BracketTree::node(xs(3));
  auto q = [](unsigned pos) { return ObjectStep::quer({pos / 3, pos % 3}); };
  auto iso = [](Move m) { return ObjectStep::iso(std::move(m)); };
  std::vector<ObjectStep> left{q(1), q(2), q(5),
                               ObjectStep::quertor({1}, 2),
                               iso(Move::assoc({}, 0)),
                               iso(Move::assoc({}, 1)),
                               iso(Move::assoc_inv({2}, 1)),
                               iso(Move::assoc_inv({2}, 0)),
                               ObjectStep::quertor({2, 0}, 0),
                               iso(Move::assoc_inv({}, 1)),
                               ObjectStep::quertor({1}, 0)};
  const std::vector<ObjectStep> right_tail{ObjectStep::quertor({1}, 0),
                                           iso(Move::assoc_inv({}, 1)),
                                           iso(Move::assoc_inv({}, 0)),
                                           iso(Move::assoc({0}, 0)),
                                           iso(Move::assoc({0}, 1)),
                                           ObjectStep::quertor({0, 2}, 2),
                                           iso(Move::assoc({}, 0)),
                                           ObjectStep::quertor({1}, 2)};
  std::vector<ObjectStep> via_medialing{q(1), q(2), q(5), iso(Move::mediate({}))};
  via_medialing.insert(via_medialing.end(), right_tail.begin(), right_tail.end());
  std::vector<ObjectStep> direct{q(3), q(6), q(7)};
  direct.insert(direct.end(), right_tail.begin(), right_tail.end());
  return {"diag19", BracketTree::node({row, row, row}),
          {std::move(left), std::move(via_medialing), std::move(direct)}};
}

ObjectDiagram braided_unit_diagram(unsigned n) {
  std::vector<BracketTree> ch(n, BracketTree::leaf(kUnitAtom));
  ch[0] = BracketTree::leaf(0);
  return {n == 2 ? "diag10" : "diag14",
          BracketTree::node(std::move(ch)),
          {{ObjectStep::iso(Move::unitor({}, 0))},
           {ObjectStep::iso(Move::braid({}, reversal(n))), ObjectStep::iso(Move::unitor({}, n - 1))}}};
}

VerificationReport check_object_diagram(const SkeletalGroupModel& g, const ObjectDiagram& d) {
  VerificationReport r;
  r.law = d.id;
  r.domain = g.op().order();
  const BlockLengths ones(g.op().order(), 1);

  auto run = [&](const BracketTree& start, const std::vector<ObjectStep>& path) {
    BracketTree cur = start;
    for (std::size_t s = 0; s < path.size(); ++s) {
      const auto& step = path[s];
      const std::string where = "step " + std::to_string(s + 1);
      try {
        switch (step.kind) {
          case ObjectStepKind::iso: {
            BracketTree next = apply_move(cur, step.move, ones).tree;
            const Label a = g.evaluate(cur), b = g.evaluate(next);
            if (a != b)
              throw Failure{where + " " + step.move.to_string() + ": " + cur.to_string() + "=" +
                            std::to_string(a) + " vs " + next.to_string() + "=" + std::to_string(b)};
            cur = std::move(next);
            break;
          }
          case ObjectStepKind::quer: {
            const auto& leaf = cur.at(step.move.path);
            if (!leaf.is_leaf() || leaf.atom() == kUnitAtom) throw Failure{where + ": quer needs an object leaf"};
            cur = cur.replaced(step.move.path, BracketTree::leaf(g.quer(leaf.atom())));
            break;
          }
          case ObjectStepKind::quertor: {
            const auto& node = cur.at(step.move.path);
            const unsigned i = step.move.index;
            if (node.is_leaf() || i >= node.children().size()) throw Failure{where + ": quertor pattern mismatch"};
            const unsigned other = i == 0 ? 1 : 0;
            const auto& o = node.children()[other];
            if (!o.is_leaf() || o.atom() == kUnitAtom) throw Failure{where + ": quertor pattern mismatch"};
            const Label x = o.atom();
            for (unsigned k = 0; k < node.children().size(); ++k) {
              const auto& c = node.children()[k];
              const Label want = k == i ? g.quer(x) : x;
              if (!c.is_leaf() || c.atom() != want) throw Failure{where + ": quertor pattern mismatch at " + node.to_string()};
            }
            const Label v = g.evaluate(node);
            if (v != x)
              throw Failure{where + " quertor: " + node.to_string() + "=" + std::to_string(v) + " vs " + std::to_string(x)};
            cur = cur.replaced(step.move.path, BracketTree::leaf(x));
            break;
          }
          case ObjectStepKind::diagonal: {
            const auto& leaf = cur.at(step.move.path);
            if (!leaf.is_leaf()) throw Failure{where + ": diagonal needs a leaf"};
            cur = cur.replaced(step.move.path,
                               BracketTree::node(std::vector<BracketTree>(g.arity(), leaf)));
            break;
          }
          case ObjectStepKind::projection: {
            const auto& node = cur.at(step.move.path);
            if (node.is_leaf()) throw Failure{where + ": projection needs a node"};
            for (const auto& c : node.children())
              if (!(c == node.children()[0])) throw Failure{where + ": projection needs equal factors"};
            cur = cur.replaced(step.move.path, node.children()[0]);
            break;
          }
        }
      } catch (const ContractError& e) {
        throw Failure{where + ": " + e.what()};
      }
    }
    return cur;
  };

  for (Label x = 0; x < g.op().order(); ++x) {
    r.probes = x + 1;
    const BracketTree start = instantiate(d.start, x);
    std::optional<BracketTree> first;
    for (std::size_t p = 0; p < d.paths.size(); ++p) {
      BracketTree end;
      try {
        end = run(start, d.paths[p]);
      } catch (const Failure& f) {
        r.status = Status::fail;
        r.witness = Witness{{x, static_cast<std::int64_t>(p)}, "path " + std::to_string(p), f.what};
        return r;
      }
      if (!first) {
        first = std::move(end);
      } else if (!(end == *first)) {
        r.status = Status::fail;
        r.witness = Witness{{x, static_cast<std::int64_t>(p)}, first->to_string(), end.to_string()};
        return r;
      }
    }
  }
  return r;
}

VerificationReport check_groupal_model(const SkeletalGroupModel& g) {
  const unsigned n = g.arity();
  std::vector<VerificationReport> children;
  {
    std::vector<VerificationReport> positions;
    for (unsigned i = 0; i < n; ++i) positions.push_back(check_object_diagram(g, quertor_diagram(n, i)));
    children.push_back(combine("diag6", std::move(positions)));
  }
  children.push_back(check_object_diagram(g, quertor_associator_diagram(n)));
  children.push_back(check_object_diagram(g, braided_quertor_diagram(n)));
  if (n == 3)
    children.push_back(check_object_diagram(g, medialed_quertor_diagram()));
  else
    children.push_back(skipped("diag19", "drawn for ternary models only"));
  const std::string unit_law = n == 2 ? "diag10" : "diag14";
  if (g.unit()) {
    auto r = check_object_diagram(g, braided_unit_diagram(n));
    r.facts.emplace_back("unit", std::to_string(*g.unit()));
    children.push_back(std::move(r));
  } else {
    children.push_back(skipped(unit_law, "not-applicable: the model has no unit element"));
  }
  auto report = combine("groupal-model", std::move(children));
  report.facts.emplace_back("arity", std::to_string(n));
  report.facts.emplace_back("order", std::to_string(g.op().order()));
  return report;
}

}  // namespace polyadic
