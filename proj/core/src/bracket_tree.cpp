#include "polyadic/bracket_tree.hpp"

#include <sstream>

#include "polyadic/errors.hpp"

namespace polyadic {

BracketTree BracketTree::leaf(Atom a) {
  BracketTree t;
  t.atom_ = a;
  return t;
}

BracketTree BracketTree::node(std::vector<BracketTree> children) {
  if (children.size() < 2) throw ContractError("an internal node needs at least two children");
  BracketTree t;
  t.children_ = std::move(children);
  return t;
}

std::size_t BracketTree::leaf_count() const {
  if (is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : children_) n += c.leaf_count();
  return n;
}

std::vector<Atom> BracketTree::leaves() const {
  std::vector<Atom> out;
  std::vector<const BracketTree*> stack{this};
  while (!stack.empty()) {
    const auto* t = stack.back();
    stack.pop_back();
    if (t->is_leaf()) {
      out.push_back(t->atom_);
      continue;
    }
    for (auto it = t->children_.rbegin(); it != t->children_.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

bool BracketTree::has_arity(unsigned n) const {
  if (is_leaf()) return true;
  if (children_.size() != n) return false;
  for (const auto& c : children_)
    if (!c.has_arity(n)) return false;
  return true;
}

const BracketTree& BracketTree::at(const Path& path) const {
  const BracketTree* t = this;
  for (auto i : path) {
    if (i >= t->children_.size()) throw ContractError("path leaves the tree");
    t = &t->children_[i];
  }
  return *t;
}

BracketTree BracketTree::replaced(const Path& path, BracketTree subtree) const {
  if (path.empty()) return subtree;
  if (path[0] >= children_.size()) throw ContractError("path leaves the tree");
  BracketTree out = *this;
  const Path rest(path.begin() + 1, path.end());
  out.children_[path[0]] = children_[path[0]].replaced(rest, std::move(subtree));
  return out;
}

std::string BracketTree::to_string() const {
  if (is_leaf()) return atom_ == kUnitAtom ? "E" : std::to_string(atom_);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < children_.size(); ++i) os << (i ? "," : "") << children_[i].to_string();
  os << ']';
  return os.str();
}

namespace {

void require_admissible(unsigned n, unsigned leaves) {
  if (n < 2) throw ContractError("arity must be at least 2");
  if (leaves == 0 || (leaves - 1) % (n - 1) != 0)
    throw ContractError("leaf count must be k(n-1)+1");
}

// Trees on leaves [first, first+count).
std::vector<BracketTree> trees(unsigned n, Atom first, unsigned count) {
  if (count == 1) return {BracketTree::leaf(first)};
  std::vector<BracketTree> out;
  // Split count leaves among n children, each of admissible size.
  std::vector<unsigned> sizes(n, 1);
  std::vector<BracketTree> chosen;
  auto rec = [&](auto& self, unsigned child, Atom start, unsigned remaining) -> void {
    if (child == n - 1) {
      if ((remaining - 1) % (n - 1) != 0) return;
      for (auto& t : trees(n, start, remaining)) {
        chosen.push_back(t);
        out.push_back(BracketTree::node(chosen));
        chosen.pop_back();
      }
      return;
    }
    for (unsigned s = 1; s + (n - 1 - child) <= remaining; s += n - 1) {
      for (auto& t : trees(n, start, s)) {
        chosen.push_back(t);
        self(self, child + 1, start + s, remaining - s);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 0, first, count);
  return out;
}

}  // namespace

std::vector<BracketTree> enumerate_bracketings(unsigned n, unsigned leaves) {
  require_admissible(n, leaves);
  return trees(n, 0, leaves);
}

std::uint64_t fuss_catalan(unsigned n, unsigned k) {
  // C(nk, k) / ((n-1)k + 1)
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * (static_cast<std::uint64_t>(n) * k - k + i) / i;
  return c / (static_cast<std::uint64_t>(n - 1) * k + 1);
}

BracketTree left_comb(unsigned n, unsigned leaves) {
  require_admissible(n, leaves);
  BracketTree t = BracketTree::leaf(0);
  Atom next = 1;
  while (next < leaves) {
    std::vector<BracketTree> ch{t};
    for (unsigned i = 1; i < n; ++i) ch.push_back(BracketTree::leaf(next++));
    t = BracketTree::node(std::move(ch));
  }
  return t;
}

BracketTree right_comb(unsigned n, unsigned leaves) {
  require_admissible(n, leaves);
  BracketTree t = BracketTree::leaf(leaves - 1);
  Atom next = leaves - 1;
  while (next > 0) {
    std::vector<BracketTree> ch;
    for (unsigned i = 1; i < n; ++i) ch.push_back(BracketTree::leaf(next - n + i));
    next -= n - 1;
    ch.push_back(t);
    t = BracketTree::node(std::move(ch));
  }
  return t;
}

BracketTree associator_move(const BracketTree& t, const Path& path, unsigned i, bool inverse) {
  const BracketTree& node = t.at(path);
  const auto n = static_cast<unsigned>(node.children().size());
  if (node.is_leaf() || i + 1 >= n) throw ContractError("associator index out of range");
  const unsigned from = inverse ? i + 1 : i;
  const unsigned to = inverse ? i : i + 1;
  const BracketTree& inner = node.children()[from];
  if (inner.is_leaf() || inner.children().size() != n)
    throw ContractError("associator pattern mismatch");
  std::vector<BracketTree> slots;
  for (unsigned k = 0; k < n; ++k) {
    if (k == from)
      for (const auto& c : inner.children()) slots.push_back(c);
    else
      slots.push_back(node.children()[k]);
  }
  std::vector<BracketTree> regrouped(slots.begin() + to, slots.begin() + to + n);
  std::vector<BracketTree> out(slots.begin(), slots.begin() + to);
  out.push_back(BracketTree::node(std::move(regrouped)));
  out.insert(out.end(), slots.begin() + to + n, slots.end());
  return t.replaced(path, BracketTree::node(std::move(out)));
}

}  // namespace polyadic
