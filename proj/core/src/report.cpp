#include "polyadic/report.hpp"

#include <sstream>

namespace polyadic {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::budget_exceeded: return "budget-exceeded";
  }
  return "unknown";
}

const VerificationReport* VerificationReport::find(std::string_view law_id) const {
  if (law == law_id) return this;
  for (const auto& c : children)
    if (const auto* hit = c.find(law_id)) return hit;
  return nullptr;
}

std::string VerificationReport::fact(std::string_view key) const {
  for (const auto& [k, v] : facts)
    if (k == key) return v;
  return {};
}

VerificationReport combine(std::string law, std::vector<VerificationReport> children) {
  VerificationReport r;
  r.law = std::move(law);
  bool any_fail = false, any_budget = false, all_skipped = !children.empty();
  for (const auto& c : children) {
    r.probes += c.probes;
    r.domain += c.domain;
    any_fail |= c.status == Status::fail;
    any_budget |= c.status == Status::budget_exceeded;
    all_skipped &= c.status == Status::skipped;
  }
  if (any_fail)
    r.status = Status::fail;
  else if (any_budget)
    r.status = Status::budget_exceeded;
  else if (all_skipped)
    r.status = Status::skipped;
  else
    r.status = Status::pass;
  r.children = std::move(children);
  return r;
}

VerificationReport skipped(std::string law, std::string note) {
  VerificationReport r;
  r.law = std::move(law);
  r.status = Status::skipped;
  r.note = std::move(note);
  return r;
}

VerificationReport over_budget(std::string law, std::uint64_t domain, std::uint64_t budget) {
  VerificationReport r;
  r.law = std::move(law);
  r.status = Status::budget_exceeded;
  r.domain = domain;
  std::ostringstream os;
  if (domain == 0)
    os << "domain size overflows; budget " << budget;
  else
    os << "domain " << domain << " exceeds budget " << budget;
  r.note = os.str();
  return r;
}

std::string to_text(const VerificationReport& r, int indent) {
  std::ostringstream os;
  os << std::string(static_cast<std::size_t>(indent) * 2, ' ') << r.law << ": "
     << to_string(r.status) << " probes=" << r.probes << "/" << r.domain;
  if (r.seed) os << " seed=" << *r.seed;
  if (r.witness) {
    os << " witness=(";
    for (std::size_t i = 0; i < r.witness->input.size(); ++i)
      os << (i ? "," : "") << r.witness->input[i];
    os << ") lhs=" << r.witness->lhs << " rhs=" << r.witness->rhs;
  }
  for (const auto& [k, v] : r.facts) os << " " << k << "=" << v;
  if (!r.note.empty()) os << " [" << r.note << "]";
  os << "\n";
  for (const auto& c : r.children) os << to_text(c, indent + 1);
  return os.str();
}

}  // namespace polyadic
