#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyadic {

enum class Status { pass, fail, skipped, budget_exceeded };

std::string_view to_string(Status s);

struct Witness {
  std::vector<std::int64_t> input;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string law;
  Status status = Status::pass;
  std::uint64_t probes = 0;
  std::uint64_t domain = 0;
  std::optional<std::uint64_t> seed;
  std::optional<Witness> witness;
  std::string note;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<VerificationReport> children;

  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }

  // Depth-first search for a report with the given law id (this one included).
  const VerificationReport* find(std::string_view law_id) const;
  std::string fact(std::string_view key) const;
};

// Parent report whose status folds the children: fail beats budget-exceeded
// beats pass; skipped children are ignored unless every child was skipped.
VerificationReport combine(std::string law, std::vector<VerificationReport> children);

VerificationReport skipped(std::string law, std::string note);
VerificationReport over_budget(std::string law, std::uint64_t domain, std::uint64_t budget);

// Human readable tree, one line per report.
std::string to_text(const VerificationReport& r, int indent = 0);

}  // namespace polyadic
