#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pairscheme {

/// Coordinates and values of a failed identity, for diagnostics.
struct CheckWitness {
  long row = -1;
  long col = -1;
  std::string lhs;
  std::string rhs;
};

struct ClauseResult {
  std::string name;
  bool ok = true;
  std::optional<CheckWitness> witness;
};

struct CheckReport {
  std::vector<ClauseResult> clauses;

  bool all_ok() const {
    for (const auto& c : clauses)
      if (!c.ok) return false;
    return true;
  }

  const ClauseResult* find(const std::string& name) const {
    for (const auto& c : clauses)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace pairscheme
