#pragma once

// Named pass/fail records produced by the suite_* runners.

#include <string>
#include <vector>

namespace parity {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;  // failure reason; empty when ok
};

inline bool all_ok(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    if (!c.ok) return false;
  return true;
}

}  // namespace parity
