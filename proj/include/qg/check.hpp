#pragma once

#include <string>
#include <vector>

namespace qg {

enum class Status { holds, fails, indeterminate };

inline const char *to_string(Status s) {
  switch (s) {
  case Status::holds:
    return "holds";
  case Status::fails:
    return "fails";
  case Status::indeterminate:
    return "indeterminate";
  }
  return "?";
}

/// One named verdict; `witness` carries a rendered residual on failure.
struct CheckResult {
  std::string name;
  Status status = Status::holds;
  std::string witness;
  std::string value;
};

inline bool all_hold(const std::vector<CheckResult> &rs) {
  for (const auto &r : rs)
    if (r.status != Status::holds)
      return false;
  return true;
}

inline bool any_fails(const std::vector<CheckResult> &rs) {
  for (const auto &r : rs)
    if (r.status == Status::fails)
      return true;
  return false;
}

} // namespace qg
