#pragma once

#include <string>
#include <vector>

namespace kbgq {

/// Outcome of a verifier: failures are human-readable and empty on success.
struct Report {
  std::string name;
  std::vector<std::string> failures;
  std::vector<std::string> details;

  bool pass() const { return failures.empty(); }
  void fail(std::string msg) { failures.push_back(std::move(msg)); }
  void note(std::string msg) { details.push_back(std::move(msg)); }
};

}  // namespace kbgq
