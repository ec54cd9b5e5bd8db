#pragma once

#include <string>
#include <vector>

namespace qv {

/// Outcome of a verification suite. A mismatch is a result, not an error.
struct Report {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  void record(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void merge(const Report& other) {
    checks += other.checks;
    for (const auto& f : other.failures) failures.push_back(other.name + ": " + f);
  }
};

}  // namespace qv
