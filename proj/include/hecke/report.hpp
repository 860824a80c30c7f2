#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hecke {

/// Outcome of a batch of exact checks. Failures are data, not exceptions.
struct CheckReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  /// Informational lines that do not affect the verdict.
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }

  void record(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }

  void merge(const CheckReport& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace hecke
