#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tlhat {

/// Outcome of a self-check: how many identities were compared and which failed.
struct Verification {
  Verification() = default;
  explicit Verification(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) failures.push_back(what);
  }
  void merge(const Verification& o) {
    checks += o.checks;
    for (const auto& f : o.failures) failures.push_back(o.name.empty() ? f : o.name + ": " + f);
  }
};

}  // namespace tlhat
