#pragma once

#include <string>
#include <vector>

namespace wb {

/// One named verdict with the witness that decided it.
struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
};

/** @brief Ordered list of named verdicts about one subject. */
struct Certificate {
  std::string subject;
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string witness = {}) {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }
  void merge(const Certificate& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.witness});
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
  bool passed(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c.pass;
    return false;
  }
  bool has_failure_containing(const std::string& needle) const {
    for (const auto& c : checks)
      if (!c.pass && c.name.find(needle) != std::string::npos) return true;
    return false;
  }
};

}  // namespace wb
