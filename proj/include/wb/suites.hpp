#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wb/certificate.hpp"

namespace wb {

struct SuiteOptions {
  int grade_bound = 4;
  int probe_size = 3;
};

/** @brief Verdicts of one acceptance suite, with the number of instances behind each check. */
struct SuiteReport {
  std::string name;
  std::string title;
  Certificate cert;
  std::vector<std::pair<std::string, std::size_t>> counts;
  double seconds = 0;

  bool pass() const { return cert.ok(); }
};

/// Suite names in criterion order.
const std::vector<std::string>& suite_names();
/// Throws std::out_of_range for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace wb
