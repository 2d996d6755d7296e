#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wb/certificate.hpp"
#include "wb/workspace.hpp"

namespace wb {

struct ReportSection {
  std::string subject;
  Certificate cert;
  std::vector<std::pair<std::string, std::size_t>> counts;
  /// Properties reported without a verdict, such as hypercartesianness.
  std::vector<std::pair<std::string, std::string>> notes;
  /// Listed structures, in canonical text.
  std::vector<std::string> items;
  /// Wall time; plain output only, so structured reports stay byte-stable.
  std::optional<double> seconds;

  bool pass() const { return cert.ok(); }
};

struct Report {
  std::string command;
  std::vector<ReportSection> sections;
  /// Entries added by translate.
  std::optional<Json> output;

  bool pass() const;
};

enum class ReportFormat { Plain, Structured };

/**
 * Plain: a header line, then one line per section with its verdict and counts, failing checks
 * indented below. Structured: {"command", "pass", "sections": [{"subject", "pass", "checks",
 * "counts", "notes", "items"}], "output"}. Both list the same verdicts.
 */
std::string emit_report(const Report& r, ReportFormat format);
Json report_json(const Report& r);

}  // namespace wb
