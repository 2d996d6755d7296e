#include "wb/report.hpp"

#include <cstdio>
#include <sstream>

namespace wb {

bool Report::pass() const {
  for (const auto& s : sections)
    if (!s.pass()) return false;
  return true;
}

Json report_json(const Report& r) {
  Json j = Json::object();
  j["command"] = r.command;
  j["pass"] = r.pass();
  Json sections = Json::array();
  for (const auto& s : r.sections) {
    Json checks = Json::array(), counts = Json::object(), notes = Json::object(), items = Json::array();
    for (const auto& c : s.cert.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    for (const auto& [k, v] : s.counts) counts[k] = v;
    for (const auto& [k, v] : s.notes) notes[k] = v;
    for (const auto& i : s.items) items.push_back(i);
    sections.push_back(
        {{"subject", s.subject}, {"pass", s.pass()}, {"checks", checks}, {"counts", counts}, {"notes", notes}, {"items", items}});
  }
  j["sections"] = sections;
  if (r.output) j["output"] = *r.output;
  return j;
}

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::Structured) return report_json(r).dump(2) + "\n";
  std::ostringstream os;
  os << "workbench " << r.command << "\n";
  for (const auto& s : r.sections) {
    std::size_t passed = 0;
    for (const auto& c : s.cert.checks) passed += c.pass;
    os << (s.pass() ? "[PASS] " : "[FAIL] ") << s.subject << "  checks=" << passed << "/" << s.cert.checks.size();
    for (const auto& [k, v] : s.counts) os << "  " << k << "=" << v;
    if (s.seconds) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  (%.2fs)", *s.seconds);
      os << buf;
    }
    os << "\n";
    for (const auto& c : s.cert.checks)
      if (!c.pass) os << "    FAIL " << c.name << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
    for (const auto& [k, v] : s.notes) os << "    " << k << ": " << v << "\n";
    for (const auto& i : s.items) os << "    " << i << "\n";
  }
  if (!r.sections.empty()) os << "verdict: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  if (r.output) os << r.output->dump(2) << "\n";
  return os.str();
}

}  // namespace wb
