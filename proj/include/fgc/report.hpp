#pragma once

#include <string>
#include <vector>

namespace fgc {

// Computed-vs-expected pairs; every cited value appears next to what the
// pipeline actually produced, so drift is visible in one place.
struct ReportEntry {
  std::string name;
  std::string expected;  // empty = informational only
  std::string computed;
  bool pass = true;
  bool informational = false;
};

struct VerificationReport {
  std::string title;
  std::vector<ReportEntry> entries;
  double seconds = 0;

  void expect(const std::string& name, const std::string& expected, const std::string& computed);
  void expectInt(const std::string& name, long expected, long computed);
  void info(const std::string& name, const std::string& value);
  bool allPass() const;
  std::string human() const;
  std::string kv() const;
};

}  // namespace fgc
