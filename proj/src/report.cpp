#include "fgc/report.hpp"

#include <sstream>

namespace fgc {

void VerificationReport::expect(const std::string& name, const std::string& expected,
                                const std::string& computed) {
  entries.push_back({name, expected, computed, expected == computed, false});
}

void VerificationReport::expectInt(const std::string& name, long expected, long computed) {
  expect(name, std::to_string(expected), std::to_string(computed));
}

void VerificationReport::info(const std::string& name, const std::string& value) {
  entries.push_back({name, "", value, true, true});
}

bool VerificationReport::allPass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

std::string VerificationReport::human() const {
  std::ostringstream os;
  os << "== " << title << " ==\n";
  for (const auto& e : entries) {
    if (e.informational)
      os << "  [info] " << e.name << " = " << e.computed << "\n";
    else
      os << "  [" << (e.pass ? "ok" : "FAIL") << "]   " << e.name << " = " << e.computed
         << " (expected " << e.expected << ")\n";
  }
  os << "  " << (allPass() ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "  ("
     << seconds << "s)\n";
  return os.str();
}

std::string VerificationReport::kv() const {
  std::ostringstream os;
  os << "report=" << title << "\n";
  for (const auto& e : entries) {
    os << e.name << "=" << e.computed;
    if (!e.informational) os << " expected=" << e.expected << " pass=" << (e.pass ? 1 : 0);
    os << "\n";
  }
  os << "all_pass=" << (allPass() ? 1 : 0) << "\n";
  os << "seconds=" << seconds << "\n";
  return os.str();
}

}  // namespace fgc
