#include "mcg/report.hpp"

#include <sstream>

namespace mcg {

void Report::append(const Report& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

std::size_t Report::failures() const {
  std::size_t f = 0;
  for (const auto& e : entries) f += e.pass ? 0 : 1;
  return f;
}

std::string format_report(const Report& r, bool failures_only) {
  std::ostringstream os;
  if (!r.title.empty()) os << r.title << '\n';
  for (const auto& e : r.entries) {
    if (failures_only && e.pass) continue;
    os << (e.pass ? "pass " : "FAIL ") << e.name;
    if (!e.detail.empty()) os << "  " << e.detail;
    os << '\n';
  }
  os << (r.entries.size() - r.failures()) << '/' << r.entries.size() << " passed\n";
  return os.str();
}

}  // namespace mcg
