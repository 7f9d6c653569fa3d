#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mcg {

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::string detail;
  bool operator==(const CheckEntry&) const = default;
};

struct Report {
  std::string title;
  std::vector<CheckEntry> entries;

  void add(std::string name, bool pass, std::string detail = {}) {
    entries.push_back({std::move(name), pass, std::move(detail)});
  }
  void append(const Report& other);
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
  bool operator==(const Report&) const = default;
};

std::string format_report(const Report& r, bool failures_only = false);

}  // namespace mcg
