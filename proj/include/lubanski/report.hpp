#pragma once

#include <string>
#include <vector>

namespace lubanski {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Ordered pass/fail entries produced by one verification routine.
class Report {
public:
  void add(std::string name, bool passed, std::string detail = {}) {
    entries_.push_back({std::move(name), passed, std::move(detail)});
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& e : other.entries_) entries_.push_back({prefix + e.name, e.passed, e.detail});
  }

  const std::vector<CheckResult>& entries() const { return entries_; }
  bool passed() const {
    for (const auto& e : entries_)
      if (!e.passed) return false;
    return !entries_.empty();
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& e : entries_)
      if (e.name == name) return &e;
    return nullptr;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& e : entries_)
      if (!e.passed) out.push_back(e.name);
    return out;
  }

private:
  std::vector<CheckResult> entries_;
};

} // namespace lubanski
