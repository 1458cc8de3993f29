#pragma once

#include <string>
#include <utility>
#include <vector>

namespace coxkit {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Ordered list of named checks. Order is insertion order, so reports built
// from the same inputs print identically.
class Report {
 public:
  void add(std::string name, bool pass, std::string detail = {}) {
    checks_.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const std::string& prefix, const Report& other) {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.pass, c.detail});
  }

  bool ok() const {
    for (const auto& c : checks_)
      if (!c.pass) return false;
    return true;
  }
  const std::vector<CheckResult>& checks() const { return checks_; }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks_)
      if (!c.pass) out.push_back(c.detail.empty() ? c.name : c.name + ": " + c.detail);
    return out;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace coxkit
