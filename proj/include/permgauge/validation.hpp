#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permgauge {

struct Check {
  std::string name;
  bool passed = false;
  double residual = 0.0;  // 0 for purely combinatorial checks
  std::string detail;     // first counterexample on failure
};

struct ValidationReport {
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  void add(std::string name, bool passed, double residual = 0.0,
           std::string detail = {}) {
    checks.push_back({std::move(name), passed, residual, std::move(detail)});
  }
};

std::ostream& operator<<(std::ostream& os, const ValidationReport& report);

}  // namespace permgauge
