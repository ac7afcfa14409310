#include "permgauge/validation.hpp"

#include <iomanip>

namespace permgauge {

std::ostream& operator<<(std::ostream& os, const ValidationReport& report) {
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (c.residual != 0.0 || !c.detail.empty())
      os << std::string(c.name.size() < 28 ? 28 - c.name.size() : 0, ' ');
    if (c.residual != 0.0) os << " residual=" << std::scientific << std::setprecision(2) << c.residual << std::defaultfloat;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  return os;
}

}  // namespace permgauge
