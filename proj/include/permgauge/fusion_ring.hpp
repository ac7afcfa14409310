#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace permgauge {

// Grothendieck ring of a fusion category: N^z_{xy} = dim Hom(x (x) y, z).
struct FusionRing {
  std::vector<std::string> labels;
  std::size_t unit = 0;
  std::vector<std::size_t> dual;
  std::vector<int> n;  // flat, index (x * rank + y) * rank + z

  FusionRing() = default;
  FusionRing(std::vector<std::string> labels_, std::size_t unit_,
             std::vector<std::size_t> dual_)
      : labels(std::move(labels_)),
        unit(unit_),
        dual(std::move(dual_)),
        n(labels.size() * labels.size() * labels.size(), 0) {}

  std::size_t rank() const noexcept { return labels.size(); }

  int& operator()(std::size_t x, std::size_t y, std::size_t z) {
    return n[(x * rank() + y) * rank() + z];
  }
  int operator()(std::size_t x, std::size_t y, std::size_t z) const {
    return n[(x * rank() + y) * rank() + z];
  }

  friend bool operator==(const FusionRing&, const FusionRing&) = default;
};

}  // namespace permgauge
