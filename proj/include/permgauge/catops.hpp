#pragma once
// Constructions on modular data: Deligne product, reversed braiding, and
// fusion-closed modular subcategories.

#include <string>
#include <vector>

#include "permgauge/modular.hpp"

namespace permgauge {

// Labels are "x,y"; S is the Kronecker product, twists multiply.
ModularData deligne_product(const ModularData& a, const ModularData& b);

// Complex-conjugated S and twists; same fusion rules.
ModularData reverse(const ModularData& md);

// Fusion/dual closure of the generators, with S restricted and rescaled by a
// single positive scalar. Throws NotModular when the restriction is not a
// modular category, UnknownLabel for a bad generator.
ModularData tensor_subcategory(const ModularData& md,
                               const std::vector<std::string>& generators,
                               double tol = kModularTol);

// Same, with generators given as indices into md.
ModularData tensor_subcategory(const ModularData& md,
                               const std::vector<std::size_t>& generators,
                               double tol = kModularTol);

}  // namespace permgauge
