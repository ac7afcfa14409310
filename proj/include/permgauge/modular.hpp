#pragma once
// Modular data (S, T) of quantum-group categories and the scalars and fusion
// rules derived from it.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "permgauge/complex_matrix.hpp"
#include "permgauge/fusion_ring.hpp"
#include "permgauge/liealg.hpp"
#include "permgauge/validation.hpp"

namespace permgauge {

inline constexpr double kModularTol = 1e-8;
inline constexpr double kIntegralityTol = 1e-6;

// (S, theta) presentation of a modular category. s is the normalized,
// unitary S-matrix; theta is the diagonal of T; dual is charge conjugation.
struct ModularData {
  std::vector<std::string> labels;
  std::size_t unit = 0;
  ComplexMatrix s;
  std::vector<cd> theta;
  std::vector<std::size_t> dual;

  std::size_t rank() const noexcept { return labels.size(); }

  // Index of a display label; throws UnknownLabel.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const ModularData&, const ModularData&) = default;
};

struct DerivedScalars {
  std::vector<double> dims;  // d_X = s_{1X} / s_{11}
  double global_dim = 0.0;   // D = sum d_X^2
  cd gauss_plus;             // p_+ = sum d_X^2 theta_X
  cd gauss_minus;            // p_- = sum d_X^2 / theta_X
  cd zeta;                   // sixth root of p_+/p_- fixed by (S That)^3 = S^2
  bool zeta_consistent = false;
  std::vector<cd> t_hat;     // theta_X / zeta
};

// Level-k Kac-Peterson modular data over level_labels(spec).
ModularData kac_peterson(const LieSpec& spec);

// The six candidates zeta * w (w^6 = 1) that satisfy (S That)^3 = S^2 at tol.
// The relation only sees zeta^3, so a valid md always yields three.
std::vector<cd> zeta_candidates(const ModularData& md, double tol = kModularTol);

// Passing candidate with the least argument in [0, 2 pi), i.e. central charge
// taken in [0, 8). Empty if nothing passes.
std::optional<cd> select_zeta(const ModularData& md, double tol = kModularTol);

DerivedScalars derived_scalars(const ModularData& md, double tol = kModularTol);

// Symmetry, unitarity, S^2 = C, C^2 = 1, (S That)^3 = S^2, That C = C That,
// twist sanity and Verlinde integrality. Never throws on bad data.
ValidationReport validate_modular(const ModularData& md, double tol = kModularTol,
                                  double integrality_tol = kIntegralityTol);

// N^Z_{XY} = sum_R s_{XR} s_{YR} s_{Z*R} / s_{1R}, rounded with residual check.
// Throws NonIntegralMultiplicity / NegativeMultiplicity.
FusionRing verlinde(const ModularData& md, double tol = kIntegralityTol);

// Unrounded Verlinde tensor, for diagnostics.
std::vector<cd> verlinde_raw(const ModularData& md);

}  // namespace permgauge
