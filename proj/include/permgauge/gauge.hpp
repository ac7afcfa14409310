#pragma once
// Fusion rules of the Z/2 permutation gauging of C (x) C.
//
// Simple objects come in three classes: [X,Y] (X < Y, the free swap orbit),
// [X,X]+- (fixed diagonal objects with the two equivariant structures) and
// ^X+- (objects of the twisted sector, with the structure +-sqrt(theta_X)).

#include <algorithm>
#include <string>
#include <vector>

#include "permgauge/complex_matrix.hpp"
#include "permgauge/fusion_ring.hpp"
#include "permgauge/modular.hpp"
#include "permgauge/validation.hpp"

namespace permgauge {

struct GaugedLabel {
  enum class Kind { Pair, Diag, Hat };
  Kind kind = Kind::Diag;
  std::size_t x = 0;
  std::size_t y = 0;  // Pair only
  int sign = +1;      // Diag/Hat only; 0 for Pair

  static GaugedLabel pair(std::size_t x, std::size_t y) {
    return {Kind::Pair, std::min(x, y), std::max(x, y), 0};
  }
  static GaugedLabel diag(std::size_t x, int sign) { return {Kind::Diag, x, 0, sign}; }
  static GaugedLabel hat(std::size_t x, int sign) { return {Kind::Hat, x, 0, sign}; }

  friend bool operator==(const GaugedLabel&, const GaugedLabel&) = default;
};

// Pairs (lex), then Diag (+ before -), then Hat (+ before -).
std::vector<GaugedLabel> gauged_labels(std::size_t base_rank);
inline std::vector<GaugedLabel> gauged_labels(const ModularData& md) {
  return gauged_labels(md.rank());
}

// "[X,Y]", "[X,X]+", "^X-".
std::string display(const GaugedLabel& label, const std::vector<std::string>& base_labels);

// One square root of each twist, squaring to theta_X, with 1 at the unit.
using SqrtTwistChoice = std::vector<cd>;

// theta = e^{i phi}, phi in [0, 2 pi)  ->  e^{i phi / 2}.
SqrtTwistChoice sqrt_twists(const ModularData& md);

// Simple object of the Z/2-crossed extension (C (x) C) + C^: either x (x) y in
// the trivial component or ^x in the twisted one.
struct ExtObject {
  bool hat = false;
  std::size_t x = 0;
  std::size_t y = 0;  // trivial component only
};

struct GaugeOptions {
  double tol = kIntegralityTol;
  // Take T^1/2 as the principal root of each theta_X / zeta instead of
  // zeta^{-1/2} times the chosen sqrt(theta_X). The two agree up to the
  // relabeling ^X+ <-> ^X- wherever the roots differ in sign.
  bool principal_half_twist = false;
};

class Gauging {
 public:
  // Throws InvalidSpec for a malformed sqrt choice and NotModular when md has
  // no consistent zeta.
  explicit Gauging(ModularData md, SqrtTwistChoice sqrt = {}, GaugeOptions options = {});

  const ModularData& modular() const noexcept { return md_; }
  const FusionRing& base_ring() const noexcept { return ring_; }
  const SqrtTwistChoice& sqrt_choice() const noexcept { return sqrt_; }
  const std::vector<GaugedLabel>& labels() const noexcept { return labels_; }
  std::vector<std::string> display_labels() const;

  std::size_t index_of(const GaugedLabel& label) const;
  GaugedLabel dual(const GaugedLabel& label) const;

  // 2 d_X d_Y, d_X^2 and d_X sqrt(D) for the three classes.
  std::vector<double> expected_dims() const;
  double base_global_dim() const noexcept { return global_dim_; }

  // dim Hom(a (x) b, c) in the extension; 0 on grading-forbidden triples.
  int extension_dim(const ExtObject& a, const ExtObject& b, const ExtObject& c) const;

  // dim Hom([X,Y], A (x) B), x != y.
  int mult_case1(std::size_t x, std::size_t y, const GaugedLabel& a,
                 const GaugedLabel& b) const;
  // dim Hom([X,X]ex, [Y,Y]ey (x) [Z,Z]ez)
  int mult_case2(std::size_t x, int ex, std::size_t y, int ey, std::size_t z, int ez) const;
  // dim Hom(^X ex, [Y,Y]ey (x) ^Z ez), via the S/theta double sum.
  int mult_case3(std::size_t x, int ex, std::size_t y, int ey, std::size_t z, int ez) const;
  // The same multiplicity via the P-matrix formula.
  int mult_case3_p(std::size_t x, int ex, std::size_t y, int ey, std::size_t z, int ez) const;

  cd case3_value(std::size_t x, int ex, std::size_t y, int ey, std::size_t z, int ez) const;
  cd case3_p_value(std::size_t x, int ex, std::size_t y, int ey, std::size_t z, int ez) const;

  // sum_R S_{YR}^2 S_{ZR} S_{X*R} / S_{1R}^2, which should equal N^X_{Y^2 Z}.
  cd case3_p_first_summand(std::size_t x, std::size_t y, std::size_t z) const;
  // N^X_{Y^2 Z} = sum_W N^W_{YY} N^X_{WZ}
  int n_y2z(std::size_t x, std::size_t y, std::size_t z) const;

  const cd& zeta() const noexcept { return zeta_; }
  const std::vector<cd>& half_twist() const noexcept { return t_half_; }
  const ComplexMatrix& p_matrix() const noexcept { return p_; }

  // max |P T^1/2 - T^-1/2 S^-1 T^-2 S|
  double p_identity_residual() const;

  // N^C_{AB} for every triple, assembled coefficient by coefficient. Throws
  // InconsistentRing if the result fails the fusion-ring checks.
  FusionRing fusion() const;
  // Same without the final validation.
  FusionRing fusion_unchecked() const;

  // Single coefficient N^C_{AB} from the reduction table.
  int coefficient(const GaugedLabel& a, const GaugedLabel& b, const GaugedLabel& c) const;

 private:
  int round_checked(cd value, const char* what) const;
  std::vector<ExtObject> forget(const GaugedLabel& label) const;

  ModularData md_;
  FusionRing ring_;
  SqrtTwistChoice sqrt_;
  GaugeOptions options_;
  std::vector<GaugedLabel> labels_;
  double global_dim_ = 0.0;
  std::vector<double> dims_;
  std::vector<ComplexMatrix> smst_;  // S M^Y S^T per Y
  cd zeta_;
  std::vector<cd> t_half_;
  ComplexMatrix p_;
  std::vector<cd> inv_s1_;  // 1 / S_{1R}
};

// Gauged ring with the principal sqrt choice.
FusionRing gauged_fusion(const ModularData& md);

// Ring invariants of fr plus the gauging-specific identities: case 3 against
// the P-matrix route on every triple, the P identity, the first P summand,
// the action of [1,1]-, dimensions against 2 d_X d_Y / d_X^2 / d_X sqrt(D),
// and sum of squared dimensions = 4 D^2.
ValidationReport validate_gauging(const Gauging& g, const FusionRing& fr,
                                  double tol = kModularTol);

// Fusion graph of one gauged label, DOT format.
std::string fusion_graph(const FusionRing& fr, const GaugedLabel& label,
                         const std::vector<GaugedLabel>& labels);

}  // namespace permgauge
