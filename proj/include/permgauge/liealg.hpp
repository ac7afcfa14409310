#pragma once
// Root systems and finite Weyl groups for the simple Lie algebras whose
// level-k quantum-group categories we build (series A-D and G2).
//
// Everything lives in an ambient coordinate space with a scaled dot product
// (u, v) = form_scale * u.v chosen so that long roots have squared length 2.
// Coordinates are rational; only the final exponentials are transcendental.

#include <cstddef>
#include <string>
#include <vector>

namespace permgauge {

enum class Series { A, B, C, D, G2 };

std::string to_string(Series series);

struct LieSpec {
  Series series = Series::A;
  int rank = 1;
  int level = 1;

  friend bool operator==(const LieSpec&, const LieSpec&) = default;
};

// Throws UnsupportedSeries for impossible series/rank pairs and InvalidSpec
// for a non-positive level.
void validate(const LieSpec& spec);

using Vec = std::vector<double>;
using DynkinLabel = std::vector<int>;

struct RootData {
  Series series = Series::A;
  int rank = 0;
  std::size_t ambient_dim = 0;
  double form_scale = 1.0;

  std::vector<Vec> simple_roots;
  std::vector<Vec> fundamental_weights;
  Vec rho;
  int dual_coxeter = 0;
  Vec highest_root;
  std::vector<int> comarks;

  double inner(const Vec& u, const Vec& v) const;
  Vec coroot(std::size_t i) const;

  // a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j), rounded.
  std::vector<std::vector<int>> cartan_matrix() const;

  // sum_i labels[i] * fundamental_weights[i]
  Vec weight(const DynkinLabel& labels) const;

  // (weight, alpha_j^vee) for each j, rounded to the nearest integer.
  DynkinLabel dynkin_labels(const Vec& weight) const;

  DynkinLabel highest_root_labels() const { return dynkin_labels(highest_root); }
};

struct WeylElement {
  std::size_t dim = 0;
  std::vector<double> matrix;  // row-major dim x dim
  int sign = 1;                // determinant, +-1

  Vec apply(const Vec& v) const;
};

RootData build_root_data(const LieSpec& spec);

// Breadth-first closure of the simple reflections. Throws ClosureOverflow when
// more than `bound` distinct elements are generated.
std::vector<WeylElement> weyl_group(const RootData& rd,
                                    std::size_t bound = 1'000'000);

// All roots, as the Weyl orbit of the simple roots.
std::vector<Vec> root_system(const RootData& rd,
                             const std::vector<WeylElement>& group);

// Dominant integral weights with (lambda, theta^vee) <= level, in ascending
// lexicographic order of Dynkin labels (so the zero weight comes first).
std::vector<DynkinLabel> level_labels(const RootData& rd, int level);

// "(a,b,...)"
std::string format_dynkin(const DynkinLabel& labels);

// Closed-form |W| for each series, used as a cross-check.
std::size_t weyl_group_order(Series series, int rank);

}  // namespace permgauge
