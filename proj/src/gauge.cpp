#include "permgauge/gauge.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "permgauge/errors.hpp"
#include "permgauge/kernels.hpp"
#include "permgauge/ringtools.hpp"

namespace permgauge {
namespace {

using Kind = GaugedLabel::Kind;

// e^{i phi / 2} for z = e^{i phi}, phi in [0, 2 pi); arguments within 1e-9 of
// 2 pi count as 0 so that twists equal to 1 up to rounding get root 1.
cd principal_sqrt(cd z) {
  double phi = std::arg(z);
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  if (phi > 2.0 * std::numbers::pi - 1e-9) phi = 0.0;
  return std::polar(std::sqrt(std::abs(z)), 0.5 * phi);
}

int grade(const GaugedLabel& l) { return l.kind == Kind::Hat ? 1 : 0; }

}  // namespace

std::vector<GaugedLabel> gauged_labels(std::size_t n) {
  std::vector<GaugedLabel> out;
  out.reserve(n * (n - 1) / 2 + 4 * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) out.push_back(GaugedLabel::pair(x, y));
  for (std::size_t x = 0; x < n; ++x) {
    out.push_back(GaugedLabel::diag(x, +1));
    out.push_back(GaugedLabel::diag(x, -1));
  }
  for (std::size_t x = 0; x < n; ++x) {
    out.push_back(GaugedLabel::hat(x, +1));
    out.push_back(GaugedLabel::hat(x, -1));
  }
  return out;
}

std::string display(const GaugedLabel& label, const std::vector<std::string>& base) {
  const char* sign = label.sign > 0 ? "+" : "-";
  switch (label.kind) {
    case Kind::Pair:
      return "[" + base.at(label.x) + "," + base.at(label.y) + "]";
    case Kind::Diag:
      return "[" + base.at(label.x) + "," + base.at(label.x) + "]" + sign;
    case Kind::Hat:
      return "^" + base.at(label.x) + sign;
  }
  return {};
}

SqrtTwistChoice sqrt_twists(const ModularData& md) {
  SqrtTwistChoice out;
  out.reserve(md.rank());
  for (const cd& t : md.theta) out.push_back(principal_sqrt(t / std::abs(t)));
  if (md.unit < out.size()) out[md.unit] = 1.0;
  return out;
}

Gauging::Gauging(ModularData md, SqrtTwistChoice sqrt, GaugeOptions options)
    : md_(std::move(md)), sqrt_(std::move(sqrt)), options_(options) {
  const std::size_t n = md_.rank();
  ring_ = verlinde(md_, options_.tol);
  if (sqrt_.empty()) sqrt_ = sqrt_twists(md_);
  if (sqrt_.size() != n) throw Error(ErrorCode::InvalidSpec, "sqrt choice has wrong length");
  for (std::size_t x = 0; x < n; ++x) {
    if (std::abs(sqrt_[x] * sqrt_[x] - md_.theta[x]) > 1e-10)
      throw Error(ErrorCode::InvalidSpec, "sqrt choice does not square to theta at " + md_.labels[x]);
  }
  if (std::abs(sqrt_[md_.unit] - 1.0) > 1e-10)
    throw Error(ErrorCode::InvalidSpec, "sqrt choice is not 1 at the unit");

  labels_ = gauged_labels(n);

  const cd s11 = md_.s(md_.unit, md_.unit);
  for (std::size_t x = 0; x < n; ++x) {
    const double d = (md_.s(md_.unit, x) / s11).real();
    dims_.push_back(d);
    global_dim_ += d * d;
  }

  // M^Y_{PQ} = theta_P^2 N^Y_{PQ} theta_Q^-2
  const ComplexMatrix st = md_.s.transpose();
  smst_.reserve(n);
  for (std::size_t y = 0; y < n; ++y) {
    ComplexMatrix m(n, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (const int c = ring_(p, q, y))
          m(p, q) = static_cast<double>(c) * md_.theta[p] * md_.theta[p] /
                    (md_.theta[q] * md_.theta[q]);
    smst_.push_back(md_.s * m * st);
  }

  const auto z = select_zeta(md_);
  if (!z) throw Error(ErrorCode::NotModular, "no sixth root of p+/p- satisfies (S That)^3 = S^2");
  zeta_ = *z;

  const cd inv_sqrt_zeta = principal_sqrt(1.0 / zeta_);
  std::vector<cd> t_hat_sq(n);
  for (std::size_t x = 0; x < n; ++x) {
    const cd t = md_.theta[x] / zeta_;
    t_hat_sq[x] = t * t;
    t_half_.push_back(options_.principal_half_twist ? principal_sqrt(t)
                                                    : inv_sqrt_zeta * sqrt_[x]);
  }
  const ComplexMatrix th = ComplexMatrix::diagonal(t_half_);
  p_ = th * md_.s * ComplexMatrix::diagonal(t_hat_sq) * md_.s * th;

  for (std::size_t r = 0; r < n; ++r) inv_s1_.push_back(1.0 / md_.s(md_.unit, r));
}

std::vector<std::string> Gauging::display_labels() const {
  std::vector<std::string> out;
  out.reserve(labels_.size());
  for (const auto& l : labels_) out.push_back(display(l, md_.labels));
  return out;
}

std::size_t Gauging::index_of(const GaugedLabel& label) const {
  const std::size_t n = md_.rank();
  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t off = label.sign > 0 ? 0 : 1;
  switch (label.kind) {
    case Kind::Pair:
      return label.x * n - label.x * (label.x + 1) / 2 + (label.y - label.x - 1);
    case Kind::Diag:
      return pairs + 2 * label.x + off;
    case Kind::Hat:
      return pairs + 2 * n + 2 * label.x + off;
  }
  return 0;
}

GaugedLabel Gauging::dual(const GaugedLabel& label) const {
  switch (label.kind) {
    case Kind::Pair:
      return GaugedLabel::pair(md_.dual[label.x], md_.dual[label.y]);
    case Kind::Diag:
      return GaugedLabel::diag(md_.dual[label.x], label.sign);
    case Kind::Hat: {
      // theta_X = theta_X*, so the chosen roots agree up to a sign.
      const std::size_t xd = md_.dual[label.x];
      const int flip = (sqrt_[label.x] / sqrt_[xd]).real() > 0.0 ? 1 : -1;
      return GaugedLabel::hat(xd, label.sign * flip);
    }
  }
  return label;
}

std::vector<double> Gauging::expected_dims() const {
  const double root_d = std::sqrt(global_dim_);
  std::vector<double> out;
  out.reserve(labels_.size());
  for (const auto& l : labels_) {
    switch (l.kind) {
      case Kind::Pair: out.push_back(2.0 * dims_[l.x] * dims_[l.y]); break;
      case Kind::Diag: out.push_back(dims_[l.x] * dims_[l.x]); break;
      case Kind::Hat: out.push_back(dims_[l.x] * root_d); break;
    }
  }
  return out;
}

int Gauging::extension_dim(const ExtObject& a, const ExtObject& b, const ExtObject& c) const {
  const std::size_t n = md_.rank();
  int total = 0;
  if (!a.hat && !b.hat && !c.hat) {
    return ring_(a.x, b.x, c.x) * ring_(a.y, b.y, c.y);
  }
  if (a.hat && b.hat && !c.hat) {
    // dim Hom(^A (x) ^B, Z (x) W) = dim C(A B, Z W)
    for (std::size_t v = 0; v < n; ++v) total += ring_(a.x, b.x, v) * ring_(c.x, c.y, v);
    return total;
  }
  if (!a.hat && b.hat && c.hat) {
    // (X (x) Y) acting on ^M is ^(X M Y)
    for (std::size_t w = 0; w < n; ++w) total += ring_(a.x, b.x, w) * ring_(w, a.y, c.x);
    return total;
  }
  if (a.hat && !b.hat && c.hat) {
    for (std::size_t w = 0; w < n; ++w) total += ring_(b.x, a.x, w) * ring_(w, b.y, c.x);
    return total;
  }
  return 0;
}

std::vector<ExtObject> Gauging::forget(const GaugedLabel& label) const {
  switch (label.kind) {
    case Kind::Pair:
      return {{false, label.x, label.y}, {false, label.y, label.x}};
    case Kind::Diag:
      return {{false, label.x, label.x}};
    case Kind::Hat:
      return {{true, label.x, 0}};
  }
  return {};
}

int Gauging::mult_case1(std::size_t x, std::size_t y, const GaugedLabel& a,
                        const GaugedLabel& b) const {
  const ExtObject target{false, x, y};
  int total = 0;
  for (const auto& ga : forget(a))
    for (const auto& gb : forget(b)) total += extension_dim(ga, gb, target);
  return total;
}

int Gauging::mult_case2(std::size_t x, int ex, std::size_t y, int ey, std::size_t z,
                        int ez) const {
  const int c = ring_(y, z, x);
  return c * (c + ex * ey * ez) / 2;
}

int Gauging::n_y2z(std::size_t x, std::size_t y, std::size_t z) const {
  int total = 0;
  for (std::size_t w = 0; w < md_.rank(); ++w) total += ring_(y, y, w) * ring_(w, z, x);
  return total;
}

cd Gauging::case3_value(std::size_t x, int ex, std::size_t y, int ey, std::size_t z,
                        int ez) const {
  const double sign = static_cast<double>(ex * ey * ez);
  const cd first =
      sqrt_[z] / sqrt_[x] * sign * smst_[y](md_.dual[z], md_.dual[x]);
  return 0.5 * (first + static_cast<double>(n_y2z(x, y, z)));
}

cd Gauging::case3_p_first_summand(std::size_t x, std::size_t y, std::size_t z) const {
  const std::size_t n = md_.rank();
  std::vector<cd> w(n);
  kernels::hadamard(md_.s.row(y), inv_s1_, w);
  kernels::hadamard(w, w, w);
  kernels::hadamard(w, md_.s.row(z), w);
  return kernels::dotu(w, md_.s.row(md_.dual[x]));
}

cd Gauging::case3_p_value(std::size_t x, int ex, std::size_t y, int ey, std::size_t z,
                          int ez) const {
  const std::size_t n = md_.rank();
  std::vector<cd> w(n);
  kernels::hadamard(md_.s.row(y), inv_s1_, w);
  kernels::hadamard(w, p_.row(z), w);
  const cd second = kernels::dotu(w, p_.row(md_.dual[x]));
  const double sign = static_cast<double>(ex * ey * ez);
  return 0.5 * (case3_p_first_summand(x, y, z) + sign * second);
}

int Gauging::round_checked(cd value, const char* what) const {
  const double r = std::round(value.real());
  if (std::abs(value - r) > options_.tol) {
    throw Error(ErrorCode::NonIntegralMultiplicity,
                std::string(what) + " evaluated to (" + std::to_string(value.real()) + ", " +
                    std::to_string(value.imag()) + ")");
  }
  if (r < 0.0)
    throw Error(ErrorCode::NegativeMultiplicity, std::string(what) + " is negative");
  return static_cast<int>(r);
}

int Gauging::mult_case3(std::size_t x, int ex, std::size_t y, int ey, std::size_t z,
                        int ez) const {
  return round_checked(case3_value(x, ex, y, ey, z, ez), "case 3 multiplicity");
}

int Gauging::mult_case3_p(std::size_t x, int ex, std::size_t y, int ey, std::size_t z,
                          int ez) const {
  return round_checked(case3_p_value(x, ex, y, ey, z, ez), "P-matrix multiplicity");
}

double Gauging::p_identity_residual() const {
  const std::size_t n = md_.rank();
  std::vector<cd> inv_half(n), inv_t2(n);
  for (std::size_t x = 0; x < n; ++x) {
    inv_half[x] = 1.0 / t_half_[x];
    const cd t = md_.theta[x] / zeta_;
    inv_t2[x] = 1.0 / (t * t);
  }
  const ComplexMatrix lhs = p_ * ComplexMatrix::diagonal(t_half_);
  const ComplexMatrix rhs = ComplexMatrix::diagonal(inv_half) * md_.s.adjoint() *
                            ComplexMatrix::diagonal(inv_t2) * md_.s;
  return max_abs_diff(lhs, rhs);
}

int Gauging::coefficient(const GaugedLabel& a, const GaugedLabel& b,
                         const GaugedLabel& c) const {
  if ((grade(a) + grade(b)) % 2 != grade(c)) return 0;
  if (c.kind == Kind::Pair) return mult_case1(c.x, c.y, a, b);
  // Hom(C, A B) = Hom(A, C B*) = Hom(B, A* C)
  if (a.kind == Kind::Pair) return mult_case1(a.x, a.y, c, dual(b));
  if (b.kind == Kind::Pair) return mult_case1(b.x, b.y, dual(a), c);
  if (a.kind == Kind::Diag && b.kind == Kind::Diag)
    return mult_case2(c.x, c.sign, a.x, a.sign, b.x, b.sign);
  if (a.kind == Kind::Diag && b.kind == Kind::Hat)
    return mult_case3(c.x, c.sign, a.x, a.sign, b.x, b.sign);
  if (a.kind == Kind::Hat && b.kind == Kind::Hat) {
    const GaugedLabel bd = dual(b);
    return mult_case3(a.x, a.sign, c.x, c.sign, bd.x, bd.sign);
  }
  // Hat (x) Diag -> Hat: Hom(B, A* C)
  const GaugedLabel ad = dual(a), cd_ = dual(c);
  return mult_case3(ad.x, ad.sign, b.x, b.sign, cd_.x, cd_.sign);
}

FusionRing Gauging::fusion_unchecked() const {
  const std::size_t m = labels_.size();
  std::vector<std::size_t> dual_idx(m);
  for (std::size_t i = 0; i < m; ++i) dual_idx[i] = index_of(dual(labels_[i]));
  FusionRing fr(display_labels(), index_of(GaugedLabel::diag(md_.unit, +1)), dual_idx);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        fr(i, j, k) = coefficient(labels_[i], labels_[j], labels_[k]);
  return fr;
}

FusionRing Gauging::fusion() const {
  FusionRing fr = fusion_unchecked();
  const ValidationReport report = validate_ring(fr);
  for (const auto& c : report.checks) {
    if (!c.passed)
      throw Error(ErrorCode::InconsistentRing, "gauged ring fails " + c.name + ": " + c.detail);
  }
  return fr;
}

FusionRing gauged_fusion(const ModularData& md) { return Gauging(md).fusion(); }

std::string fusion_graph(const FusionRing& fr, const GaugedLabel& label,
                         const std::vector<GaugedLabel>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return fusion_graph_dot(fr, i);
  throw Error(ErrorCode::UnknownLabel, "label not in the gauged ring");
}

}  // namespace permgauge

namespace permgauge {

ValidationReport validate_gauging(const Gauging& g, const FusionRing& fr, double tol) {
  ValidationReport report;
  for (const auto& c : validate_ring(fr).checks)
    report.add("ring." + c.name, c.passed, c.residual, c.detail);

  const std::size_t n = g.modular().rank();
  const std::size_t u = g.modular().unit;
  const auto& base = g.modular().labels;

  std::size_t triples = 0, mismatches = 0;
  std::string first_mismatch;
  double first_summand = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        first_summand = std::max(
            first_summand, std::abs(g.case3_p_first_summand(x, y, z) -
                                    static_cast<double>(g.n_y2z(x, y, z))));
        for (int ex : {1, -1})
          for (int ey : {1, -1})
            for (int ez : {1, -1}) {
              ++triples;
              const int a = g.mult_case3(x, ex, y, ey, z, ez);
              const int b = g.mult_case3_p(x, ex, y, ey, z, ez);
              if (a != b && mismatches++ == 0)
                first_mismatch = "x=" + base[x] + " y=" + base[y] + " z=" + base[z] + ": " +
                                 std::to_string(a) + " vs " + std::to_string(b);
            }
      }
  report.add("case3_matches_p_matrix", mismatches == 0, 0.0,
             mismatches ? std::to_string(mismatches) + "/" + std::to_string(triples) +
                              " differ, first " + first_mismatch
                        : "");
  report.add("p_first_summand", first_summand <= tol, first_summand);
  const double ident = g.p_identity_residual();
  report.add("p_identity", ident <= tol, ident);

  const std::size_t minus = g.index_of(GaugedLabel::diag(u, -1));
  std::string flip;
  for (std::size_t x = 0; x < n && flip.empty(); ++x)
    for (int e : {1, -1}) {
      const std::size_t from = g.index_of(GaugedLabel::hat(x, e));
      const std::size_t to = g.index_of(GaugedLabel::hat(x, -e));
      for (std::size_t k = 0; k < fr.rank(); ++k)
        if (fr(minus, from, k) != (k == to ? 1 : 0)) {
          flip = fr.labels[minus] + " * " + fr.labels[from] + " at " + fr.labels[k];
          break;
        }
    }
  report.add("diag_minus_flips_hats", flip.empty(), 0.0, flip);

  const auto expected = g.expected_dims();
  double dim_err = 0.0, sum_sq = 0.0;
  std::string dim_detail;
  try {
    const auto dims = fp_dims(fr);
    for (std::size_t i = 0; i < dims.size(); ++i) {
      dim_err = std::max(dim_err, std::abs(dims[i] - expected[i]) / expected[i]);
      sum_sq += dims[i] * dims[i];
    }
  } catch (const Error& e) {
    dim_err = std::numeric_limits<double>::infinity();
    dim_detail = e.what();
  }
  report.add("fp_dims_match_formula", dim_err <= 1e-6, dim_err, dim_detail);
  const double d = g.base_global_dim();
  const double rel = std::abs(sum_sq - 4.0 * d * d) / (4.0 * d * d);
  report.add("global_dim_is_4D2", rel <= 1e-4, rel);
  return report;
}

}  // namespace permgauge
