#include "permgauge/modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "permgauge/errors.hpp"
#include "permgauge/kernels.hpp"

namespace permgauge {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(2 pi i x), reducing x mod 1 first so large arguments keep full precision.
cd unit_phase(double x) {
  const double frac = x - std::floor(x);
  return std::polar(1.0, kTwoPi * frac);
}

double arg_0_2pi(cd z) {
  double a = std::arg(z);
  if (a < 0.0) a += kTwoPi;
  if (a > kTwoPi - 1e-9) a = 0.0;
  return a;
}

// S * diag(d), scaling column j by d[j].
ComplexMatrix scale_columns(const ComplexMatrix& s, const std::vector<cd>& d) {
  ComplexMatrix out = s;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) out(i, j) *= d[j];
  return out;
}

ComplexMatrix charge_conjugation(const std::vector<std::size_t>& dual) {
  ComplexMatrix c(dual.size(), dual.size());
  for (std::size_t x = 0; x < dual.size(); ++x) c(x, dual[x]) = 1.0;
  return c;
}

double relation_residual(const ModularData& md, cd zeta, const ComplexMatrix& s2) {
  std::vector<cd> t_hat(md.rank());
  for (std::size_t x = 0; x < md.rank(); ++x) t_hat[x] = md.theta[x] / zeta;
  const ComplexMatrix st = scale_columns(md.s, t_hat);
  return max_abs_diff(st * st * st, s2);
}

// Principal sixth root of p_+ / p_-.
cd principal_zeta(const ModularData& md) {
  const cd s11 = md.s(md.unit, md.unit);
  cd pp = 0.0;
  cd pm = 0.0;
  for (std::size_t x = 0; x < md.rank(); ++x) {
    const double d = (md.s(md.unit, x) / s11).real();
    pp += d * d * md.theta[x];
    pm += d * d / md.theta[x];
  }
  return std::pow(pp / pm, 1.0 / 6.0);
}

bool shapes_consistent(const ModularData& md) {
  const std::size_t n = md.rank();
  if (n == 0 || md.s.rows() != n || md.s.cols() != n || md.theta.size() != n ||
      md.dual.size() != n || md.unit >= n)
    return false;
  return std::all_of(md.dual.begin(), md.dual.end(),
                     [n](std::size_t d) { return d < n; });
}

}  // namespace

std::size_t ModularData::index_of(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(ErrorCode::UnknownLabel, "no simple object labelled " + label);
  return static_cast<std::size_t>(it - labels.begin());
}

ModularData kac_peterson(const LieSpec& spec) {
  const RootData rd = build_root_data(spec);
  const auto group = weyl_group(rd);
  const auto weights = level_labels(rd, spec.level);
  const std::size_t n = weights.size();
  const double kh = static_cast<double>(spec.level + rd.dual_coxeter);

  std::vector<Vec> shifted(n);
  for (std::size_t i = 0; i < n; ++i) {
    shifted[i] = rd.weight(weights[i]);
    for (std::size_t c = 0; c < rd.ambient_dim; ++c) shifted[i][c] += rd.rho[c];
  }
  std::vector<std::vector<Vec>> orbit(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& w : group) orbit[i].push_back(w.apply(shifted[i]));

  // raw_{lambda mu} = sum_w det(w) exp(-2 pi i (w(lambda+rho), mu+rho) / (k+h))
  ComplexMatrix raw(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cd acc = 0.0;
      for (std::size_t g = 0; g < group.size(); ++g) {
        const double x = rd.inner(orbit[i][g], shifted[j]) / kh;
        acc += static_cast<double>(group[g].sign) * unit_phase(-x);
      }
      raw(i, j) = acc;
    }

  double sumsq = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sumsq += std::norm(raw(i, j));
  const double scale = std::sqrt(sumsq / static_cast<double>(n));
  if (!(scale > 0.0) || std::abs(raw(0, 0)) < 1e-12 * scale) {
    throw Error(ErrorCode::NumericalDegeneracy, "Weyl-sum S-matrix vanishes");
  }
  const cd phase = std::conj(raw(0, 0)) / std::abs(raw(0, 0));
  raw *= phase / scale;

  const double unitarity = max_abs_diff(raw * raw.adjoint(), ComplexMatrix::identity(n));
  if (unitarity > 1e-6) {
    throw Error(ErrorCode::NumericalDegeneracy,
                "S-matrix not unitary after scalar normalization (residual " +
                    std::to_string(unitarity) + ")");
  }

  ModularData md;
  md.unit = 0;
  md.s = std::move(raw);
  for (std::size_t i = 0; i < n; ++i) {
    md.labels.push_back(format_dynkin(weights[i]));
    const Vec lam = rd.weight(weights[i]);
    Vec lam2rho = lam;
    for (std::size_t c = 0; c < rd.ambient_dim; ++c) lam2rho[c] += 2.0 * rd.rho[c];
    // theta = exp(pi i (lambda, lambda + 2 rho) / (k + h))
    md.theta.push_back(unit_phase(rd.inner(lam, lam2rho) / (2.0 * kh)));
  }

  // C is the permutation part of S^2.
  const ComplexMatrix s2 = md.s * md.s;
  md.dual.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t hit = n;
    for (std::size_t y = 0; y < n; ++y) {
      if (std::abs(s2(x, y) - 1.0) < 1e-6) {
        hit = y;
      } else if (std::abs(s2(x, y)) > 1e-6) {
        hit = n + 1;
        break;
      }
    }
    if (hit >= n) {
      throw Error(ErrorCode::NumericalDegeneracy,
                  "S^2 is not a permutation matrix at row " + std::to_string(x));
    }
    md.dual[x] = hit;
  }
  return md;
}

std::vector<cd> zeta_candidates(const ModularData& md, double tol) {
  const cd principal = principal_zeta(md);
  const ComplexMatrix s2 = md.s * md.s;
  std::vector<cd> out;
  for (int m = 0; m < 6; ++m) {
    const cd z = principal * unit_phase(m / 6.0);
    if (relation_residual(md, z, s2) <= tol) out.push_back(z);
  }
  return out;
}

std::optional<cd> select_zeta(const ModularData& md, double tol) {
  const auto candidates = zeta_candidates(md, tol);
  if (candidates.empty()) return std::nullopt;
  return *std::min_element(candidates.begin(), candidates.end(),
                           [](cd a, cd b) { return arg_0_2pi(a) < arg_0_2pi(b); });
}

DerivedScalars derived_scalars(const ModularData& md, double tol) {
  DerivedScalars out;
  const std::size_t n = md.rank();
  const cd s11 = md.s(md.unit, md.unit);
  for (std::size_t x = 0; x < n; ++x) {
    const double d = (md.s(md.unit, x) / s11).real();
    out.dims.push_back(d);
    out.global_dim += d * d;
    out.gauss_plus += d * d * md.theta[x];
    out.gauss_minus += d * d / md.theta[x];
  }
  if (const auto z = select_zeta(md, tol)) {
    out.zeta = *z;
    out.zeta_consistent = true;
  } else {
    out.zeta = std::pow(out.gauss_plus / out.gauss_minus, 1.0 / 6.0);
  }
  for (std::size_t x = 0; x < n; ++x) out.t_hat.push_back(md.theta[x] / out.zeta);
  return out;
}

std::vector<cd> verlinde_raw(const ModularData& md) {
  const std::size_t n = md.rank();
  const std::size_t u = md.unit;
  // A_{(x,y),R} = s_{xR} s_{yR} / s_{1R};  B_{R,z} = s_{z*,R}
  ComplexMatrix a(n * n, n);
  std::vector<cd> inv_unit_row(n);
  for (std::size_t r = 0; r < n; ++r) inv_unit_row[r] = 1.0 / md.s(u, r);
  std::vector<cd> tmp(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      kernels::hadamard(md.s.row(x), md.s.row(y), tmp);
      kernels::hadamard(tmp, inv_unit_row, a.row(x * n + y));
    }
  ComplexMatrix b(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t z = 0; z < n; ++z) b(r, z) = md.s(md.dual[z], r);
  const ComplexMatrix prod = a * b;
  return {prod.data(), prod.data() + n * n * n};
}

FusionRing verlinde(const ModularData& md, double tol) {
  const std::size_t n = md.rank();
  const auto raw = verlinde_raw(md);
  FusionRing fr(md.labels, md.unit, md.dual);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double rounded = std::round(raw[i].real());
    const double residual = std::abs(raw[i] - rounded);
    const std::size_t x = i / (n * n), y = (i / n) % n, z = i % n;
    if (residual > tol) {
      throw Error(ErrorCode::NonIntegralMultiplicity,
                  "N^" + md.labels[z] + "_{" + md.labels[x] + "," + md.labels[y] +
                      "} has residual " + std::to_string(residual));
    }
    if (rounded < 0.0) {
      throw Error(ErrorCode::NegativeMultiplicity,
                  "N^" + md.labels[z] + "_{" + md.labels[x] + "," + md.labels[y] +
                      "} = " + std::to_string(rounded));
    }
    fr.n[i] = static_cast<int>(rounded);
  }
  return fr;
}

ValidationReport validate_modular(const ModularData& md, double tol,
                                  double integrality_tol) {
  ValidationReport report;
  if (!shapes_consistent(md)) {
    report.add("shape", false, 0.0, "labels, s, theta, dual and unit disagree in size");
    return report;
  }
  const std::size_t n = md.rank();

  const double sym = max_abs_diff(md.s, md.s.transpose());
  report.add("symmetric", sym <= tol, sym);

  const double unitary = max_abs_diff(md.s * md.s.adjoint(), ComplexMatrix::identity(n));
  report.add("unitary", unitary <= tol, unitary);

  bool involution = true;
  std::string inv_detail;
  for (std::size_t x = 0; x < n && involution; ++x) {
    if (md.dual[md.dual[x]] != x) {
      involution = false;
      inv_detail = "dual(dual(" + md.labels[x] + ")) != " + md.labels[x];
    }
  }
  report.add("c_squared_identity", involution, 0.0, inv_detail);

  const ComplexMatrix s2 = md.s * md.s;
  const double s2c = max_abs_diff(s2, charge_conjugation(md.dual));
  report.add("s_squared_is_c", s2c <= tol, s2c);

  const auto zeta = select_zeta(md, tol);
  double best = std::numeric_limits<double>::infinity();
  const cd principal = principal_zeta(md);
  for (int m = 0; m < 6; ++m)
    best = std::min(best, relation_residual(md, principal * unit_phase(m / 6.0), s2));
  report.add("modular_relation", zeta.has_value(), best,
             zeta ? "" : "no sixth root of p+/p- satisfies (S That)^3 = S^2");

  double tc = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    tc = std::max(tc, std::abs(md.theta[x] - md.theta[md.dual[x]]));
  report.add("t_commutes_with_c", tc <= tol, tc);

  const double unit_twist = std::abs(md.theta[md.unit] - 1.0);
  report.add("unit_twist", unit_twist <= tol, unit_twist);

  double modulus = 0.0;
  for (const auto& t : md.theta) modulus = std::max(modulus, std::abs(std::abs(t) - 1.0));
  report.add("twist_unit_modulus", modulus <= tol, modulus);

  bool positive = true;
  std::string pos_detail;
  for (std::size_t x = 0; x < n && positive; ++x) {
    const cd v = md.s(md.unit, x);
    if (!(v.real() > tol) || std::abs(v.imag()) > tol) {
      positive = false;
      pos_detail = "s_{1," + md.labels[x] + "} is not positive";
    }
  }
  report.add("positive_dimensions", positive, 0.0, pos_detail);

  bool integral = true;
  double worst = 0.0;
  std::string int_detail;
  if (positive) {
    const auto raw = verlinde_raw(md);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const double rounded = std::round(raw[i].real());
      const double r = std::abs(raw[i] - rounded);
      worst = std::max(worst, r);
      if ((r > integrality_tol || rounded < 0.0) && integral) {
        integral = false;
        int_detail = "N^" + md.labels[i % n] + "_{" + md.labels[i / (n * n)] + "," +
                     md.labels[(i / n) % n] + "} = " + std::to_string(raw[i].real());
      }
    }
  } else {
    integral = false;
    int_detail = "skipped: s_{1R} not positive";
  }
  report.add("verlinde_integrality", integral, worst, int_detail);
  return report;
}

}  // namespace permgauge
