#include "permgauge/catops.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "permgauge/errors.hpp"

namespace permgauge {

ModularData deligne_product(const ModularData& a, const ModularData& b) {
  const std::size_t na = a.rank(), nb = b.rank(), n = na * nb;
  ModularData out;
  out.unit = a.unit * nb + b.unit;
  out.s = ComplexMatrix(n, n);
  out.labels.reserve(n);
  out.theta.reserve(n);
  out.dual.reserve(n);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) {
      out.labels.push_back(a.labels[x] + "," + b.labels[y]);
      out.theta.push_back(a.theta[x] * b.theta[y]);
      out.dual.push_back(a.dual[x] * nb + b.dual[y]);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.s(i, j) = a.s(i / nb, j / nb) * b.s(i % nb, j % nb);
  return out;
}

ModularData reverse(const ModularData& md) {
  ModularData out = md;
  out.s = md.s.conj();
  for (auto& t : out.theta) t = std::conj(t);
  return out;
}

ModularData tensor_subcategory(const ModularData& md,
                               const std::vector<std::string>& generators,
                               double tol) {
  std::vector<std::size_t> idx;
  idx.reserve(generators.size());
  for (const auto& g : generators) idx.push_back(md.index_of(g));
  return tensor_subcategory(md, idx, tol);
}

ModularData tensor_subcategory(const ModularData& md,
                               const std::vector<std::size_t>& generators,
                               double tol) {
  const std::size_t n = md.rank();
  for (std::size_t g : generators)
    if (g >= n) throw Error(ErrorCode::UnknownLabel, "generator index out of range");

  const FusionRing ring = verlinde(md);
  std::set<std::size_t> closed(generators.begin(), generators.end());
  closed.insert(md.unit);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::size_t> current(closed.begin(), closed.end());
    for (std::size_t x : current) {
      grew |= closed.insert(md.dual[x]).second;
      for (std::size_t y : current)
        for (std::size_t z = 0; z < n; ++z)
          if (ring(x, y, z) > 0) grew |= closed.insert(z).second;
    }
  }

  const std::vector<std::size_t> keep(closed.begin(), closed.end());
  const std::size_t m = keep.size();
  std::vector<std::size_t> position(n, m);
  for (std::size_t i = 0; i < m; ++i) position[keep[i]] = i;

  ModularData out;
  out.unit = position[md.unit];
  out.s = ComplexMatrix(m, m);
  double sumsq = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    out.labels.push_back(md.labels[keep[i]]);
    out.theta.push_back(md.theta[keep[i]]);
    out.dual.push_back(position[md.dual[keep[i]]]);
    for (std::size_t j = 0; j < m; ++j) {
      out.s(i, j) = md.s(keep[i], keep[j]);
      sumsq += std::norm(out.s(i, j));
    }
  }
  const double scale = std::sqrt(sumsq / static_cast<double>(m));
  if (!(scale > 0.0)) throw Error(ErrorCode::NotModular, "restricted S-matrix vanishes");
  out.s *= 1.0 / scale;
  const cd s00 = out.s(out.unit, out.unit);
  if (std::abs(s00) > 0.0) out.s *= std::conj(s00) / std::abs(s00);

  const double unitary = max_abs_diff(out.s * out.s.adjoint(), ComplexMatrix::identity(m));
  if (unitary > tol) {
    throw Error(ErrorCode::NotModular,
                "restricted S-matrix is not proportional to a unitary (residual " +
                    std::to_string(unitary) + ")");
  }
  const ValidationReport report = validate_modular(out, tol);
  for (const auto& c : report.checks)
    if (!c.passed)
      throw Error(ErrorCode::NotModular, "subcategory fails check " + c.name);
  return out;
}

}  // namespace permgauge
