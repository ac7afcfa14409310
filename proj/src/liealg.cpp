#include "permgauge/liealg.hpp"

#include <cmath>
#include <deque>
#include <set>
#include <sstream>

#include "permgauge/errors.hpp"

namespace permgauge {
namespace {

Vec unit_vector(std::size_t dim, std::size_t i, double value = 1.0) {
  Vec v(dim, 0.0);
  v[i] = value;
  return v;
}

// e_1 + ... + e_count
Vec prefix_sum(std::size_t dim, std::size_t count, double value = 1.0) {
  Vec v(dim, 0.0);
  for (std::size_t i = 0; i < count; ++i) v[i] = value;
  return v;
}

Vec difference(std::size_t dim, std::size_t i, std::size_t j) {
  Vec v(dim, 0.0);
  v[i] = 1.0;
  v[j] = -1.0;
  return v;
}

// Grid key for deduplicating rational vectors/matrices; entries here have
// denominators of at most 2(n+1), far coarser than the 1e-6 grid.
std::vector<long long> quantize(const std::vector<double>& values) {
  std::vector<long long> key(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    key[i] = std::llround(values[i] * 1e6);
  return key;
}

void build_a(RootData& rd, int n) {
  const std::size_t dim = n + 1;
  rd.ambient_dim = dim;
  rd.form_scale = 1.0;
  for (int i = 0; i < n; ++i) {
    rd.simple_roots.push_back(difference(dim, i, i + 1));
    Vec w = prefix_sum(dim, i + 1);
    const double shift = static_cast<double>(i + 1) / static_cast<double>(n + 1);
    for (auto& x : w) x -= shift;
    rd.fundamental_weights.push_back(w);
  }
  rd.highest_root = difference(dim, 0, n);
}

void build_b(RootData& rd, int n) {
  const std::size_t dim = n;
  rd.ambient_dim = dim;
  rd.form_scale = 1.0;
  for (int i = 0; i < n - 1; ++i) rd.simple_roots.push_back(difference(dim, i, i + 1));
  rd.simple_roots.push_back(unit_vector(dim, n - 1));
  for (int i = 0; i < n - 1; ++i) rd.fundamental_weights.push_back(prefix_sum(dim, i + 1));
  rd.fundamental_weights.push_back(prefix_sum(dim, n, 0.5));
  Vec theta(dim, 0.0);
  theta[0] = theta[1] = 1.0;
  rd.highest_root = theta;
}

void build_c(RootData& rd, int n) {
  const std::size_t dim = n;
  rd.ambient_dim = dim;
  rd.form_scale = 0.5;
  for (int i = 0; i < n - 1; ++i) rd.simple_roots.push_back(difference(dim, i, i + 1));
  rd.simple_roots.push_back(unit_vector(dim, n - 1, 2.0));
  for (int i = 0; i < n; ++i) rd.fundamental_weights.push_back(prefix_sum(dim, i + 1));
  rd.highest_root = unit_vector(dim, 0, 2.0);
}

void build_d(RootData& rd, int n) {
  const std::size_t dim = n;
  rd.ambient_dim = dim;
  rd.form_scale = 1.0;
  for (int i = 0; i < n - 1; ++i) rd.simple_roots.push_back(difference(dim, i, i + 1));
  Vec last(dim, 0.0);
  last[n - 2] = last[n - 1] = 1.0;
  rd.simple_roots.push_back(last);
  for (int i = 0; i < n - 2; ++i) rd.fundamental_weights.push_back(prefix_sum(dim, i + 1));
  Vec spinor_minus = prefix_sum(dim, n, 0.5);
  spinor_minus[n - 1] = -0.5;
  rd.fundamental_weights.push_back(spinor_minus);
  rd.fundamental_weights.push_back(prefix_sum(dim, n, 0.5));
  Vec theta(dim, 0.0);
  theta[0] = theta[1] = 1.0;
  rd.highest_root = theta;
}

// G2 inside the plane x + y + z = 0 of R^3, form scaled by 1/3: the short
// simple root e1 - e2 has length^2 2/3, the long one -2e1 + e2 + e3 has 2.
void build_g2(RootData& rd) {
  rd.ambient_dim = 3;
  rd.form_scale = 1.0 / 3.0;
  rd.simple_roots = {{1.0, -1.0, 0.0}, {-2.0, 1.0, 1.0}};
  rd.fundamental_weights = {{0.0, -1.0, 1.0}, {-1.0, -1.0, 2.0}};
  rd.highest_root = {-1.0, -1.0, 2.0};
}

std::vector<double> matmul(std::size_t dim, const std::vector<double>& a,
                           const std::vector<double>& b) {
  std::vector<double> c(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t p = 0; p < dim; ++p) {
      const double aip = a[i * dim + p];
      if (aip == 0.0) continue;
      for (std::size_t j = 0; j < dim; ++j) c[i * dim + j] += aip * b[p * dim + j];
    }
  return c;
}

}  // namespace

std::string to_string(Series series) {
  switch (series) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::G2: return "G2";
  }
  return "?";
}

void validate(const LieSpec& spec) {
  bool ok = false;
  switch (spec.series) {
    case Series::A: ok = spec.rank >= 1; break;
    case Series::B: ok = spec.rank >= 2; break;
    case Series::C: ok = spec.rank >= 2; break;
    case Series::D: ok = spec.rank >= 3; break;
    case Series::G2: ok = spec.rank == 2; break;
    default: throw Error(ErrorCode::UnsupportedSeries, "unknown series");
  }
  if (!ok) {
    throw Error(ErrorCode::UnsupportedSeries,
                "series " + to_string(spec.series) + " does not admit rank " +
                    std::to_string(spec.rank));
  }
  if (spec.level < 1) {
    throw Error(ErrorCode::InvalidSpec,
                "level must be positive, got " + std::to_string(spec.level));
  }
}

double RootData::inner(const Vec& u, const Vec& v) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return form_scale * acc;
}

Vec RootData::coroot(std::size_t i) const {
  const Vec& a = simple_roots[i];
  const double scale = 2.0 / inner(a, a);
  Vec c = a;
  for (auto& x : c) x *= scale;
  return c;
}

std::vector<std::vector<int>> RootData::cartan_matrix() const {
  const std::size_t r = simple_roots.size();
  std::vector<std::vector<int>> a(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      a[i][j] = static_cast<int>(std::lround(inner(simple_roots[i], coroot(j))));
  return a;
}

Vec RootData::weight(const DynkinLabel& labels) const {
  Vec w(ambient_dim, 0.0);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t c = 0; c < ambient_dim; ++c)
      w[c] += labels[i] * fundamental_weights[i][c];
  return w;
}

DynkinLabel RootData::dynkin_labels(const Vec& w) const {
  DynkinLabel out(simple_roots.size());
  for (std::size_t j = 0; j < simple_roots.size(); ++j)
    out[j] = static_cast<int>(std::lround(inner(w, coroot(j))));
  return out;
}

Vec WeylElement::apply(const Vec& v) const {
  Vec out(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out[i] += matrix[i * dim + j] * v[j];
  return out;
}

RootData build_root_data(const LieSpec& spec) {
  validate(spec);
  RootData rd;
  rd.series = spec.series;
  rd.rank = spec.rank;
  switch (spec.series) {
    case Series::A: build_a(rd, spec.rank); break;
    case Series::B: build_b(rd, spec.rank); break;
    case Series::C: build_c(rd, spec.rank); break;
    case Series::D: build_d(rd, spec.rank); break;
    case Series::G2: build_g2(rd); break;
  }
  rd.rho.assign(rd.ambient_dim, 0.0);
  for (const auto& w : rd.fundamental_weights)
    for (std::size_t c = 0; c < rd.ambient_dim; ++c) rd.rho[c] += w[c];

  // theta is long, so theta^vee = theta and the comarks are (omega_j, theta).
  rd.dual_coxeter = 1;
  for (const auto& w : rd.fundamental_weights) {
    const int a = static_cast<int>(std::lround(rd.inner(w, rd.highest_root)));
    rd.comarks.push_back(a);
    rd.dual_coxeter += a;
  }
  return rd;
}

std::vector<WeylElement> weyl_group(const RootData& rd, std::size_t bound) {
  const std::size_t dim = rd.ambient_dim;
  std::vector<std::vector<double>> reflections;
  for (const auto& alpha : rd.simple_roots) {
    const double norm = rd.inner(alpha, alpha);
    std::vector<double> m(dim * dim, 0.0);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        m[r * dim + c] = (r == c ? 1.0 : 0.0) -
                         2.0 * rd.form_scale * alpha[r] * alpha[c] / norm;
    reflections.push_back(std::move(m));
  }

  WeylElement id;
  id.dim = dim;
  id.matrix.assign(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) id.matrix[i * dim + i] = 1.0;

  std::vector<WeylElement> group{id};
  std::set<std::vector<long long>> seen{quantize(id.matrix)};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    for (const auto& s : reflections) {
      WeylElement next;
      next.dim = dim;
      next.matrix = matmul(dim, s, group[cur].matrix);
      next.sign = -group[cur].sign;
      if (!seen.insert(quantize(next.matrix)).second) continue;
      if (group.size() >= bound) {
        throw Error(ErrorCode::ClosureOverflow,
                    "Weyl group closure exceeded " + std::to_string(bound) +
                        " elements");
      }
      group.push_back(std::move(next));
      frontier.push_back(group.size() - 1);
    }
  }
  return group;
}

std::vector<Vec> root_system(const RootData& rd,
                             const std::vector<WeylElement>& group) {
  std::vector<Vec> roots;
  std::set<std::vector<long long>> seen;
  for (const auto& w : group)
    for (const auto& alpha : rd.simple_roots) {
      Vec r = w.apply(alpha);
      if (seen.insert(quantize(r)).second) roots.push_back(std::move(r));
    }
  return roots;
}

std::vector<DynkinLabel> level_labels(const RootData& rd, int level) {
  const std::size_t r = rd.comarks.size();
  std::vector<DynkinLabel> out;
  DynkinLabel cur(r, 0);
  // Depth-first with ascending values at each position gives lexicographic order.
  auto rec = [&](auto&& self, std::size_t pos, int budget) -> void {
    if (pos == r) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a * rd.comarks[pos] <= budget; ++a) {
      cur[pos] = a;
      self(self, pos + 1, budget - a * rd.comarks[pos]);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, level);
  return out;
}

std::string format_dynkin(const DynkinLabel& labels) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ',';
    os << labels[i];
  }
  os << ')';
  return os.str();
}

std::size_t weyl_group_order(Series series, int rank) {
  std::size_t fact = 1;
  for (int i = 2; i <= rank; ++i) fact *= static_cast<std::size_t>(i);
  switch (series) {
    case Series::A: return fact * static_cast<std::size_t>(rank + 1);
    case Series::B:
    case Series::C: return (std::size_t{1} << rank) * fact;
    case Series::D: return (std::size_t{1} << (rank - 1)) * fact;
    case Series::G2: return 12;
  }
  return 0;
}

}  // namespace permgauge
