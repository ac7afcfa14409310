#include "permgauge/ringtools.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "permgauge/errors.hpp"

namespace permgauge {
namespace {

std::string triple(const FusionRing& fr, std::size_t x, std::size_t y, std::size_t z) {
  return "N^" + fr.labels[z] + "_{" + fr.labels[x] + "," + fr.labels[y] + "}";
}

bool shape_ok(const FusionRing& fr, std::string& why) {
  const std::size_t r = fr.rank();
  if (r == 0) {
    why = "empty ring";
    return false;
  }
  if (fr.unit >= r || fr.dual.size() != r || fr.n.size() != r * r * r) {
    why = "unit, dual and N disagree with the label count";
    return false;
  }
  for (std::size_t d : fr.dual)
    if (d >= r) {
      why = "dual index out of range";
      return false;
    }
  return true;
}

// Per-label data preserved by any ring isomorphism.
struct Invariant {
  double dim;
  bool self_dual;
  int diagonal;  // N^X_{XX}
  std::vector<int> row;  // sorted N^Z_{XY} over (Y, Z)

  auto tie() const { return std::tie(dim, self_dual, diagonal, row); }
  bool operator<(const Invariant& o) const { return tie() < o.tie(); }
  bool matches(const Invariant& o) const {
    return std::abs(dim - o.dim) <= 1e-6 * std::max(1.0, dim) && self_dual == o.self_dual &&
           diagonal == o.diagonal && row == o.row;
  }
};

std::vector<Invariant> invariants(const FusionRing& fr) {
  const std::size_t r = fr.rank();
  const auto dims = fp_dims(fr);
  std::vector<Invariant> out(r);
  for (std::size_t x = 0; x < r; ++x) {
    auto& inv = out[x];
    inv.dim = dims[x];
    inv.self_dual = fr.dual[x] == x;
    inv.diagonal = fr(x, x, x);
    inv.row.reserve(r * r);
    for (std::size_t y = 0; y < r; ++y)
      for (std::size_t z = 0; z < r; ++z) inv.row.push_back(fr(x, y, z));
    std::sort(inv.row.begin(), inv.row.end());
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const FusionRing& a, const FusionRing& b, const IsoOptions& options)
      : a_(a), b_(b), budget_(options.budget), r_(a.rank()) {
    const auto ia = invariants(a);
    const auto ib = invariants(b);
    candidates_.resize(r_);
    for (std::size_t x = 0; x < r_; ++x)
      for (std::size_t y = 0; y < r_; ++y)
        if (ia[x].matches(ib[y])) candidates_[x].push_back(y);
    candidates_[a.unit] = {b.unit};
    if (options.seed) {
      std::mt19937_64 rng(*options.seed);
      for (auto& c : candidates_) std::shuffle(c.begin(), c.end(), rng);
    }
    // Most constrained labels first, then the canonical invariant order.
    order_.resize(r_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      if (candidates_[x].size() != candidates_[y].size())
        return candidates_[x].size() < candidates_[y].size();
      return ia[x] < ia[y];
    });
  }

  std::optional<std::vector<std::size_t>> run() {
    for (const auto& c : candidates_)
      if (c.empty()) return std::nullopt;
    image_.assign(r_, kNone);
    used_.assign(r_, false);
    if (!extend(0)) return std::nullopt;
    return image_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool consistent(std::size_t x) const {
    const std::size_t fx = image_[x];
    const std::size_t xd = a_.dual[x];
    if (image_[xd] != kNone && image_[xd] != b_.dual[fx]) return false;
    for (std::size_t i = 0; i < placed_.size(); ++i) {
      const std::size_t y = placed_[i], fy = image_[y];
      for (std::size_t j = 0; j < placed_.size(); ++j) {
        const std::size_t z = placed_[j], fz = image_[z];
        if (a_(x, y, z) != b_(fx, fy, fz) || a_(y, x, z) != b_(fy, fx, fz) ||
            a_(y, z, x) != b_(fy, fz, fx))
          return false;
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == r_) return true;
    const std::size_t x = order_[depth];
    for (std::size_t c : candidates_[x]) {
      if (used_[c]) continue;
      if (++nodes_ > budget_) {
        throw Error(ErrorCode::SearchBudgetExceeded,
                    "isomorphism search exceeded " + std::to_string(budget_) + " nodes");
      }
      image_[x] = c;
      used_[c] = true;
      placed_.push_back(x);
      if (consistent(x) && extend(depth + 1)) return true;
      placed_.pop_back();
      used_[c] = false;
      image_[x] = kNone;
    }
    return false;
  }

  const FusionRing& a_;
  const FusionRing& b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t r_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::vector<std::size_t> placed_;
};

}  // namespace

ValidationReport validate_ring(const FusionRing& fr) {
  ValidationReport report;
  std::string why;
  if (!shape_ok(fr, why)) {
    report.add("shape", false, 0.0, why);
    return report;
  }
  const std::size_t r = fr.rank();
  const std::size_t u = fr.unit;

  auto first_failure = [&](auto&& pred) -> std::string {
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y)
        for (std::size_t z = 0; z < r; ++z)
          if (!pred(x, y, z)) return triple(fr, x, y, z);
    return {};
  };
  auto add = [&](const char* name, std::string detail) {
    const bool ok = detail.empty();
    report.add(name, ok, 0.0, std::move(detail));
  };

  add("nonnegative", first_failure([&](auto x, auto y, auto z) { return fr(x, y, z) >= 0; }));
  add("unit", first_failure([&](auto x, auto y, auto z) {
        const int delta = y == z ? 1 : 0;
        return fr(x, u, z) == (x == z ? 1 : 0) && fr(u, y, z) == delta;
      }));

  std::string dual_detail;
  for (std::size_t x = 0; x < r && dual_detail.empty(); ++x)
    if (fr.dual[fr.dual[x]] != x) dual_detail = "dual is not an involution at " + fr.labels[x];
  if (dual_detail.empty())
    dual_detail = first_failure([&](auto x, auto y, auto z) {
      return z != u || fr(x, y, u) == (y == fr.dual[x] ? 1 : 0);
    });
  add("duality", std::move(dual_detail));

  add("commutativity",
      first_failure([&](auto x, auto y, auto z) { return fr(x, y, z) == fr(y, x, z); }));

  std::string assoc;
  for (std::size_t x = 0; x < r && assoc.empty(); ++x)
    for (std::size_t y = 0; y < r && assoc.empty(); ++y)
      for (std::size_t z = 0; z < r && assoc.empty(); ++z)
        for (std::size_t v = 0; v < r; ++v) {
          long lhs = 0, rhs = 0;
          for (std::size_t w = 0; w < r; ++w) {
            lhs += static_cast<long>(fr(x, y, w)) * fr(w, z, v);
            rhs += static_cast<long>(fr(y, z, w)) * fr(x, w, v);
          }
          if (lhs != rhs) {
            assoc = "(" + fr.labels[x] + " " + fr.labels[y] + ") " + fr.labels[z] + " vs " +
                    fr.labels[x] + " (" + fr.labels[y] + " " + fr.labels[z] + ") at " +
                    fr.labels[v];
            break;
          }
        }
  add("associativity", std::move(assoc));

  add("dual_invariance", first_failure([&](auto x, auto y, auto z) {
        return fr(x, y, z) == fr(fr.dual[x], fr.dual[y], fr.dual[z]);
      }));
  return report;
}

std::vector<double> fp_dims(const FusionRing& fr, double tol) {
  std::string why;
  if (!shape_ok(fr, why)) throw Error(ErrorCode::NoPositiveEigenvector, why);
  const std::size_t r = fr.rank();
  const auto ri = static_cast<Eigen::Index>(r);
  // (sum_X N_X)_{YZ} = sum_X N^Z_{XY}
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(ri, ri);
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y)
      for (std::size_t z = 0; z < r; ++z)
        m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(z)) += fr(x, y, z);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::NoPositiveEigenvector, "eigen decomposition failed");
  const auto values = solver.eigenvalues();
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < values.size(); ++i)
    if (values[i].real() > values[best].real()) best = i;
  const Eigen::VectorXcd v = solver.eigenvectors().col(best);
  const auto unit = static_cast<Eigen::Index>(fr.unit);
  if (std::abs(v[unit]) < 1e-300)
    throw Error(ErrorCode::NoPositiveEigenvector, "Perron vector vanishes at the unit");

  std::vector<double> d(r);
  for (std::size_t x = 0; x < r; ++x) {
    const std::complex<double> c = v[static_cast<Eigen::Index>(x)] / v[unit];
    if (std::abs(c.imag()) > tol || !(c.real() > 0.0))
      throw Error(ErrorCode::NoPositiveEigenvector,
                  "Perron vector not positive at " + fr.labels[x]);
    d[x] = c.real();
  }
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y) {
      double lhs = 0.0;
      for (std::size_t z = 0; z < r; ++z) lhs += fr(x, y, z) * d[z];
      const double rhs = d[x] * d[y];
      if (std::abs(lhs - rhs) > tol * std::max(1.0, rhs))
        throw Error(ErrorCode::NoPositiveEigenvector,
                    "dimensions are not a character at " + fr.labels[x] + " " + fr.labels[y]);
    }
  return d;
}

FusionRing relabel(const FusionRing& fr, const std::vector<std::size_t>& perm) {
  const std::size_t r = fr.rank();
  if (perm.size() != r) throw Error(ErrorCode::InvalidSpec, "permutation has wrong length");
  std::vector<bool> seen(r, false);
  for (std::size_t p : perm) {
    if (p >= r || seen[p]) throw Error(ErrorCode::InvalidSpec, "not a permutation");
    seen[p] = true;
  }
  FusionRing out(std::vector<std::string>(r), perm[fr.unit], std::vector<std::size_t>(r));
  for (std::size_t x = 0; x < r; ++x) {
    out.labels[perm[x]] = fr.labels[x];
    out.dual[perm[x]] = perm[fr.dual[x]];
  }
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y)
      for (std::size_t z = 0; z < r; ++z) out(perm[x], perm[y], perm[z]) = fr(x, y, z);
  return out;
}

std::optional<std::vector<std::size_t>> ring_isomorphism(const FusionRing& a,
                                                         const FusionRing& b,
                                                         const IsoOptions& options) {
  if (a.rank() != b.rank()) return std::nullopt;
  return IsoSearch(a, b, options).run();
}

ExportFormat parse_format(std::string_view name) {
  if (name == "json") return ExportFormat::Json;
  if (name == "dot") return ExportFormat::Dot;
  if (name == "text") return ExportFormat::Text;
  throw Error(ErrorCode::InvalidDocument, "unknown format " + std::string(name));
}

std::string fusion_graph_dot(const FusionRing& fr, std::size_t label) {
  if (label >= fr.rank()) throw Error(ErrorCode::UnknownLabel, "graph label out of range");
  const auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "digraph " << quote("fusion " + fr.labels[label]) << " {\n";
  for (const auto& l : fr.labels) os << "  " << quote(l) << ";\n";
  for (std::size_t y = 0; y < fr.rank(); ++y)
    for (std::size_t z = 0; z < fr.rank(); ++z)
      if (const int m = fr(label, y, z))
        os << "  " << quote(fr.labels[y]) << " -> " << quote(fr.labels[z]) << " [label=" << m
           << "];\n";
  os << "}\n";
  return os.str();
}

bool fusion_graph_connected(const FusionRing& fr, std::size_t label) {
  const std::size_t r = fr.rank();
  if (label >= r) throw Error(ErrorCode::UnknownLabel, "graph label out of range");
  std::vector<std::vector<std::size_t>> adj(r);
  for (std::size_t y = 0; y < r; ++y)
    for (std::size_t z = 0; z < r; ++z)
      if (fr(label, y, z) > 0) {
        adj[y].push_back(z);
        adj[z].push_back(y);
      }
  std::vector<bool> seen(r, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == r;
}

std::string export_ring(const FusionRing& fr, ExportFormat format, std::size_t graph_label) {
  const std::size_t r = fr.rank();
  switch (format) {
    case ExportFormat::Json: {
      // One quadruple per line keeps large rings diffable.
      std::ostringstream os;
      os << "{\n \"labels\": " << nlohmann::json(fr.labels).dump()
         << ",\n \"unit\": " << fr.unit << ",\n \"dual\": " << nlohmann::json(fr.dual).dump()
         << ",\n \"N\": [";
      bool first = true;
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y)
          for (std::size_t z = 0; z < r; ++z)
            if (const int m = fr(x, y, z)) {
              os << (first ? "\n  " : ",\n  ") << '[' << x << ',' << y << ',' << z << ',' << m << ']';
              first = false;
            }
      os << "\n ]\n}\n";
      return os.str();
    }
    case ExportFormat::Dot:
      return fusion_graph_dot(fr, graph_label);
    case ExportFormat::Text: {
      std::ostringstream os;
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = x; y < r; ++y) {
          os << fr.labels[x] << " ⊗ " << fr.labels[y] << " = ";
          bool first = true;
          for (std::size_t z = 0; z < r; ++z) {
            const int m = fr(x, y, z);
            if (m == 0) continue;
            if (!first) os << " + ";
            if (m != 1) os << m << "·";
            os << fr.labels[z];
            first = false;
          }
          if (first) os << "0";
          os << "\n";
        }
      return os.str();
    }
  }
  return {};
}

FusionRing import_ring_json(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidDocument, e.what());
  }
  try {
    auto labels = doc.at("labels").get<std::vector<std::string>>();
    const auto unit = doc.at("unit").get<std::size_t>();
    auto dual = doc.at("dual").get<std::vector<std::size_t>>();
    const std::size_t r = labels.size();
    if (r == 0 || unit >= r || dual.size() != r)
      throw Error(ErrorCode::InvalidDocument, "labels, unit and dual disagree");
    for (std::size_t d : dual)
      if (d >= r) throw Error(ErrorCode::InvalidDocument, "dual index out of range");
    FusionRing fr(std::move(labels), unit, std::move(dual));
    for (const auto& e : doc.at("N")) {
      const auto q = e.get<std::vector<long long>>();
      if (q.size() != 4) throw Error(ErrorCode::InvalidDocument, "N entries are quadruples");
      for (int i = 0; i < 3; ++i)
        if (q[i] < 0 || static_cast<std::size_t>(q[i]) >= r)
          throw Error(ErrorCode::InvalidDocument, "N index out of range");
      if (q[3] <= 0) throw Error(ErrorCode::InvalidDocument, "N multiplicities are positive");
      fr(q[0], q[1], q[2]) = static_cast<int>(q[3]);
    }
    return fr;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidDocument, e.what());
  }
}

}  // namespace permgauge
