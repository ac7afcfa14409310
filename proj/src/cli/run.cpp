#include "permgauge/cli/run.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "permgauge/cli/expr.hpp"
#include "permgauge/errors.hpp"
#include "permgauge/gauge.hpp"
#include "permgauge/ringtools.hpp"

namespace permgauge::cli {
namespace {

struct Options {
  double tol = 1e-6;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = 10'000'000;
  std::string format;
  std::string out_path;
  std::string graph;
  std::string expr;
  std::string expr2;
};

void emit_error(std::ostream& err, std::string_view code, const std::string& message,
                std::optional<std::size_t> offset = std::nullopt) {
  nlohmann::ordered_json doc;
  doc["error"] = code;
  doc["message"] = message;
  if (offset) doc["offset"] = *offset;
  err << doc.dump() << "\n";
}

void prefixed(ValidationReport& into, const ValidationReport& from, const std::string& prefix) {
  for (const auto& c : from.checks) into.add(prefix + c.name, c.passed, c.residual, c.detail);
}

Evaluated load(const std::string& text, const Options& opt) {
  return evaluate(parse(text), opt.tol);
}

int finish_report(const ValidationReport& report, std::ostream& out, std::ostream& err) {
  out << report;
  if (report.ok()) return 0;
  std::string failed;
  for (const auto& c : report.checks)
    if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.name;
  emit_error(err, to_string(ErrorCode::CheckFailed), "failed checks: " + failed);
  return 1;
}

int cmd_build(const Options& opt, std::ostream& out, std::ostream& err) {
  const Evaluated v = load(opt.expr, opt);
  out << "expression: " << render(parse(opt.expr)) << "\n";
  ValidationReport report;
  if (v.gauging) {
    const FusionRing fr = v.gauging->fusion();
    out << "input rank: " << v.md.rank() << "\n";
    out << "rank: " << fr.rank() << "\n";
    prefixed(report, validate_modular(v.md, kModularTol, opt.tol), "input.");
    prefixed(report, validate_ring(fr), "ring.");
  } else {
    out << "rank: " << v.md.rank() << "\n";
    report = validate_modular(v.md, kModularTol, opt.tol);
  }
  return finish_report(report, out, err);
}

std::size_t find_label(const FusionRing& fr, const std::string& label) {
  for (std::size_t i = 0; i < fr.rank(); ++i)
    if (fr.labels[i] == label) return i;
  throw Error(ErrorCode::UnknownLabel, "no simple object labelled " + label);
}

int cmd_fusion(const Options& opt, std::ostream& out, std::ostream&) {
  const Evaluated v = load(opt.expr, opt);
  const FusionRing fr = ring_of(v, opt.tol);

  const ExportFormat format =
      opt.format.empty() ? (opt.graph.empty() ? ExportFormat::Text : ExportFormat::Dot)
                         : parse_format(opt.format);
  std::size_t graph = fr.unit;
  if (!opt.graph.empty()) {
    graph = find_label(fr, opt.graph);
  } else if (v.gauging) {
    graph = v.gauging->index_of(GaugedLabel::hat(v.md.unit, +1));
  } else if (fr.rank() > 1) {
    graph = fr.unit == 0 ? 1 : 0;
  }
  const std::string doc = export_ring(fr, format, graph);
  if (opt.out_path.empty()) {
    out << doc;
    return 0;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!(file << doc)) throw Error(ErrorCode::InvalidDocument, "cannot write " + opt.out_path);
  return 0;
}

int cmd_compare(const Options& opt, std::ostream& out, std::ostream&) {
  const FusionRing a = ring_of(load(opt.expr, opt), opt.tol);
  const FusionRing b = ring_of(load(opt.expr2, opt), opt.tol);
  IsoOptions iso;
  iso.budget = opt.budget;
  iso.seed = opt.seed;
  const auto perm = ring_isomorphism(a, b, iso);

  nlohmann::ordered_json doc;
  doc["isomorphic"] = perm.has_value();
  doc["rank"] = {a.rank(), b.rank()};
  if (perm) {
    auto pairs = nlohmann::ordered_json::array();
    for (std::size_t x = 0; x < a.rank(); ++x) pairs.push_back({a.labels[x], b.labels[(*perm)[x]]});
    doc["permutation"] = std::move(pairs);
  }
  out << doc.dump(1) << "\n";
  return 0;
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
  const Evaluated v = load(opt.expr, opt);
  out << "expression: " << render(parse(opt.expr)) << "\n";
  ValidationReport report;
  prefixed(report, validate_modular(v.md, kModularTol, opt.tol), v.gauging ? "input." : "");
  if (v.gauging) {
    const FusionRing fr = v.gauging->fusion_unchecked();
    out << "rank: " << fr.rank() << "\n";
    // Informational: invertible objects in the input disconnect this graph.
    const std::size_t hat_unit = v.gauging->index_of(GaugedLabel::hat(v.md.unit, +1));
    out << "hat unit graph: "
        << (fusion_graph_connected(fr, hat_unit) ? "connected" : "disconnected") << "\n";
    const ValidationReport g = validate_gauging(*v.gauging, fr);
    report.checks.insert(report.checks.end(), g.checks.begin(), g.checks.end());
  } else {
    const FusionRing fr = verlinde(v.md, opt.tol);
    out << "rank: " << fr.rank() << "\n";
    prefixed(report, validate_ring(fr), "ring.");
    double worst = 0.0;
    std::string detail;
    try {
      const auto fp = fp_dims(fr);
      const cd s11 = v.md.s(v.md.unit, v.md.unit);
      for (std::size_t x = 0; x < fr.rank(); ++x)
        worst = std::max(worst, std::abs(fp[x] - (v.md.s(v.md.unit, x) / s11).real()));
    } catch (const Error& e) {
      worst = 1.0;
      detail = e.what();
    }
    report.add("fp_dims_match_s", worst <= opt.tol, worst, detail);
  }
  return finish_report(report, out, err);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular data, Verlinde rings and Z/2 permutation gaugings"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--tol", opt.tol, "integrality tolerance")->capture_default_str();
  app.add_option("--seed", opt.seed, "shuffle isomorphism candidates with this seed");
  app.add_option("--budget", opt.budget, "isomorphism search node budget")->capture_default_str();

  auto* build = app.add_subcommand("build", "construct modular data and validate it");
  build->add_option("expr", opt.expr)->required();

  auto* fusion = app.add_subcommand("fusion", "print or export the fusion ring");
  fusion->add_option("expr", opt.expr)->required();
  fusion->add_option("--format", opt.format)->check(CLI::IsMember({"json", "dot", "text"}));
  fusion->add_option("--out", opt.out_path, "write to a file instead of stdout");
  fusion->add_option("--graph", opt.graph, "label whose fusion graph is emitted as DOT");

  auto* compare = app.add_subcommand("compare", "search for a fusion-ring isomorphism");
  compare->add_option("expr1", opt.expr)->required();
  compare->add_option("expr2", opt.expr2)->required();

  auto* check = app.add_subcommand("check", "run every invariant check");
  check->add_option("expr", opt.expr)->required();

  // Global options are accepted after the subcommand too.
  for (auto* sub : {build, fusion, compare, check}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    emit_error(err, "UsageError", e.what());
    return 2;
  }

  try {
    if (*build) return cmd_build(opt, out, err);
    if (*fusion) return cmd_fusion(opt, out, err);
    if (*compare) return cmd_compare(opt, out, err);
    return cmd_check(opt, out, err);
  } catch (const ParseError& e) {
    emit_error(err, to_string(e.code()), e.what(), e.offset());
    return 2;
  } catch (const Error& e) {
    emit_error(err, to_string(e.code()), e.what());
    return is_usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    emit_error(err, "InternalError", e.what());
    return 1;
  }
}

}  // namespace permgauge::cli
