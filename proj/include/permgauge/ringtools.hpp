#pragma once
// Fusion-ring checks, Frobenius-Perron dimensions, isomorphism search and
// serialization.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permgauge/fusion_ring.hpp"
#include "permgauge/validation.hpp"

namespace permgauge {

// Checks: shape, nonnegative, unit, duality, commutativity, associativity,
// dual_invariance. Failing checks carry the first counterexample.
ValidationReport validate_ring(const FusionRing& fr);

// Positive d with d_unit = 1 and sum_Z N^Z_{XY} d_Z = d_X d_Y.
// Throws NoPositiveEigenvector.
std::vector<double> fp_dims(const FusionRing& fr, double tol = 1e-8);

// new index of old label x is perm[x].
FusionRing relabel(const FusionRing& fr, const std::vector<std::size_t>& perm);

struct IsoOptions {
  std::uint64_t budget = 10'000'000;   // search nodes
  std::optional<std::uint64_t> seed;  // shuffles candidates within a class
};

// perm with perm[x] = image in b of label x of a, carrying N, unit and dual.
// Throws SearchBudgetExceeded.
std::optional<std::vector<std::size_t>> ring_isomorphism(const FusionRing& a,
                                                         const FusionRing& b,
                                                         const IsoOptions& options = {});

enum class ExportFormat { Json, Dot, Text };

// Throws InvalidDocument for anything but json, dot or text.
ExportFormat parse_format(std::string_view name);

// DOT output is the fusion graph of graph_label.
std::string export_ring(const FusionRing& fr, ExportFormat format,
                        std::size_t graph_label = 0);

// Inverse of the JSON export. Throws InvalidDocument.
FusionRing import_ring_json(std::string_view document);

// Edges Y -> Z labelled N^Z_{label,Y}.
std::string fusion_graph_dot(const FusionRing& fr, std::size_t label);

// Weak connectivity of the fusion graph of label.
bool fusion_graph_connected(const FusionRing& fr, std::size_t label);

}  // namespace permgauge
