// JSON documents for quasifold descriptors and per-tile analyses.
#pragma once

#include "quasitile/delzant.hpp"
#include "quasitile/patch_io.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quasitile {

struct TileAnalysis {
  RhombusTile tile;
  std::size_t descriptor = 0;  // index into AnalysisDocument::descriptors
  friend bool operator==(const TileAnalysis&, const TileAnalysis&) = default;
};

/// Descriptors are stored once each, in order of first occurrence; tiles
/// refer to them by index.
struct AnalysisDocument {
  bool normalized = true;
  std::vector<TileAnalysis> tiles;
  std::vector<QuasifoldDescriptor> descriptors;
  friend bool operator==(const AnalysisDocument&, const AnalysisDocument&) = default;
};

/// Runs the Delzant pipeline on every tile, in the given order.
AnalysisDocument analyze_tiles(std::span<const RhombusTile> tiles, bool normalized);

std::string serialize_descriptor(const QuasifoldDescriptor& d);
/// Rejects descriptors whose derived data disagree with their facet data.
QuasifoldDescriptor deserialize_descriptor(std::string_view text);

std::string serialize_analysis(const AnalysisDocument& doc);
AnalysisDocument deserialize_analysis(std::string_view text);

/// Human-readable multi-line rendering of an invariants report.
std::string format_report(const InvariantsReport& r);

}  // namespace quasitile
