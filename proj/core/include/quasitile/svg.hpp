// Deterministic SVG rendering of patches (coordinates at 9 decimals).
#pragma once

#include "quasitile/tiling.hpp"

#include <optional>
#include <string>

namespace quasitile {

struct SvgOptions {
  bool decorations = false;
  /// Index into Patch::tiles whose moment image is overlaid.
  std::optional<std::size_t> overlay_tile;
  int grid = 11;
  double pixels_per_unit = 40.0;
};

/// One polygon per merged tile (class "tile thick" / "tile thin"); unmerged
/// halves are drawn as triangles (class "half").
std::string render_svg(const Patch& p, const SvgOptions& options = {});

}  // namespace quasitile
