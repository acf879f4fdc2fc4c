// Exact consistency checks for a decorated patch.
#pragma once

#include "quasitile/tiling.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace quasitile {

struct EdgeIssue {
  QuasiPoint a;
  QuasiPoint b;
  std::string what;
};

/// Two triangles meet along a leg with incompatible arrow markings.
struct DecorationMismatch {
  EdgeMarking first;
  EdgeMarking second;
};

struct OverlapIssue {
  std::size_t first;  // triangle indices
  std::size_t second;
};

struct LatticeIssue {
  QuasiPoint a;
  QuasiPoint b;
  std::string what;
};

struct ValidationReport {
  std::size_t triangle_count = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::vector<EdgeIssue> edge_issues;
  std::vector<DecorationMismatch> decoration_mismatches;
  std::vector<OverlapIssue> overlaps;
  std::vector<LatticeIssue> lattice_issues;

  std::size_t violation_count() const {
    return edge_issues.size() + decoration_mismatches.size() + overlaps.size() + lattice_issues.size();
  }
  bool ok() const { return violation_count() == 0; }
};

/// Checks edge-to-edge matching (no T-junctions, at most two triangles per
/// edge, bases only against bases), leg decorations, pairwise interior
/// disjointness, and that every leg is a phi^scale multiple of a star vector.
ValidationReport validate(const Patch& p);

}  // namespace quasitile
