// Penrose rhombus patches generated by Robinson-triangle deflation.
//
// Every vertex is an exact point of the quasilattice R. Generation starts
// from a seed scaled by phi^n and deflates n times, so intermediate
// vertices stay integral in the Y*-basis and the final patch has unit edges.
#pragma once

#include "quasitile/golden.hpp"
#include "quasitile/quasilattice.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quasitile {

/// Acute = golden triangle (half of a thin rhombus), Obtuse = golden gnomon
/// (half of a thick rhombus).
enum class TriangleType { Acute, Obtuse };
enum class Chirality { Left, Right };
enum class TileKind { Thick, Thin };

std::string_view to_string(TriangleType t);
std::string_view to_string(Chirality c);
std::string_view to_string(TileKind k);

struct RobinsonTriangle {
  TriangleType type = TriangleType::Acute;
  Chirality chirality = Chirality::Left;
  QuasiPoint apex;
  QuasiPoint base1;
  QuasiPoint base2;

  friend bool operator==(const RobinsonTriangle&, const RobinsonTriangle&) = default;
  friend auto operator<=>(const RobinsonTriangle&, const RobinsonTriangle&) = default;
};

/// Translate of one of the ten canonical rhombi: Thick spans Y*_k, Y*_{k+1};
/// Thin spans Y*_k, Y*_{k+2}. The anchor is the corner from which both
/// spanning vectors point into the tile.
struct RhombusTile {
  TileKind kind = TileKind::Thick;
  StarIndex k;
  QuasiPoint anchor;

  /// Star indices (a, b) of the spanning vectors Y*_a, Y*_b.
  std::array<StarIndex, 2> spanning() const;
  /// anchor, anchor + Y*_a, anchor + Y*_a + Y*_b, anchor + Y*_b.
  std::array<QuasiPoint, 4> vertices() const;

  friend bool operator==(const RhombusTile&, const RhombusTile&) = default;
  friend auto operator<=>(const RhombusTile&, const RhombusTile&) = default;
};

/// Arrow marking of one edge. Endpoints are stored in ascending order;
/// dir = +1 means the arrow points from `from` to `to`.
struct EdgeMarking {
  QuasiPoint from;
  QuasiPoint to;
  int arrows = 1;
  int dir = 1;

  friend bool operator==(const EdgeMarking&, const EdgeMarking&) = default;
  friend auto operator<=>(const EdgeMarking&, const EdgeMarking&) = default;
};

struct Patch {
  int scale_power = 0;
  std::vector<RobinsonTriangle> triangles;
  std::vector<RhombusTile> tiles;
  std::vector<EdgeMarking> decorations;

  /// Sorts the triangles canonically and derives tiles and decorations.
  static Patch from_triangles(int scale_power, std::vector<RobinsonTriangle> triangles);

  friend bool operator==(const Patch&, const Patch&) = default;
};

class TilingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ClassificationError : public TilingError {
 public:
  using TilingError::TilingError;
};

// --- triangles ---------------------------------------------------------------

/// Canonical triangle of leg length phi^n: base parallel to Y*_0, apex at
/// `anchor`. Right chirality is the mirror image (bases swapped).
RobinsonTriangle seed(TriangleType type, Chirality chirality, int n, const QuasiPoint& anchor);

/// n such that both legs have length phi^n, or nullopt if the triangle is
/// not a well-formed Robinson triangle at an integral scale.
std::optional<int> leg_scale(const RobinsonTriangle& t);

/// Golden-ratio side/base relation, isosceles legs, and chirality sign.
bool has_valid_shape(const RobinsonTriangle& t);

/// Chirality from the exact orientation of (apex, base1, base2).
Chirality chirality_of(const QuasiPoint& apex, const QuasiPoint& base1, const QuasiPoint& base2);

/// Acute -> {Acute, Obtuse}; Obtuse -> {Obtuse, Obtuse, Acute}. Children
/// have legs shorter by a factor phi. Rejects unit-scale input.
std::vector<RobinsonTriangle> deflate(const RobinsonTriangle& t);

/// Exact (positive) area.
GoldenExt triangle_area(const RobinsonTriangle& t);
GoldenExt total_area(std::span<const RobinsonTriangle> triangles);

// --- patches -----------------------------------------------------------------

enum class SeedPreset { Acute, Obtuse, Sun, Thick, Thin };

std::optional<SeedPreset> parse_seed_preset(std::string_view name);
std::string_view to_string(SeedPreset preset);

/// Seed triangles at scale phi^n. Sun is five thick rhombi around the origin
/// (ten obtuse halves); Thick and Thin are single mirrored half pairs.
std::vector<RobinsonTriangle> preset_triangles(SeedPreset preset, int n);
Patch seed_patch(SeedPreset preset, int n);

Patch deflate_patch(const Patch& p, int steps);

/// seed_patch(preset, depth) deflated `depth` times: a unit-edge patch.
Patch generate(SeedPreset preset, int depth);

struct TriangleCounts {
  std::size_t acute = 0;
  std::size_t obtuse = 0;
};
TriangleCounts count_types(std::span<const RobinsonTriangle> triangles);

// --- rhombi ------------------------------------------------------------------

struct MergeResult {
  std::vector<RhombusTile> tiles;
  std::vector<RobinsonTriangle> unpaired;
};

/// Pairs equal-type triangles that share their base edge from opposite sides.
MergeResult merge_rhombi(std::span<const RobinsonTriangle> triangles);

struct Classification {
  TileKind kind;
  StarIndex k;
  QuasiPoint anchor;
};

/// Identifies four points (any order) as a translate of a canonical rhombus.
/// Throws ClassificationError otherwise.
Classification classify(const std::array<QuasiPoint, 4>& vertices);

// --- decorations ---------------------------------------------------------------

/// Markings of the two legs (apex-base1, apex-base2) induced by the
/// triangle's type and vertex roles.
std::array<EdgeMarking, 2> leg_markings(const RobinsonTriangle& t);
std::vector<EdgeMarking> decorate(std::span<const RobinsonTriangle> triangles);

/// For every vertex, an edge walk along triangle legs from the patch's
/// smallest vertex. Vertex = root + phi^scale * walk_sum(walk).
struct VertexWalks {
  QuasiPoint root;
  std::map<QuasiPoint, std::vector<WalkStep>> walks;
};
VertexWalks vertex_walks(const Patch& p);

}  // namespace quasitile
