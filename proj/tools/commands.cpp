#include "commands.hpp"

#include "json.hpp"
#include "quasitile/delzant.hpp"
#include "quasitile/descriptor_io.hpp"
#include "quasitile/patch_io.hpp"
#include "quasitile/svg.hpp"
#include "quasitile/tiling.hpp"
#include "quasitile/validate.hpp"

#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace quasitile::cli {

namespace {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error writing '" + path + "'");
}

Patch load_patch(const std::string& path) {
  try {
    return deserialize(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.location(), path + ": " + e.what());
  }
}

void emit_json(const CliConfig& c, std::ostream& err, const Json& report) {
  if (c.json) err << report.dump() << "\n";
}

std::string ratio_string(std::size_t num, std::size_t den) {
  if (den == 0) return "n/a";
  std::ostringstream os;
  os << std::setprecision(12) << static_cast<double>(num) / static_cast<double>(den);
  return os.str();
}

// Tiles from merging the triangles; a tile-only patch keeps its stored tiles.
std::vector<RhombusTile> patch_tiles(const Patch& p) {
  if (p.triangles.empty()) return p.tiles;
  if (p.scale_power != 0) throw TilingError("patch has scale power " + std::to_string(p.scale_power) + "; deflate it to unit edges first");
  return merge_rhombi(p.triangles).tiles;
}

std::string tile_string(const RhombusTile& t) {
  return std::string(to_string(t.kind)) + " k=" + std::to_string(t.k.value()) + " anchor=" + t.anchor.to_string();
}

std::string descriptor_label(const QuasifoldDescriptor& d) {
  const GoldenExt half_rho(GoldenRat(0), GoldenRat(Rational(1, 2)));
  const GoldenExt thin_r2(GoldenRat(0), GoldenRat(Rational(-1, 2), Rational(1, 2)));
  if (d.radius_sq == half_rho) return "thick (M_R)";
  if (d.radius_sq == thin_r2) return "thin (M_r)";
  return "other";
}

QuasifoldDescriptor load_descriptor(const std::string& path, std::size_t tile) {
  const std::string text = read_file(path);
  try {
    const Json probe = Json::parse(text);
    if (probe.is_object() && probe.contains("descriptor")) return deserialize_descriptor(text);
    const AnalysisDocument doc = deserialize_analysis(text);
    if (tile >= doc.tiles.size()) {
      throw IoError(path + ": tile " + std::to_string(tile) + " out of range (" + std::to_string(doc.tiles.size()) + " tiles)");
    }
    return doc.descriptors[doc.tiles[tile].descriptor];
  } catch (const Json::parse_error& e) {
    throw ParseError("", path + ": invalid JSON: " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(e.location(), path + ": " + e.what());
  }
}

}  // namespace

int run_gen(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const auto preset = parse_seed_preset(c.seed_name);
  if (!preset) throw std::invalid_argument("unknown seed '" + c.seed_name + "' (acute, obtuse, sun, thick, thin)");
  if (c.depth < 0) throw std::invalid_argument("depth must be non-negative");
  const Patch p = generate(*preset, c.depth);
  if (!c.output.empty()) write_file(c.output, serialize(p));
  const TriangleCounts n = count_types(p.triangles);
  out << "seed " << c.seed_name << " depth " << c.depth << ": " << p.triangles.size() << " triangles (" << n.acute
      << " acute, " << n.obtuse << " obtuse), obtuse/acute = " << ratio_string(n.obtuse, n.acute) << ", " << p.tiles.size()
      << " rhombi\n";
  Json j = Json::object();
  j["command"] = "gen";
  j["ok"] = true;
  j["triangles"] = p.triangles.size();
  j["acute"] = n.acute;
  j["obtuse"] = n.obtuse;
  j["tiles"] = p.tiles.size();
  emit_json(c, err, j);
  return kExitOk;
}

int run_validate(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const Patch p = load_patch(c.input);
  const ValidationReport r = validate(p);
  out << r.triangle_count << " triangles, " << r.vertex_count << " vertices, " << r.edge_count << " edges\n";
  for (const auto& e : r.edge_issues) out << "edge " << e.a.to_string() << " - " << e.b.to_string() << ": " << e.what << "\n";
  for (const auto& m : r.decoration_mismatches) {
    out << "decoration mismatch on " << m.first.from.to_string() << " - " << m.first.to.to_string() << ": (" << m.first.arrows
        << ", " << m.first.dir << ") vs (" << m.second.arrows << ", " << m.second.dir << ")\n";
  }
  for (const auto& o : r.overlaps) out << "overlap between triangles " << o.first << " and " << o.second << "\n";
  for (const auto& l : r.lattice_issues) out << "lattice " << l.a.to_string() << " - " << l.b.to_string() << ": " << l.what << "\n";
  out << (r.ok() ? "valid" : "INVALID") << ": " << r.violation_count() << " violations\n";
  Json j = Json::object();
  j["command"] = "validate";
  j["ok"] = r.ok();
  j["triangles"] = r.triangle_count;
  j["edge_issues"] = r.edge_issues.size();
  j["decoration_mismatches"] = r.decoration_mismatches.size();
  j["overlaps"] = r.overlaps.size();
  j["lattice_issues"] = r.lattice_issues.size();
  emit_json(c, err, j);
  return r.ok() ? kExitOk : kExitViolations;
}

int run_classify(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const Patch p = load_patch(c.input);
  if (!p.triangles.empty() && p.scale_power != 0) throw TilingError("classify needs a unit-edge patch");
  const MergeResult m = p.triangles.empty() ? MergeResult{p.tiles, {}} : merge_rhombi(p.triangles);
  std::size_t thick = 0;
  for (std::size_t i = 0; i < m.tiles.size(); ++i) {
    const auto& t = m.tiles[i];
    // Re-derive from the vertex set as an independent check.
    const Classification cl = classify(t.vertices());
    if (cl.kind != t.kind || cl.k != t.k || cl.anchor != t.anchor) throw ClassificationError("tile " + std::to_string(i) + " misclassified");
    thick += t.kind == TileKind::Thick;
    out << "tile " << i << ": " << tile_string(t) << "\n";
  }
  out << m.tiles.size() << " rhombi (" << thick << " thick, " << m.tiles.size() - thick << " thin), " << m.unpaired.size()
      << " unpaired halves\n";
  Json j = Json::object();
  j["command"] = "classify";
  j["ok"] = true;
  j["tiles"] = m.tiles.size();
  j["thick"] = thick;
  j["thin"] = m.tiles.size() - thick;
  j["unpaired"] = m.unpaired.size();
  emit_json(c, err, j);
  return kExitOk;
}

int run_analyze(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const Patch p = load_patch(c.input);
  const std::vector<RhombusTile> tiles = patch_tiles(p);
  const AnalysisDocument doc = analyze_tiles(tiles, !c.raw);
  if (!c.output.empty()) write_file(c.output, serialize_analysis(doc));
  out << doc.tiles.size() << " tiles, " << doc.descriptors.size() << " distinct " << (c.raw ? "raw" : "normalized")
      << " descriptors\n";
  if (!c.raw) {
    for (std::size_t i = 0; i < doc.descriptors.size(); ++i) {
      const auto& d = doc.descriptors[i];
      std::size_t users = 0;
      for (const auto& t : doc.tiles) users += t.descriptor == i;
      out << "descriptor " << i << ": " << descriptor_label(d) << ", radius_sq = " << d.radius_sq << ", area = " << d.polytope_area
          << ", gamma rank " << d.gamma_rank << ", dimension " << d.dimension << ", " << users << " tiles\n";
    }
  }
  Json j = Json::object();
  j["command"] = "analyze";
  j["ok"] = true;
  j["tiles"] = doc.tiles.size();
  j["distinct_descriptors"] = doc.descriptors.size();
  emit_json(c, err, j);
  return kExitOk;
}

int run_report(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const QuasifoldDescriptor a = load_descriptor(c.input, c.tile_a);
  const QuasifoldDescriptor b = load_descriptor(c.input_b, c.tile_b);
  const InvariantsReport r = invariants_report(a, b);
  out << "A: " << descriptor_label(a) << ", radius_sq = " << a.radius_sq << "\n";
  out << "B: " << descriptor_label(b) << ", radius_sq = " << b.radius_sq << "\n";
  out << format_report(r);
  Json j = Json::object();
  j["command"] = "report";
  j["ok"] = true;
  j["radius_ratio"] = r.radius_ratio.to_string();
  j["area_ratio"] = r.area_ratio.to_string();
  j["same_kernel"] = r.same_kernel;
  j["same_chart_groups"] = r.same_chart_groups;
  j["verdict"] = r.verdict;
  emit_json(c, err, j);
  return kExitOk;
}

int run_render(const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (c.grid < 2) throw std::invalid_argument("grid must be at least 2");
  const Patch p = load_patch(c.input);
  SvgOptions opt;
  opt.decorations = c.decorations;
  opt.overlay_tile = c.overlay_tile;
  opt.grid = c.grid;
  const std::string svg = render_svg(p, opt);
  if (c.output.empty()) {
    out << svg;
  } else {
    write_file(c.output, svg);
    out << "wrote " << c.output << " (" << p.tiles.size() << " tiles)\n";
  }
  Json j = Json::object();
  j["command"] = "render";
  j["ok"] = true;
  j["tiles"] = p.tiles.size();
  emit_json(c, err, j);
  return kExitOk;
}

int run(const CliConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.command) {
      case Command::Gen: return run_gen(c, out, err);
      case Command::Validate: return run_validate(c, out, err);
      case Command::Classify: return run_classify(c, out, err);
      case Command::Analyze: return run_analyze(c, out, err);
      case Command::Report: return run_report(c, out, err);
      case Command::Render: return run_render(c, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    if (c.json) {
      Json j = Json::object();
      j["ok"] = false;
      j["error"] = e.what();
      err << j.dump() << "\n";
    }
    return kExitError;
  }
  return kExitError;
}

}  // namespace quasitile::cli
