#include "quasitile/patch_io.hpp"

#include "json_util.hpp"

namespace quasitile {

using detail::at;
using detail::Json;

namespace {

Json triangle_json(const RobinsonTriangle& t) {
  Json j = Json::object();
  j["type"] = std::string(to_string(t.type));
  j["chirality"] = std::string(to_string(t.chirality));
  j["apex"] = detail::to_json(t.apex);
  j["base1"] = detail::to_json(t.base1);
  j["base2"] = detail::to_json(t.base2);
  return j;
}

Json tile_json(const RhombusTile& t) {
  Json j = Json::object();
  j["kind"] = std::string(to_string(t.kind));
  j["k"] = t.k.value();
  j["anchor"] = detail::to_json(t.anchor);
  return j;
}

Json marking_json(const EdgeMarking& m) {
  Json j = Json::object();
  j["edge"] = Json::array({detail::to_json(m.from), detail::to_json(m.to)});
  j["arrows"] = m.arrows;
  j["dir"] = m.dir;
  return j;
}

RobinsonTriangle triangle_from_json(const Json& j, const std::string& where) {
  detail::expect_object(j, where, {"type", "chirality", "apex", "base1", "base2"});
  RobinsonTriangle t;
  const std::string type = detail::get_string(detail::member(j, "type", where), at(where, "type"));
  if (type == "acute") {
    t.type = TriangleType::Acute;
  } else if (type == "obtuse") {
    t.type = TriangleType::Obtuse;
  } else {
    detail::fail(at(where, "type"), "expected \"acute\" or \"obtuse\"");
  }
  const std::string chir = detail::get_string(detail::member(j, "chirality", where), at(where, "chirality"));
  if (chir == "left") {
    t.chirality = Chirality::Left;
  } else if (chir == "right") {
    t.chirality = Chirality::Right;
  } else {
    detail::fail(at(where, "chirality"), "expected \"left\" or \"right\"");
  }
  t.apex = detail::point_from_json(detail::member(j, "apex", where), at(where, "apex"));
  t.base1 = detail::point_from_json(detail::member(j, "base1", where), at(where, "base1"));
  t.base2 = detail::point_from_json(detail::member(j, "base2", where), at(where, "base2"));
  if (!has_valid_shape(t)) detail::fail(where, "not a Robinson triangle of the stated type and chirality");
  return t;
}

}  // namespace

std::string serialize(const Patch& p) {
  Json doc = Json::object();
  doc["version"] = kFormatVersion;
  doc["scale_power"] = p.scale_power;
  doc["triangles"] = Json::array();
  for (const auto& t : p.triangles) doc["triangles"].push_back(triangle_json(t));
  doc["tiles"] = Json::array();
  for (const auto& t : p.tiles) doc["tiles"].push_back(tile_json(t));
  doc["decorations"] = Json::array();
  for (const auto& m : p.decorations) doc["decorations"].push_back(marking_json(m));
  return detail::dump_document(doc);
}

Patch deserialize(std::string_view text) {
  const Json doc = detail::parse_document(text);
  detail::expect_object(doc, "", {"version", "scale_power", "triangles", "tiles", "decorations"});
  detail::expect_version(doc);
  const int scale = detail::get_int_in(detail::member(doc, "scale_power", ""), "/scale_power", 0, 1000);

  const Json& tris = detail::expect_array(detail::member(doc, "triangles", ""), "/triangles");
  std::vector<RobinsonTriangle> triangles;
  triangles.reserve(tris.size());
  for (std::size_t i = 0; i < tris.size(); ++i) triangles.push_back(triangle_from_json(tris[i], at("/triangles", i)));

  Patch p;
  try {
    p = Patch::from_triangles(scale, std::move(triangles));
  } catch (const TilingError& e) {
    detail::fail("/triangles", e.what());
  }

  const Json& tiles = detail::expect_array(detail::member(doc, "tiles", ""), "/tiles");
  std::vector<RhombusTile> read_tiles;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const std::string where = at("/tiles", i);
    detail::expect_object(tiles[i], where, {"kind", "k", "anchor"});
    const std::string kind = detail::get_string(detail::member(tiles[i], "kind", where), at(where, "kind"));
    if (kind != "thick" && kind != "thin") detail::fail(at(where, "kind"), "expected \"thick\" or \"thin\"");
    read_tiles.push_back(RhombusTile{kind == "thick" ? TileKind::Thick : TileKind::Thin,
                                     StarIndex(detail::get_int_in(detail::member(tiles[i], "k", where), at(where, "k"), 0, 4)),
                                     detail::point_from_json(detail::member(tiles[i], "anchor", where), at(where, "anchor"))});
  }
  if (read_tiles != p.tiles) detail::fail("/tiles", "tiles do not match the merged triangles");

  const Json& decs = detail::expect_array(detail::member(doc, "decorations", ""), "/decorations");
  std::vector<EdgeMarking> read_decs;
  for (std::size_t i = 0; i < decs.size(); ++i) {
    const std::string where = at("/decorations", i);
    detail::expect_object(decs[i], where, {"edge", "arrows", "dir"});
    const Json& edge = detail::expect_array(detail::member(decs[i], "edge", where), at(where, "edge"), 2);
    EdgeMarking m;
    m.from = detail::point_from_json(edge[0], at(at(where, "edge"), 0));
    m.to = detail::point_from_json(edge[1], at(at(where, "edge"), 1));
    m.arrows = detail::get_int_in(detail::member(decs[i], "arrows", where), at(where, "arrows"), 1, 2);
    m.dir = detail::get_int_in(detail::member(decs[i], "dir", where), at(where, "dir"), -1, 1);
    if (m.dir == 0) detail::fail(at(where, "dir"), "expected +1 or -1");
    read_decs.push_back(std::move(m));
  }
  if (read_decs != p.decorations) detail::fail("/decorations", "decorations do not match the triangles");
  return p;
}

}  // namespace quasitile
