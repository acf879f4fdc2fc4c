#include "quasitile/descriptor_io.hpp"

#include "json_util.hpp"

#include <map>
#include <sstream>

namespace quasitile {

using detail::at;
using detail::Json;

namespace {

Json golden_vec_json(const GoldenVec4& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(detail::to_json(x));
  return j;
}

GoldenVec4 golden_vec_from_json(const Json& j, const std::string& where) {
  detail::expect_array(j, where, 4);
  GoldenVec4 v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = detail::golden_from_json(j[i], at(where, i));
  return v;
}

Json descriptor_json(const QuasifoldDescriptor& d) {
  Json spec = Json::object();
  spec["facets"] = Json::array();
  for (const auto& f : d.spec.facets) {
    Json fj = Json::object();
    fj["normal"] = detail::to_json(f.normal);
    fj["lambda"] = detail::to_json(f.lambda);
    spec["facets"].push_back(std::move(fj));
  }
  Json kernel = Json::object();
  kernel["continuous"] = Json::array();
  for (const auto& v : d.kernel.continuous_basis) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(detail::to_json(x));
    kernel["continuous"].push_back(std::move(row));
  }
  kernel["discrete"] = Json::array();
  for (const auto& g : d.kernel.discrete_gens) kernel["discrete"].push_back(golden_vec_json(g));

  Json charts = Json::array();
  for (const auto& c : d.charts) {
    Json cj = Json::object();
    cj["pair"] = Json::array({c.free_pair[0], c.free_pair[1]});
    Json vertex = Json::array();
    for (const auto& x : c.vertex.coords()) vertex.push_back(detail::to_json(x));
    cj["vertex"] = std::move(vertex);
    cj["radius_sq"] = detail::to_json(c.ball_radius_sq);
    cj["gens"] = Json::array();
    for (const auto& g : c.group_gens) cj["gens"].push_back(golden_vec_json(g));
    charts.push_back(std::move(cj));
  }

  Json j = Json::object();
  j["spec"] = std::move(spec);
  j["kernel"] = std::move(kernel);
  j["gamma_rank"] = d.gamma_rank;
  j["charts"] = std::move(charts);
  j["radius_sq"] = detail::to_json(d.radius_sq);
  j["polytope_area"] = detail::to_json(d.polytope_area);
  j["dimension"] = d.dimension;
  return j;
}

QuasifoldDescriptor descriptor_from_json(const Json& j, const std::string& where) {
  detail::expect_object(j, where, {"spec", "kernel", "gamma_rank", "charts", "radius_sq", "polytope_area", "dimension"});
  QuasifoldDescriptor d;

  const std::string ws = at(where, "spec");
  const Json& spec = detail::member(j, "spec", where);
  detail::expect_object(spec, ws, {"facets"});
  const Json& facets = detail::expect_array(detail::member(spec, "facets", ws), at(ws, "facets"));
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string wf = at(at(ws, "facets"), i);
    detail::expect_object(facets[i], wf, {"normal", "lambda"});
    d.spec.facets.push_back(Facet{detail::qvector_from_json(detail::member(facets[i], "normal", wf), at(wf, "normal")),
                                  detail::ext_from_json(detail::member(facets[i], "lambda", wf), at(wf, "lambda"))});
  }

  const std::string wk = at(where, "kernel");
  const Json& kernel = detail::member(j, "kernel", where);
  detail::expect_object(kernel, wk, {"continuous", "discrete"});
  const Json& cont = detail::expect_array(detail::member(kernel, "continuous", wk), at(wk, "continuous"));
  for (std::size_t i = 0; i < cont.size(); ++i) {
    const std::string wr = at(at(wk, "continuous"), i);
    detail::expect_array(cont[i], wr, 4);
    RationalVec4 v;
    for (std::size_t c = 0; c < 4; ++c) v[c] = detail::rational_from_json(cont[i][c], at(wr, c));
    d.kernel.continuous_basis.push_back(std::move(v));
  }
  const Json& disc = detail::expect_array(detail::member(kernel, "discrete", wk), at(wk, "discrete"));
  for (std::size_t i = 0; i < disc.size(); ++i) {
    d.kernel.discrete_gens.push_back(golden_vec_from_json(disc[i], at(at(wk, "discrete"), i)));
  }

  d.gamma_rank = detail::get_int_in(detail::member(j, "gamma_rank", where), at(where, "gamma_rank"), 0, 64);

  const std::string wc = at(where, "charts");
  const Json& charts = detail::expect_array(detail::member(j, "charts", where), wc);
  for (std::size_t i = 0; i < charts.size(); ++i) {
    const std::string w = at(wc, i);
    detail::expect_object(charts[i], w, {"pair", "vertex", "radius_sq", "gens"});
    ChartData c;
    const Json& pr = detail::expect_array(detail::member(charts[i], "pair", w), at(w, "pair"), 2);
    c.free_pair = {detail::get_int_in(pr[0], at(at(w, "pair"), 0), 1, 4), detail::get_int_in(pr[1], at(at(w, "pair"), 1), 1, 4)};
    c.vertex = GoldenQuasiPoint(golden_vec_from_json(detail::member(charts[i], "vertex", w), at(w, "vertex")));
    c.ball_radius_sq = detail::ext_from_json(detail::member(charts[i], "radius_sq", w), at(w, "radius_sq"));
    const Json& gens = detail::expect_array(detail::member(charts[i], "gens", w), at(w, "gens"));
    for (std::size_t g = 0; g < gens.size(); ++g) c.group_gens.push_back(golden_vec_from_json(gens[g], at(at(w, "gens"), g)));
    d.charts.push_back(std::move(c));
  }
  d.radius_sq = detail::ext_from_json(detail::member(j, "radius_sq", where), at(where, "radius_sq"));
  d.polytope_area = detail::ext_from_json(detail::member(j, "polytope_area", where), at(where, "polytope_area"));
  d.dimension = detail::get_int_in(detail::member(j, "dimension", where), at(where, "dimension"), 0, 64);

  QuasifoldDescriptor expected;
  try {
    expected = reduced_space(d.spec);
  } catch (const DelzantError& e) {
    detail::fail(at(where, "spec"), e.what());
  }
  if (!(expected == d)) detail::fail(where, "descriptor data inconsistent with its facets");
  return d;
}

Json tile_json(const TileAnalysis& t, std::size_t id) {
  Json j = Json::object();
  j["id"] = id;
  j["kind"] = std::string(to_string(t.tile.kind));
  j["k"] = t.tile.k.value();
  j["anchor"] = detail::to_json(t.tile.anchor);
  j["descriptor"] = t.descriptor;
  return j;
}

}  // namespace

AnalysisDocument analyze_tiles(std::span<const RhombusTile> tiles, bool normalized) {
  AnalysisDocument doc;
  doc.normalized = normalized;
  std::map<std::string, std::size_t> seen;  // structural key -> index
  for (const auto& t : tiles) {
    QuasifoldDescriptor d = normalized ? normalized_descriptor(t) : raw_descriptor(t);
    auto [it, fresh] = seen.emplace(descriptor_json(d).dump(), doc.descriptors.size());
    if (fresh) doc.descriptors.push_back(std::move(d));
    doc.tiles.push_back(TileAnalysis{t, it->second});
  }
  return doc;
}

std::string serialize_descriptor(const QuasifoldDescriptor& d) {
  Json doc = Json::object();
  doc["version"] = kFormatVersion;
  doc["descriptor"] = descriptor_json(d);
  return doc.dump(1) + "\n";
}

QuasifoldDescriptor deserialize_descriptor(std::string_view text) {
  const Json doc = detail::parse_document(text);
  detail::expect_object(doc, "", {"version", "descriptor"});
  detail::expect_version(doc);
  return descriptor_from_json(detail::member(doc, "descriptor", ""), "/descriptor");
}

std::string serialize_analysis(const AnalysisDocument& a) {
  std::size_t thick = 0;
  for (const auto& t : a.tiles) thick += t.tile.kind == TileKind::Thick;
  Json summary = Json::object();
  summary["tiles"] = a.tiles.size();
  summary["thick"] = thick;
  summary["thin"] = a.tiles.size() - thick;
  summary["distinct_descriptors"] = a.descriptors.size();

  Json doc = Json::object();
  doc["version"] = kFormatVersion;
  doc["normalized"] = a.normalized;
  doc["summary"] = std::move(summary);
  doc["descriptors"] = Json::array();
  for (const auto& d : a.descriptors) doc["descriptors"].push_back(descriptor_json(d));
  doc["tiles"] = Json::array();
  for (std::size_t i = 0; i < a.tiles.size(); ++i) doc["tiles"].push_back(tile_json(a.tiles[i], i));
  return detail::dump_document(doc);
}

AnalysisDocument deserialize_analysis(std::string_view text) {
  const Json doc = detail::parse_document(text);
  detail::expect_object(doc, "", {"version", "normalized", "summary", "descriptors", "tiles"});
  detail::expect_version(doc);
  AnalysisDocument a;
  a.normalized = detail::get_bool(detail::member(doc, "normalized", ""), "/normalized");

  const Json& descs = detail::expect_array(detail::member(doc, "descriptors", ""), "/descriptors");
  for (std::size_t i = 0; i < descs.size(); ++i) a.descriptors.push_back(descriptor_from_json(descs[i], at("/descriptors", i)));

  const Json& tiles = detail::expect_array(detail::member(doc, "tiles", ""), "/tiles");
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const std::string w = at("/tiles", i);
    detail::expect_object(tiles[i], w, {"id", "kind", "k", "anchor", "descriptor"});
    if (detail::get_int(detail::member(tiles[i], "id", w), at(w, "id")) != static_cast<std::int64_t>(i)) {
      detail::fail(at(w, "id"), "tile ids must be consecutive from 0");
    }
    const std::string kind = detail::get_string(detail::member(tiles[i], "kind", w), at(w, "kind"));
    if (kind != "thick" && kind != "thin") detail::fail(at(w, "kind"), "expected \"thick\" or \"thin\"");
    TileAnalysis t;
    t.tile = RhombusTile{kind == "thick" ? TileKind::Thick : TileKind::Thin,
                         StarIndex(detail::get_int_in(detail::member(tiles[i], "k", w), at(w, "k"), 0, 4)),
                         detail::point_from_json(detail::member(tiles[i], "anchor", w), at(w, "anchor"))};
    const std::int64_t di = detail::get_int(detail::member(tiles[i], "descriptor", w), at(w, "descriptor"));
    if (di < 0 || static_cast<std::size_t>(di) >= a.descriptors.size()) detail::fail(at(w, "descriptor"), "descriptor index out of range");
    t.descriptor = static_cast<std::size_t>(di);
    a.tiles.push_back(std::move(t));
  }

  // The summary is derived; it must agree with the content.
  const Json& summary = detail::member(doc, "summary", "");
  detail::expect_object(summary, "/summary", {"tiles", "thick", "thin", "distinct_descriptors"});
  const Json expected = detail::parse_document(serialize_analysis(a))["summary"];
  if (summary != expected) detail::fail("/summary", "summary does not match the tiles");
  return a;
}

std::string format_report(const InvariantsReport& r) {
  std::ostringstream os;
  os << "radius_sq ratio A/B: " << r.radius_ratio << " ~ " << r.radius_ratio.to_double() << "\n";
  os << "polytope area ratio A/B: " << r.area_ratio << " ~ " << r.area_ratio.to_double() << "\n";
  os << "group N identical: " << (r.same_kernel ? "yes" : "no") << "\n";
  os << "chart groups identical: " << (r.same_chart_groups ? "yes" : "no") << "\n";
  os << "verdict: " << r.verdict << "\n";
  return os.str();
}

}  // namespace quasitile
