#include "json.hpp"
#include "quasitile/descriptor_io.hpp"
#include "quasitile/patch_io.hpp"
#include "quasitile/svg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace quasitile;
using Json = nlohmann::ordered_json;

namespace {

Patch random_patch(std::mt19937_64& rng) {
  const std::array<SeedPreset, 5> presets{SeedPreset::Acute, SeedPreset::Obtuse, SeedPreset::Sun, SeedPreset::Thick,
                                          SeedPreset::Thin};
  const SeedPreset preset = presets[rng() % presets.size()];
  const int scale = static_cast<int>(rng() % 6);
  const int steps = static_cast<int>(rng() % static_cast<std::uint64_t>(scale + 1));
  return deflate_patch(seed_patch(preset, scale), steps);
}

RhombusTile random_tile(std::mt19937_64& rng) {
  std::uniform_int_distribution<Coord> d(-1000, 1000);
  return RhombusTile{rng() % 2 ? TileKind::Thick : TileKind::Thin, StarIndex(static_cast<int>(rng() % 5)),
                     QuasiPoint(d(rng), d(rng), d(rng), d(rng))};
}

std::string expect_parse_error(const std::string& text) {
  try {
    deserialize(text);
  } catch (const ParseError& e) {
    return e.location();
  }
  ADD_FAILURE() << "no ParseError";
  return {};
}

}  // namespace

TEST(PatchIo, RoundTripRandomPatches) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const Patch p = random_patch(rng);
    const std::string text = serialize(p);
    const Patch q = deserialize(text);
    EXPECT_EQ(p, q);
    EXPECT_EQ(serialize(q), text);
  }
}

TEST(PatchIo, EmptyPatch) {
  const Patch p;
  EXPECT_EQ(deserialize(serialize(p)), p);
}

TEST(PatchIo, OneKeyPerLine) {
  const std::string text = serialize(generate(SeedPreset::Thick, 1));
  EXPECT_EQ(text.substr(0, 2), "{\n");
  EXPECT_NE(text.find("\n  \"version\": 1,\n"), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

TEST(PatchIo, Rejections) {
  const Json good = Json::parse(serialize(generate(SeedPreset::Thin, 2)));

  Json j = good;
  j["extra"] = 1;
  EXPECT_EQ(expect_parse_error(j.dump()), "/extra");

  j = good;
  j["version"] = 2;
  EXPECT_EQ(expect_parse_error(j.dump()), "/version");

  j = good;
  j["triangles"][0]["colour"] = "red";
  EXPECT_EQ(expect_parse_error(j.dump()), "/triangles/0/colour");

  j = good;
  j["triangles"][1]["type"] = "right";
  EXPECT_EQ(expect_parse_error(j.dump()), "/triangles/1/type");

  j = good;
  j["triangles"][0]["apex"] = Json::array({1, 2, 3});
  EXPECT_EQ(expect_parse_error(j.dump()).rfind("/triangles/0/apex", 0), 0u);

  j = good;
  j["tiles"].erase(0);
  EXPECT_EQ(expect_parse_error(j.dump()), "/tiles");

  j = good;
  j["decorations"][0]["dir"] = -j["decorations"][0]["dir"].get<int>();
  EXPECT_EQ(expect_parse_error(j.dump()), "/decorations");

  j = good;
  j["triangles"][0]["chirality"] = j["triangles"][0]["chirality"] == "left" ? "right" : "left";
  EXPECT_EQ(expect_parse_error(j.dump()), "/triangles/0");

  EXPECT_THROW(deserialize("{\"version\": 1,"), ParseError);
  EXPECT_THROW(deserialize("[]"), ParseError);
}

TEST(DescriptorIo, RoundTripRandomDescriptors) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 30; ++i) {
    const RhombusTile t = random_tile(rng);
    for (const auto& d : {raw_descriptor(t), normalized_descriptor(t)}) {
      const std::string text = serialize_descriptor(d);
      const QuasifoldDescriptor back = deserialize_descriptor(text);
      EXPECT_EQ(back, d);
      EXPECT_EQ(serialize_descriptor(back), text);
    }
  }
}

TEST(DescriptorIo, InconsistentDescriptorIsRejected) {
  const Json good = Json::parse(serialize_descriptor(normalized_descriptor(canonical_tile(TileKind::Thick))));
  Json j = good;
  j["descriptor"]["dimension"] = 6;
  EXPECT_THROW(deserialize_descriptor(j.dump()), ParseError);
  j = good;
  j["descriptor"]["radius_sq"] = good["descriptor"]["polytope_area"];
  j["descriptor"]["radius_sq"]["v"] = Json::array({1, 3, 0, 1});
  EXPECT_THROW(deserialize_descriptor(j.dump()), ParseError);
  j = good;
  j["descriptor"]["charts"][0]["gens"].erase(0);
  EXPECT_THROW(deserialize_descriptor(j.dump()), ParseError);
}

TEST(AnalysisIo, RoundTripAndDedup) {
  const Patch p = generate(SeedPreset::Sun, 4);
  const AnalysisDocument doc = analyze_tiles(p.tiles, true);
  EXPECT_EQ(doc.descriptors.size(), 2u);
  EXPECT_EQ(doc.tiles.size(), p.tiles.size());
  const std::string text = serialize_analysis(doc);
  EXPECT_EQ(deserialize_analysis(text), doc);

  const AnalysisDocument raw = analyze_tiles(std::span(p.tiles).first(6), false);
  EXPECT_EQ(raw.descriptors.size(), 6u);
  EXPECT_EQ(deserialize_analysis(serialize_analysis(raw)), raw);
}

TEST(AnalysisIo, SummaryIsChecked) {
  const Patch p = generate(SeedPreset::Thick, 2);
  Json j = Json::parse(serialize_analysis(analyze_tiles(p.tiles, true)));
  j["tiles"][0]["descriptor"] = 7;
  EXPECT_THROW(deserialize_analysis(j.dump()), ParseError);
}

TEST(Svg, DeterministicAndComplete) {
  const Patch p = generate(SeedPreset::Sun, 3);
  SvgOptions o;
  o.decorations = true;
  o.overlay_tile = 0;
  const std::string a = render_svg(p, o);
  EXPECT_EQ(a, render_svg(p, o));
  EXPECT_EQ(a.rfind("<svg", 0) == 0 || a.rfind("<?xml", 0) == 0, true);
  std::size_t polygons = 0;
  for (std::size_t pos = a.find("class=\"tile "); pos != std::string::npos; pos = a.find("class=\"tile ", pos + 1)) ++polygons;
  EXPECT_EQ(polygons, p.tiles.size());
}
