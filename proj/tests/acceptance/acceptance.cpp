// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.
#include "groups.hpp"
#include "mutate.hpp"
#include "oracle.hpp"
#include "quasitile/delzant.hpp"
#include "quasitile/descriptor_io.hpp"
#include "quasitile/moment.hpp"
#include "quasitile/patch_io.hpp"
#include "quasitile/tiling.hpp"
#include "quasitile/validate.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace quasitile;

namespace {

// Pinned tolerances.
constexpr double kLambdaTol = 1e-9;
constexpr double kRadiusTol = 1e-6;
// sqrt(rho / 2), frozen from the 50-digit oracle.
constexpr double kRadiusThick = 0.9752213;
constexpr double kRatioTol = 1e-4;
constexpr double kCornerTol = 1e-9;
constexpr double kSliceTol = 1e-9;
constexpr int kSignSamples = 10'000;
constexpr int kMomentGrid = 101;
constexpr std::size_t kSliceSamples = 1000;
constexpr int kDepth = 8;

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << "\n";
  if (!ok) ++failures;
}

template <class F>
void criterion(int n, F&& body) {
  try {
    std::string detail;
    const bool ok = body(detail);
    report(n, ok, detail);
  } catch (const std::exception& e) {
    report(n, false, std::string("exception: ") + e.what());
  }
}

QuasiPoint Ys(int k) { return dual_star(StarIndex(k)); }
QVector Y(int k) { return star(StarIndex(k)); }

const GoldenRat phi = GoldenRat::phi();
const GoldenRat zero(0);

// Random a + b phi concentrated near zero so that signs are hard to call.
GoldenRat near_zero(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1'000'000'000L, 1'000'000'000L);
  std::uniform_int_distribution<long> den(1, 1000);
  std::uniform_int_distribution<long> off(-3, 3);
  const long b = num(rng);
  const long d = den(rng);
  const long a = -std::lround(static_cast<double>(b) * kPhi) + off(rng);
  return GoldenRat(Rational(a, d), Rational(b, d));
}

bool run_cli(const std::string& args, const std::string& stdout_path) {
  const std::string cmd = std::string(QUASITILE_CLI_PATH) + " " + args + " > " + stdout_path;
  return std::system(cmd.c_str()) == 0;
}

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  std::cout << std::boolalpha;

  criterion(1, [](std::string& d) {
    bool ok = phi * phi == phi + GoldenRat(1) && phi.inverse() == phi - GoldenRat(1);
    std::mt19937_64 rng(101);
    int agree = 0;
    for (int i = 0; i < kSignSamples / 2; ++i) {
      const GoldenRat x = near_zero(rng);
      agree += x.sign() == oracle::sign(oracle::value(x));
      const GoldenExt y(near_zero(rng), near_zero(rng));
      agree += y.sign() == oracle::sign(oracle::value(y));
    }
    ok = ok && agree == kSignSamples;
    d = "phi^2 = phi + 1 and 1/phi = phi - 1 exact; " + std::to_string(agree) + "/" + std::to_string(kSignSamples) +
        " exact signs agree with the 50-digit oracle";
    return ok;
  });

  criterion(2, [](std::string& d) {
    const GoldenRat inv_phi = phi - GoldenRat(1);
    bool ok = (Y(0) + Y(1) + Y(2) + Y(3) + Y(4)).is_zero();
    int checked = 0;
    for (int k = 0; k < 5; ++k) {
      for (int j = 0; j < 5; ++j) {
        for (int s : {1, -1}) {
          const QuasiPoint p = s * Ys(j);
          const auto P = [&](int i) { return pair(p, Y(k + i)); };
          ok = ok && P(2) == -P(0) + inv_phi * P(1);
          ok = ok && P(3) == -P(2) - phi * P(0);
          ok = ok && P(4) == -phi * P(2) - P(0);
          checked += 3;
        }
      }
    }
    d = std::to_string(checked) + " pairings of the three normal relations exact for all k mod 5; sum of Y_k = 0";
    return ok;
  });

  const Patch sun = generate(SeedPreset::Sun, kDepth);

  criterion(3, [&](std::string& d) {
    const VertexWalks walks = vertex_walks(sun);
    std::set<QuasiPoint> vertices;
    for (const auto& t : sun.triangles) vertices.insert({t.apex, t.base1, t.base2});
    bool ok = walks.walks.size() == vertices.size();
    std::size_t reproduced = 0;
    for (const auto& [v, steps] : walks.walks) {
      const bool hit = vertices.count(v) && walks.root + walk_sum(steps) == v;
      reproduced += hit;
      ok = ok && hit;
    }
    const MergeResult m = merge_rhombi(sun.triangles);
    std::size_t classified = 0;
    for (const auto& t : m.tiles) {
      const Classification c = classify(t.vertices());
      classified += c.kind == t.kind && c.k == t.k && c.anchor == t.anchor;
    }
    ok = ok && classified == m.tiles.size() && !m.tiles.empty();
    d = "sun depth " + std::to_string(kDepth) + ": " + std::to_string(vertices.size()) + " integer vertices, " +
        std::to_string(reproduced) + " reproduced by edge walks; " + std::to_string(classified) + "/" +
        std::to_string(m.tiles.size()) + " rhombi classified";
    return ok;
  });

  criterion(4, [](std::string& d) {
    Patch p = seed_patch(SeedPreset::Acute, kDepth);
    const GoldenExt area = total_area(p.triangles);
    bool ok = true;
    std::size_t a = 1, o = 0;
    for (int step = 1; step <= kDepth; ++step) {
      p = deflate_patch(p, 1);
      ok = ok && total_area(p.triangles) == area;
      const std::size_t na = a + o, no = a + 2 * o;
      a = na;
      o = no;
      const TriangleCounts c = count_types(p.triangles);
      ok = ok && c.acute == a && c.obtuse == o;
    }
    const TriangleCounts c = count_types(p.triangles);
    const double ratio = static_cast<double>(c.obtuse) / static_cast<double>(c.acute);
    ok = ok && std::abs(ratio - kPhi) < kRatioTol;
    const TriangleCounts c4 = count_types(generate(SeedPreset::Acute, 4).triangles);
    d = "area exact at all " + std::to_string(kDepth) + " steps; counts follow [[1,1],[1,2]]^n (1,0): (" +
        std::to_string(c4.acute) + "," + std::to_string(c4.obtuse) + ") at n=4, (" + std::to_string(c.acute) + "," +
        std::to_string(c.obtuse) + ") at n=8; obtuse/acute = " + std::to_string(ratio);
    return ok;
  });

  criterion(5, [&](std::string& d) {
    bool ok = true;
    std::size_t patches = 0;
    for (auto preset : {SeedPreset::Acute, SeedPreset::Obtuse, SeedPreset::Sun, SeedPreset::Thick, SeedPreset::Thin}) {
      for (int n = 4; n <= 6; ++n) {
        ok = ok && validate(generate(preset, n)).ok();
        ++patches;
      }
    }
    ok = ok && validate(sun).ok();
    ++patches;
    const Patch base = generate(SeedPreset::Sun, 5);
    const auto halves = mutate::interior_rhombus(base);
    std::size_t mismatches = 0;
    if (halves) mismatches = validate(mutate::reflect_tile(base, *halves)).decoration_mismatches.size();
    ok = ok && mismatches >= 1;
    d = std::to_string(patches) + " patches of depth >= 4 with zero violations; reflected tile gives " +
        std::to_string(mismatches) + " decoration mismatches";
    return ok;
  });

  const QuasifoldDescriptor thick = reduced_space(polytope_of_tile(canonical_tile(TileKind::Thick)));
  const QuasifoldDescriptor thin = reduced_space(polytope_of_tile(canonical_tile(TileKind::Thin)));

  criterion(6, [&](std::string& d) {
    const auto& f = thick.spec.facets;
    const GoldenExt lam = GoldenRat(Rational(-1, 2)) * GoldenExt::rho();
    bool ok = f[1].lambda == lam && f[2].lambda == lam;
    ok = ok && std::abs(f[1].lambda.to_double() - (-0.951056516)) < kLambdaTol;
    ok = ok && oracle::close(oracle::value(f[1].lambda), -oracle::rho() / 2);
    ok = ok && thick.kernel.continuous_basis == std::vector<RationalVec4>{{1, 1, 0, 0}, {0, 0, 1, 1}};
    ok = ok && groups::same_mod_z4(thick.kernel.discrete_gens, {{zero, phi, zero, zero}, {zero, zero, zero, phi}});
    ok = ok && thick.charts.at(0).free_pair == std::array<int, 2>{1, 4};
    ok = ok && groups::same_mod_z4(thick.charts[0].group_gens, {{phi, zero, zero, zero}, {zero, zero, zero, phi}});
    ok = ok && thick.radius_sq == GoldenExt(zero, GoldenRat(Rational(1, 2)));
    const double r = std::sqrt(thick.radius_sq.to_double());
    const double r_oracle = boost::multiprecision::sqrt(oracle::rho() / 2).convert_to<double>();
    ok = ok && std::abs(r - kRadiusThick) < kRadiusTol && std::abs(r - r_oracle) < 1e-12 && thick.dimension == 4;
    std::ostringstream os;
    os << std::boolalpha;
    os << std::setprecision(10) << "lambda_2 = lambda_3 = " << f[1].lambda << " = " << f[1].lambda.to_double()
       << "; N and Gamma_{1,4} generated by phi e_j mod Z^4; R^2 = " << thick.radius_sq << ", R = " << r
       << "; dimension " << thick.dimension;
    d = os.str();
    return ok;
  });

  criterion(7, [&](std::string& d) {
    const auto& f = thin.spec.facets;
    const GoldenExt lam = -(GoldenRat(Rational(1, 2)) * phi.inverse()) * GoldenExt::rho();
    bool ok = f[1].lambda == lam && f[2].lambda == lam;
    ok = ok && std::abs(f[1].lambda.to_double() - (-0.587785)) < 1e-6;
    ok = ok && oracle::close(oracle::value(f[1].lambda), -oracle::rho() / (2 * oracle::phi()));
    ok = ok && thin.kernel == thick.kernel;
    ok = ok && thin.radius_sq == GoldenExt(zero, (phi - GoldenRat(1)) * GoldenRat(Rational(1, 2)));
    std::ostringstream os;
    os << std::boolalpha;
    os << std::setprecision(10) << "lambda_2 = lambda_3 = " << f[1].lambda << " = " << f[1].lambda.to_double()
       << "; N(thin) == N(thick); r^2 = " << thin.radius_sq;
    d = os.str();
    return ok;
  });

  criterion(8, [&](std::string& d) {
    bool ok = true;
    for (auto kind : {TileKind::Thick, TileKind::Thin}) {
      for (int k = 0; k < 5; ++k) {
        const RhombusTile t{kind, StarIndex(k), QuasiPoint()};
        const SymmetryOp op = canonical_rotation(t);  // throws unless the normal sets correspond
        ok = ok && apply_symmetry(t, op).k == canonical_tile(kind).k;
      }
    }
    const Patch p = generate(SeedPreset::Acute, kDepth);
    const AnalysisDocument doc = analyze_tiles(p.tiles, true);
    std::set<std::pair<TileKind, int>> orientations;
    std::size_t matched = 0;
    for (const auto& ta : doc.tiles) {
      orientations.insert({ta.tile.kind, ta.tile.k.value()});
      const auto& want = ta.tile.kind == TileKind::Thick ? thick : thin;
      matched += doc.descriptors[ta.descriptor] == want;
    }
    ok = ok && doc.descriptors.size() == 2 && matched == doc.tiles.size();
    d = "10 canonical rotations verified; acute depth " + std::to_string(kDepth) + ": " + std::to_string(doc.tiles.size()) +
        " tiles in " + std::to_string(orientations.size()) + " orientations, " + std::to_string(doc.descriptors.size()) +
        " distinct normalized descriptors, " + std::to_string(matched) + " equal to the canonical thick/thin descriptor";
    return ok;
  });

  criterion(9, [&](std::string& d) {
    const InvariantsReport r = invariants_report(thick, thin);
    const bool ok = r.radius_ratio == GoldenExt(phi) && r.area_ratio == GoldenExt(phi) && r.same_kernel &&
                    r.same_chart_groups;
    std::ostringstream os;
    os << std::boolalpha;
    os << "R^2/r^2 = " << r.radius_ratio << ", area ratio = " << r.area_ratio << ", same N " << r.same_kernel
       << ", same chart groups " << r.same_chart_groups << "; " << r.verdict;
    d = os.str();
    return ok;
  });

  criterion(10, [&](std::string& d) {
    bool ok = true;
    std::size_t outside = 0, slices = 0;
    double corner = 0.0, psi = 0.0, diagram = 0.0;
    for (const auto* desc : {&thick, &thin}) {
      const MomentImage img = moment_image(*desc, kMomentGrid);
      outside += img.outside_count;
      corner = std::max(corner, img.corner_max_error);
      ok = ok && img.all_inside() && img.corners_exact && img.corner_max_error < kCornerTol;
      for (const auto& c : desc->charts) {
        const SliceReport s = chart_slice_check(*desc, c, kSliceSamples, 2024);
        psi = std::max(psi, s.max_psi);
        diagram = std::max(diagram, s.max_diagram_error);
        ok = ok && s.passed(kSliceTol) && s.samples == kSliceSamples;
        ++slices;
      }
    }
    std::ostringstream os;
    os << std::boolalpha;
    os << kMomentGrid << "x" << kMomentGrid << " grid: " << outside << " samples outside, corner error " << corner << "; "
       << slices << " chart slices x " << kSliceSamples << " samples: max |Psi| " << psi << ", max diagram error " << diagram;
    d = os.str();
    return ok;
  });

  criterion(11, [](std::string& d) {
    std::mt19937_64 rng(111);
    const std::array<SeedPreset, 5> presets{SeedPreset::Acute, SeedPreset::Obtuse, SeedPreset::Sun, SeedPreset::Thick,
                                            SeedPreset::Thin};
    bool ok = true;
    int patches = 0, descriptors = 0;
    for (int i = 0; i < 25; ++i) {
      const int scale = static_cast<int>(rng() % 7);
      const int steps = static_cast<int>(rng() % static_cast<std::uint64_t>(scale + 1));
      const Patch p = deflate_patch(seed_patch(presets[rng() % 5], scale), steps);
      ok = ok && deserialize(serialize(p)) == p;
      ++patches;
    }
    std::uniform_int_distribution<Coord> c(-10'000, 10'000);
    for (int i = 0; i < 25; ++i) {
      const RhombusTile t{rng() % 2 ? TileKind::Thick : TileKind::Thin, StarIndex(static_cast<int>(rng() % 5)),
                          QuasiPoint(c(rng), c(rng), c(rng), c(rng))};
      for (const auto& desc : {raw_descriptor(t), normalized_descriptor(t)}) {
        ok = ok && deserialize_descriptor(serialize_descriptor(desc)) == desc;
        ++descriptors;
      }
    }
    const auto dir = std::filesystem::temp_directory_path() / "quasitile_acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const std::string w = dir.string() + "/";
    bool cli = true;
    for (int pass : {1, 2}) {
      const std::string s = std::to_string(pass);
      cli = cli && run_cli("gen --seed sun --depth 5 -o " + w + "patch" + s + ".json", w + "gen" + s + ".out");
      cli = cli && run_cli("analyze " + w + "patch1.json -o " + w + "analysis" + s + ".json", w + "analyze" + s + ".out");
      cli = cli && run_cli("render " + w + "patch1.json --decorations --overlay-moment 0", w + "render" + s + ".out");
    }
    for (const std::string f : {"patch", "gen", "analysis", "analyze", "render"}) {
      const std::string ext = f == "patch" || f == "analysis" ? ".json" : ".out";
      const std::string a = slurp(w + f + "1" + ext);
      cli = cli && !a.empty() && a == slurp(w + f + "2" + ext);
    }
    std::filesystem::remove_all(dir);
    ok = ok && cli;
    d = std::to_string(patches) + " random patches and " + std::to_string(descriptors) +
        " random descriptors round-trip; repeated CLI runs byte-identical: " + (cli ? "yes" : "no");
    return ok;
  });

  return failures;
}
