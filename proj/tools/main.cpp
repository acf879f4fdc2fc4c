#include "commands.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using quasitile::cli::CliConfig;
  using quasitile::cli::Command;

  CLI::App app{"Exact Penrose rhombus tilings and their symplectic quasifolds"};
  app.require_subcommand(1);
  CliConfig cfg;
  app.add_flag("--json", cfg.json, "Write a machine-readable report to stderr");

  auto* gen = app.add_subcommand("gen", "Generate a patch by deflation");
  gen->add_option("--seed", cfg.seed_name, "Seed: acute, obtuse, sun, thick, thin")->capture_default_str();
  gen->add_option("--depth", cfg.depth, "Number of deflations")->check(CLI::NonNegativeNumber)->capture_default_str();
  gen->add_option("-o,--output", cfg.output, "Patch JSON output path");

  auto* val = app.add_subcommand("validate", "Check matching rules and geometry of a patch");
  val->add_option("patch", cfg.input, "Patch JSON")->required();

  auto* cls = app.add_subcommand("classify", "List the rhombi of a patch");
  cls->add_option("patch", cfg.input, "Patch JSON")->required();

  auto* ana = app.add_subcommand("analyze", "Quasifold descriptors for every tile");
  ana->add_option("patch", cfg.input, "Patch JSON")->required();
  ana->add_option("-o,--output", cfg.output, "Analysis JSON output path");
  ana->add_flag("--raw", cfg.raw, "Skip rotation and translation normalization");

  auto* rep = app.add_subcommand("report", "Compare two descriptors");
  rep->add_option("a", cfg.input, "Analysis or descriptor JSON")->required();
  rep->add_option("b", cfg.input_b, "Analysis or descriptor JSON")->required();
  rep->add_option("--tile-a", cfg.tile_a, "Tile id within A")->capture_default_str();
  rep->add_option("--tile-b", cfg.tile_b, "Tile id within B")->capture_default_str();

  auto* ren = app.add_subcommand("render", "Render a patch as SVG");
  ren->add_option("patch", cfg.input, "Patch JSON")->required();
  ren->add_option("-o,--output", cfg.output, "SVG output path (stdout if omitted)");
  ren->add_flag("--decorations", cfg.decorations, "Draw edge arrows");
  ren->add_option("--overlay-moment", cfg.overlay_tile, "Tile id whose moment image is overlaid");
  ren->add_option("--grid", cfg.grid, "Moment sampling grid size")->check(CLI::Range(2, 1000))->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) cfg.command = Command::Gen;
  if (val->parsed()) cfg.command = Command::Validate;
  if (cls->parsed()) cfg.command = Command::Classify;
  if (ana->parsed()) cfg.command = Command::Analyze;
  if (rep->parsed()) cfg.command = Command::Report;
  if (ren->parsed()) cfg.command = Command::Render;
  return quasitile::cli::run(cfg, std::cout, std::cerr);
}
