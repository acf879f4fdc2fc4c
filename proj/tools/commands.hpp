// Command implementations behind the quasitile executable.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace quasitile::cli {

enum class Command { Gen, Validate, Classify, Analyze, Report, Render };

struct CliConfig {
  Command command = Command::Gen;
  std::string seed_name = "acute";
  int depth = 0;
  std::string input;
  std::string input_b;  // second operand of `report`
  std::string output;
  std::size_t tile_a = 0;
  std::size_t tile_b = 0;
  int grid = 11;
  std::optional<std::size_t> overlay_tile;
  bool decorations = false;
  bool raw = false;
  bool json = false;  // machine-readable report on stderr
};

/// Exit codes: 0 success, 1 violations found, 2 invalid input or I/O failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitError = 2;

int run(const CliConfig& config, std::ostream& out, std::ostream& err);

int run_gen(const CliConfig& config, std::ostream& out, std::ostream& err);
int run_validate(const CliConfig& config, std::ostream& out, std::ostream& err);
int run_classify(const CliConfig& config, std::ostream& out, std::ostream& err);
int run_analyze(const CliConfig& config, std::ostream& out, std::ostream& err);
int run_report(const CliConfig& config, std::ostream& out, std::ostream& err);
int run_render(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace quasitile::cli
