// JSON serialization of patches.
//
// {"version": 1, "scale_power": n, "triangles": [...], "tiles": [...],
//  "decorations": [...]}; points are [c1, c2, c3, c4]. Tiles and
// decorations are derived data and must agree with the triangles.
#pragma once

#include "quasitile/tiling.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace quasitile {

inline constexpr int kFormatVersion = 1;

/// Malformed input; `location` is a JSON pointer into the document.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& message)
      : std::runtime_error(location.empty() ? message : location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

std::string serialize(const Patch& p);
Patch deserialize(std::string_view text);

}  // namespace quasitile
