#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "douady/surface.hpp"

namespace douady::cli {

// Flat key=value surface description:
//
//   name=my_surface
//   betti=1,0,2,0,1
//   betti_c=1,0,2,0,1      # optional, defaults to betti
//   euler=4                # optional, checked against betti
//   hodge=0,0,1, 1,1,2, 2,2,1   # optional (p,q,h) triples
//
// Blank lines and '#' comments are ignored.
struct SurfaceConfig {
  std::string name = "custom";
  BettiVector betti{};
  std::optional<BettiVector> betti_c;
  std::optional<int> euler;
  std::optional<std::vector<std::array<int, 3>>> hodge;
};

// Throws douady::Error(ParseError or InvalidSurface) naming the offending field.
SurfaceConfig parse_surface_config(std::string_view text);
SurfaceModel to_model(const SurfaceConfig& config);

// A preset name or a path to a config file. Throws douady::Error.
SurfaceModel resolve_surface(const std::string& spec);

}  // namespace douady::cli
