#pragma once

#include "adlv/galleries.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace adlv {

struct SvgOptions {
  double scale = 60.0;  // pixels per unit of the realization
  double margin = 1.2;
  bool wall_labels = false;
  std::optional<Orientation> orientation;  // shown in the legend
  std::vector<std::string> labels;         // one per gallery
};

// simple roots of a rank-2 type as plane vectors; fixed constants per type
std::array<std::array<double, 2>, 2> realization(const RootSystem& R);
std::array<double, 2> plane_point(const RootSystem& R, const std::vector<double>& coweight);

// deterministic SVG of the apartment with the given galleries and shaded alcoves
std::string render_svg(const RootSystem& R, const std::vector<Gallery>& galleries,
                       const std::vector<AffineElement>& alcoves, const SvgOptions& opt = {});

}  // namespace adlv
