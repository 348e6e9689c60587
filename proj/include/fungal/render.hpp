#pragma once

#include <optional>
#include <string>

#include "fungal/cfg_io.hpp"
#include "fungal/geometry.hpp"
#include "fungal/grid.hpp"
#include "fungal/scheme.hpp"

namespace fungal {

// Human-oriented panel: the fungal-cfg header plus rows drawn with '.' for
// empty cells. Re-parses to the identical configuration.
std::string render_ascii(const UpdateScheme& z, const Configuration& c,
                         std::optional<Rect> window = std::nullopt);

// Binary P6 image, one pixel per cell, grains 0..5 mapped to a fixed
// palette with warm colors for signal values 4 and 5.
std::string render_ppm(const Configuration& c,
                       std::optional<Rect> window = std::nullopt);

}  // namespace fungal
