#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fungal/geometry.hpp"
#include "fungal/grid.hpp"
#include "fungal/scheme.hpp"

namespace fungal {

// A parsed fungal-cfg v1 document: header line
//   fungal-cfg v1 Z=<word> origin=<x>,<y> size=<w>x<h>
// followed by h rows of w symbols, each a digit 0..5 or '.' (read as 0).
struct CfgFile {
  UpdateScheme scheme;
  Rect window;
  Configuration config;
};

CfgFile parse_cfg(std::istream& in);
CfgFile parse_cfg(const std::string& text);
CfgFile load_cfg(const std::string& path);

// Serializes c over the given window (bounding box when omitted; a 1×1
// window at the origin when c is empty). Cells outside the window are not
// emitted. zero_char selects how empty cells are drawn; both '0' and '.'
// parse back to the same configuration.
std::string format_cfg(const UpdateScheme& z, const Configuration& c,
                       std::optional<Rect> window = std::nullopt,
                       char zero_char = '0');

void save_cfg(const std::string& path, const UpdateScheme& z,
              const Configuration& c,
              std::optional<Rect> window = std::nullopt,
              char zero_char = '0');

// The nonzero cells of c that lie inside w.
Configuration crop(const Configuration& c, Rect w);

}  // namespace fungal
