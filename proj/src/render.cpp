#include "fungal/render.hpp"

#include <array>
#include <sstream>

namespace fungal {

std::string render_ascii(const UpdateScheme& z, const Configuration& c,
                         std::optional<Rect> window) {
  return format_cfg(z, c, window, '.');
}

std::string render_ppm(const Configuration& c, std::optional<Rect> window) {
  static constexpr std::array<std::array<unsigned char, 3>, 6> kPalette = {{
      {245, 245, 245},  // 0: blank
      {215, 233, 213},  // 1
      {166, 208, 160},  // 2
      {102, 166, 96},   // 3
      {216, 56, 38},    // 4: signal
      {255, 140, 0},    // 5: saturated signal
  }};

  Rect w = window.value_or(c.bounding_box().value_or(Rect{{0, 0}, 1, 1}));
  std::ostringstream out;
  out << "P6\n" << w.width << ' ' << w.height << "\n255\n";
  for (std::int64_t row = 0; row < w.height; ++row) {
    for (std::int64_t col = 0; col < w.width; ++col) {
      Grain g = c.at(w.origin + Cell{static_cast<std::int32_t>(col),
                                     static_cast<std::int32_t>(row)});
      const auto& rgb = kPalette[g];
      out.write(reinterpret_cast<const char*>(rgb.data()), 3);
    }
  }
  return out.str();
}

}  // namespace fungal
