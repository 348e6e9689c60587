#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>

namespace fungal {

// A lattice cell. y grows downward, matching the rendered row order.
struct Cell {
  std::int32_t x = 0;
  std::int32_t y = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
constexpr Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    std::uint64_t key =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
        static_cast<std::uint32_t>(c.y);
    key ^= key >> 33;
    key *= 0xff51afd7ed558ccdULL;
    key ^= key >> 33;
    key *= 0xc4ceb9fe1a85ec53ULL;
    key ^= key >> 33;
    return static_cast<std::size_t>(key);
  }
};

// Grain count of one cell. Valid states are 0..5; a cell holding 4 or 5
// is a signal and fires under the matching-axis rule.
using Grain = std::uint8_t;

inline constexpr Grain kMaxGrain = 5;
inline constexpr Grain kSignalThreshold = 4;

// Inclusive rectangle of cells, used for windows and regions.
struct Rect {
  Cell origin;      // top-left cell
  std::int64_t width = 0;
  std::int64_t height = 0;

  bool contains(Cell c) const {
    return c.x >= origin.x && c.y >= origin.y &&
           c.x < origin.x + width && c.y < origin.y + height;
  }
  friend bool operator==(const Rect&, const Rect&) = default;
};

}  // namespace fungal
