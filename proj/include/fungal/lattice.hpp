#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fungal/geometry.hpp"
#include "fungal/grid.hpp"
#include "fungal/scheme.hpp"

namespace fungal {

enum class Polarity : std::uint8_t { Positive, Negative };

constexpr Polarity opposite(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

// One h×v rectangle of the block subdivision, h and v taken from the scheme.
// The positive source cell is the upper-left corner, the negative one the
// lower-left corner.
struct Block {
  Cell origin;
  int h = 0;
  int v = 0;

  Cell positive() const { return origin; }
  Cell negative() const { return origin + Cell{0, v - 1}; }
  Cell source(Polarity p) const {
    return p == Polarity::Positive ? positive() : negative();
  }

  friend bool operator==(const Block&, const Block&) = default;
};

// The unique block containing the cell (floor division, so negative
// coordinates land in the expected quadrant).
Block block_of(Cell c, const UpdateScheme& z);

// The block with origin (a·h, b·v).
Block block_at(std::int64_t a, std::int64_t b, const UpdateScheme& z);

// The block's cells plus the one-cell ring around them: (h+2)×(v+2) cells.
std::vector<Cell> closure(const Block& b);

// True iff the origins differ by exactly (±h, ±v).
bool diagonally_connected(const Block& a, const Block& b);

// P(0..l) with P(s) = P(s-1) + α·(1,0) on an H step and P(s-1) + β·(0,1)
// on a V step, following z cyclically.
struct ZPath {
  Cell start;
  int alpha = 1;
  int beta = 1;
  std::vector<Cell> cells;

  Cell at(int s) const { return cells[static_cast<std::size_t>(s)]; }
  int length() const { return static_cast<int>(cells.size()) - 1; }
  Cell last() const { return cells.back(); }
};

ZPath trace_path(Cell start, int alpha, int beta, const UpdateScheme& z,
                 int steps);

// The unique full-cycle path from x to a diagonally displaced y
// (y = x ± (h, ±v)). Throws NotDiagonal otherwise.
ZPath connect_path(Cell x, Cell y, const UpdateScheme& z);

struct BridgeKind {
  enum class Tag : std::uint8_t { Plain, Source, Sink };
  Tag tag = Tag::Plain;
  int sink_index = 0;

  static BridgeKind plain() { return {Tag::Plain, 0}; }
  static BridgeKind source() { return {Tag::Source, 0}; }
  static BridgeKind sink_at(int l) { return {Tag::Sink, l}; }

  friend bool operator==(const BridgeKind&, const BridgeKind&) = default;
};

// A full-cycle path between matching source cells, overlaid with grains:
// 3 along the path, except a 4 at the start of a source bridge, and for a
// sink at l a 2 at P(l) with nothing beyond it.
struct Bridge {
  ZPath path;
  BridgeKind kind;
  Polarity polarity = Polarity::Positive;
  Configuration overlay;
};

Bridge make_bridge(const Block& b1, const Block& b2, Polarity polarity,
                   BridgeKind kind, const UpdateScheme& z);

// Every cell that can gain a grain while the bridge transmits: the path
// itself plus, for each step, the axis neighborhood of the cell firing at
// that step. Sorted by (y, x), no duplicates.
std::vector<Cell> affected_neighbors(const Bridge& t);

// Pointwise composition: 2 if either operand holds 2, otherwise the max.
Configuration combine(const Configuration& c1, const Configuration& c2);

enum class PinDirection : std::uint8_t { In, Out };

struct Pin {
  Cell cell;
  Polarity polarity = Polarity::Positive;
  PinDirection direction = PinDirection::In;
  int delay = 0;  // cycles from the gadget's inputs to this pin
  int feed = 0;   // input pins: +1 fed from above, -1 from below, 0 either

  friend bool operator==(const Pin&, const Pin&) = default;
};

// A set of bridges composed with ⊕, with named connection points and the
// blocks the construction occupies.
struct Gadget {
  std::vector<Bridge> bridges;
  Configuration overlay;
  std::map<std::string, Pin> pins;
  std::set<Cell> footprint;  // block origins
  int delay = 0;

  bool empty() const { return bridges.empty() && overlay.empty(); }
};

// Wraps one bridge, occupying its two endpoint blocks.
Gadget gadget_of(const Bridge& b, const UpdateScheme& z);

using PinRename = std::map<std::string, std::string>;

// Union of bridges and footprints, ⊕ of overlays. rename2 maps pin names
// of g2 before merging; a surviving duplicate name must refer to the same
// pin, otherwise PinClash.
Gadget gadget_sum(const Gadget& g1, const Gadget& g2,
                  const PinRename& rename2 = {});

// The gadget shifted by a whole number of blocks.
Gadget translate(const Gadget& g, std::int64_t da, std::int64_t db,
                 const UpdateScheme& z);

}  // namespace fungal
