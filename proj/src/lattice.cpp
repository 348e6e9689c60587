#include "fungal/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "fungal/errors.hpp"

namespace fungal {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Block block_of(Cell c, const UpdateScheme& z) {
  auto a = floor_div(c.x, z.h());
  auto b = floor_div(c.y, z.v());
  return block_at(a, b, z);
}

Block block_at(std::int64_t a, std::int64_t b, const UpdateScheme& z) {
  return Block{{static_cast<std::int32_t>(a * z.h()),
                static_cast<std::int32_t>(b * z.v())},
               z.h(), z.v()};
}

std::vector<Cell> closure(const Block& b) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>((b.h + 2) * (b.v + 2)));
  for (int y = -1; y <= b.v; ++y)
    for (int x = -1; x <= b.h; ++x)
      cells.push_back(b.origin + Cell{x, y});
  return cells;
}

bool diagonally_connected(const Block& a, const Block& b) {
  return std::abs(a.origin.x - b.origin.x) == a.h &&
         std::abs(a.origin.y - b.origin.y) == a.v;
}

ZPath trace_path(Cell start, int alpha, int beta, const UpdateScheme& z,
                 int steps) {
  ZPath p{start, alpha, beta, {start}};
  p.cells.reserve(static_cast<std::size_t>(steps) + 1);
  Cell at = start;
  for (int s = 1; s <= steps; ++s) {
    at = at + (z.at(s) == Axis::H ? Cell{alpha, 0} : Cell{0, beta});
    p.cells.push_back(at);
  }
  return p;
}

ZPath connect_path(Cell x, Cell y, const UpdateScheme& z) {
  Cell d = y - x;
  if (std::abs(d.x) != z.h() || std::abs(d.y) != z.v()) {
    throw NotDiagonal("cells are not one block-diagonal apart");
  }
  return trace_path(x, d.x > 0 ? 1 : -1, d.y > 0 ? 1 : -1, z, z.k());
}

Bridge make_bridge(const Block& b1, const Block& b2, Polarity polarity,
                   BridgeKind kind, const UpdateScheme& z) {
  if (!diagonally_connected(b1, b2)) throw NotDiagonal();
  if (kind.tag == BridgeKind::Tag::Sink &&
      (kind.sink_index < 1 || kind.sink_index > z.k())) {
    throw BadSinkIndex(kind.sink_index);
  }

  Bridge t;
  t.path = connect_path(b1.source(polarity), b2.source(polarity), z);
  t.kind = kind;
  t.polarity = polarity;

  int limit = kind.tag == BridgeKind::Tag::Sink ? kind.sink_index : z.k();
  for (int s = 0; s <= limit; ++s) {
    Grain g = 3;
    if (kind.tag == BridgeKind::Tag::Source && s == 0) g = 4;
    if (kind.tag == BridgeKind::Tag::Sink && s == limit) g = 2;
    t.overlay.set(t.path.at(s), g);
  }
  return t;
}

std::vector<Cell> affected_neighbors(const Bridge& t) {
  std::vector<Cell> cells = t.path.cells;
  for (int s = 1; s <= t.path.length(); ++s) {
    Cell firing = t.path.at(s - 1);
    Cell d = t.path.at(s) - firing;
    Cell unit = d.x != 0 ? Cell{1, 0} : Cell{0, 1};
    cells.push_back(firing - unit);
    cells.push_back(firing + unit);
  }
  std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

Configuration combine(const Configuration& c1, const Configuration& c2) {
  Configuration out = c1;
  for (const auto& [cell, g] : c2.cells()) {
    Grain prior = out.at(cell);
    Grain merged =
        (prior == 2 || g == 2) ? Grain{2} : std::max(prior, g);
    out.set(cell, merged);
  }
  return out;
}

Gadget gadget_of(const Bridge& b, const UpdateScheme& z) {
  Gadget g;
  g.bridges.push_back(b);
  g.overlay = b.overlay;
  g.footprint.insert(block_of(b.path.start, z).origin);
  g.footprint.insert(block_of(b.path.last(), z).origin);
  g.delay = 1;
  return g;
}

Gadget gadget_sum(const Gadget& g1, const Gadget& g2,
                  const PinRename& rename2) {
  Gadget out = g1;
  out.bridges.insert(out.bridges.end(), g2.bridges.begin(),
                     g2.bridges.end());
  out.overlay = combine(g1.overlay, g2.overlay);
  out.footprint.insert(g2.footprint.begin(), g2.footprint.end());
  out.delay = std::max(g1.delay, g2.delay);

  for (const auto& [name, pin] : g2.pins) {
    auto it = rename2.find(name);
    const std::string& final_name = it == rename2.end() ? name : it->second;
    auto [slot, inserted] = out.pins.emplace(final_name, pin);
    if (!inserted && !(slot->second == pin)) throw PinClash(final_name);
  }
  return out;
}

Gadget translate(const Gadget& g, std::int64_t da, std::int64_t db,
                 const UpdateScheme& z) {
  Cell d{static_cast<std::int32_t>(da * z.h()),
         static_cast<std::int32_t>(db * z.v())};
  Gadget out;
  out.delay = g.delay;
  out.bridges.reserve(g.bridges.size());
  for (const auto& b : g.bridges) {
    Bridge moved = b;
    moved.path.start = b.path.start + d;
    for (auto& c : moved.path.cells) c = c + d;
    Configuration overlay;
    for (const auto& [cell, grain] : b.overlay.cells())
      overlay.set(cell + d, grain);
    moved.overlay = std::move(overlay);
    out.bridges.push_back(std::move(moved));
  }
  for (const auto& [cell, grain] : g.overlay.cells())
    out.overlay.set(cell + d, grain);
  for (const auto& [name, pin] : g.pins) {
    Pin moved = pin;
    moved.cell = pin.cell + d;
    out.pins.emplace(name, moved);
  }
  for (Cell origin : g.footprint) out.footprint.insert(origin + d);
  return out;
}

}  // namespace fungal
