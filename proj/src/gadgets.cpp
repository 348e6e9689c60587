#include "fungal/gadgets.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "fungal/errors.hpp"
#include "fungal/grid.hpp"

namespace fungal {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  return (a % b != 0 && (a ^ b) < 0) ? q - 1 : q;
}

std::string block_name(const Block& b) {
  return "(" + std::to_string(b.origin.x) + "," + std::to_string(b.origin.y) +
         ")";
}

void require_usable(const UpdateScheme& z) {
  if (z.h() < 2 || z.v() < 2) throw DegenerateScheme();
  if (!z.starts_with_h() || !z.ends_with_v())
    throw Error("scheme must be in start-H/end-V form; normalize it first");
}

// 1-based index of the first V in the word.
int first_v_index(const UpdateScheme& z) {
  return static_cast<int>(z.word().find('V')) + 1;
}

// Assembles bridges, overlay decorations, and pins for one component.
struct Builder {
  const UpdateScheme& z;
  Polarity pol;
  int base_a = 0;
  int base_b = 0;
  Gadget g;

  Block blk(int dc, int dr) const {
    return block_at(base_a + dc, base_b + dr, z);
  }

  void bridge(const Block& x, const Block& y, Polarity p, BridgeKind kind) {
    Bridge br = make_bridge(x, y, p, kind, z);
    g.overlay = combine(g.overlay, br.overlay);
    g.bridges.push_back(std::move(br));
    g.footprint.insert(x.origin);
    g.footprint.insert(y.origin);
  }

  void bridge(const Block& x, const Block& y, BridgeKind kind) {
    bridge(x, y, pol, kind);
  }

  // Punches a consumer cell into the already-laid overlay.
  void hole(Cell c) { g.overlay.set(c, 2); }

  // Lays a bare grain-3 cell outside any bridge.
  void pad(Cell c) {
    assert(g.overlay.at(c) == 0);
    g.overlay.set(c, 3);
  }

  void pin(std::string name, Cell cell, Polarity p, PinDirection dir,
           int delay, int feed) {
    g.pins.emplace(std::move(name), Pin{cell, p, dir, delay, feed});
  }
};

void build_duplicator(Builder& b) {
  Block b1 = b.blk(0, 1), b2 = b.blk(1, 0), b3 = b.blk(1, 2);
  b.bridge(b1, b2, BridgeKind::plain());
  b.bridge(b1, b3, BridgeKind::plain());
  b.pin("in", b1.source(b.pol), b.pol, PinDirection::In, 0, 0);
  b.pin("out_a", b2.source(b.pol), b.pol, PinDirection::Out, 1, 0);
  b.pin("out_b", b3.source(b.pol), b.pol, PinDirection::Out, 1, 0);
  b.g.delay = 1;
}

void build_merge(Builder& b) {
  Block b1 = b.blk(0, 0), b2 = b.blk(0, 2), b3 = b.blk(1, 1);
  b.bridge(b1, b3, BridgeKind::plain());
  b.bridge(b2, b3, BridgeKind::plain());
  b.pin("in_a", b1.source(b.pol), b.pol, PinDirection::In, 0, +1);
  b.pin("in_b", b2.source(b.pol), b.pol, PinDirection::In, 0, -1);
  b.pin("out", b3.source(b.pol), b.pol, PinDirection::Out, 1, 0);
  b.g.delay = 1;
}

// Both lanes pass through the shared middle blocks; the lane entering on
// top leaves at the bottom. The component's polarity names the lane that
// enters on top.
void build_crossing(Builder& b) {
  constexpr auto kPos = Polarity::Positive;
  constexpr auto kNeg = Polarity::Negative;
  if (b.pol == kPos) {
    Block b1 = b.blk(0, 1), b2 = b.blk(0, 2), b3 = b.blk(1, 1),
          b4 = b.blk(1, 2), b5 = b.blk(2, 0), b6 = b.blk(2, 3);
    b.bridge(b1, b4, kPos, BridgeKind::plain());
    b.bridge(b4, b6, kPos, BridgeKind::plain());
    b.bridge(b2, b3, kNeg, BridgeKind::plain());
    b.bridge(b3, b5, kNeg, BridgeKind::plain());
    b.pin("in_pos", b1.source(kPos), kPos, PinDirection::In, 0, +1);
    b.pin("in_neg", b2.source(kNeg), kNeg, PinDirection::In, 0, -1);
    b.pin("out_neg", b5.source(kNeg), kNeg, PinDirection::Out, 2, 0);
    b.pin("out_pos", b6.source(kPos), kPos, PinDirection::Out, 2, 0);
  } else {
    Block b1 = b.blk(0, 0), b2 = b.blk(0, 3), b3 = b.blk(1, 1),
          b4 = b.blk(1, 2), b5 = b.blk(2, 1), b6 = b.blk(2, 2);
    b.bridge(b1, b3, kNeg, BridgeKind::plain());
    b.bridge(b3, b6, kNeg, BridgeKind::plain());
    b.bridge(b2, b4, kPos, BridgeKind::plain());
    b.bridge(b4, b5, kPos, BridgeKind::plain());
    b.pin("in_neg", b1.source(kNeg), kNeg, PinDirection::In, 0, +1);
    b.pin("in_pos", b2.source(kPos), kPos, PinDirection::In, 0, -1);
    b.pin("out_pos", b5.source(kPos), kPos, PinDirection::Out, 2, 0);
    b.pin("out_neg", b6.source(kNeg), kNeg, PinDirection::Out, 2, 0);
  }
  b.g.delay = 2;
}

// The pass route runs through a junction block whose entry cell is a
// consumer; the control route deposits one grain there a step before the
// pass signal arrives, so the junction fires only when both are present.
void build_switch(Builder& b) {
  constexpr auto kPos = Polarity::Positive;
  constexpr auto kNeg = Polarity::Negative;
  if (b.pol == kPos) {
    Block b1 = b.blk(0, 1), b2 = b.blk(0, 2), b3 = b.blk(1, 1),
          b4 = b.blk(1, 2), b5 = b.blk(2, 3);
    b.bridge(b1, b4, kPos, BridgeKind::plain());
    b.bridge(b4, b5, kPos, BridgeKind::plain());
    b.bridge(b2, b3, kNeg, BridgeKind::sink_at(b.z.k() - 1));
    b.pin("pass_in", b1.source(kPos), kPos, PinDirection::In, 0, +1);
    b.pin("ctrl_in", b2.source(kNeg), kNeg, PinDirection::In, 0, -1);
    b.pin("out", b5.source(kPos), kPos, PinDirection::Out, 2, 0);
  } else {
    Block b2 = b.blk(0, 0), b3 = b.blk(1, 1), b4 = b.blk(1, 2),
          b5 = b.blk(2, 2), b1 = b.blk(0, 3);
    b.bridge(b2, b3, kNeg, BridgeKind::plain());
    b.bridge(b3, b5, kNeg, BridgeKind::plain());
    b.bridge(b1, b4, kPos, BridgeKind::plain());
    // The hole sits after the opening H run of the pass route; the parked
    // control signal walks the pad row and refills it one step earlier.
    int p = first_v_index(b.z);
    Cell hole = b3.negative() + Cell{p - 1, 1};
    b.hole(hole);
    Cell walk = b4.positive();
    for (int i = 1; i <= p - 2; ++i) b.pad(walk + Cell{i, 0});
    b.pin("pass_in", b2.source(kNeg), kNeg, PinDirection::In, 0, +1);
    b.pin("ctrl_in", b1.source(kPos), kPos, PinDirection::In, 0, -1);
    b.pin("out", b5.source(kNeg), kNeg, PinDirection::Out, 2, 0);
  }
  b.g.delay = 2;
}

// Forward signals split into two synchronized branches that rejoin on a
// consumer cell, refilling it and firing it in the same step. A signal
// entering from the output side reaches that consumer alone and dies there.
void build_diode(Builder& b) {
  static constexpr std::pair<int, int> kBlocks[14] = {
      {0, 1}, {1, 2}, {2, 1}, {3, 2}, {4, 1},  {4, 3},  {5, 0},
      {5, 4}, {6, 1}, {6, 3}, {7, 2}, {8, 3},  {9, 2},  {10, 3}};
  struct Edge {
    int from, to;
    bool sink;
  };
  static constexpr Edge kEdges[14] = {
      {0, 1, false}, {1, 2, false},  {2, 3, false},  {3, 4, false},
      {3, 5, false}, {4, 6, false},  {5, 7, false},  {6, 8, false},
      {7, 9, false}, {8, 10, true},  {9, 10, false}, {10, 11, false},
      {11, 12, false}, {12, 13, false}};
  for (const Edge& e : kEdges) {
    auto [ac, ar] = kBlocks[e.from];
    auto [bc, br] = kBlocks[e.to];
    b.bridge(b.blk(ac, ar), b.blk(bc, br),
             e.sink ? BridgeKind::sink_at(b.z.k()) : BridgeKind::plain());
  }
  b.pin("in", b.blk(0, 1).source(b.pol), b.pol, PinDirection::In, 0, 0);
  b.pin("out", b.blk(10, 3).source(b.pol), b.pol, PinDirection::Out, 10, 0);
  b.g.delay = 10;
}

void build_coordinator(Builder& b, int m) {
  if (m < 1) throw DelayOutOfRange("coordinator needs at least one bridge");
  for (int i = 0; i < m; ++i)
    b.bridge(b.blk(i, i), b.blk(i + 1, i + 1),
             i == 0 ? BridgeKind::source() : BridgeKind::plain());
  b.pin("out", b.blk(m, m).source(b.pol), b.pol, PinDirection::Out, m, 0);
  b.g.delay = m;
}

// Relative block route for a retarder of the given side and delay: a coil
// of horizontal lanes four block-rows apart, joined by turns in the two
// reserved columns on each side, finished by a strictly rightward tail
// into the bottom-right exit. Every move is one block-diagonal, so the
// route length equals the delay in cycles.
std::vector<std::pair<int, int>> retarder_route(int side, int d) {
  const int L = side;
  if (L < 8 || L % 4 != 0)
    throw DelayOutOfRange("retarder side must be a multiple of 4, at least 8");
  if (d < retarder_min_delay(L) || d > retarder_max_delay(L))
    throw DelayOutOfRange("retarder delay " + std::to_string(d) +
                          " outside " + std::to_string(retarder_min_delay(L)) +
                          ".." + std::to_string(retarder_max_delay(L)) +
                          " for side " + std::to_string(L));
  const int X = (d % 2 == (L - 1) % 2) ? L - 1 : L - 2;

  // d = laps + hooks + tail: lap j spans eight rows and contributes
  // 2·c[j]+4 moves (+2 for the first, which starts at the entry column),
  // each hook adds 2, and the tail is fixed by its start.
  int laps = -1;
  long dmin = 0;
  for (int f = 0; 8 * f <= X - 2; ++f) {
    long lo = f == 0 ? X : 10L * f + 2 + (X - 2);
    long hi = f == 0 ? 2L * X - 2
                     : (2L * (L - 3) + 6) + (f - 1) * (2L * (L - 3) + 4) +
                           2 * ((X - 2 - 8 * f) / 2) + (X - 2);
    if (d >= lo && d <= hi) {
      laps = f;
      dmin = lo;
      break;
    }
  }
  if (laps < 0)
    throw DelayOutOfRange("no retarder route of delay " + std::to_string(d) +
                          " fits side " + std::to_string(L));

  std::vector<int> extent(static_cast<std::size_t>(laps), 3);
  long rem = d - dmin;
  for (int j = 0; j < laps && rem > 0; ++j) {
    long add = std::min(rem, 2L * (L - 6));
    extent[static_cast<std::size_t>(j)] += static_cast<int>(add / 2);
    rem -= add;
  }
  const int hooks = static_cast<int>(rem / 2);

  std::vector<std::pair<int, int>> route;
  auto push = [&route](int c, int r) { route.emplace_back(c, r); };
  push(0, 0);
  int col = 0;
  int row = 0;
  if (laps == 0) {
    for (int i = 1; i <= 2 * hooks; ++i) push(i % 2, i);
    row = 2 * hooks;
  } else {
    for (int j = 0; j < laps; ++j) {
      const int r = 8 * j;
      const int ce = extent[static_cast<std::size_t>(j)];
      int c = j == 0 ? 0 : 2;
      bool lower = false;
      while (c < ce) {
        ++c;
        lower = !lower;
        push(c, r + (lower ? 1 : 0));
      }
      if (lower) {
        push(ce + 1, r + 2);
        push(ce + 2, r + 3);
        push(ce + 1, r + 4);
        push(ce, r + 5);
        lower = true;
      } else {
        push(ce + 1, r + 1);
        push(ce + 2, r + 2);
        push(ce + 1, r + 3);
        push(ce, r + 4);
        lower = false;
      }
      c = ce;
      while (c > 2) {
        --c;
        lower = !lower;
        push(c, r + (lower ? 5 : 4));
      }
      push(1, r + 5);
      push(0, r + 6);
      push(1, r + 7);
      push(2, r + 8);
    }
    col = 2;
    row = 8 * laps;
    for (int i = 1; i <= 2 * hooks; ++i) push(i % 2 != 0 ? 1 : 2, row + i);
    row += 2 * hooks;
  }

  const int bounces = (row - col) / 2;
  ++col;
  ++row;
  push(col, row);
  for (int i = 0; i < bounces; ++i) {
    ++col;
    ++row;
    push(col, row);
    ++col;
    --row;
    push(col, row);
  }
  while (col < X) {
    ++col;
    ++row;
    push(col, row);
  }
  assert(col == X && row == X);
  assert(static_cast<int>(route.size()) == d + 1);
  return route;
}

void build_retarder(Builder& b, int d, int side) {
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(d) + 1);
  for (auto [c, r] : retarder_route(side, d)) blocks.push_back(b.blk(c, r));
  SemiWire coil = build_semi_wire(blocks, b.pol, b.z, false);
  b.g = std::move(coil.gadget);
  b.g.pins.at("out").delay = d;
  b.g.delay = d;
}

}  // namespace

SemiWire build_semi_wire(const std::vector<Block>& blocks, Polarity polarity,
                         const UpdateScheme& z, bool source) {
  if (blocks.size() < 2)
    throw BrokenChain("a wire needs at least two blocks");
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
    if (!diagonally_connected(blocks[i], blocks[i + 1]))
      throw BrokenChain("blocks " + block_name(blocks[i]) + " and " +
                        block_name(blocks[i + 1]) +
                        " are not diagonally connected");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 2; j < blocks.size(); ++j)
      if (blocks[i].origin == blocks[j].origin ||
          diagonally_connected(blocks[i], blocks[j]))
        throw IllegalDiagonalShortcut(
            "non-consecutive blocks " + block_name(blocks[i]) + " and " +
            block_name(blocks[j]) + " touch diagonally");

  SemiWire w;
  w.blocks = blocks;
  w.polarity = polarity;
  Gadget& g = w.gadget;
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    Bridge br = make_bridge(
        blocks[i], blocks[i + 1], polarity,
        i == 0 && source ? BridgeKind::source() : BridgeKind::plain(), z);
    g.overlay = combine(g.overlay, br.overlay);
    g.bridges.push_back(std::move(br));
  }
  for (const Block& blk : blocks) g.footprint.insert(blk.origin);
  const int m = static_cast<int>(blocks.size()) - 1;
  g.pins.emplace("in", Pin{blocks.front().source(polarity), polarity,
                           PinDirection::In, 0, 0});
  g.pins.emplace("out", Pin{blocks.back().source(polarity), polarity,
                            PinDirection::Out, m, 0});
  g.delay = m;
  return w;
}

int retarder_min_delay(int side) { return side - 2; }

int retarder_max_delay(int side) { return side / 4 * (side - 4); }

ComponentSpec build_component(ComponentKind kind, Polarity polarity,
                              Block anchor, const UpdateScheme& z) {
  require_usable(z);
  Builder b{z, polarity, floor_div(anchor.origin.x, z.h()),
            floor_div(anchor.origin.y, z.v()), Gadget{}};
  switch (kind.tag) {
    case ComponentKind::Tag::Duplicator:
      build_duplicator(b);
      break;
    case ComponentKind::Tag::Merge:
      build_merge(b);
      break;
    case ComponentKind::Tag::Crossing:
      build_crossing(b);
      break;
    case ComponentKind::Tag::Switch:
      build_switch(b);
      break;
    case ComponentKind::Tag::Diode:
      build_diode(b);
      break;
    case ComponentKind::Tag::Retarder:
      build_retarder(b, kind.retarder_delay, kind.retarder_side);
      break;
    case ComponentKind::Tag::Coordinator:
      build_coordinator(b, kind.coordinator_len);
      break;
  }
  return ComponentSpec{kind, polarity, anchor, std::move(b.g)};
}

std::map<std::string, std::optional<int>> simulate_component(
    const ComponentSpec& spec, const std::map<std::string, int>& stimuli,
    const UpdateScheme& z, int horizon) {
  const Gadget& g = spec.gadget;
  int last = 0;
  for (const auto& [name, cycle] : stimuli) {
    auto it = g.pins.find(name);
    if (it == g.pins.end() || it->second.direction != PinDirection::In)
      throw Error("no input pin named '" + name + "'");
    if (cycle < 0) throw Error("stimulus cycle must be nonnegative");
    last = std::max(last, cycle);
  }
  if (horizon <= last)
    throw HorizonTooSmall("horizon " + std::to_string(horizon) +
                          " does not reach past the last stimulus at cycle " +
                          std::to_string(last));

  Configuration c = g.overlay;
  std::map<std::string, std::optional<int>> result;
  for (const auto& [name, pin] : g.pins)
    if (pin.direction == PinDirection::Out) result[name] = std::nullopt;

  auto scan = [&](int cycle) {
    for (auto& [name, first] : result)
      if (!first && c.at(g.pins.at(name).cell) >= kSignalThreshold)
        first = cycle;
  };
  auto inject = [&](int cycle) {
    for (const auto& [name, at] : stimuli)
      if (at == cycle) c.set(g.pins.at(name).cell, kSignalThreshold);
  };

  scan(0);
  inject(0);
  for (int cycle = 1; cycle <= horizon; ++cycle) {
    c = run_cycles(c, z, 1);
    scan(cycle);
    inject(cycle);
  }
  return result;
}

Gadget connect(const Gadget& g1, const std::string& out_pin, const Gadget& g2,
               const std::string& in_pin, const UpdateScheme& z) {
  auto oit = g1.pins.find(out_pin);
  if (oit == g1.pins.end() || oit->second.direction != PinDirection::Out)
    throw Error("no output pin named '" + out_pin + "'");
  auto iit = g2.pins.find(in_pin);
  if (iit == g2.pins.end() || iit->second.direction != PinDirection::In)
    throw Error("no input pin named '" + in_pin + "'");
  const Pin& out = oit->second;
  const Pin& in = iit->second;
  if (out.polarity != in.polarity)
    throw PolarityMismatch("pin '" + out_pin + "' is " +
                           (out.polarity == Polarity::Positive ? "positive"
                                                               : "negative") +
                           " but pin '" + in_pin + "' is not");

  if (in.feed != 0) {
    int approach = 0;
    for (const Bridge& br : g1.bridges)
      if (br.path.last() == out.cell) approach = br.path.beta;
    if (approach != 0 && approach != in.feed)
      throw OrientationViolation(
          "pin '" + in_pin + "' must be fed from " +
          (in.feed > 0 ? "above" : "below") + ", but the route arrives from " +
          (approach > 0 ? "above" : "below"));
  }

  const Cell delta = out.cell - in.cell;
  const Gadget g2t =
      translate(g2, floor_div(delta.x, z.h()), floor_div(delta.y, z.v()), z);
  const Cell joint = block_of(out.cell, z).origin;

  auto block_index = [&z](Cell origin) {
    return std::pair{floor_div(origin.x, z.h()), floor_div(origin.y, z.v())};
  };
  auto chebyshev = [&](Cell a, Cell bcell) {
    auto [ax, ay] = block_index(a);
    auto [bx, by] = block_index(bcell);
    return std::max(std::abs(ax - bx), std::abs(ay - by));
  };
  for (Cell a : g1.footprint)
    for (Cell bcell : g2t.footprint) {
      if (a == bcell) {
        if (a != joint)
          throw FootprintCollision("footprints share block " +
                                   block_name(Block{a, z.h(), z.v()}));
        continue;
      }
      if (chebyshev(a, bcell) >= 3) continue;
      if (chebyshev(a, joint) <= 2 && chebyshev(bcell, joint) <= 2) continue;
      throw FootprintCollision(
          "blocks " + block_name(Block{a, z.h(), z.v()}) + " and " +
          block_name(Block{bcell, z.h(), z.v()}) +
          " stand closer than the two-block clearance");
    }

  Gadget r;
  r.bridges = g1.bridges;
  r.bridges.insert(r.bridges.end(), g2t.bridges.begin(), g2t.bridges.end());
  r.overlay = combine(g1.overlay, g2t.overlay);
  r.footprint = g1.footprint;
  r.footprint.insert(g2t.footprint.begin(), g2t.footprint.end());
  r.delay = g1.delay + g2.delay;
  for (const auto& [name, pin] : g1.pins)
    if (name != out_pin) r.pins.emplace(name, pin);
  for (const auto& [name, pin] : g2t.pins) {
    if (name == in_pin) continue;
    Pin moved = pin;
    if (moved.direction == PinDirection::Out) moved.delay += out.delay;
    auto [it, inserted] = r.pins.emplace(name, moved);
    if (!inserted && !(it->second == moved)) throw PinClash(name);
  }
  return r;
}

bool check_coordinator_kills_shifts(int m, const UpdateScheme& z) {
  ComponentSpec spec =
      build_component(ComponentKind::coordinator(m), Polarity::Positive,
                      block_at(0, 0, z), z);
  const std::int64_t budget = static_cast<std::int64_t>(z.k()) * m;
  for (const UpdateScheme& w : shifted_cycles(z)) {
    Engine engine(spec.gadget.overlay, w);
    engine.run_until_quiet(budget);
    if (!engine.quiet()) return false;
  }
  return true;
}

}  // namespace fungal
