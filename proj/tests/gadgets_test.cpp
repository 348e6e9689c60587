#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "fungal/cfg_io.hpp"
#include "fungal/errors.hpp"
#include "fungal/gadgets.hpp"
#include "fungal/grid.hpp"
#include "fungal/lattice.hpp"
#include "fungal/scheme.hpp"

using namespace fungal;

namespace {

CfgFile fixture(const std::string& name) {
  return load_cfg(std::string(FIXTURE_DIR) + "/" + name + ".cfg");
}

const UpdateScheme kZ1 = parse_scheme("HVVHHHV");
const UpdateScheme kZ2 = parse_scheme("HHHVV");

// Normalized primitive scheme with h,v >= 2, as the component builders
// require.
UpdateScheme random_scheme(std::mt19937& rng, int max_k = 10) {
  std::uniform_int_distribution<int> len(4, max_k);
  std::uniform_int_distribution<int> bit(0, 1);
  for (;;) {
    int k = len(rng);
    std::string w;
    for (int i = 0; i < k; ++i) w += bit(rng) ? 'H' : 'V';
    auto z = parse_scheme(w);
    if (z.h() < 2 || z.v() < 2) continue;
    auto n = normalize(z);
    if (!is_primitive(n.normalized)) continue;
    if (n.normalized.h() < 2 || n.normalized.v() < 2) continue;
    return n.normalized;
  }
}

// Random staircase walk of `n` blocks starting at (0,0): each step moves
// one block diagonally, never revisiting a column so the chain stays legal.
std::vector<Block> random_walk(std::mt19937& rng, const UpdateScheme& z,
                               int n) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<Block> blocks{block_at(0, 0, z)};
  int a = 0, b = 0;
  for (int i = 1; i < n; ++i) {
    a += 1;
    b += bit(rng) ? 1 : -1;
    blocks.push_back(block_at(a, b, z));
  }
  return blocks;
}

}  // namespace

TEST_CASE("component overlays match the recorded layouts") {
  struct Row {
    const char* name;
    ComponentKind kind;
    Polarity pol;
  };
  const Row rows[] = {
      {"duplicator_overlay_pos", ComponentKind::duplicator(),
       Polarity::Positive},
      {"duplicator_overlay_neg", ComponentKind::duplicator(),
       Polarity::Negative},
      {"merge_overlay_pos", ComponentKind::merge(), Polarity::Positive},
      {"merge_overlay_neg", ComponentKind::merge(), Polarity::Negative},
      {"crossing_overlay_pos", ComponentKind::crossing(), Polarity::Positive},
      {"crossing_overlay_neg", ComponentKind::crossing(), Polarity::Negative},
      {"switch_overlay_pos", ComponentKind::switch_(), Polarity::Positive},
      {"switch_overlay_neg", ComponentKind::switch_(), Polarity::Negative},
  };
  for (const auto& row : rows) {
    for (const char* sfx : {"", "_hhhvv"}) {
      CAPTURE(row.name);
      CAPTURE(sfx);
      CfgFile f = fixture(std::string(row.name) + sfx);
      auto spec = build_component(row.kind, row.pol,
                                  block_at(0, 0, f.scheme), f.scheme);
      CHECK(spec.gadget.overlay == f.config);
    }
  }
}

TEST_CASE("semi-wire rejects broken chains and shortcuts") {
  auto blk = [&](int a, int b) { return block_at(a, b, kZ1); };
  CHECK_THROWS_AS(build_semi_wire({blk(0, 0)}, Polarity::Positive, kZ1, false),
                  BrokenChain);
  CHECK_THROWS_AS(build_semi_wire({blk(0, 0), blk(2, 1)}, Polarity::Positive,
                                  kZ1, false),
                  BrokenChain);
  CHECK_THROWS_AS(build_semi_wire({blk(0, 0), blk(1, 0)}, Polarity::Positive,
                                  kZ1, false),
                  BrokenChain);
  // zigzag that comes diagonally back next to the start
  CHECK_THROWS_AS(build_semi_wire({blk(0, 0), blk(1, 1), blk(2, 0), blk(1, -1)},
                                  Polarity::Positive, kZ1, false),
                  IllegalDiagonalShortcut);
  // revisiting a block counts as a shortcut as well
  CHECK_THROWS_AS(
      build_semi_wire({blk(0, 0), blk(1, 1), blk(0, 0)}, Polarity::Positive,
                      kZ1, false),
      IllegalDiagonalShortcut);
  CHECK_NOTHROW(build_semi_wire({blk(0, 0), blk(1, 1), blk(2, 0), blk(3, 1)},
                                Polarity::Positive, kZ1, false));
}

TEST_CASE("source wire delivers the signal one block per cycle") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    UpdateScheme z = random_scheme(rng);
    std::uniform_int_distribution<int> mdist(2, 7);
    int m = mdist(rng);
    auto blocks = random_walk(rng, z, m + 1);
    for (Polarity pol : {Polarity::Positive, Polarity::Negative}) {
      CAPTURE(z.word());
      CAPTURE(trial);
      SemiWire w = build_semi_wire(blocks, pol, z, true);
      Configuration cfg = w.gadget.overlay;
      for (int cyc = 1; cyc <= m; ++cyc) {
        cfg = run_cycles(cfg, z, 1);
        Cell expect = blocks[cyc].source(pol);
        CHECK(cfg.at(expect) >= 4);
      }
      cfg = run_cycles(cfg, z, 1);
      CHECK(cfg.signals().empty());
    }
  }
}

TEST_CASE("duplicator fans out and merge joins within one cycle") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    UpdateScheme z = random_scheme(rng);
    Polarity pol = trial % 2 ? Polarity::Negative : Polarity::Positive;
    CAPTURE(z.word());
    auto d = build_component(ComponentKind::duplicator(), pol,
                             block_at(0, 0, z), z);
    auto r = simulate_component(d, {{"in", 0}}, z, 4);
    CHECK(r.at("out_a") == 1);
    CHECK(r.at("out_b") == 1);

    auto m = build_component(ComponentKind::merge(), pol, block_at(0, 0, z), z);
    CHECK(simulate_component(m, {{"in_a", 0}}, z, 4).at("out") == 1);
    CHECK(simulate_component(m, {{"in_b", 0}}, z, 4).at("out") == 1);
    // staggered double arrival must still produce the output signal
    auto both = simulate_component(m, {{"in_a", 0}, {"in_b", 1}}, z, 5);
    CHECK(both.at("out") == 1);
  }
}

TEST_CASE("crossing routes each lane and never leaks to the other") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    UpdateScheme z = random_scheme(rng);
    int horizon = 2 * z.k();
    Polarity pol = trial % 2 ? Polarity::Negative : Polarity::Positive;
    CAPTURE(z.word());
    auto c = build_component(ComponentKind::crossing(), pol,
                             block_at(0, 0, z), z);
    auto rp = simulate_component(c, {{"in_pos", 0}}, z, horizon);
    CHECK(rp.at("out_pos") == 2);
    CHECK_FALSE(rp.at("out_neg").has_value());
    auto rn = simulate_component(c, {{"in_neg", 0}}, z, horizon);
    CHECK(rn.at("out_neg") == 2);
    CHECK_FALSE(rn.at("out_pos").has_value());
  }
}

TEST_CASE("switch passes only after activation and stays quiet otherwise") {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    UpdateScheme z = random_scheme(rng);
    Polarity pol = trial % 2 ? Polarity::Negative : Polarity::Positive;
    CAPTURE(z.word());
    auto s = build_component(ComponentKind::switch_(), pol, block_at(0, 0, z),
                             z);
    auto on0 = simulate_component(s, {{"ctrl_in", 0}, {"pass_in", 0}}, z, 6);
    CHECK(on0.at("out") == 2);
    auto on1 = simulate_component(s, {{"ctrl_in", 0}, {"pass_in", 1}}, z, 6);
    CHECK(on1.at("out") == 3);

    // without activation the pass signal must die inside the switch
    auto off = simulate_component(s, {{"pass_in", 0}}, z, 6);
    CHECK_FALSE(off.at("out").has_value());
    Configuration cfg = s.gadget.overlay;
    cfg.set(s.gadget.pins.at("pass_in").cell, 4);
    cfg = run_cycles(cfg, z, 3);
    CHECK(cfg.signals().empty());

    // activation alone must not produce an output
    auto ctrl = simulate_component(s, {{"ctrl_in", 0}}, z, 6);
    CHECK_FALSE(ctrl.at("out").has_value());
  }
}

TEST_CASE("diode conducts forward and blocks reverse signals") {
  std::mt19937 rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    UpdateScheme z = random_scheme(rng);
    Polarity pol = trial % 2 ? Polarity::Negative : Polarity::Positive;
    CAPTURE(z.word());
    auto d = build_component(ComponentKind::diode(), pol, block_at(0, 0, z), z);
    auto fwd = simulate_component(d, {{"in", 0}}, z, 14);
    CHECK(fwd.at("out") == 10);

    Configuration cfg = d.gadget.overlay;
    cfg.set(d.gadget.pins.at("out").cell, 4);
    Cell in = d.gadget.pins.at("in").cell;
    bool leaked = false;
    for (int cyc = 0; cyc < 24; ++cyc) {
      if (cfg.at(in) >= 4) leaked = true;
      cfg = run_cycles(cfg, z, 1);
    }
    CHECK_FALSE(leaked);
    CHECK(cfg.at(in) < 4);
  }
}

TEST_CASE("retarder produces each feasible delay exactly") {
  std::mt19937 rng(46);
  UpdateScheme z = random_scheme(rng, 7);
  int L = 12;
  for (int d = retarder_min_delay(L); d <= retarder_max_delay(L); ++d) {
    CAPTURE(d);
    auto r = build_component(ComponentKind::retarder(d, L), Polarity::Positive,
                             block_at(0, 0, z), z);
    for (Cell o : r.gadget.footprint) {
      CHECK(o.x >= 0);
      CHECK(o.y >= 0);
      CHECK(o.x < L * z.h());
      CHECK(o.y < L * z.v());
    }
    auto res = simulate_component(r, {{"in", 0}}, z, d + 2);
    CHECK(res.at("out") == d);
  }
}

TEST_CASE("retarder footprint stays inside the square for larger sides") {
  std::mt19937 rng(47);
  for (int L : {8, 16, 20}) {
    UpdateScheme z = random_scheme(rng, 7);
    for (int d = retarder_min_delay(L); d <= retarder_max_delay(L); ++d) {
      auto r = build_component(ComponentKind::retarder(d, L),
                               Polarity::Positive, block_at(0, 0, z), z);
      CHECK(r.gadget.delay == d);
      for (Cell o : r.gadget.footprint) {
        CHECK(o.x >= 0);
        CHECK(o.y >= 0);
        CHECK(o.x < L * z.h());
        CHECK(o.y < L * z.v());
      }
    }
  }
}

TEST_CASE("retarder rejects infeasible delays and sides") {
  CHECK_THROWS_AS(build_component(ComponentKind::retarder(9, 12),
                                  Polarity::Positive, block_at(0, 0, kZ2),
                                  kZ2),
                  DelayOutOfRange);
  CHECK_THROWS_AS(build_component(ComponentKind::retarder(25, 12),
                                  Polarity::Positive, block_at(0, 0, kZ2),
                                  kZ2),
                  DelayOutOfRange);
  CHECK_THROWS_AS(build_component(ComponentKind::retarder(10, 10),
                                  Polarity::Positive, block_at(0, 0, kZ2),
                                  kZ2),
                  DelayOutOfRange);
  CHECK_THROWS_AS(build_component(ComponentKind::retarder(2, 4),
                                  Polarity::Positive, block_at(0, 0, kZ2),
                                  kZ2),
                  DelayOutOfRange);
}

TEST_CASE("coordinator survives its own scheme and kills every shift") {
  std::mt19937 rng(48);
  for (int trial = 0; trial < 12; ++trial) {
    UpdateScheme z = random_scheme(rng);
    CAPTURE(z.word());
    CHECK(check_coordinator_kills_shifts(4, z));

    auto c = build_component(ComponentKind::coordinator(4),
                             Polarity::Positive, block_at(0, 0, z), z);
    Configuration cfg = c.gadget.overlay;
    for (int i = 1; i <= 4; ++i) {
      cfg = run_cycles(cfg, z, 1);
      CHECK_FALSE(cfg.signals().empty());
    }
    CHECK(cfg.at(c.gadget.pins.at("out").cell) >= 4);
  }
}

TEST_CASE("coordinator feeding a duplicator yields both outputs after m+1") {
  std::mt19937 rng(49);
  for (int trial = 0; trial < 10; ++trial) {
    UpdateScheme z = random_scheme(rng);
    int m = 3 + trial % 3;
    CAPTURE(z.word());
    CAPTURE(m);
    auto coord = build_component(ComponentKind::coordinator(m),
                                 Polarity::Positive, block_at(0, 0, z), z);
    auto dup = build_component(ComponentKind::duplicator(), Polarity::Positive,
                               block_at(0, 0, z), z);
    Gadget joined = connect(coord.gadget, "out", dup.gadget, "in", z);
    REQUIRE(joined.pins.count("out_a") == 1);
    REQUIRE(joined.pins.count("out_b") == 1);
    CHECK(joined.pins.at("out_a").delay == m + 1);
    CHECK(joined.pins.at("out_b").delay == m + 1);

    Configuration cfg = joined.overlay;
    cfg = run_cycles(cfg, z, m + 1);
    CHECK(cfg.at(joined.pins.at("out_a").cell) >= 4);
    CHECK(cfg.at(joined.pins.at("out_b").cell) >= 4);
  }
}

TEST_CASE("coordinator length must be positive") {
  CHECK_THROWS_AS(build_component(ComponentKind::coordinator(0),
                                  Polarity::Positive, block_at(0, 0, kZ1),
                                  kZ1),
                  DelayOutOfRange);
}

TEST_CASE("connect adds route delays onto surviving pins") {
  std::mt19937 rng(50);
  UpdateScheme z = random_scheme(rng);
  auto wire = build_semi_wire(random_walk(rng, z, 5), Polarity::Positive, z,
                              false);
  auto dup = build_component(ComponentKind::duplicator(), Polarity::Positive,
                             block_at(0, 0, z), z);
  Gadget g = connect(wire.gadget, "out", dup.gadget, "in", z);
  CHECK(g.pins.count("in") == 1);
  CHECK(g.pins.count("out") == 0);
  CHECK(g.pins.at("out_a").delay == 4 + 1);
  CHECK(g.delay == 4 + 1);
}

TEST_CASE("connect rejects polarity mismatches") {
  UpdateScheme z = kZ1;
  auto wire = build_semi_wire({block_at(0, 0, z), block_at(1, 1, z),
                               block_at(2, 2, z)},
                              Polarity::Negative, z, false);
  auto dup = build_component(ComponentKind::duplicator(), Polarity::Positive,
                             block_at(0, 0, z), z);
  CHECK_THROWS_AS(connect(wire.gadget, "out", dup.gadget, "in", z),
                  PolarityMismatch);
}

TEST_CASE("connect rejects feeds from the wrong side") {
  UpdateScheme z = kZ1;
  // merge in_a must be fed from above; approach it ascending instead
  auto rising = build_semi_wire({block_at(0, 2, z), block_at(1, 1, z),
                                 block_at(2, 0, z)},
                                Polarity::Positive, z, false);
  auto m = build_component(ComponentKind::merge(), Polarity::Positive,
                           block_at(0, 0, z), z);
  CHECK_THROWS_AS(connect(rising.gadget, "out", m.gadget, "in_a", z),
                  OrientationViolation);
  // and in_b from below; approach it descending instead
  auto falling = build_semi_wire({block_at(0, 0, z), block_at(1, 1, z),
                                  block_at(2, 2, z)},
                                 Polarity::Positive, z, false);
  CHECK_THROWS_AS(connect(falling.gadget, "out", m.gadget, "in_b", z),
                  OrientationViolation);
}

TEST_CASE("connect rejects overlapping footprints away from the joint") {
  UpdateScheme z = kZ1;
  // a leftward zigzag whose body occupies the block where the attached
  // duplicator's lower arm would land
  auto wire = build_semi_wire(
      {block_at(8, 2, z), block_at(7, 1, z), block_at(6, 2, z),
       block_at(5, 1, z), block_at(4, 2, z), block_at(3, 1, z),
       block_at(2, 0, z)},
      Polarity::Positive, z, false);
  auto dup = build_component(ComponentKind::duplicator(), Polarity::Positive,
                             block_at(0, 0, z), z);
  CHECK_THROWS_AS(connect(wire.gadget, "out", dup.gadget, "in", z),
                  FootprintCollision);
}

TEST_CASE("connect rejects clashing pin names") {
  UpdateScheme z = kZ1;
  auto d1 = build_component(ComponentKind::duplicator(), Polarity::Positive,
                            block_at(0, 0, z), z);
  auto d2 = build_component(ComponentKind::duplicator(), Polarity::Positive,
                            block_at(0, 0, z), z);
  CHECK_THROWS_AS(connect(d1.gadget, "out_a", d2.gadget, "in", z), PinClash);
}

TEST_CASE("separated components evolve independently") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    UpdateScheme z = random_scheme(rng);
    CAPTURE(z.word());
    auto a = build_component(ComponentKind::duplicator(), Polarity::Positive,
                             block_at(0, 0, z), z);
    auto b = build_component(ComponentKind::merge(), Polarity::Negative,
                             block_at(6, 0, z), z);
    Configuration joint = combine(a.gadget.overlay, b.gadget.overlay);
    joint.set(a.gadget.pins.at("in").cell, 4);
    joint.set(b.gadget.pins.at("in_a").cell, 4);

    Configuration alone_a = a.gadget.overlay;
    alone_a.set(a.gadget.pins.at("in").cell, 4);
    Configuration alone_b = b.gadget.overlay;
    alone_b.set(b.gadget.pins.at("in_a").cell, 4);

    for (int cyc = 0; cyc < 3; ++cyc) {
      joint = run_cycles(joint, z, 1);
      alone_a = run_cycles(alone_a, z, 1);
      alone_b = run_cycles(alone_b, z, 1);
      Configuration merged = combine(alone_a, alone_b);
      CHECK(joint == merged);
    }
  }
}

TEST_CASE("simulate_component requires the horizon to cover the stimuli") {
  auto d = build_component(ComponentKind::duplicator(), Polarity::Positive,
                           block_at(0, 0, kZ1), kZ1);
  CHECK_THROWS_AS(simulate_component(d, {{"in", 3}}, kZ1, 3), HorizonTooSmall);
}

TEST_CASE("builders demand a normalized non-degenerate scheme") {
  CHECK_THROWS_AS(build_component(ComponentKind::duplicator(),
                                  Polarity::Positive,
                                  block_at(0, 0, parse_scheme("HHHV")),
                                  parse_scheme("HHHV")),
                  DegenerateScheme);
  auto vfirst = parse_scheme("VHHVV");
  CHECK_THROWS_AS(build_component(ComponentKind::merge(), Polarity::Positive,
                                  block_at(0, 0, vfirst), vfirst),
                  Error);
}
