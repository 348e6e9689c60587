#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fungal/lattice.hpp"
#include "fungal/scheme.hpp"

namespace fungal {

// A chain of bridges moving a signal one block-diagonal per cycle. Valid
// chains are diagonally connected consecutively and nowhere else, so a
// traveling signal can never skip ahead.
struct SemiWire {
  std::vector<Block> blocks;
  Polarity polarity = Polarity::Positive;
  Gadget gadget;  // pins "in" and "out"
};

// Builds the wire along the given blocks; the first bridge carries the
// source grain when source is set. Throws BrokenChain when consecutive
// blocks are not diagonally connected and IllegalDiagonalShortcut when a
// non-consecutive pair is.
SemiWire build_semi_wire(const std::vector<Block>& blocks, Polarity polarity,
                         const UpdateScheme& z, bool source);

struct ComponentKind {
  enum class Tag : std::uint8_t {
    Duplicator,
    Merge,
    Crossing,
    Switch,
    Diode,
    Retarder,
    Coordinator,
  };

  Tag tag = Tag::Duplicator;
  int retarder_delay = 0;   // Retarder: requested delay d in cycles
  int retarder_side = 0;    // Retarder: footprint side L in blocks
  int coordinator_len = 0;  // Coordinator: number of bridges m

  static ComponentKind duplicator() { return {Tag::Duplicator, 0, 0, 0}; }
  static ComponentKind merge() { return {Tag::Merge, 0, 0, 0}; }
  static ComponentKind crossing() { return {Tag::Crossing, 0, 0, 0}; }
  static ComponentKind switch_() { return {Tag::Switch, 0, 0, 0}; }
  static ComponentKind diode() { return {Tag::Diode, 0, 0, 0}; }
  static ComponentKind retarder(int d, int side) {
    return {Tag::Retarder, d, side, 0};
  }
  static ComponentKind coordinator(int m) { return {Tag::Coordinator, 0, 0, m}; }
};

// A placed component: its gadget carries the bridges, the ⊕ overlay, and
// named pins. Input pins record the side they must be fed from; output
// pins record the route delay in cycles.
struct ComponentSpec {
  ComponentKind kind;
  Polarity polarity = Polarity::Positive;
  Block anchor;
  Gadget gadget;
};

// Feasible retarder delays for side L: smallest and largest d accepted by
// build_component. The largest equals the bridge capacity of the coil'
// section, (L/4)·(L−4).
int retarder_min_delay(int side);
int retarder_max_delay(int side);

ComponentSpec build_component(ComponentKind kind, Polarity polarity,
                              Block anchor, const UpdateScheme& z);

// Runs the component with grain-4 stimuli placed on the named input pins
// at the given cycle boundaries, for `horizon` full cycles. Reports the
// first cycle at which each output pin holds a signal, or nullopt if it
// never does within the horizon. The horizon must reach past the last
// stimulus.
std::map<std::string, std::optional<int>> simulate_component(
    const ComponentSpec& spec, const std::map<std::string, int>& stimuli,
    const UpdateScheme& z, int horizon);

// Superimposes g2's input pin onto g1's output pin, translating g2 into
// place. Polarities must match; a pin with a declared feed side must be
// approached from that side; footprints must stay clear of each other
// outside the connection vicinity. The joined pins become internal and the
// surviving pins of g2 keep their names with route delays extended by the
// feeding route.
Gadget connect(const Gadget& g1, const std::string& out_pin, const Gadget& g2,
               const std::string& in_pin, const UpdateScheme& z);

// True iff the length-m coordinator source wire, simulated under every
// proper shift of z, reaches a signal-free configuration within k·m steps.
bool check_coordinator_kills_shifts(int m, const UpdateScheme& z);

}  // namespace fungal
