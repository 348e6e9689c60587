#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fungal/geometry.hpp"
#include "fungal/scheme.hpp"

namespace fungal {

// A sparse configuration: cell → grain, default 0, no stored zeros.
class Configuration {
 public:
  using Map = std::unordered_map<Cell, Grain, CellHash>;

  Grain at(Cell c) const {
    auto it = cells_.find(c);
    return it == cells_.end() ? Grain{0} : it->second;
  }

  // g == 0 erases; values above 5 are rejected.
  void set(Cell c, Grain g);

  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }
  const Map& cells() const { return cells_; }

  std::int64_t total_grains() const;

  // Cells with grain ≥ 4, sorted by (y, x).
  std::vector<Cell> signals() const;

  // Vertical parity property: every pair of signals differs by an even
  // vertical offset. Vacuously true with 0 or 1 signals.
  bool has_vpp() const;

  // Bounding box of the nonzero cells, or nullopt when empty.
  std::optional<Rect> bounding_box() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.cells_ == b.cells_;
  }

 private:
  Map cells_;
};

// One synchronous application of the given axis rule: every cell holding at
// least 4 grains fires, losing 2; every cell gains 1 per firing cell among
// its two neighbors along the axis (the firing cell itself is excluded from
// its own gain sum). The firing set is materialized before any gains apply.
Configuration step(const Configuration& c, Axis rule);

// t steps of z applied cyclically; t = 0 returns c unchanged.
Configuration run_steps(const Configuration& c, const UpdateScheme& z,
                        std::int64_t t);

// i full cycles: run_steps with t = i·k.
Configuration run_cycles(const Configuration& c, const UpdateScheme& z,
                         std::int64_t i);

// True iff some t ≤ max_steps (including t = 0) has cell x nonzero.
// Exact simulation; stops early once no signal remains (the configuration
// is then fixed forever).
bool predict(const Configuration& c, Cell x, std::int64_t max_steps,
             const UpdateScheme& z);

// Incremental stepping engine. Tracks the signal set so each step costs
// time proportional to the number of firing cells, not the grid size.
// Produces states identical to the pure step() function.
class Engine {
 public:
  struct Transition {
    Cell cell;
    std::int64_t step;  // 1-based step index at which the change applied
    Grain from;
    Grain to;
  };

  Engine(const Configuration& c, UpdateScheme z);

  // Applies the next step of the cyclic word. Returns the number of firings.
  std::int64_t step_once();

  void run_steps(std::int64_t t);
  // Runs until either t_max steps are done or no signal remains.
  void run_until_quiet(std::int64_t t_max);

  std::int64_t steps_done() const { return steps_done_; }
  bool quiet() const { return signals_.empty(); }
  std::size_t signal_count() const { return signals_.size(); }

  Grain at(Cell c) const {
    auto it = cells_.find(c);
    return it == cells_.end() ? Grain{0} : it->second;
  }

  Configuration snapshot() const;

  // Watched cells log every value change they undergo.
  void watch(Cell c) { watched_.insert(c); }
  const std::vector<Transition>& transitions() const { return transitions_; }

 private:
  UpdateScheme z_;
  std::unordered_map<Cell, Grain, CellHash> cells_;
  std::unordered_set<Cell, CellHash> signals_;
  std::unordered_set<Cell, CellHash> watched_;
  std::vector<Transition> transitions_;
  std::vector<Cell> firing_buf_;
  std::int64_t steps_done_ = 0;

  void bump(Cell c, int delta);
};

}  // namespace fungal
