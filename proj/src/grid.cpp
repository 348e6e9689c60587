#include "fungal/grid.hpp"

#include <algorithm>
#include <stdexcept>

#include "fungal/errors.hpp"

namespace fungal {

void Configuration::set(Cell c, Grain g) {
  if (g > kMaxGrain) throw GrainOverflow(c, g);
  if (g == 0) {
    cells_.erase(c);
  } else {
    cells_[c] = g;
  }
}

std::int64_t Configuration::total_grains() const {
  std::int64_t sum = 0;
  for (const auto& [cell, grain] : cells_) sum += grain;
  return sum;
}

std::vector<Cell> Configuration::signals() const {
  std::vector<Cell> out;
  for (const auto& [cell, grain] : cells_) {
    if (grain >= kSignalThreshold) out.push_back(cell);
  }
  std::sort(out.begin(), out.end(), [](Cell a, Cell b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  return out;
}

bool Configuration::has_vpp() const {
  auto sig = signals();
  for (std::size_t i = 1; i < sig.size(); ++i) {
    if (((sig[i].y - sig[0].y) & 1) != 0) return false;
  }
  return true;
}

std::optional<Rect> Configuration::bounding_box() const {
  if (cells_.empty()) return std::nullopt;
  auto it = cells_.begin();
  std::int32_t min_x = it->first.x, max_x = it->first.x;
  std::int32_t min_y = it->first.y, max_y = it->first.y;
  for (++it; it != cells_.end(); ++it) {
    min_x = std::min(min_x, it->first.x);
    max_x = std::max(max_x, it->first.x);
    min_y = std::min(min_y, it->first.y);
    max_y = std::max(max_y, it->first.y);
  }
  return Rect{{min_x, min_y}, max_x - min_x + 1, max_y - min_y + 1};
}

Configuration step(const Configuration& c, Axis rule) {
  const Cell offset = rule == Axis::H ? Cell{1, 0} : Cell{0, 1};

  std::vector<Cell> firing;
  for (const auto& [cell, grain] : c.cells()) {
    if (grain >= kSignalThreshold) firing.push_back(cell);
  }

  Configuration next = c;
  for (Cell f : firing) {
    next.set(f, static_cast<Grain>(next.at(f) - 2));
  }
  for (Cell f : firing) {
    for (Cell n : {f + offset, f - offset}) {
      Grain g = next.at(n);
      if (g >= kMaxGrain) throw GrainOverflow(n, static_cast<Grain>(g + 1));
      next.set(n, static_cast<Grain>(g + 1));
    }
  }
  return next;
}

Configuration run_steps(const Configuration& c, const UpdateScheme& z,
                        std::int64_t t) {
  Configuration cur = c;
  for (std::int64_t s = 1; s <= t; ++s) cur = step(cur, z.at(s));
  return cur;
}

Configuration run_cycles(const Configuration& c, const UpdateScheme& z,
                         std::int64_t i) {
  return run_steps(c, z, i * z.k());
}

bool predict(const Configuration& c, Cell x, std::int64_t max_steps,
             const UpdateScheme& z) {
  if (c.at(x) != 0) return true;
  Engine engine(c, z);
  for (std::int64_t t = 1; t <= max_steps; ++t) {
    if (engine.quiet()) return false;
    engine.step_once();
    if (engine.at(x) != 0) return true;
  }
  return false;
}

Engine::Engine(const Configuration& c, UpdateScheme z)
    : z_(std::move(z)), cells_(c.cells()) {
  for (const auto& [cell, grain] : cells_) {
    if (grain >= kSignalThreshold) signals_.insert(cell);
  }
}

void Engine::bump(Cell c, int delta) {
  Grain before = at(c);
  int after = static_cast<int>(before) + delta;
  if (after > kMaxGrain) throw GrainOverflow(c, static_cast<Grain>(after));
  if (after < 0) throw std::logic_error("grain went negative");

  if (after == 0) {
    cells_.erase(c);
  } else {
    cells_[c] = static_cast<Grain>(after);
  }
  if (after >= kSignalThreshold) {
    signals_.insert(c);
  } else {
    signals_.erase(c);
  }
  if (watched_.contains(c)) {
    transitions_.push_back(
        {c, steps_done_, before, static_cast<Grain>(after)});
  }
}

std::int64_t Engine::step_once() {
  const Axis rule = z_.at(steps_done_ + 1);
  const Cell offset = rule == Axis::H ? Cell{1, 0} : Cell{0, 1};

  firing_buf_.assign(signals_.begin(), signals_.end());
  ++steps_done_;
  for (Cell f : firing_buf_) bump(f, -2);
  for (Cell f : firing_buf_) {
    bump(f + offset, +1);
    bump(f - offset, +1);
  }
  return static_cast<std::int64_t>(firing_buf_.size());
}

void Engine::run_steps(std::int64_t t) {
  for (std::int64_t s = 0; s < t; ++s) step_once();
}

void Engine::run_until_quiet(std::int64_t t_max) {
  while (steps_done_ < t_max && !signals_.empty()) step_once();
}

Configuration Engine::snapshot() const {
  Configuration out;
  for (const auto& [cell, grain] : cells_) out.set(cell, grain);
  return out;
}

}  // namespace fungal
