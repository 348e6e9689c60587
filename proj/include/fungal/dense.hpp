#pragma once

#include <cstdint>
#include <vector>

#include "fungal/geometry.hpp"
#include "fungal/grid.hpp"
#include "fungal/scheme.hpp"

namespace fungal {

// Brute-force reference simulator over a dense array. Scans every cell on
// every step and grows the array whenever a signal sits on the boundary,
// so grains can never fall off an edge. Slow by design; used as the oracle
// the sparse engine is checked against.
class DenseSimulator {
 public:
  explicit DenseSimulator(const Configuration& c);

  void step(Axis rule);
  void run_steps(const UpdateScheme& z, std::int64_t t);

  Grain at(Cell c) const;
  Configuration snapshot() const;

 private:
  Cell origin_;
  std::int64_t width_ = 0;
  std::int64_t height_ = 0;
  std::vector<Grain> data_;

  std::int64_t index(Cell c) const {
    return (c.y - origin_.y) * width_ + (c.x - origin_.x);
  }
  bool inside(Cell c) const {
    return c.x >= origin_.x && c.x < origin_.x + width_ && c.y >= origin_.y &&
           c.y < origin_.y + height_;
  }
  void grow_if_boundary_signal();
  void reallocate(Cell new_origin, std::int64_t new_w, std::int64_t new_h);
};

}  // namespace fungal
