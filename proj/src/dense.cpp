#include "fungal/dense.hpp"

#include "fungal/errors.hpp"

namespace fungal {

namespace {
constexpr std::int64_t kMargin = 4;
}

DenseSimulator::DenseSimulator(const Configuration& c) {
  auto box = c.bounding_box();
  Rect r = box.value_or(Rect{{0, 0}, 1, 1});
  origin_ = r.origin - Cell{kMargin, kMargin};
  width_ = r.width + 2 * kMargin;
  height_ = r.height + 2 * kMargin;
  data_.assign(static_cast<std::size_t>(width_ * height_), 0);
  for (const auto& [cell, grain] : c.cells()) {
    data_[static_cast<std::size_t>(index(cell))] = grain;
  }
}

Grain DenseSimulator::at(Cell c) const {
  if (!inside(c)) return 0;
  return data_[static_cast<std::size_t>(index(c))];
}

void DenseSimulator::reallocate(Cell new_origin, std::int64_t new_w,
                                std::int64_t new_h) {
  std::vector<Grain> fresh(static_cast<std::size_t>(new_w * new_h), 0);
  for (std::int64_t y = 0; y < height_; ++y) {
    for (std::int64_t x = 0; x < width_; ++x) {
      Grain g = data_[static_cast<std::size_t>(y * width_ + x)];
      if (g == 0) continue;
      std::int64_t nx = origin_.x + x - new_origin.x;
      std::int64_t ny = origin_.y + y - new_origin.y;
      fresh[static_cast<std::size_t>(ny * new_w + nx)] = g;
    }
  }
  origin_ = new_origin;
  width_ = new_w;
  height_ = new_h;
  data_ = std::move(fresh);
}

void DenseSimulator::grow_if_boundary_signal() {
  bool grow = false;
  for (std::int64_t x = 0; x < width_ && !grow; ++x) {
    if (data_[static_cast<std::size_t>(x)] >= kSignalThreshold ||
        data_[static_cast<std::size_t>((height_ - 1) * width_ + x)] >=
            kSignalThreshold) {
      grow = true;
    }
  }
  for (std::int64_t y = 0; y < height_ && !grow; ++y) {
    if (data_[static_cast<std::size_t>(y * width_)] >= kSignalThreshold ||
        data_[static_cast<std::size_t>(y * width_ + width_ - 1)] >=
            kSignalThreshold) {
      grow = true;
    }
  }
  if (grow) {
    reallocate(origin_ - Cell{kMargin, kMargin}, width_ + 2 * kMargin,
               height_ + 2 * kMargin);
  }
}

void DenseSimulator::step(Axis rule) {
  grow_if_boundary_signal();
  const std::int64_t stride = rule == Axis::H ? 1 : width_;

  std::vector<Grain> next = data_;
  for (std::int64_t y = 0; y < height_; ++y) {
    for (std::int64_t x = 0; x < width_; ++x) {
      std::size_t i = static_cast<std::size_t>(y * width_ + x);
      if (data_[i] < kSignalThreshold) continue;
      next[i] = static_cast<Grain>(next[i] - 2);
      // After growing, a firing cell is never on the boundary, so both
      // axis neighbors are in range.
      next[i - static_cast<std::size_t>(stride)] += 1;
      next[i + static_cast<std::size_t>(stride)] += 1;
    }
  }
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (next[i] > kMaxGrain) {
      Cell c{static_cast<std::int32_t>(origin_.x + static_cast<std::int64_t>(i) % width_),
             static_cast<std::int32_t>(origin_.y + static_cast<std::int64_t>(i) / width_)};
      throw GrainOverflow(c, next[i]);
    }
  }
  data_ = std::move(next);
}

void DenseSimulator::run_steps(const UpdateScheme& z, std::int64_t t) {
  for (std::int64_t s = 1; s <= t; ++s) step(z.at(s));
}

Configuration DenseSimulator::snapshot() const {
  Configuration out;
  for (std::int64_t y = 0; y < height_; ++y) {
    for (std::int64_t x = 0; x < width_; ++x) {
      Grain g = data_[static_cast<std::size_t>(y * width_ + x)];
      if (g != 0) {
        out.set(Cell{static_cast<std::int32_t>(origin_.x + x),
                     static_cast<std::int32_t>(origin_.y + y)},
                g);
      }
    }
  }
  return out;
}

}  // namespace fungal
