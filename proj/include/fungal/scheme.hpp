#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fungal {

enum class Axis : std::uint8_t { H, V };

// A cyclic update scheme: a finite word over {H, V}. Step s (1-based)
// applies the rule of symbol Z((s-1) mod k + 1); one cycle is k steps.
class UpdateScheme {
 public:
  UpdateScheme() = default;
  explicit UpdateScheme(std::string word);

  const std::string& word() const { return word_; }
  int h() const { return h_; }
  int v() const { return v_; }
  int k() const { return static_cast<int>(word_.size()); }

  // 1-based, cyclic.
  Axis at(std::int64_t s) const {
    auto i = (s - 1) % k();
    return word_[static_cast<std::size_t>(i)] == 'H' ? Axis::H : Axis::V;
  }

  bool starts_with_h() const { return word_.front() == 'H'; }
  bool ends_with_v() const { return word_.back() == 'V'; }

  friend bool operator==(const UpdateScheme& a, const UpdateScheme& b) {
    return a.word_ == b.word_;
  }

 private:
  std::string word_;
  int h_ = 0;
  int v_ = 0;
};

struct Normalization {
  UpdateScheme normalized;  // starts with H, ends with V
  bool rotated = false;     // true when H and V were exchanged (90° rotation)
  int wait_steps = 0;       // leading steps absorbed as waiting
};

// Parses a single-line word over {H,V}; case-insensitive, surrounding
// whitespace ignored. Throws EmptyWord or IllegalSymbol. Monotone words
// are accepted here (and by the simulator); normalize() rejects them.
UpdateScheme parse_scheme(std::string_view text);

// Brings a scheme to the start-H/end-V form. A word starting with V and
// ending with H is rotated 90° (every H and V exchanged). Otherwise the
// cycle start is shifted: the absorbed prefix becomes wait_steps, realized
// by source extensions downstream. Throws MonotoneWord.
Normalization normalize(const UpdateScheme& z);

// Shortest W with z = W^i, i maximal.
UpdateScheme primitive_root(const UpdateScheme& z);

bool is_primitive(const UpdateScheme& z);

// All words Y·X over nontrivial splits z = X·Y (the k-1 proper rotations),
// in rotation order. Throws NotPrimitive when z is a proper power.
std::vector<UpdateScheme> shifted_cycles(const UpdateScheme& z);

}  // namespace fungal
