#include "fungal/scheme.hpp"

#include <cctype>

#include "fungal/errors.hpp"

namespace fungal {

UpdateScheme::UpdateScheme(std::string word) : word_(std::move(word)) {
  for (char c : word_) {
    if (c == 'H') {
      ++h_;
    } else {
      ++v_;
    }
  }
}

UpdateScheme parse_scheme(std::string_view text) {
  auto is_ws = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  std::size_t begin = 0;
  while (begin < text.size() && is_ws(text[begin])) ++begin;
  std::size_t end = text.size();
  while (end > begin && is_ws(text[end - 1])) --end;

  std::string word;
  word.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (c != 'H' && c != 'V') throw IllegalSymbol(i - begin);
    word.push_back(c);
  }
  if (word.empty()) throw EmptyWord();
  return UpdateScheme(std::move(word));
}

namespace {

std::string rotate_left(const std::string& w, std::size_t r) {
  return w.substr(r) + w.substr(0, r);
}

}  // namespace

Normalization normalize(const UpdateScheme& z) {
  if (z.h() == 0 || z.v() == 0) throw MonotoneWord();

  const std::string& w = z.word();
  if (w.front() == 'V' && w.back() == 'H') {
    std::string swapped = w;
    for (char& c : swapped) c = (c == 'H') ? 'V' : 'H';
    return {UpdateScheme(std::move(swapped)), true, 0};
  }

  std::size_t r = 0;
  if (w.front() == 'V') {
    // Z = V^i·H·W·V^j  →  H·W·V^(j+i), waiting i steps.
    while (w[r] == 'V') ++r;
  } else if (w.back() == 'H') {
    // Trailing-H residue: shift the cycle start so the run leads instead.
    std::size_t t = 0;
    while (w[w.size() - 1 - t] == 'H') ++t;
    r = w.size() - t;
  }
  return {UpdateScheme(rotate_left(w, r)), false, static_cast<int>(r)};
}

UpdateScheme primitive_root(const UpdateScheme& z) {
  const std::string& w = z.word();
  auto n = w.size();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool period = true;
    for (std::size_t i = p; i < n && period; ++i) {
      period = (w[i] == w[i - p]);
    }
    if (period) return UpdateScheme(w.substr(0, p));
  }
  return z;
}

bool is_primitive(const UpdateScheme& z) {
  return primitive_root(z).k() == z.k();
}

std::vector<UpdateScheme> shifted_cycles(const UpdateScheme& z) {
  if (!is_primitive(z)) throw NotPrimitive();
  std::vector<UpdateScheme> shifts;
  shifts.reserve(static_cast<std::size_t>(z.k()) - 1);
  for (std::size_t r = 1; r < z.word().size(); ++r) {
    shifts.emplace_back(rotate_left(z.word(), r));
  }
  return shifts;
}

}  // namespace fungal
