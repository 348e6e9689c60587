#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "fungal/errors.hpp"
#include "fungal/scheme.hpp"

using namespace fungal;

namespace {

std::string random_word(std::mt19937& rng, int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  int k = len(rng);
  std::string w;
  for (int i = 0; i < k; ++i) w += bit(rng) ? 'H' : 'V';
  return w;
}

std::string random_mixed_word(std::mt19937& rng, int min_len, int max_len) {
  for (;;) {
    auto w = random_word(rng, min_len, max_len);
    if (w.find('H') != std::string::npos && w.find('V') != std::string::npos)
      return w;
  }
}

}  // namespace

TEST_CASE("parse counts symbols") {
  auto z = parse_scheme("HVVHHHV");
  CHECK(z.word() == "HVVHHHV");
  CHECK(z.h() == 4);
  CHECK(z.v() == 3);
  CHECK(z.k() == 7);

  auto single = parse_scheme("H");
  CHECK(single.h() == 1);
  CHECK(single.v() == 0);
  CHECK(single.k() == 1);
}

TEST_CASE("parse is case-insensitive and trims whitespace") {
  CHECK(parse_scheme("hvVhhHv").word() == "HVVHHHV");
  CHECK(parse_scheme("  HV \n").word() == "HV");
}

TEST_CASE("parse rejects bad input") {
  CHECK_THROWS_AS(parse_scheme(""), EmptyWord);
  CHECK_THROWS_AS(parse_scheme("   "), EmptyWord);
  CHECK_THROWS_AS(parse_scheme("HVX"), IllegalSymbol);
  try {
    parse_scheme("HVX");
  } catch (const IllegalSymbol& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("cyclic indexing is 1-based") {
  auto z = parse_scheme("HVVHHHV");
  CHECK(z.at(1) == Axis::H);
  CHECK(z.at(2) == Axis::V);
  CHECK(z.at(3) == Axis::V);
  CHECK(z.at(4) == Axis::H);
  CHECK(z.at(7) == Axis::V);
  CHECK(z.at(8) == Axis::H);
  CHECK(z.at(14) == Axis::V);
}

TEST_CASE("normalize keeps a word already in normal form") {
  auto n = normalize(parse_scheme("HVVHHHV"));
  CHECK(n.normalized.word() == "HVVHHHV");
  CHECK_FALSE(n.rotated);
  CHECK(n.wait_steps == 0);
}

TEST_CASE("normalize absorbs a leading V run as waiting steps") {
  auto n = normalize(parse_scheme("VHHV"));
  CHECK(n.normalized.word() == "HHVV");
  CHECK_FALSE(n.rotated);
  CHECK(n.wait_steps == 1);

  auto deep = normalize(parse_scheme("VVVHV"));
  CHECK(deep.normalized.word() == "HVVVV");
  CHECK(deep.wait_steps == 3);
}

TEST_CASE("normalize shifts a trailing H run into waiting steps") {
  auto n = normalize(parse_scheme("HVH"));
  CHECK(n.normalized.word() == "HHV");
  CHECK_FALSE(n.rotated);
  CHECK(n.wait_steps == 2);
}

TEST_CASE("normalize rotates a V...H word by ninety degrees") {
  auto n = normalize(parse_scheme("VH"));
  CHECK(n.normalized.word() == "HV");
  CHECK(n.rotated);
  CHECK(n.wait_steps == 0);

  auto wide = normalize(parse_scheme("VVHH"));
  CHECK(wide.normalized.word() == "HHVV");
  CHECK(wide.rotated);
  CHECK(wide.wait_steps == 0);
}

TEST_CASE("normalize rejects monotone words") {
  CHECK_THROWS_AS(normalize(parse_scheme("VVVV")), MonotoneWord);
  CHECK_THROWS_AS(normalize(parse_scheme("HHH")), MonotoneWord);
  CHECK_THROWS_AS(normalize(parse_scheme("H")), MonotoneWord);
}

TEST_CASE("normalize properties over random words") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto z = parse_scheme(random_mixed_word(rng, 2, 16));
    auto n = normalize(z);
    CHECK(n.normalized.starts_with_h());
    CHECK(n.normalized.ends_with_v());
    CHECK(n.normalized.k() == z.k());
    if (n.rotated) {
      CHECK(n.normalized.h() == z.v());
      CHECK(n.normalized.v() == z.h());
    } else {
      CHECK(n.normalized.h() == z.h());
      CHECK(n.normalized.v() == z.v());
    }
    CHECK(n.wait_steps >= 0);
    CHECK(n.wait_steps < z.k());

    auto again = normalize(n.normalized);
    CHECK(again.normalized == n.normalized);
    CHECK_FALSE(again.rotated);
    CHECK(again.wait_steps == 0);
  }
}

TEST_CASE("primitive root finds the shortest period") {
  CHECK(primitive_root(parse_scheme("HVHV")).word() == "HV");
  CHECK(primitive_root(parse_scheme("HHVHHV")).word() == "HHV");
  CHECK(primitive_root(parse_scheme("HVVHHHV")).word() == "HVVHHHV");
  CHECK(primitive_root(parse_scheme("HHHH")).word() == "H");

  CHECK(is_primitive(parse_scheme("HVVHHHV")));
  CHECK_FALSE(is_primitive(parse_scheme("HVHV")));
}

TEST_CASE("primitive root property: the root tiles the word") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    auto z = parse_scheme(random_word(rng, 1, 18));
    auto root = primitive_root(z);
    CHECK(z.k() % root.k() == 0);
    std::string rebuilt;
    for (int i = 0; i < z.k() / root.k(); ++i) rebuilt += root.word();
    CHECK(rebuilt == z.word());
    CHECK(is_primitive(root));
  }
}

TEST_CASE("shifted cycles enumerate the proper rotations") {
  auto cycles = shifted_cycles(parse_scheme("HVVHHHV"));
  REQUIRE(cycles.size() == 6);
  CHECK(cycles.front().word() == "VVHHHVH");

  std::set<std::string> seen;
  for (const auto& w : cycles) {
    CHECK(w.word() != "HVVHHHV");
    seen.insert(w.word());
  }
  CHECK(seen.size() == 6);

  auto pair = shifted_cycles(parse_scheme("HV"));
  REQUIRE(pair.size() == 1);
  CHECK(pair.front().word() == "VH");

  CHECK_THROWS_AS(shifted_cycles(parse_scheme("HVHV")), NotPrimitive);
}

TEST_CASE("shifted cycles of a random primitive word are pairwise distinct") {
  std::mt19937 rng(37);
  int done = 0;
  while (done < 200) {
    auto z = parse_scheme(random_word(rng, 2, 14));
    if (!is_primitive(z)) continue;
    ++done;
    auto cycles = shifted_cycles(z);
    CHECK(static_cast<int>(cycles.size()) == z.k() - 1);
    std::set<std::string> seen{z.word()};
    for (const auto& w : cycles) {
      CHECK(w.k() == z.k());
      CHECK(w.h() == z.h());
      seen.insert(w.word());
    }
    CHECK(static_cast<int>(seen.size()) == z.k());
  }
}
