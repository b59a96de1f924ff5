#include <algorithm>
#include <array>

#include "doctest.h"
#include "skein/error.hpp"
#include "skein/level.hpp"
#include "support.hpp"

using namespace skein;
using skein::testing::kind_of;

namespace {

std::vector<int> colors_of(const Level& l) { return {l.colors().begin(), l.colors().end()}; }

}  // namespace

TEST_CASE("color sets and q-bounds") {
  CHECK(colors_of(make_level(5)) == std::vector<int>{0, 2});
  CHECK(make_level(5).q_bound() == 6);
  CHECK(colors_of(make_level(8)) == std::vector<int>{0, 1, 2});
  CHECK(make_level(8).q_bound() == 4);
  CHECK(colors_of(make_level(3)) == std::vector<int>{0});
  CHECK(make_level(3).q_bound() == 2);
  CHECK(colors_of(make_level(4)) == std::vector<int>{0});
  CHECK(make_level(13).max_color() == 10);
  CHECK(make_level(16).max_color() == 6);
  CHECK(kind_of([] { make_level(2); }) == ErrorKind::invalid_level);
  CHECK(kind_of([] { make_level(-7); }) == ErrorKind::invalid_level);
}

TEST_CASE("admissible triples") {
  CHECK(admissible_triple(make_level(5), 2, 2, 2));
  CHECK_FALSE(admissible_triple(make_level(8), 1, 1, 1));
  CHECK_FALSE(admissible_triple(make_level(7), 0, 2, 4));
  CHECK_FALSE(admissible_triple(make_level(7), 4, 4, 4));
  CHECK(kind_of([] { admissible_triple(make_level(5), 1, 1, 0); }) == ErrorKind::invalid_color);
  CHECK(kind_of([] { admissible_triple(make_level(8), 3, 0, 3); }) == ErrorKind::invalid_color);
}

TEST_CASE("admissibility is symmetric, zero pairs with equal colors, odd levels have no parity condition") {
  for (int p = 3; p <= 16; ++p) {
    const Level level(p);
    for (int a : level.colors())
      for (int b : level.colors()) {
        CHECK(admissible_triple(level, 0, a, b) == (a == b));
        for (int c : level.colors()) {
          std::array<int, 3> t{a, b, c};
          std::sort(t.begin(), t.end());
          const bool base = admissible_triple(level, a, b, c);
          do {
            CHECK(admissible_triple(level, t[0], t[1], t[2]) == base);
          } while (std::next_permutation(t.begin(), t.end()));
          if (level.is_odd()) CHECK((a + b + c) % 2 == 0);
        }
      }
  }
}

TEST_CASE("lemma range") {
  CHECK(make_level(5).supports_lemmas());
  CHECK(make_level(6).supports_lemmas());
  CHECK_FALSE(make_level(3).supports_lemmas());
  CHECK_FALSE(make_level(4).supports_lemmas());
  CHECK(kind_of([] { make_level(4).require_lemma_range(); }) == ErrorKind::invalid_level);
}
