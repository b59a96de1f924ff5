#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "skein/cyclo.hpp"
#include "skein/twist.hpp"
#include "skein/verify.hpp"
#include "support.hpp"

using namespace skein;
using skein::testing::kind_of;

TEST_CASE("twist exponents") {
  for (int p = 3; p <= 16; ++p) CHECK(twist_exponent(Level(p), 0) == 0);
  CHECK(twist_exponent(Level(5), 2) == 8);
  CHECK(twist_exponent(Level(10), 1) == 13);
  // (-1)^j A^{j(j+2)} as a field element
  for (int p : {6, 9, 10, 13}) {
    const Level level(p);
    for (int j : level.colors()) {
      CycloNum direct = CycloNum::root_power(p, static_cast<long>(j) * (j + 2));
      if (j % 2) direct = -direct;
      CHECK(direct == CycloNum::root_power(p, twist_exponent(level, j)));
    }
  }
  CHECK(kind_of([] { twist_exponent(Level(5), 1); }) == ErrorKind::invalid_color);
}

TEST_CASE("effective colors") {
  CHECK(effective_colors(Level(5), dumbbell(), 1, {}) == std::vector<int>{0, 2});
  CHECK(effective_colors(Level(10), dumbbell(), 0, {}) == std::vector<int>{0, 1, 2, 3});
  // spine edge 0 of the five-leg caterpillar bounds legs 0 and 1
  CHECK(classify_edge(chain(0, 5), 0) == CurveType::separating({0, {0, 1}}, {0, {2, 3, 4}}));
  // five legs colored 1 have an odd color sum, so that space is empty; six legs do not
  CHECK_FALSE(has_coloring(Level(8), chain(0, 5), {1, 1, 1, 1, 1}));
  CHECK(effective_colors(Level(8), chain(0, 6), 0, {1, 1, 1, 1, 1, 1}) == std::vector<int>{0, 2});

  // cutting and enumerating give the same sets
  for (int p : {5, 6, 8, 9}) {
    const Level level(p);
    for (const auto& g : {chain(2, 1), caterpillar("tlt"), chain(1, 2), theta()}) {
      for (const auto& b : all_boundaries(level, g.leg_count())) {
        const auto all = effective_colors_all(level, g, b);
        for (int e = 0; e < g.edge_count(); ++e) {
          const auto cut = effective_colors(level, g, e, b);
          CHECK(cut == (all.empty() ? std::vector<int>{} : all[e]));
        }
      }
    }
  }
}

TEST_CASE("projective orders") {
  CHECK(twist_projective_order(Level(5), dumbbell(), 1, {}) == 5);
  CHECK(twist_projective_order(Level(10), dumbbell(), 0, {}) == 20);
  CHECK(twist_projective_order(Level(6), dumbbell(), 0, {}) == 4);
  CHECK(twist_projective_order(Level(8), chain(0, 6), 0, {1, 1, 1, 1, 1, 1}) == 2);
  CHECK(kind_of([] { twist_projective_order(Level(8), chain(1, 1), 0, {1}); }) == ErrorKind::empty_block_space);
}

TEST_CASE("order does not depend on the anchor color") {
  for (int p : {7, 10, 12}) {
    const Level level(p);
    std::vector<int> cs(level.colors().begin(), level.colors().end());
    const int base = projective_order(level, cs);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::rotate(cs.begin(), cs.begin() + 1, cs.end());
      CHECK(projective_order(level, cs) == base);
    }
  }
}

TEST_CASE("predicted orders") {
  CurveSituation s;
  s.parity = Parity::odd;
  s.tag = CurveSituation::Case::separating_positive;
  CHECK(predicted_order(Level(7), s).order == 7);
  CHECK(predicted_order(Level(7), s).row == "odd-1a");
  s.parity = Parity::even;
  s.side_parity = 1;
  CHECK(predicted_order(Level(12), s).order == 2);
  CHECK(predicted_order(Level(10), s).order == 5);
  CHECK(predicted_order(Level(8), s).order == 1);
  CHECK(predicted_order(Level(6), s).order == 1);
  CHECK(predicted_order(Level(14), s).order == 7);
  s.tag = CurveSituation::Case::nonseparating_closed;
  CHECK(predicted_order(Level(6), s).order == 4);
  CHECK(predicted_order(Level(8), s).order == 16);
  s.tag = CurveSituation::Case::not_covered;
  CHECK_FALSE(predicted_order(Level(8), s).order.has_value());
  CHECK(kind_of([&] { predicted_order(Level(9), s); }) == ErrorKind::invalid_argument);
}

TEST_CASE("order reports on small surfaces") {
  for (int p : {5, 6, 7, 8, 10}) {
    const Level level(p);
    for (const auto& pattern : {"tt", "tl", "tlt", "tll", "ttl"}) {
      const auto g = caterpillar(pattern);
      for (const auto& b : all_boundaries(level, g.leg_count())) {
        if (!has_coloring(level, g, b)) continue;
        for (int e = 0; e < g.edge_count(); ++e) {
          const auto r = order_report(level, g, e, b);
          CHECK((level.is_odd() ? p : 2 * p) % r.computed == 0);
          if (r.predicted) CHECK(r.match);
        }
      }
    }
  }
}

TEST_CASE("orders survive relabeling") {
  std::mt19937 rng(11);
  const Level level(9);
  const auto g = caterpillar("tlt");
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<int> vp(g.vertex_count()), ep(g.edge_count());
    std::iota(vp.begin(), vp.end(), 0);
    std::iota(ep.begin(), ep.end(), 0);
    std::shuffle(vp.begin(), vp.end(), rng);
    std::shuffle(ep.begin(), ep.end(), rng);
    std::vector<std::pair<int, int>> edges(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) edges[ep[e]] = {vp[g.edges()[e].first], vp[g.edges()[e].second]};
    std::vector<int> legs;
    for (int v : g.legs()) legs.push_back(vp[v]);
    const TrivalentGraph h(g.vertex_count(), edges, legs);
    for (const auto& b : all_boundaries(level, 1))
      for (int e = 0; e < g.edge_count(); ++e)
        CHECK(twist_projective_order(level, g, e, b) == twist_projective_order(level, h, ep[e], b));
  }
}

TEST_CASE("factorization") {
  CHECK(check_factorization(Level(7), dumbbell(), {}, {7, 7}).pass());
  CHECK(check_factorization(Level(7), theta(), {}, {7}).pass());
  CHECK(check_factorization(Level(12), dumbbell(), {}, {24, 3}).pass());
  CHECK(standard_level_vector(Level(12), dumbbell()) == LevelVector{24, 3});
  const auto bad = check_factorization(Level(5), dumbbell(), {}, {2, 5});
  CHECK_FALSE(bad.pass());
  CHECK(bad.violations.size() == 2);
  for (const auto& v : bad.violations) CHECK_FALSE(v.type.is_separating());
  CHECK(kind_of([] { check_factorization(Level(5), dumbbell(), {}, {5}); }) == ErrorKind::missing_curve_type);
}
