#include <algorithm>

#include "doctest.h"
#include "skein/form.hpp"
#include "skein/verify.hpp"
#include "support.hpp"

using namespace skein;
using skein::testing::kind_of;

namespace {

CycloNum qi(int p, int m) { return quantum_integer(Level(p), m); }

}  // namespace

TEST_CASE("edge weights") {
  CHECK(edge_weight(Level(7), 0).is_one());
  CHECK(edge_weight(Level(5), 2) == qi(5, 3));
  CHECK(edge_weight(Level(10), 1) == -qi(10, 2));
  CHECK(kind_of([] { edge_weight(Level(10), 4); }) == ErrorKind::invalid_color);
}

TEST_CASE("vertex weights") {
  CHECK(vertex_weight(Level(5), 0, 0, 0) == -CycloNum::one(5));
  CHECK(vertex_weight(Level(5), 2, 2, 2) == qi(5, 4) * qi(5, 3) * qi(5, 2) / (qi(5, 2) * qi(5, 2) * qi(5, 2)));
  CHECK(vertex_weight(Level(8), 1, 1, 0) == qi(8, 2));
  CHECK(vertex_weight(Level(8), 1, 0, 1) == vertex_weight(Level(8), 0, 1, 1));
  CHECK(kind_of([] { vertex_weight(Level(8), 1, 1, 1); }) == ErrorKind::invalid_argument);
}

TEST_CASE("diagonal weights are real and nonzero") {
  for (int p : {5, 6, 8, 9, 10}) {
    const Level level(p);
    for (const auto& g : {theta(), chain(1, 2), chain(0, 4), chain(2, 1)}) {
      for (const auto& b : all_boundaries(level, g.leg_count())) {
        const auto w = diagonal_weights(level, g, b);
        CHECK(w.colorings == enumerate_colorings(level, g, b));
        for (const auto& x : w.weights) {
          CHECK(x.is_real());
          CHECK_FALSE(x.is_zero());
        }
      }
    }
  }
}

TEST_CASE("single coloring spaces") {
  const auto w = diagonal_weights(Level(5), chain(1, 1), {2});
  REQUIRE(w.weights.size() == 1);
  CHECK(w.weights[0] == vertex_weight(Level(5), 2, 2, 2) / edge_weight(Level(5), 2));
  CHECK(signature_up_to_sign(Level(5), RootSelector(5, 1), chain(1, 1), {2}) == SignaturePair{1, 0});
  CHECK(kind_of([] { is_indefinite_some_embedding(Level(5), chain(1, 1), {2}); }) == ErrorKind::trivially_definite);
}

TEST_CASE("leg edges rescale every weight by the same factor") {
  const Level level(9);
  const auto g = chain(1, 2);
  const BoundaryColoring b{2, 4};
  const auto plain = diagonal_weights(level, g, b);
  const auto with_legs = diagonal_weights(level, g, b, {.include_leg_edges = true});
  const CycloNum factor = (edge_weight(level, 2) * edge_weight(level, 4)).inverse();
  for (std::size_t i = 0; i < plain.weights.size(); ++i) CHECK(with_legs.weights[i] == plain.weights[i] * factor);
}

TEST_CASE("theta at p=5") {
  const auto w = diagonal_weights(Level(5), theta(), {});
  CHECK(w.weights.size() == 5);
  // permuting the edge colors permutes the weights
  CHECK(w.weights[1] == w.weights[2]);
  CHECK(w.weights[2] == w.weights[3]);
}

TEST_CASE("signatures") {
  const Level level(10);
  const auto sig = signature_up_to_sign(level, RootSelector(10, 3), necklace2(), {1, 1});
  CHECK(sig.dim() == 6);
  CHECK_FALSE(sig.definite());
  CHECK(signature_up_to_sign(level, RootSelector::unitary(10), necklace2(), {1, 1}) == SignaturePair{6, 0});

  for (int p : {5, 7, 8, 10, 11, 12}) {
    const Level lv(p);
    for (const auto& g : {theta(), chain(1, 2), chain(0, 4)}) {
      for (const auto& b : all_boundaries(lv, g.leg_count())) {
        const auto w = diagonal_weights(lv, g, b);
        if (w.weights.empty()) continue;
        CHECK(signature_up_to_sign(w, RootSelector::unitary(p)).definite());
        for (const auto& root : RootSelector::all(p)) {
          const auto s = signature_up_to_sign(w, root);
          CHECK(s.dim() == static_cast<int>(w.weights.size()));
          CHECK(s == signature_up_to_sign(w, RootSelector(p, 2 * p - root.ell())));
        }
      }
    }
  }
}

TEST_CASE("indefiniteness on the genus-1 two-leg space") {
  const auto r10 = is_indefinite_some_embedding(Level(10), necklace2(), {1, 1});
  CHECK(r10.indefinite);
  CHECK(r10.witness == 3);
  CHECK(is_indefinite_some_embedding(Level(5), necklace2(), {2, 2}).indefinite);
  CHECK_FALSE(is_indefinite_some_embedding(Level(6), necklace2(), {1, 1}).indefinite);
}

TEST_CASE("consecutive weights on the genus-1 (1,1) space") {
  // Basis (k, k+1) on the two parallel edges. With the vertex and edge
  // weights above, w(k+1, k+2) / w(k, k+1) = [k+1][k+3] / [k+2]^2.
  for (int p : {10, 12, 14}) {
    const Level level(p);
    const auto w = diagonal_weights(level, necklace2(), {1, 1});
    auto weight = [&](int a, int b) {
      const auto it = std::find(w.colorings.begin(), w.colorings.end(), Coloring{a, b});
      REQUIRE(it != w.colorings.end());
      return w.weights[it - w.colorings.begin()];
    };
    for (int k = 0; k + 2 <= level.max_color(); ++k) {
      CHECK(weight(k, k + 1) == weight(k + 1, k));
      const CycloNum ratio = weight(k + 1, k + 2) / weight(k, k + 1);
      CHECK(ratio == qi(p, k + 1) * qi(p, k + 3) / (qi(p, k + 2) * qi(p, k + 2)));
    }
  }
}
