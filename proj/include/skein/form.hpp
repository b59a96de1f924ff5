#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skein/blocks.hpp"
#include "skein/cyclo.hpp"
#include "skein/graph.hpp"
#include "skein/level.hpp"

namespace skein {

/// <e> = (-1)^a [a+1].
CycloNum edge_weight(const Level& level, int a);
/// <v> for an admissible triple, with i, j, k the half-sums (a+b-c)/2 etc.
CycloNum vertex_weight(const Level& level, int a, int b, int c);

struct WeightOptions {
  /// Also divide by <e> for every leg. The factor is the same for every
  /// coloring, so signs only change globally.
  bool include_leg_edges = false;
  std::size_t coloring_ceiling = kDefaultColoringCeiling;
};

/// Diagonal of the Hermitian form in the coloring basis, up to a global
/// scalar: prod <v> / prod <e>.
struct WeightVector {
  std::vector<Coloring> colorings;
  std::vector<CycloNum> weights;
};

WeightVector diagonal_weights(const Level& level, const TrivalentGraph& graph, const BoundaryColoring& boundary,
                              WeightOptions options = {});

/// Numbers of positive and negative weights, as an unordered pair stored
/// with the larger count first.
struct SignaturePair {
  int major = 0;
  int minor = 0;
  int dim() const noexcept { return major + minor; }
  bool definite() const noexcept { return minor == 0; }
  friend bool operator==(const SignaturePair&, const SignaturePair&) = default;
};

SignaturePair make_signature(int positive, int negative);

SignaturePair signature_up_to_sign(const WeightVector& weights, const RootSelector& root);
SignaturePair signature_up_to_sign(const Level& level, const RootSelector& root, const TrivalentGraph& graph,
                                   const BoundaryColoring& boundary, WeightOptions options = {});

struct IndefiniteResult {
  bool indefinite = false;
  /// First ell (ascending) giving both signs.
  std::optional<int> witness;
  /// Signature at each ell tried, in ascending order of ell.
  std::vector<std::pair<int, SignaturePair>> by_ell;
};

/// Throws trivially-definite for spaces of dimension < 2.
IndefiniteResult is_indefinite_some_embedding(const Level& level, const TrivalentGraph& graph,
                                              const BoundaryColoring& boundary, WeightOptions options = {});

}  // namespace skein
