#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "skein/graph.hpp"
#include "skein/level.hpp"

namespace skein {

/// Colors of the internal edges, indexed like the graph's edges.
using Coloring = std::vector<int>;

inline constexpr std::size_t kDefaultColoringCeiling = 2'000'000;

/// Checks that the boundary fits the graph and uses colors of the level.
void require_boundary(const Level& level, const TrivalentGraph& graph, const BoundaryColoring& boundary);

/// Calls visit on every admissible coloring extending the boundary, in an
/// unspecified order. Enumeration stops early when visit returns false.
void for_each_coloring(const Level& level, const TrivalentGraph& graph, const BoundaryColoring& boundary,
                       const std::function<bool(const Coloring&)>& visit);

/// All admissible colorings, sorted lexicographically. Throws
/// too-many-colorings beyond the ceiling.
std::vector<Coloring> enumerate_colorings(const Level& level, const TrivalentGraph& graph,
                                          const BoundaryColoring& boundary,
                                          std::size_t ceiling = kDefaultColoringCeiling);

mpz_class dim_blocks(const Level& level, const TrivalentGraph& graph, const BoundaryColoring& boundary);
bool has_coloring(const Level& level, const TrivalentGraph& graph, const BoundaryColoring& boundary);

/// Nonvanishing of W_{0,p,(i_1..i_m)} from the subset inequalities (and,
/// for even p, the parity of the color sum).
bool genus0_nonzero(const Level& level, std::span<const int> colors);

enum class DeltaVariant { plain, one_handle };

/// delta_p(i): the number of colors j with W_{0,p,(i,j)} != 0.
/// delta_p^(1)(i): the number of colors j with W_{0,p,(i,j,j)} != 0.
struct DeltaReport {
  int value = 0;
  int j_min = 0;
  int j_max = 0;
  DeltaVariant variant = DeltaVariant::plain;
  /// The formula used differs from its printed form (see README).
  bool typography_resolved = false;
  /// The printed formula's value when it differs in form from the one used.
  std::optional<int> as_printed;
};

DeltaReport delta(const Level& level, std::span<const int> colors);
DeltaReport delta_one_handle(const Level& level, std::span<const int> colors);

/// Brute-force counterparts, by enumeration on genus-0 caterpillars.
int delta_oracle(const Level& level, std::span<const int> colors);
int delta_one_handle_oracle(const Level& level, std::span<const int> colors);
bool genus0_nonzero_oracle(const Level& level, std::span<const int> colors);

/// dim W_{1,p,(i,j)}.
int dim_genus1_pair(const Level& level, int i, int j);

}  // namespace skein
