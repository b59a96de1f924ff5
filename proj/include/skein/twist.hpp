#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/graph.hpp"
#include "skein/level.hpp"

namespace skein {

/// The twist along a curve colored j acts by (-1)^j A^{j(j+2)}; with
/// A^p = -1 this is A^r for r = j(j+2) + p j mod 2p.
int twist_exponent(const Level& level, int j);

/// Colors j on edge e whose summand is nonzero, ascending.
std::vector<int> effective_colors(const Level& level, const TrivalentGraph& graph, int e,
                                  const BoundaryColoring& boundary);

/// Least N with N (r(j) - r(j0)) = 0 mod 2p for all given colors.
int projective_order(const Level& level, const std::vector<int>& colors);

/// Projective order of the twist along edge e. Throws empty-block-space if
/// no coloring exists.
int twist_projective_order(const Level& level, const TrivalentGraph& graph, int e,
                           const BoundaryColoring& boundary);

/// Which case of the order lemmas a decomposition curve falls under.
/// Boundary colors 0 are dropped first.
struct CurveSituation {
  enum class Case {
    not_covered,
    /// non-separating, and either g >= 2 or no nonzero boundary colors
    nonseparating_closed,
    /// separating with positive genus on both sides
    separating_positive,
    /// separating with a genus-0 side carrying at least two nonzero colors
    holed_sphere,
    /// non-separating on a genus-1 surface with nonzero boundary colors
    one_handle,
  };

  Parity parity = Parity::odd;
  Case tag = Case::not_covered;
  /// Parity of the nonzero color sum on the first side (separating_positive)
  /// or on the genus-0 side (holed_sphere).
  int side_parity = 0;
  /// delta or delta^(1) of the relevant colors, with its J bounds.
  int delta = 0;
  int j_min = 0;
  int j_max = 0;
  std::string note;
};

std::string to_string(CurveSituation::Case c);

CurveSituation classify_situation(const Level& level, const TrivalentGraph& graph, int e,
                                  const BoundaryColoring& boundary);

struct OrderPrediction {
  std::optional<int> order;
  /// Row of the table, e.g. "odd-1a" or "even-5".
  std::string row;
  bool typography_resolved = false;
};

OrderPrediction predicted_order(const Level& level, const CurveSituation& situation);

struct OrderReport {
  int computed = 0;
  std::optional<int> predicted;
  std::string row;
  bool typography_resolved = false;
  bool match = false;
  CurveType type;
  CurveSituation situation;
};

OrderReport order_report(const Level& level, const TrivalentGraph& graph, int e, const BoundaryColoring& boundary);

/// One entry per curve type of the graph, in curve_types order.
using LevelVector = std::vector<long>;

/// (p, ..., p) for odd p. For even p: 2p on non-separating types and
/// p / gcd(4, p) on separating ones.
LevelVector standard_level_vector(const Level& level, const TrivalentGraph& graph);

struct FactorizationViolation {
  int edge = 0;
  CurveType type;
  int order = 0;
  long k = 0;
};

struct FactorizationReport {
  std::vector<CurveTypeClass> types;
  std::vector<int> orders;  // per edge
  std::vector<FactorizationViolation> violations;
  bool pass() const noexcept { return violations.empty(); }
};

FactorizationReport check_factorization(const Level& level, const TrivalentGraph& graph,
                                        const BoundaryColoring& boundary, const LevelVector& k);

}  // namespace skein
