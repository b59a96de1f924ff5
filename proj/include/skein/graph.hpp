#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skein {

/// Colors on the legs of a graph, keyed by leg position.
using BoundaryColoring = std::vector<int>;

/// One slot at a vertex: an internal edge end or a leg.
struct Slot {
  enum class Kind { edge, leg } kind;
  int index;
  friend bool operator==(const Slot&, const Slot&) = default;
};

/// Dual graph of a pants decomposition. Vertices are pairs of pants,
/// internal edges are decomposition curves (loops and multi-edges allowed),
/// legs are boundary components. Validated on construction: connected,
/// every vertex of degree 3, and 2 - 2g - n < 0.
class TrivalentGraph {
 public:
  TrivalentGraph(int vertex_count, std::vector<std::pair<int, int>> edges, std::vector<int> legs);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int leg_count() const noexcept { return static_cast<int>(legs_.size()); }
  int genus() const noexcept { return edge_count() - vertex_count_ + 1; }

  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const std::pair<int, int>& edge(int e) const;
  const std::vector<int>& legs() const noexcept { return legs_; }
  /// The three slots at v; a loop contributes two slots with the same index.
  const std::array<Slot, 3>& slots(int v) const { return slots_.at(v); }

  bool is_loop(int e) const { return edge(e).first == edge(e).second; }

  friend bool operator==(const TrivalentGraph&, const TrivalentGraph&) = default;

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> legs_;
  std::vector<std::array<Slot, 3>> slots_;
};

/// Parses the JSON graph format {"vertices": n, "edges": [[u,v],...], "legs": [[v],...]}.
TrivalentGraph parse_graph(std::string_view text);
std::string to_json(const TrivalentGraph& graph);

/// A complementary side of a separating curve: its genus and the original
/// leg indices it contains (sorted).
struct Side {
  int genus = 0;
  std::vector<int> legs;
  auto operator<=>(const Side&) const = default;
};

struct CurveType {
  enum class Kind { non_separating, separating } kind = Kind::non_separating;
  /// Only meaningful for separating curves; sides[0] <= sides[1].
  std::array<Side, 2> sides{};

  static CurveType non_separating() { return {}; }
  static CurveType separating(Side a, Side b);

  bool is_separating() const noexcept { return kind == Kind::separating; }
  auto operator<=>(const CurveType&) const = default;
};

std::string to_string(const CurveType& type);

CurveType classify_edge(const TrivalentGraph& graph, int e);

struct CurveTypeClass {
  CurveType type;
  std::vector<int> edges;
};

/// Distinct curve types of the internal edges, non-separating first, then
/// separating ones by their canonical sides.
std::vector<CurveTypeClass> curve_types(const TrivalentGraph& graph);

struct Piece {
  TrivalentGraph graph;
  BoundaryColoring boundary;
  /// For each leg of the piece, the leg of the original graph it came
  /// from, or -1 for the two legs created by the cut.
  std::vector<int> leg_origin;
};

/// Cuts edge e and colors both new legs j. One piece for a non-separating
/// edge, two for a separating one (the side containing the edge's first
/// endpoint comes first).
std::vector<Piece> cut_edge(const TrivalentGraph& graph, const BoundaryColoring& boundary, int e, int j);

/// Puts a new leg on edge e by subdividing it with an extra vertex. The new
/// leg is last; the two halves of e are e itself and a new last edge.
TrivalentGraph with_leg_on_edge(const TrivalentGraph& graph, int e);

// Standard graphs.

/// Caterpillar with the attachments given in order: 't' for a genus-1
/// tadpole (a loop on a stem), 'l' for a leg. With k attachments the spine
/// has k - 2 vertices; its end vertices take two attachments each, inner
/// ones take one.
TrivalentGraph caterpillar(std::string_view pattern);
/// g tadpoles followed by n legs.
TrivalentGraph chain(int g, int n);
TrivalentGraph theta();
TrivalentGraph dumbbell();
/// Complete graph on four vertices, genus 3.
TrivalentGraph tetrahedron();
/// Two vertices joined by two parallel edges, one leg on each: genus 1, two legs.
TrivalentGraph necklace2();

}  // namespace skein
