#include "skein/twist.hpp"

#include <numeric>

#include "skein/blocks.hpp"
#include "skein/error.hpp"

namespace skein {

int twist_exponent(const Level& level, int j) {
  level.require_color(j);
  const long p = level.p();
  return static_cast<int>((static_cast<long>(j) * (j + 2) + p * j) % (2 * p));
}

std::vector<int> effective_colors(const Level& level, const TrivalentGraph& graph, int e,
                                  const BoundaryColoring& boundary) {
  require_boundary(level, graph, boundary);
  std::vector<int> out;
  for (int j : level.colors()) {
    bool nonzero = true;
    for (const Piece& piece : cut_edge(graph, boundary, e, j)) {
      if (!has_coloring(level, piece.graph, piece.boundary)) {
        nonzero = false;
        break;
      }
    }
    if (nonzero) out.push_back(j);
  }
  return out;
}

int projective_order(const Level& level, const std::vector<int>& colors) {
  if (colors.empty()) throw Error(ErrorKind::empty_block_space, "no effective colors");
  const int order = 2 * level.p();
  const int anchor = twist_exponent(level, colors.front());
  int n = 1;
  for (int j : colors) {
    const int diff = ((twist_exponent(level, j) - anchor) % order + order) % order;
    n = std::lcm(n, order / std::gcd(order, diff));
  }
  return n;
}

int twist_projective_order(const Level& level, const TrivalentGraph& graph, int e,
                           const BoundaryColoring& boundary) {
  return projective_order(level, effective_colors(level, graph, e, boundary));
}

std::string to_string(CurveSituation::Case c) {
  switch (c) {
    case CurveSituation::Case::not_covered: return "not-covered";
    case CurveSituation::Case::nonseparating_closed: return "nonseparating";
    case CurveSituation::Case::separating_positive: return "separating-positive-genus";
    case CurveSituation::Case::holed_sphere: return "holed-sphere";
    case CurveSituation::Case::one_handle: return "one-handle";
  }
  return "?";
}

CurveSituation classify_situation(const Level& level, const TrivalentGraph& graph, int e,
                                  const BoundaryColoring& boundary) {
  require_boundary(level, graph, boundary);
  CurveSituation s;
  s.parity = level.parity();
  const CurveType type = classify_edge(graph, e);

  auto nonzero = [&](const std::vector<int>& legs) {
    std::vector<int> out;
    for (int l : legs)
      if (boundary[l] != 0) out.push_back(boundary[l]);
    return out;
  };
  std::vector<int> all_legs(graph.leg_count());
  std::iota(all_legs.begin(), all_legs.end(), 0);
  const auto colored = nonzero(all_legs);
  const int total = std::accumulate(colored.begin(), colored.end(), 0);

  if (!level.supports_lemmas()) {
    s.note = "level below the lemmas' range";
    return s;
  }
  if (graph.genus() < 1) {
    s.note = "genus 0";
    return s;
  }
  if (level.is_even() && total % 2 != 0) {
    s.note = "odd color sum, empty space";
    return s;
  }

  if (!type.is_separating()) {
    if (graph.genus() >= 2 || colored.empty()) {
      s.tag = CurveSituation::Case::nonseparating_closed;
      return s;
    }
    const DeltaReport d = delta_one_handle(level, colored);
    s.tag = CurveSituation::Case::one_handle;
    s.delta = d.value;
    s.j_min = d.j_min;
    s.j_max = d.j_max;
    return s;
  }

  const auto& [a, b] = type.sides;
  if (a.genus > 0 && b.genus > 0) {
    const auto side = nonzero(a.legs);
    s.tag = CurveSituation::Case::separating_positive;
    s.side_parity = std::accumulate(side.begin(), side.end(), 0) % 2;
    return s;
  }
  const auto side = nonzero(a.genus == 0 ? a.legs : b.legs);
  if (side.size() < 2) {
    s.note = "genus-0 side with fewer than two nonzero colors";
    return s;
  }
  const DeltaReport d = delta(level, side);
  s.tag = CurveSituation::Case::holed_sphere;
  s.side_parity = std::accumulate(side.begin(), side.end(), 0) % 2;
  s.delta = d.value;
  s.j_min = d.j_min;
  s.j_max = d.j_max;
  return s;
}

namespace {

int even_split_order(int p, int side_parity) {
  if (side_parity == 0) {
    if (p == 6) return 1;
    return p % 4 == 0 ? p / 4 : p / 2;
  }
  switch (p) {
    case 6:
    case 8: return 1;
    case 10: return 5;
    case 12: return 2;
    default: return p / 2;
  }
}

OrderPrediction predict_odd(int p, const CurveSituation& s) {
  using C = CurveSituation::Case;
  switch (s.tag) {
    case C::separating_positive: return {p, "odd-1a"};
    case C::nonseparating_closed: return {p, "odd-1b"};
    case C::holed_sphere:
      if (s.delta >= 3 || (s.delta == 2 && s.j_min == 0)) return {p, "odd-1c"};
      if (s.delta == 2) return {p / std::gcd(s.j_max, p), "odd-2"};
      if (s.delta == 1) return {1, "odd-4"};
      break;
    case C::one_handle:
      if (s.delta >= 3 || (s.delta == 2 && s.j_min == 0)) return {p, "odd-1d"};
      if (s.delta == 2) return {p / std::gcd(s.j_max / 4, p), "odd-3"};
      if (s.delta == 1) return {1, "odd-4"};
      break;
    case C::not_covered: break;
  }
  return {std::nullopt, "not-covered"};
}

OrderPrediction predict_even(int p, const CurveSituation& s) {
  using C = CurveSituation::Case;
  switch (s.tag) {
    case C::separating_positive: return {even_split_order(p, s.side_parity), "even-1"};
    case C::nonseparating_closed: return {p == 6 ? 4 : 2 * p, "even-2"};
    case C::holed_sphere:
      if (s.delta >= 3) return {even_split_order(p, s.side_parity), "even-3"};
      if (s.delta == 2) return {p / (2 * std::gcd(s.j_max, p / 2)), "even-5", true};
      if (s.delta == 1) return {1, "even-7"};
      break;
    case C::one_handle:
      if (s.delta >= 3) return {2 * p, "even-4"};
      if (s.delta == 2) return {2 * p / std::gcd(1 + s.j_max, p), "even-6", true};
      if (s.delta == 1) return {1, "even-7"};
      break;
    case C::not_covered: break;
  }
  return {std::nullopt, "not-covered"};
}

}  // namespace

OrderPrediction predicted_order(const Level& level, const CurveSituation& situation) {
  if (situation.parity != level.parity())
    throw Error(ErrorKind::invalid_argument, "situation was classified at a level of the other parity");
  return level.is_odd() ? predict_odd(level.p(), situation) : predict_even(level.p(), situation);
}

OrderReport order_report(const Level& level, const TrivalentGraph& graph, int e, const BoundaryColoring& boundary) {
  OrderReport r;
  r.type = classify_edge(graph, e);
  r.computed = twist_projective_order(level, graph, e, boundary);
  r.situation = classify_situation(level, graph, e, boundary);
  const OrderPrediction pred = predicted_order(level, r.situation);
  r.predicted = pred.order;
  r.row = pred.row;
  r.typography_resolved = pred.typography_resolved;
  r.match = pred.order && *pred.order == r.computed;
  return r;
}

LevelVector standard_level_vector(const Level& level, const TrivalentGraph& graph) {
  const long p = level.p();
  LevelVector k;
  for (const auto& c : curve_types(graph)) {
    if (level.is_odd()) {
      k.push_back(p);
    } else {
      k.push_back(c.type.is_separating() ? p / std::gcd(4L, p) : 2 * p);
    }
  }
  return k;
}

FactorizationReport check_factorization(const Level& level, const TrivalentGraph& graph,
                                        const BoundaryColoring& boundary, const LevelVector& k) {
  FactorizationReport r;
  r.types = curve_types(graph);
  if (k.size() < r.types.size()) {
    throw Error(ErrorKind::missing_curve_type, "level vector has " + std::to_string(k.size()) + " entries for " +
                                                   std::to_string(r.types.size()) + " curve types");
  }
  if (k.size() > r.types.size()) {
    throw Error(ErrorKind::invalid_argument, "level vector has " + std::to_string(k.size()) + " entries for " +
                                                 std::to_string(r.types.size()) + " curve types");
  }
  r.orders.assign(graph.edge_count(), 0);
  for (std::size_t t = 0; t < r.types.size(); ++t) {
    for (int e : r.types[t].edges) {
      const int order = twist_projective_order(level, graph, e, boundary);
      r.orders[e] = order;
      if (k[t] <= 0 || k[t] % order != 0) r.violations.push_back({e, r.types[t].type, order, k[t]});
    }
  }
  return r;
}

}  // namespace skein
