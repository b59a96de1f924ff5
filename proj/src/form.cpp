#include "skein/form.hpp"

#include <map>
#include <tuple>

#include "skein/error.hpp"

namespace skein {

namespace {

int table_size(const Level& level) { return level.q_bound() / 2 + 1; }

CycloNum signed_value(const CycloNum& x, int exponent) { return exponent % 2 == 0 ? x : -x; }

CycloNum edge_weight(const QuantumTable& t, int a) { return signed_value(t.integer(a + 1), a); }

CycloNum vertex_weight(const QuantumTable& t, int a, int b, int c) {
  const int i = (a + b - c) / 2;
  const int j = (b + c - a) / 2;
  const int k = (c + a - b) / 2;
  const CycloNum num = t.factorial(i + j + k + 1) * t.factorial(i) * t.factorial(j) * t.factorial(k);
  const CycloNum den = t.factorial(a) * t.factorial(b) * t.factorial(c);
  return signed_value(num / den, i + j + k + 1);
}

}  // namespace

CycloNum edge_weight(const Level& level, int a) {
  level.require_color(a);
  return edge_weight(QuantumTable(level, table_size(level)), a);
}

CycloNum vertex_weight(const Level& level, int a, int b, int c) {
  if (!admissible_triple(level, a, b, c)) {
    throw Error(ErrorKind::invalid_argument, "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                                 std::to_string(c) + ") is not admissible");
  }
  return vertex_weight(QuantumTable(level, table_size(level)), a, b, c);
}

WeightVector diagonal_weights(const Level& level, const TrivalentGraph& graph, const BoundaryColoring& boundary,
                              WeightOptions options) {
  const QuantumTable table(level, table_size(level));
  std::map<std::tuple<int, int, int>, CycloNum> vertex_cache;
  std::map<int, CycloNum> inverse_edge_cache;

  auto vertex = [&](int a, int b, int c) -> const CycloNum& {
    auto key = std::make_tuple(a, b, c);
    auto it = vertex_cache.find(key);
    if (it == vertex_cache.end()) it = vertex_cache.emplace(key, vertex_weight(table, a, b, c)).first;
    return it->second;
  };
  auto inverse_edge = [&](int a) -> const CycloNum& {
    auto it = inverse_edge_cache.find(a);
    if (it == inverse_edge_cache.end()) it = inverse_edge_cache.emplace(a, edge_weight(table, a).inverse()).first;
    return it->second;
  };

  WeightVector out;
  out.colorings = enumerate_colorings(level, graph, boundary, options.coloring_ceiling);
  out.weights.reserve(out.colorings.size());
  for (const Coloring& c : out.colorings) {
    auto color = [&](const Slot& s) { return s.kind == Slot::Kind::edge ? c[s.index] : boundary[s.index]; };
    CycloNum w = CycloNum::one(level.p());
    for (int v = 0; v < graph.vertex_count(); ++v) {
      const auto& s = graph.slots(v);
      w *= vertex(color(s[0]), color(s[1]), color(s[2]));
    }
    for (int e = 0; e < graph.edge_count(); ++e) w *= inverse_edge(c[e]);
    if (options.include_leg_edges)
      for (int l = 0; l < graph.leg_count(); ++l) w *= inverse_edge(boundary[l]);
    out.weights.push_back(std::move(w));
  }
  return out;
}

SignaturePair make_signature(int positive, int negative) {
  return positive >= negative ? SignaturePair{positive, negative} : SignaturePair{negative, positive};
}

SignaturePair signature_up_to_sign(const WeightVector& weights, const RootSelector& root) {
  const RealEmbedding embedding(root);
  int positive = 0;
  int negative = 0;
  for (const CycloNum& w : weights.weights) {
    const int s = embedding.sign(w);
    if (s == 0) throw Error(ErrorKind::division_by_zero, "zero diagonal weight");
    (s > 0 ? positive : negative)++;
  }
  return make_signature(positive, negative);
}

SignaturePair signature_up_to_sign(const Level& level, const RootSelector& root, const TrivalentGraph& graph,
                                   const BoundaryColoring& boundary, WeightOptions options) {
  if (root.p() != level.p()) throw Error(ErrorKind::invalid_argument, "root selector is for another level");
  return signature_up_to_sign(diagonal_weights(level, graph, boundary, options), root);
}

IndefiniteResult is_indefinite_some_embedding(const Level& level, const TrivalentGraph& graph,
                                              const BoundaryColoring& boundary, WeightOptions options) {
  const WeightVector weights = diagonal_weights(level, graph, boundary, options);
  if (weights.weights.size() < 2) {
    throw Error(ErrorKind::trivially_definite,
                "block space has dimension " + std::to_string(weights.weights.size()));
  }
  IndefiniteResult out;
  for (const RootSelector& root : RootSelector::all(level.p())) {
    const SignaturePair sig = signature_up_to_sign(weights, root);
    out.by_ell.emplace_back(root.ell(), sig);
    if (!sig.definite() && !out.witness) {
      out.indefinite = true;
      out.witness = root.ell();
    }
  }
  return out;
}

}  // namespace skein
