#include "skein/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "skein/error.hpp"

namespace skein {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Component labels after deleting edge `skip` (-1 deletes nothing).
std::vector<int> components(const TrivalentGraph& g, int skip) {
  UnionFind uf(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e)
    if (e != skip) uf.unite(g.edges()[e].first, g.edges()[e].second);
  std::vector<int> label(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) label[v] = uf.find(v);
  return label;
}

std::string leg_list(const std::vector<int>& legs) {
  std::string out;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(legs[i]);
  }
  return out;
}

}  // namespace

TrivalentGraph::TrivalentGraph(int vertex_count, std::vector<std::pair<int, int>> edges, std::vector<int> legs)
    : vertex_count_(vertex_count), edges_(std::move(edges)), legs_(std::move(legs)) {
  if (vertex_count_ < 0) throw Error(ErrorKind::syntax_error, "negative vertex count");
  auto check_vertex = [&](int v) {
    if (v < 0 || v >= vertex_count_)
      throw Error(ErrorKind::syntax_error, "vertex index " + std::to_string(v) + " out of range");
  };
  std::vector<int> degree(vertex_count_, 0);
  for (auto [u, v] : edges_) {
    check_vertex(u);
    check_vertex(v);
    ++degree[u];
    ++degree[v];
  }
  for (int v : legs_) {
    check_vertex(v);
    ++degree[v];
  }
  for (int v = 0; v < vertex_count_; ++v) {
    if (degree[v] != 3)
      throw Error(ErrorKind::degree_violation,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]));
  }
  if (vertex_count_ == 0) throw Error(ErrorKind::non_hyperbolic, "empty graph has 2-2g-n >= 0");
  const auto label = components(*this, -1);
  for (int v = 1; v < vertex_count_; ++v)
    if (label[v] != label[0]) throw Error(ErrorKind::disconnected, "vertex " + std::to_string(v) + " unreachable");
  // A connected trivalent graph with a vertex has 2 - 2g - n = -V < 0.

  slots_.assign(vertex_count_, {});
  std::vector<int> fill(vertex_count_, 0);
  for (int e = 0; e < edge_count(); ++e) {
    slots_[edges_[e].first][fill[edges_[e].first]++] = {Slot::Kind::edge, e};
    slots_[edges_[e].second][fill[edges_[e].second]++] = {Slot::Kind::edge, e};
  }
  for (int l = 0; l < leg_count(); ++l) slots_[legs_[l]][fill[legs_[l]]++] = {Slot::Kind::leg, l};
}

const std::pair<int, int>& TrivalentGraph::edge(int e) const {
  if (e < 0 || e >= edge_count())
    throw Error(ErrorKind::index_out_of_range, "edge " + std::to_string(e) + " of " + std::to_string(edge_count()));
  return edges_[e];
}

// --- file format ------------------------------------------------------------

TrivalentGraph parse_graph(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    throw Error(ErrorKind::syntax_error, err.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::syntax_error, "graph file must hold a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "vertices" && key != "edges" && key != "legs")
      throw Error(ErrorKind::syntax_error, "unknown field '" + key + "'");
  }
  for (const char* key : {"vertices", "edges", "legs"})
    if (!doc.contains(key)) throw Error(ErrorKind::syntax_error, std::string("missing field '") + key + "'");

  auto as_int = [](const json& j, const char* what) {
    if (!j.is_number_integer()) throw Error(ErrorKind::syntax_error, std::string(what) + " must be an integer");
    return j.get<int>();
  };
  auto tuples = [&](const json& j, std::size_t arity, const char* what) {
    if (!j.is_array()) throw Error(ErrorKind::syntax_error, std::string(what) + " must be an array");
    std::vector<std::vector<int>> out;
    for (const auto& item : j) {
      if (!item.is_array() || item.size() != arity)
        throw Error(ErrorKind::syntax_error,
                    std::string(what) + " entries must be " + std::to_string(arity) + "-element arrays");
      std::vector<int> t;
      for (const auto& x : item) t.push_back(as_int(x, what));
      out.push_back(std::move(t));
    }
    return out;
  };

  const int vertices = as_int(doc["vertices"], "vertices");
  std::vector<std::pair<int, int>> edges;
  for (const auto& t : tuples(doc["edges"], 2, "edges")) edges.emplace_back(t[0], t[1]);
  std::vector<int> legs;
  for (const auto& t : tuples(doc["legs"], 1, "legs")) legs.push_back(t[0]);
  return TrivalentGraph(vertices, std::move(edges), std::move(legs));
}

std::string to_json(const TrivalentGraph& graph) {
  nlohmann::json doc;
  doc["vertices"] = graph.vertex_count();
  doc["edges"] = nlohmann::json::array();
  for (auto [u, v] : graph.edges()) doc["edges"].push_back({u, v});
  doc["legs"] = nlohmann::json::array();
  for (int v : graph.legs()) doc["legs"].push_back({v});
  return doc.dump();
}

// --- curve types -------------------------------------------------------------

CurveType CurveType::separating(Side a, Side b) {
  CurveType out;
  out.kind = Kind::separating;
  std::sort(a.legs.begin(), a.legs.end());
  std::sort(b.legs.begin(), b.legs.end());
  if (b < a) std::swap(a, b);
  out.sides = {std::move(a), std::move(b)};
  return out;
}

std::string to_string(const CurveType& type) {
  if (!type.is_separating()) return "nonsep";
  const auto& [a, b] = type.sides;
  return "sep:" + std::to_string(a.genus) + "[" + leg_list(a.legs) + "]/" + std::to_string(b.genus) + "[" +
         leg_list(b.legs) + "]";
}

CurveType classify_edge(const TrivalentGraph& graph, int e) {
  const auto [u, v] = graph.edge(e);
  const auto label = components(graph, e);
  if (label[u] == label[v]) return CurveType::non_separating();

  const int side_a = label[u];
  int vertices_a = 0;
  int edges_a = 0;
  for (int x = 0; x < graph.vertex_count(); ++x) vertices_a += label[x] == side_a;
  for (int f = 0; f < graph.edge_count(); ++f)
    if (f != e && label[graph.edges()[f].first] == side_a) ++edges_a;
  Side a{edges_a - vertices_a + 1, {}};
  Side b{graph.genus() - a.genus, {}};
  for (int l = 0; l < graph.leg_count(); ++l) (label[graph.legs()[l]] == side_a ? a : b).legs.push_back(l);
  return CurveType::separating(std::move(a), std::move(b));
}

std::vector<CurveTypeClass> curve_types(const TrivalentGraph& graph) {
  std::vector<CurveTypeClass> out;
  for (int e = 0; e < graph.edge_count(); ++e) {
    CurveType type = classify_edge(graph, e);
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& c) { return c.type == type; });
    if (it == out.end()) {
      out.push_back({std::move(type), {e}});
    } else {
      it->edges.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.type < y.type; });
  return out;
}

// --- cutting -----------------------------------------------------------------

std::vector<Piece> cut_edge(const TrivalentGraph& graph, const BoundaryColoring& boundary, int e, int j) {
  if (static_cast<int>(boundary.size()) != graph.leg_count()) {
    throw Error(ErrorKind::invalid_argument, "boundary has " + std::to_string(boundary.size()) + " colors for " +
                                                 std::to_string(graph.leg_count()) + " legs");
  }
  const auto [u, v] = graph.edge(e);
  const auto label = components(graph, e);
  std::vector<int> roots{label[u]};
  if (label[v] != label[u]) roots.push_back(label[v]);

  std::vector<Piece> pieces;
  for (std::size_t side = 0; side < roots.size(); ++side) {
    std::vector<int> local(graph.vertex_count(), -1);
    int count = 0;
    for (int x = 0; x < graph.vertex_count(); ++x)
      if (label[x] == roots[side]) local[x] = count++;
    std::vector<std::pair<int, int>> edges;
    for (int f = 0; f < graph.edge_count(); ++f) {
      const auto [a, b] = graph.edges()[f];
      if (f != e && local[a] >= 0) edges.emplace_back(local[a], local[b]);
    }
    std::vector<int> legs;
    BoundaryColoring colors;
    std::vector<int> origin;
    for (int l = 0; l < graph.leg_count(); ++l) {
      if (local[graph.legs()[l]] < 0) continue;
      legs.push_back(local[graph.legs()[l]]);
      colors.push_back(boundary[l]);
      origin.push_back(l);
    }
    for (int end : {u, v}) {
      if (local[end] < 0) continue;
      legs.push_back(local[end]);
      colors.push_back(j);
      origin.push_back(-1);
    }
    try {
      pieces.push_back({TrivalentGraph(count, std::move(edges), std::move(legs)), std::move(colors),
                        std::move(origin)});
    } catch (const Error& err) {
      throw Error(ErrorKind::degenerate_cut, err.what());
    }
  }
  return pieces;
}

TrivalentGraph with_leg_on_edge(const TrivalentGraph& graph, int e) {
  const auto [u, v] = graph.edge(e);
  const int w = graph.vertex_count();
  auto edges = graph.edges();
  edges[e] = {u, w};
  edges.emplace_back(w, v);
  auto legs = graph.legs();
  legs.push_back(w);
  return TrivalentGraph(w + 1, std::move(edges), std::move(legs));
}

// --- standard graphs ------------------------------------------------------------

TrivalentGraph caterpillar(std::string_view pattern) {
  for (char c : pattern)
    if (c != 't' && c != 'l') throw Error(ErrorKind::invalid_argument, "pattern letters are 't' and 'l'");
  const int k = static_cast<int>(pattern.size());
  const auto tadpoles = std::count(pattern.begin(), pattern.end(), 't');

  if (k == 2 && tadpoles == 2) return dumbbell();
  if (k == 2 && tadpoles == 1) return TrivalentGraph(1, {{0, 0}}, {0});
  if (k < 3) throw Error(ErrorKind::non_hyperbolic, "pattern '" + std::string(pattern) + "' has 2-2g-n >= 0");

  const int spine = k - 2;
  std::vector<int> host;
  if (spine == 1) {
    host = {0, 0, 0};
  } else {
    host = {0, 0};
    for (int i = 1; i < spine - 1; ++i) host.push_back(i);
    host.insert(host.end(), {spine - 1, spine - 1});
  }

  int vertices = spine;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> legs;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  for (int a = 0; a < k; ++a) {
    if (pattern[a] == 'l') {
      legs.push_back(host[a]);
    } else {
      const int t = vertices++;
      edges.emplace_back(t, t);
      edges.emplace_back(host[a], t);
    }
  }
  return TrivalentGraph(vertices, std::move(edges), std::move(legs));
}

TrivalentGraph chain(int g, int n) {
  if (g < 0 || n < 0) throw Error(ErrorKind::invalid_argument, "genus and leg count must be nonnegative");
  return caterpillar(std::string(g, 't') + std::string(n, 'l'));
}

TrivalentGraph theta() { return TrivalentGraph(2, {{0, 1}, {0, 1}, {0, 1}}, {}); }

TrivalentGraph dumbbell() { return TrivalentGraph(2, {{0, 0}, {0, 1}, {1, 1}}, {}); }

TrivalentGraph tetrahedron() {
  return TrivalentGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {});
}

TrivalentGraph necklace2() { return TrivalentGraph(2, {{0, 1}, {0, 1}}, {0, 1}); }

}  // namespace skein
