#include "skein/blocks.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

#include "skein/error.hpp"

namespace skein {

namespace {

// Edges in an order that completes vertices early (BFS from vertex 0), and
// for each position the vertices whose last edge it is.
struct Schedule {
  std::vector<int> order;
  std::vector<std::vector<int>> completes;
  std::vector<int> edgeless;
};

Schedule schedule(const TrivalentGraph& g) {
  std::vector<int> rank(g.vertex_count(), -1);
  std::deque<int> queue{0};
  rank[0] = 0;
  int next = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const Slot& s : g.slots(v)) {
      if (s.kind != Slot::Kind::edge) continue;
      const auto [a, b] = g.edges()[s.index];
      const int w = a == v ? b : a;
      if (rank[w] < 0) {
        rank[w] = next++;
        queue.push_back(w);
      }
    }
  }

  Schedule out;
  out.order.resize(g.edge_count());
  std::iota(out.order.begin(), out.order.end(), 0);
  auto key = [&](int e) {
    const auto [a, b] = g.edges()[e];
    return std::tuple(std::max(rank[a], rank[b]), std::min(rank[a], rank[b]), e);
  };
  std::sort(out.order.begin(), out.order.end(), [&](int x, int y) { return key(x) < key(y); });

  std::vector<int> position(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) position[out.order[i]] = i;
  out.completes.resize(g.edge_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    int last = -1;
    for (const Slot& s : g.slots(v))
      if (s.kind == Slot::Kind::edge) last = std::max(last, position[s.index]);
    if (last < 0) {
      out.edgeless.push_back(v);
    } else {
      out.completes[last].push_back(v);
    }
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const Level& level, const TrivalentGraph& graph, const BoundaryColoring& boundary,
             const std::function<bool(const Coloring&)>& visit)
      : level_(level), graph_(graph), boundary_(boundary), visit_(visit), plan_(schedule(graph)),
        current_(graph.edge_count(), -1) {}

  void run() {
    for (int v : plan_.edgeless)
      if (!vertex_ok(v)) return;
    descend(0);
  }

 private:
  int color(const Slot& s) const { return s.kind == Slot::Kind::edge ? current_[s.index] : boundary_[s.index]; }

  bool vertex_ok(int v) const {
    const auto& s = graph_.slots(v);
    return level_.admissible_unchecked(color(s[0]), color(s[1]), color(s[2]));
  }

  bool descend(std::size_t depth) {
    if (depth == plan_.order.size()) return visit_(current_);
    const int e = plan_.order[depth];
    for (int c : level_.colors()) {
      current_[e] = c;
      bool ok = true;
      for (int v : plan_.completes[depth]) {
        if (!vertex_ok(v)) {
          ok = false;
          break;
        }
      }
      if (ok && !descend(depth + 1)) return false;
    }
    current_[e] = -1;
    return true;
  }

  const Level& level_;
  const TrivalentGraph& graph_;
  const BoundaryColoring& boundary_;
  const std::function<bool(const Coloring&)>& visit_;
  Schedule plan_;
  Coloring current_;
};

// S(a, b) = i_a + ... + i_b, 1-indexed, indices outside 1..n ignored.
int span_sum(const std::vector<int>& i, int a, int b) {
  int total = 0;
  for (int t = std::max(a, 1); t <= std::min(b, static_cast<int>(i.size())); ++t) total += i[t - 1];
  return total;
}

std::vector<int> sorted_colors(const Level& level, std::span<const int> colors) {
  for (int c : colors) level.require_color(c);
  std::vector<int> out(colors.begin(), colors.end());
  std::sort(out.begin(), out.end());
  return out;
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

// J_max / J_min of the plain lemma. `step` is 2(p-2) for odd p, p-4 for even p.
int j_max_plain(const std::vector<int>& i, int cap, int step) {
  const int n = static_cast<int>(i.size());
  int best = cap;
  for (int l = 0; 2 * l <= n; ++l)
    best = std::min(best, span_sum(i, 1, n - 2 * l) - span_sum(i, n - 2 * l + 1, n) + l * step);
  return best;
}

int j_min_plain(const std::vector<int>& i, int floor_value, int step, int k_max) {
  const int n = static_cast<int>(i.size());
  int best = floor_value;
  for (int k = 0; k <= k_max; ++k)
    best = std::max(best, span_sum(i, n - 2 * k, n) - span_sum(i, 1, n - 2 * k - 1) - k * step);
  return best;
}

// J^(1)_max with the upper index shifted by one relative to the plain bound.
int j1_max(const std::vector<int>& i, int cap, int step) {
  const int n = static_cast<int>(i.size());
  int best = cap;
  for (int l = 1; l <= (n + 1) / 2; ++l)
    best = std::min(best, span_sum(i, 1, n - 2 * l + 1) - span_sum(i, n - 2 * l + 2, n) + l * step);
  return best;
}

int j1_max_printed_even(const std::vector<int>& i, int p) {
  const int n = static_cast<int>(i.size());
  int best = p - 4;
  for (int l = 1; l <= (n + 1) / 2; ++l)
    best = std::min(best, span_sum(i, 1, n - 2 * l) - span_sum(i, n - 2 * l + 1, n) + l * (p - 4));
  return best;
}

bool genus0_oracle(const Level& level, std::vector<int> colors) {
  const int m = static_cast<int>(colors.size());
  return has_coloring(level, chain(0, m), colors);
}

}  // namespace

void require_boundary(const Level& level, const TrivalentGraph& graph, const BoundaryColoring& boundary) {
  if (static_cast<int>(boundary.size()) != graph.leg_count()) {
    throw Error(ErrorKind::invalid_argument, "graph has " + std::to_string(graph.leg_count()) + " legs but " +
                                                 std::to_string(boundary.size()) + " boundary colors were given");
  }
  for (int c : boundary) level.require_color(c);
}

void for_each_coloring(const Level& level, const TrivalentGraph& graph, const BoundaryColoring& boundary,
                       const std::function<bool(const Coloring&)>& visit) {
  require_boundary(level, graph, boundary);
  Enumerator(level, graph, boundary, visit).run();
}

std::vector<Coloring> enumerate_colorings(const Level& level, const TrivalentGraph& graph,
                                          const BoundaryColoring& boundary, std::size_t ceiling) {
  std::vector<Coloring> out;
  for_each_coloring(level, graph, boundary, [&](const Coloring& c) {
    if (out.size() >= ceiling)
      throw Error(ErrorKind::too_many_colorings, "more than " + std::to_string(ceiling) + " colorings");
    out.push_back(c);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class dim_blocks(const Level& level, const TrivalentGraph& graph, const BoundaryColoring& boundary) {
  std::uint64_t count = 0;
  for_each_coloring(level, graph, boundary, [&](const Coloring&) {
    ++count;
    return true;
  });
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
  return out;
}

bool has_coloring(const Level& level, const TrivalentGraph& graph, const BoundaryColoring& boundary) {
  bool found = false;
  for_each_coloring(level, graph, boundary, [&](const Coloring&) {
    found = true;
    return false;
  });
  return found;
}

bool genus0_nonzero(const Level& level, std::span<const int> colors) {
  level.require_lemma_range();
  const int m = static_cast<int>(colors.size());
  if (m < 3) throw Error(ErrorKind::invalid_argument, "genus-0 nonvanishing needs m >= 3 colors");
  auto i = sorted_colors(level, colors);
  std::reverse(i.begin(), i.end());
  const int total = std::accumulate(i.begin(), i.end(), 0);
  if (level.is_even() && total % 2 != 0) return false;
  const int p = level.p();
  const int step = level.is_odd() ? 2 * (p - 2) : p - 4;
  int top = 0;
  for (int k = 0; 2 * k + 1 <= m; ++k) {
    // largest subset sum of size 2k+1
    for (int t = (k == 0 ? 0 : 2 * k - 1); t < 2 * k + 1; ++t) top += i[t];
    if (2 * top > k * step + total) return false;
  }
  return true;
}

DeltaReport delta(const Level& level, std::span<const int> colors) {
  level.require_lemma_range();
  if (colors.size() < 2) throw Error(ErrorKind::invalid_argument, "delta needs at least two colors");
  const auto i = sorted_colors(level, colors);
  const int n = static_cast<int>(i.size());
  const int p = level.p();
  DeltaReport r;
  if (level.is_odd()) {
    r.j_max = j_max_plain(i, p - 3, 2 * (p - 2));
    r.j_min = j_min_plain(i, 0, 2 * (p - 2), n / 2);
  } else {
    const int eps = std::accumulate(i.begin(), i.end(), 0) % 2;
    const int eps_p = p % 4 == 0 ? eps : 1 - eps;
    r.j_max = j_max_plain(i, (p - 4) / 2 - eps_p, p - 4);
    r.j_min = j_min_plain(i, eps, p - 4, n / 2);
  }
  r.value = 1 + (r.j_max - r.j_min) / 2;
  return r;
}

DeltaReport delta_one_handle(const Level& level, std::span<const int> colors) {
  level.require_lemma_range();
  if (colors.empty()) throw Error(ErrorKind::invalid_argument, "one-handle delta needs at least one color");
  const auto i = sorted_colors(level, colors);
  const int n = static_cast<int>(i.size());
  const int p = level.p();
  DeltaReport r;
  r.variant = DeltaVariant::one_handle;
  if (level.is_odd()) {
    r.j_max = j1_max(i, 2 * (p - 3), 2 * (p - 2));
    r.j_min = j_min_plain(i, 0, 2 * (p - 2), n / 2);
    r.value = 1 + floor_div(r.j_max, 4) - ceil_div(r.j_min, 4);
    return r;
  }
  r.typography_resolved = true;
  if (std::accumulate(i.begin(), i.end(), 0) % 2 != 0) {
    r.value = 0;
    r.as_printed = 0;
    return r;
  }
  r.j_max = j1_max(i, p - 4, p - 4);
  r.j_min = j_min_plain(i, 0, p - 4, (n + 1) / 2);
  r.value = 1 + (r.j_max - r.j_min) / 2;
  r.as_printed = 1 + (j1_max_printed_even(i, p) - r.j_min) / 2;
  return r;
}

int delta_oracle(const Level& level, std::span<const int> colors) {
  if (colors.size() < 2) throw Error(ErrorKind::invalid_argument, "delta needs at least two colors");
  const auto i = sorted_colors(level, colors);
  int count = 0;
  for (int j : level.colors()) {
    auto tuple = i;
    tuple.push_back(j);
    count += genus0_oracle(level, tuple);
  }
  return count;
}

int delta_one_handle_oracle(const Level& level, std::span<const int> colors) {
  if (colors.empty()) throw Error(ErrorKind::invalid_argument, "one-handle delta needs at least one color");
  const auto i = sorted_colors(level, colors);
  int count = 0;
  for (int j : level.colors()) {
    auto tuple = i;
    tuple.insert(tuple.end(), {j, j});
    count += genus0_oracle(level, tuple);
  }
  return count;
}

bool genus0_nonzero_oracle(const Level& level, std::span<const int> colors) {
  if (colors.size() < 3) throw Error(ErrorKind::invalid_argument, "genus-0 nonvanishing needs m >= 3 colors");
  return genus0_oracle(level, sorted_colors(level, colors));
}

int dim_genus1_pair(const Level& level, int i, int j) {
  level.require_color(i);
  level.require_color(j);
  const int hi = std::max(i, j);
  const int lo = std::min(i, j);
  const int p = level.p();
  if (level.is_odd()) return (p - 1 - hi) * (lo + 1) / 2;
  if ((i - j) % 2 != 0) return 0;
  return ((p - 2) / 2 - hi) * (1 + lo);
}

}  // namespace skein
