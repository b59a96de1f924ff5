#pragma once

#include <vector>

#include "doctest.h"
#include "skein/blocks.hpp"
#include "skein/error.hpp"

namespace skein::testing {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::invalid_argument;
}

// Every tuple of C_p^E tried against every vertex: the definition, with no pruning.
inline std::vector<Coloring> naive_colorings(const Level& level, const TrivalentGraph& g,
                                             const BoundaryColoring& boundary) {
  std::vector<Coloring> out;
  Coloring c(g.edge_count(), level.colors().front());
  const auto& cs = level.colors();
  std::vector<std::size_t> idx(g.edge_count(), 0);
  while (true) {
    for (int e = 0; e < g.edge_count(); ++e) c[e] = cs[idx[e]];
    bool ok = true;
    for (int v = 0; v < g.vertex_count() && ok; ++v) {
      int x[3];
      for (int s = 0; s < 3; ++s) {
        const Slot& slot = g.slots(v)[s];
        x[s] = slot.kind == Slot::Kind::edge ? c[slot.index] : boundary[slot.index];
      }
      ok = level.admissible_unchecked(x[0], x[1], x[2]);
    }
    if (ok) out.push_back(c);
    int e = g.edge_count() - 1;
    while (e >= 0 && ++idx[e] == cs.size()) idx[e--] = 0;
    if (e < 0) break;
  }
  return out;
}

}  // namespace skein::testing
