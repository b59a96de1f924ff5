#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skein/blocks.hpp"

namespace skein {

struct VerifyOptions {
  int p_min = 3;
  int p_max = 16;
  int g_max = 3;
  /// Per-suite default when unset: 4 for delta, 3 for orders and factor,
  /// 2 for stabilizer.
  std::optional<int> n_max;
  std::size_t coloring_ceiling = kDefaultColoringCeiling;
};

struct VerifyRecord {
  std::vector<std::pair<std::string, std::string>> fields;
  bool match = true;
  /// Reported but not counted towards the verdict.
  bool informational = false;
};

struct VerifyReport {
  std::string suite;
  std::string parameters;
  std::vector<VerifyRecord> records;

  std::size_t matched() const;
  std::size_t mismatched() const;
  std::size_t informational() const;
  bool ok() const { return mismatched() == 0; }
};

const std::vector<std::string>& suite_names();

/// Runs one suite ("all" is expanded by the caller). Records come out in a
/// fixed order.
VerifyReport run_suite(std::string_view suite, const VerifyOptions& options);

/// Distinct caterpillar patterns with g tadpoles and n legs, one per
/// reversal pair.
std::vector<std::string> caterpillar_patterns(int g, int n);

/// All tuples in C_p^n, lexicographic.
std::vector<std::vector<int>> all_boundaries(const Level& level, int n);
/// Nondecreasing tuples of length n.
std::vector<std::vector<int>> sorted_tuples(const Level& level, int n);

/// Effective colors on every edge from a single enumeration pass.
std::vector<std::vector<int>> effective_colors_all(const Level& level, const TrivalentGraph& graph,
                                                   const BoundaryColoring& boundary);

}  // namespace skein
