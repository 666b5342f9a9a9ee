#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hkdim/graph.hpp"

namespace hkdim {

/// Reproducible random graph generation for the property suites: disjoint
/// cycles of length 3-5 with attached in/out trees, plus occasional extra
/// arcs that may connect cycles. Deterministic for a given seed.
struct CorpusSpec {
  enum class Constraint { MustBeFinite, Any };

  std::uint64_t seed = 1;
  int count = 10;
  std::pair<int, int> vertex_range{3, 12};
  std::pair<int, int> cycle_count_range{1, 2};
  std::pair<int, int> attachment_range{0, 4};
  Constraint constraint = Constraint::MustBeFinite;
};

struct CorpusEntry {
  OrientedGraph graph;
  bool finite = false;
};

/// Generates spec.count graphs. MustBeFinite rejection-samples against
/// finiteness_check and throws BudgetError if a sample cannot be found.
std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec);

}  // namespace hkdim
