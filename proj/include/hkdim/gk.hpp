#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hkdim/graph.hpp"

namespace hkdim {

/// One cycle's contribution to the dimension: the adjacent vertices with
/// their path counts, and the summand (sum of counts) + 1.
struct CycleSummand {
  int cycle = 0;  // 1-based cycle index
  std::vector<std::pair<std::string, long long>> adjacent;  // (vertex, k)
  long long summand = 0;

  friend bool operator==(const CycleSummand&, const CycleSummand&) = default;
};

struct WitnessDoc {
  std::vector<std::string> cycle_a;
  std::vector<std::string> cycle_b;
  std::vector<std::string> path;

  friend bool operator==(const WitnessDoc&, const WitnessDoc&) = default;
};

/// Result of the dimension computation, in terms of vertex names so it can
/// be serialized and compared independently of a graph instance.
struct GkReport {
  bool finite = false;
  std::optional<long long> gk;  // set exactly when finite
  std::vector<std::vector<std::string>> cycles;
  std::vector<CycleSummand> per_cycle;
  std::optional<WitnessDoc> infinite_witness;

  friend bool operator==(const GkReport&, const GkReport&) = default;
};

/// Computes the Gelfand-Kirillov dimension of the monoid algebra attached
/// to the graph: infinite when two distinct cycles are connected by an
/// oriented path, 0 for acyclic graphs, and otherwise the sum over cycles
/// of (sum of path counts of arc-adjacent vertices) + 1.
GkReport gk_dimension(const OrientedGraph& g);

}  // namespace hkdim
