#pragma once

#include <optional>
#include <vector>

#include "hkdim/cycles.hpp"
#include "hkdim/graph.hpp"
#include "hkdim/order.hpp"

namespace hkdim {

/// For a non-cycle vertex x of the cycle-reachable subgraph: FromCycles when
/// every oriented path between x and the cycles runs from a cycle into x,
/// ToCycles when every such path runs from x into a cycle.
enum class DirectionClass { FromCycles, ToCycles };

/// Vertices of the maximal cycle-reachable subgraph: all cycle vertices plus
/// every vertex joined to some cycle by an oriented path (in either
/// direction). Returned sorted by id.
std::vector<int> cycle_reachable_subgraph(const OrientedGraph& g,
                                          const std::vector<SimpleCycle>& cycles);

struct ClassifiedCounts {
  /// Direction class, set exactly for non-cycle vertices of the
  /// cycle-reachable subgraph.
  std::vector<std::optional<DirectionClass>> direction;
  /// Path count k_x for the same vertices: the number of oriented paths of
  /// length >= 0 starting at x (FromCycles) or ending at x (ToCycles).
  /// Zero for vertices where the notion does not apply.
  std::vector<long long> path_count;
};

/// Computes direction classes and path counts by dynamic programming on the
/// counted region, which is verified to be acyclic first. Requires the graph
/// to pass finiteness_check; a vertex reachable both from and into cycles
/// raises InternalError (it would contradict finiteness).
ClassifiedCounts classify_and_count(const OrientedGraph& g,
                                    const std::vector<SimpleCycle>& cycles,
                                    const std::vector<int>& cycle_reachable);

/// For each cycle, the set of non-cycle vertices joined to it by a single
/// arc (in either direction), sorted by id. A vertex may appear in several
/// of these sets.
std::vector<std::vector<int>> adjacency_to_cycles(
    const OrientedGraph& g, const std::vector<SimpleCycle>& cycles);

/// Everything the dimension formula and the witness construction need.
struct CycleStructure {
  std::vector<SimpleCycle> cycles;
  std::vector<int> cycle_reachable;      // sorted ids
  std::vector<char> in_cycle_reachable;  // per vertex id
  std::vector<int> cycle_of;         // vertex id -> cycle index, -1 if none
  ClassifiedCounts counts;
  std::vector<std::vector<int>> adjacency;  // per cycle

  bool is_cycle_vertex(int v) const { return cycle_of[v] >= 0; }
};

/// Runs the full cycle analysis. Throws Error when finiteness_check fails.
CycleStructure analyze_cycle_structure(const OrientedGraph& g);

/// Tie-break knobs for build_order; the defaults give the documented
/// canonical order. Alternatives exist so tests can confirm the results do
/// not depend on permitted tie-breaking.
struct OrderOptions {
  bool reverse_cycle_order = false;  // number cycles in reverse
  bool name_descending = false;      // flip name tie-breaks
};

/// Builds a vertex order compatible with the dimension analysis:
///   - cycle vertices first, cycle by cycle, each in its stored rotation
///   - then non-cycle vertices of the cycle-reachable subgraph, larger path
///     count first (k_x < k_y forces y < x), names breaking ties
///   - vertices outside the cycle-reachable subgraph above everything
VertexOrder build_order(const OrientedGraph& g, const CycleStructure& cs,
                        const OrderOptions& options = {});

}  // namespace hkdim
