#pragma once

#include <optional>
#include <vector>

#include "hkdim/graph.hpp"

namespace hkdim {

/// A simple directed cycle, stored in canonical rotation: the vertex with
/// the lexicographically least name comes first and consecutive entries
/// (wrapping around) are arcs of the graph. Length is at least 3 because
/// the graph is simple.
struct SimpleCycle {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const SimpleCycle&, const SimpleCycle&) = default;
};

/// Enumerates every simple directed cycle (Johnson-style backtracking with
/// blocking), each in canonical rotation, the list sorted canonically by
/// vertex names. Acyclic graphs yield the empty list. Throws BudgetError
/// when more than `budget` cycles exist.
std::vector<SimpleCycle> simple_cycles(const OrientedGraph& g,
                                       long long budget = 1'000'000);

/// Two distinct simple cycles joined by an oriented path of length >= 0.
/// A single shared vertex counts as a length-0 path, in which case `path`
/// holds exactly that vertex.
struct InfiniteWitness {
  SimpleCycle cycle_a;
  SimpleCycle cycle_b;
  std::vector<int> path;  // from a vertex of cycle_a to one of cycle_b

  friend bool operator==(const InfiniteWitness&, const InfiniteWitness&) =
      default;
};

struct FinitenessResult {
  bool finite = false;
  /// When finite: all simple cycles (pairwise disjoint), canonical order.
  std::vector<SimpleCycle> cycles;
  /// When infinite: a concrete pair of connected cycles.
  std::optional<InfiniteWitness> witness;
};

/// Decides whether the growth invariants of the presentation are finite:
/// finite exactly when no two distinct simple cycles are joined by an
/// oriented path of length >= 0. Runs on strongly connected components, so
/// it never enumerates cycles exhaustively and needs no budget.
FinitenessResult finiteness_check(const OrientedGraph& g);

}  // namespace hkdim
