#include "hkdim/structure.hpp"

#include <algorithm>
#include <deque>

#include "hkdim/errors.hpp"

namespace hkdim {

namespace {

std::vector<char> cycle_vertex_mask(int n, const std::vector<SimpleCycle>& cycles) {
  std::vector<char> mask(n, 0);
  for (const auto& c : cycles) {
    for (int v : c.vertices) mask[v] = 1;
  }
  return mask;
}

// Vertices reachable from `seeds` by a path of length >= 1 (forward or
// backward), excluding nothing: the seeds themselves are marked only if
// re-entered.
std::vector<char> reachable(const OrientedGraph& g,
                            const std::vector<char>& seeds, bool forward) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    if (seeds[v]) queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : forward ? g.out(v) : g.in(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw Error("path count overflow");
  return r;
}

// Path-count DP over one direction class. `region` holds the counted
// vertices; arcs out of the region (other than into excluded cycle
// vertices, which finiteness already rules out) are an internal error.
void count_region(const OrientedGraph& g, const std::vector<char>& region,
                  bool forward, std::vector<long long>& k) {
  const int n = g.vertex_count();
  // Kahn topological order; the counted region must be acyclic.
  std::vector<int> degree(n, 0), order;
  for (int v = 0; v < n; ++v) {
    if (!region[v]) continue;
    for (int w : forward ? g.out(v) : g.in(v)) {
      if (!region[w])
        throw InternalError(
            "counted region is not closed; finiteness check bug");
      ++degree[w];
    }
  }
  std::deque<int> queue;
  int region_size = 0;
  for (int v = 0; v < n; ++v) {
    if (region[v]) {
      ++region_size;
      if (degree[v] == 0) queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int w : forward ? g.out(v) : g.in(v)) {
      if (--degree[w] == 0) queue.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != region_size)
    throw InternalError("counted region is not acyclic; refusing to count");

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    long long total = 1;  // the length-0 path
    for (int w : forward ? g.out(v) : g.in(v)) {
      total = checked_add(total, k[w]);
    }
    k[v] = total;
  }
}

}  // namespace

std::vector<int> cycle_reachable_subgraph(const OrientedGraph& g,
                                          const std::vector<SimpleCycle>& cycles) {
  const int n = g.vertex_count();
  auto on_cycle = cycle_vertex_mask(n, cycles);
  auto desc = reachable(g, on_cycle, /*forward=*/true);
  auto anc = reachable(g, on_cycle, /*forward=*/false);
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (on_cycle[v] || desc[v] || anc[v]) out.push_back(v);
  }
  return out;
}

ClassifiedCounts classify_and_count(const OrientedGraph& g,
                                    const std::vector<SimpleCycle>& cycles,
                                    const std::vector<int>& cycle_reachable) {
  const int n = g.vertex_count();
  auto on_cycle = cycle_vertex_mask(n, cycles);
  auto desc = reachable(g, on_cycle, /*forward=*/true);
  auto anc = reachable(g, on_cycle, /*forward=*/false);

  ClassifiedCounts result;
  result.direction.assign(n, std::nullopt);
  result.path_count.assign(n, 0);

  std::vector<char> from_region(n, 0), to_region(n, 0);
  for (int v : cycle_reachable) {
    if (on_cycle[v]) continue;
    bool from_cycles = desc[v] && !on_cycle[v];
    bool to_cycles = anc[v] && !on_cycle[v];
    if (from_cycles && to_cycles)
      throw InternalError("vertex '" + g.name(v) +
                          "' has paths both from and into cycles; "
                          "finiteness check bug");
    if (!from_cycles && !to_cycles)
      throw InternalError("vertex '" + g.name(v) +
                          "' is not connected to any cycle");
    if (from_cycles) {
      result.direction[v] = DirectionClass::FromCycles;
      from_region[v] = 1;
    } else {
      result.direction[v] = DirectionClass::ToCycles;
      to_region[v] = 1;
    }
  }

  // FromCycles vertices count paths that start at them (downstream is
  // acyclic and cycle-free); ToCycles vertices count paths that end at
  // them, symmetrically upstream.
  count_region(g, from_region, /*forward=*/true, result.path_count);
  count_region(g, to_region, /*forward=*/false, result.path_count);
  return result;
}

std::vector<std::vector<int>> adjacency_to_cycles(
    const OrientedGraph& g, const std::vector<SimpleCycle>& cycles) {
  const int n = g.vertex_count();
  auto on_cycle = cycle_vertex_mask(n, cycles);
  std::vector<std::vector<int>> adjacency(cycles.size());
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    std::vector<char> seen(n, 0);
    for (int v : cycles[j].vertices) {
      for (int w : g.out(v)) {
        if (!on_cycle[w] && !seen[w]) {
          seen[w] = 1;
          adjacency[j].push_back(w);
        }
      }
      for (int w : g.in(v)) {
        if (!on_cycle[w] && !seen[w]) {
          seen[w] = 1;
          adjacency[j].push_back(w);
        }
      }
    }
    std::sort(adjacency[j].begin(), adjacency[j].end());
  }
  return adjacency;
}

CycleStructure analyze_cycle_structure(const OrientedGraph& g) {
  auto fin = finiteness_check(g);
  if (!fin.finite)
    throw Error("graph has two simple cycles connected by an oriented path");

  CycleStructure cs;
  cs.cycles = simple_cycles(g);
  cs.cycle_reachable = cycle_reachable_subgraph(g, cs.cycles);
  cs.in_cycle_reachable.assign(g.vertex_count(), 0);
  for (int v : cs.cycle_reachable) cs.in_cycle_reachable[v] = 1;
  cs.cycle_of.assign(g.vertex_count(), -1);
  for (std::size_t j = 0; j < cs.cycles.size(); ++j) {
    for (int v : cs.cycles[j].vertices) cs.cycle_of[v] = static_cast<int>(j);
  }
  cs.counts = classify_and_count(g, cs.cycles, cs.cycle_reachable);
  cs.adjacency = adjacency_to_cycles(g, cs.cycles);
  return cs;
}

VertexOrder build_order(const OrientedGraph& g, const CycleStructure& cs,
                        const OrderOptions& options) {
  const int n = g.vertex_count();
  std::vector<int> sequence;
  sequence.reserve(n);

  // Cycle vertices first, cycle by cycle in stored rotation.
  if (options.reverse_cycle_order) {
    for (auto it = cs.cycles.rbegin(); it != cs.cycles.rend(); ++it) {
      for (int v : it->vertices) sequence.push_back(v);
    }
  } else {
    for (const auto& c : cs.cycles) {
      for (int v : c.vertices) sequence.push_back(v);
    }
  }

  auto name_less = [&](int a, int b) {
    return options.name_descending ? g.name(b) < g.name(a)
                                   : g.name(a) < g.name(b);
  };

  // Non-cycle vertices of the cycle-reachable subgraph: bigger path count
  // first, so k_x < k_y forces y < x.
  std::vector<int> inner;
  for (int v : cs.cycle_reachable) {
    if (!cs.is_cycle_vertex(v)) inner.push_back(v);
  }
  std::sort(inner.begin(), inner.end(), [&](int a, int b) {
    if (cs.counts.path_count[a] != cs.counts.path_count[b])
      return cs.counts.path_count[a] > cs.counts.path_count[b];
    return name_less(a, b);
  });
  sequence.insert(sequence.end(), inner.begin(), inner.end());

  // Everything outside the cycle-reachable subgraph goes on top.
  std::vector<int> outer;
  for (int v = 0; v < n; ++v) {
    if (!cs.in_cycle_reachable[v]) outer.push_back(v);
  }
  std::sort(outer.begin(), outer.end(), name_less);
  sequence.insert(sequence.end(), outer.begin(), outer.end());

  VertexOrder order;
  order.rank.assign(n, -1);
  for (int pos = 0; pos < n; ++pos) order.rank[sequence[pos]] = pos;
  return order;
}

}  // namespace hkdim
