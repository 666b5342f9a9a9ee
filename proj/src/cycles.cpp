#include "hkdim/cycles.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "hkdim/errors.hpp"

namespace hkdim {

namespace {

// Rotates so the lexicographically least vertex name comes first.
SimpleCycle canonical(const OrientedGraph& g, std::vector<int> vertices) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (g.name(vertices[i]) < g.name(vertices[best])) best = i;
  }
  std::rotate(vertices.begin(), vertices.begin() + best, vertices.end());
  return SimpleCycle{std::move(vertices)};
}

bool canonical_less(const OrientedGraph& g, const SimpleCycle& a,
                    const SimpleCycle& b) {
  const std::size_t m = std::min(a.vertices.size(), b.vertices.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (a.vertices[i] != b.vertices[i]) {
      return g.name(a.vertices[i]) < g.name(b.vertices[i]);
    }
  }
  return a.vertices.size() < b.vertices.size();
}

void sort_canonically(const OrientedGraph& g, std::vector<SimpleCycle>& cycles) {
  std::sort(cycles.begin(), cycles.end(),
            [&](const SimpleCycle& a, const SimpleCycle& b) {
              return canonical_less(g, a, b);
            });
}

// Johnson-style circuit search anchored at a root vertex: explores only
// vertices >= root (by id) inside the root's strongly connected component,
// so every simple cycle is reported exactly once, at its minimal vertex.
struct CircuitSearch {
  const OrientedGraph& g;
  const std::vector<char>& active;  // current subgraph membership
  int root;
  long long limit;  // stop after reporting this many cycles (<0: unlimited)
  std::vector<SimpleCycle>& out;

  std::vector<char> blocked;
  std::vector<std::vector<int>> block_list;
  std::vector<int> stack;
  bool done = false;

  CircuitSearch(const OrientedGraph& graph, const std::vector<char>& act,
                int r, long long lim, std::vector<SimpleCycle>& sink)
      : g(graph),
        active(act),
        root(r),
        limit(lim),
        out(sink),
        blocked(graph.vertex_count(), 0),
        block_list(graph.vertex_count()) {}

  void unblock(int v) {
    blocked[v] = 0;
    for (int w : block_list[v]) {
      if (blocked[w]) unblock(w);
    }
    block_list[v].clear();
  }

  bool circuit(int v) {
    bool found = false;
    stack.push_back(v);
    blocked[v] = 1;
    for (int w : g.out(v)) {
      if (done) break;
      if (!active[w] || w < root) continue;
      if (w == root) {
        out.push_back(canonical(g, stack));
        found = true;
        if (limit >= 0 && static_cast<long long>(out.size()) >= limit)
          done = true;
      } else if (!blocked[w]) {
        if (circuit(w)) found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (int w : g.out(v)) {
        if (!active[w] || w < root) continue;
        auto& bl = block_list[w];
        if (std::find(bl.begin(), bl.end(), v) == bl.end()) bl.push_back(v);
      }
    }
    stack.pop_back();
    return found;
  }
};

}  // namespace

// Tarjan, restricted to `active` vertices when given. Returns component ids
// (-1 for inactive vertices).
static std::vector<int> strongly_connected_components(
    const OrientedGraph& g, const std::vector<char>* active = nullptr) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stck;
  std::vector<char> on_stack(n, 0);
  int counter = 0, comp_count = 0;

  std::function<void(int)> visit = [&](int v) {
    num[v] = low[v] = counter++;
    stck.push_back(v);
    on_stack[v] = 1;
    for (int w : g.out(v)) {
      if (active && !(*active)[w]) continue;
      if (num[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], num[w]);
      }
    }
    if (low[v] == num[v]) {
      while (true) {
        int w = stck.back();
        stck.pop_back();
        on_stack[w] = 0;
        comp[w] = comp_count;
        if (w == v) break;
      }
      ++comp_count;
    }
  };

  for (int v = 0; v < n; ++v) {
    if ((!active || (*active)[v]) && num[v] < 0) visit(v);
  }
  return comp;
}

static std::vector<SimpleCycle> enumerate_cycles(const OrientedGraph& g,
                                                 const std::vector<char>& within,
                                                 long long limit) {
  const int n = g.vertex_count();
  std::vector<SimpleCycle> out;
  for (int root = 0; root < n; ++root) {
    if (!within[root]) continue;
    if (limit >= 0 && static_cast<long long>(out.size()) >= limit) break;
    // Restrict to the root's SCC inside {v >= root}.
    std::vector<char> tail(n, 0);
    for (int v = root; v < n; ++v) tail[v] = within[v];
    auto comp = strongly_connected_components(g, &tail);
    std::vector<char> scc(n, 0);
    bool nontrivial = false;
    for (int v = root; v < n; ++v) {
      if (tail[v] && comp[v] == comp[root]) {
        scc[v] = 1;
        if (v != root) nontrivial = true;
      }
    }
    if (!nontrivial) continue;
    long long remaining =
        limit >= 0 ? limit - static_cast<long long>(out.size()) : -1;
    CircuitSearch search(g, scc, root, remaining, out);
    search.circuit(root);
  }
  sort_canonically(g, out);
  return out;
}

std::vector<SimpleCycle> simple_cycles(const OrientedGraph& g,
                                       long long budget) {
  std::vector<char> all(g.vertex_count(), 1);
  auto cycles = enumerate_cycles(g, all, budget >= 0 ? budget + 1 : -1);
  if (budget >= 0 && static_cast<long long>(cycles.size()) > budget) {
    throw BudgetError("simple cycle budget exceeded (" +
                      std::to_string(budget) + ")");
  }
  return cycles;
}

namespace {

// Shortest oriented path from any vertex of `from` to any vertex of `to`,
// including both endpoints; a shared vertex yields a single-vertex path.
std::vector<int> connecting_path(const OrientedGraph& g,
                                 const std::vector<int>& from,
                                 const std::vector<int>& to) {
  const int n = g.vertex_count();
  std::vector<char> target(n, 0);
  for (int v : to) target[v] = 1;
  for (int v : from) {
    if (target[v]) return {v};
  }
  std::vector<int> parent(n, -2);
  std::deque<int> queue;
  for (int v : from) {
    parent[v] = -1;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.out(v)) {
      if (parent[w] != -2) continue;
      parent[w] = v;
      if (target[w]) {
        std::vector<int> path{w};
        for (int p = v; p != -1; p = parent[p]) path.push_back(p);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  throw InternalError("expected a connecting path between cycles");
}

}  // namespace

FinitenessResult finiteness_check(const OrientedGraph& g) {
  const int n = g.vertex_count();
  auto comp = strongly_connected_components(g);
  int comp_count = 0;
  for (int v = 0; v < n; ++v) comp_count = std::max(comp_count, comp[v] + 1);

  std::vector<std::vector<int>> members(comp_count);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);

  std::vector<SimpleCycle> cycles;
  for (const auto& scc : members) {
    if (scc.size() < 2) continue;  // no self-loops, so no cycle here
    std::vector<char> inside(n, 0);
    for (int v : scc) inside[v] = 1;
    bool is_single_cycle = true;
    for (int v : scc) {
      int internal_out = 0;
      for (int w : g.out(v)) internal_out += inside[w];
      if (internal_out != 1) {
        is_single_cycle = false;
        break;
      }
    }
    if (is_single_cycle) {
      // A strongly connected graph where every vertex has one internal
      // out-arc is exactly one directed cycle through all its vertices.
      std::vector<int> walk{scc[0]};
      for (int v = scc[0];;) {
        int next = -1;
        for (int w : g.out(v)) {
          if (inside[w]) {
            next = w;
            break;
          }
        }
        if (next == scc[0]) break;
        walk.push_back(next);
        v = next;
      }
      cycles.push_back(canonical(g, std::move(walk)));
    } else {
      // More than one simple cycle shares this component; any two of them
      // are mutually reachable. Grab two concrete ones for the witness.
      auto pair = enumerate_cycles(g, inside, 2);
      if (pair.size() < 2)
        throw InternalError("non-cycle SCC must contain two simple cycles");
      auto path = connecting_path(g, pair[0].vertices, pair[1].vertices);
      return FinitenessResult{
          false, {}, InfiniteWitness{pair[0], pair[1], std::move(path)}};
    }
  }

  sort_canonically(g, cycles);

  // Every nontrivial SCC is a lone cycle; infinite growth now requires an
  // oriented path between two of them.
  std::vector<int> cycle_of(n, -1);
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    for (int v : cycles[j].vertices) cycle_of[v] = static_cast<int>(j);
  }
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    std::vector<char> seen(n, 0);
    std::deque<int> queue;
    for (int v : cycles[j].vertices) {
      seen[v] = 1;
      queue.push_back(v);
    }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.out(v)) {
        if (seen[w]) continue;
        seen[w] = 1;
        if (cycle_of[w] >= 0 && cycle_of[w] != static_cast<int>(j)) {
          auto path = connecting_path(g, cycles[j].vertices,
                                      cycles[cycle_of[w]].vertices);
          return FinitenessResult{false,
                                  {},
                                  InfiniteWitness{cycles[j],
                                                  cycles[cycle_of[w]],
                                                  std::move(path)}};
        }
        queue.push_back(w);
      }
    }
  }

  return FinitenessResult{true, std::move(cycles), std::nullopt};
}

}  // namespace hkdim
