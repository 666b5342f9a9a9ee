// Independent oracles for the property suites. Everything here is written
// directly from the defining conditions, separate from the library's
// implementation paths, so the two sides can check each other.

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "hkdim/cycles.hpp"
#include "hkdim/graph.hpp"
#include "hkdim/order.hpp"
#include "hkdim/word.hpp"

namespace oracle {

using hkdim::OrientedGraph;
using hkdim::VertexOrder;
using hkdim::Word;

// Plain triple-loop redex scan straight from the reduction shapes:
//   (i)  t w t -> t w  when no letter of w has an arc into t
//   (ii) t w t -> w t  when t has no arc into a letter of w
//   (iii) t1 w t2 -> t2 t1 w  when t1 > t2 and t2 is disconnected from t1 w
inline bool has_redex(const OrientedGraph& g, const VertexOrder& order,
                      const Word& w) {
  const auto arc = [&](int a, int b) { return g.has_arc(a, b); };
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == w[j]) {
        bool t_between = false;
        for (std::size_t p = i + 1; p < j; ++p) t_between |= (w[p] == w[i]);
        if (t_between) continue;
        bool into_t = false, from_t = false;
        for (std::size_t p = i + 1; p < j; ++p) {
          into_t |= arc(w[p], w[i]);
          from_t |= arc(w[i], w[p]);
        }
        if (!into_t || !from_t) return true;  // kind (i) or (ii)
      } else if (order.less(w[j], w[i])) {
        bool connected = false;
        for (std::size_t p = i; p < j; ++p) {
          connected |= (w[p] == w[j]) || arc(w[p], w[j]) || arc(w[j], w[p]);
        }
        if (!connected) return true;  // kind (iii)
      }
    }
  }
  return false;
}

// Number of directed simple paths of length >= 0 starting at x, by
// exhaustive backtracking. Only usable on small graphs.
inline long long count_paths_from(const OrientedGraph& g, int x,
                                  std::vector<char>& visited) {
  long long total = 1;
  visited[x] = 1;
  for (int y : g.out(x)) {
    if (!visited[y]) total += count_paths_from(g, y, visited);
  }
  visited[x] = 0;
  return total;
}

inline long long count_paths_from(const OrientedGraph& g, int x) {
  std::vector<char> visited(g.vertex_count(), 0);
  return count_paths_from(g, x, visited);
}

inline long long count_paths_to(const OrientedGraph& g, int x) {
  return count_paths_from(g.reversed(), x);
}

// Counts normal words of each length by filtering every word over the
// alphabet, using the given normality predicate.
template <typename IsNormal>
std::vector<long long> brute_force_density(const OrientedGraph& g, int max_len,
                                           IsNormal&& normal) {
  std::vector<long long> density(max_len + 1, 0);
  density[0] = 1;
  const int n = g.vertex_count();
  for (int len = 1; len <= max_len; ++len) {
    Word w(len, 0);
    while (true) {
      if (normal(w)) ++density[len];
      int i = 0;
      while (i < len && w[i] == n - 1) w[i++] = 0;
      if (i == len) break;
      ++w[i];
    }
  }
  return density;
}

// Exhaustive statement of the finiteness criterion: two distinct simple
// cycles joined by an oriented path of length >= 0 (a shared vertex counts).
inline bool has_two_connected_cycles(const OrientedGraph& g) {
  auto cycles = hkdim::simple_cycles(g, 100'000);
  const int n = g.vertex_count();
  for (std::size_t a = 0; a < cycles.size(); ++a) {
    for (std::size_t b = 0; b < cycles.size(); ++b) {
      if (a == b) continue;
      std::vector<char> reach(n, 0);
      std::vector<int> queue = cycles[a].vertices;
      for (int v : queue) reach[v] = 1;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (int w : g.out(queue[q])) {
          if (!reach[w]) {
            reach[w] = 1;
            queue.push_back(w);
          }
        }
      }
      for (int v : cycles[b].vertices) {
        if (reach[v]) return true;
      }
    }
  }
  return false;
}

// Arbitrary small simple oriented graphs (any finiteness), for the
// micro-scale equivalence checks.
inline OrientedGraph random_small_graph(std::mt19937_64& rng, int max_vertices) {
  const int n = 2 + static_cast<int>(rng() % (max_vertices - 1));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> arcs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      switch (rng() % 4) {
        case 0:
          arcs.emplace_back(names[a], names[b]);
          break;
        case 1:
          arcs.emplace_back(names[b], names[a]);
          break;
        default:
          break;  // not connected
      }
    }
  }
  return OrientedGraph::from_lists(names, arcs);
}

// Random DAGs: arcs only point from earlier to later vertices.
inline OrientedGraph random_dag(std::mt19937_64& rng, int max_vertices) {
  const int n = 2 + static_cast<int>(rng() % (max_vertices - 1));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("d" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> arcs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng() % 3 == 0) arcs.emplace_back(names[a], names[b]);
    }
  }
  return OrientedGraph::from_lists(names, arcs);
}

inline Word random_word(std::mt19937_64& rng, int alphabet, int max_len) {
  const int len = static_cast<int>(rng() % (max_len + 1));
  Word w(len);
  for (int i = 0; i < len; ++i) w[i] = static_cast<int>(rng() % alphabet);
  return w;
}

}  // namespace oracle
