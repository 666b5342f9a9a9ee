#pragma once

#include <vector>

namespace hkdim {

/// A strict total order on the vertices, stored as rank positions.
/// Words are compared in the induced deg-lex order: by length first, then
/// letter by letter using ranks.
struct VertexOrder {
  std::vector<int> rank;  // vertex id -> position, 0 = smallest

  bool less(int a, int b) const { return rank[a] < rank[b]; }

  /// Declaration order: vertex 0 smallest. Valid for rewriting on any graph.
  static VertexOrder declaration_order(int vertex_count) {
    VertexOrder o;
    o.rank.resize(vertex_count);
    for (int v = 0; v < vertex_count; ++v) o.rank[v] = v;
    return o;
  }
};

}  // namespace hkdim
