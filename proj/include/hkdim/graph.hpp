#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hkdim/index_set.hpp"

namespace hkdim {

/// A finite simple oriented graph: named vertices plus arcs between them.
/// Simple here means no self-loops, no 2-cycles (an arc and its reverse),
/// and no duplicate arcs; these invariants are enforced on construction.
///
/// Vertices are addressed by their declaration index (0-based); the name
/// table maps indices back to names.
class OrientedGraph {
 public:
  /// Parses the line-oriented description format:
  ///   - lines starting with '#' are comments, blank lines are skipped
  ///   - one line `vertices: name1 name2 ...` (names match [A-Za-z0-9_]+)
  ///   - zero or more lines `edges: a->b c->d ...`
  /// The vertices line must precede every edges line. Throws ParseError
  /// with the offending line number on malformed input.
  static OrientedGraph parse(std::string_view text);

  /// Builds a graph from explicit vertex and arc lists; throws Error when a
  /// simplicity invariant is violated.
  static OrientedGraph from_lists(
      std::vector<std::string> vertices,
      const std::vector<std::pair<std::string, std::string>>& arcs);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int arc_count() const { return static_cast<int>(arc_list_.size()); }

  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> try_index(std::string_view name) const;
  /// Maps a name to its index; throws Error on unknown names.
  int index(std::string_view name) const;

  bool has_arc(int from, int to) const { return out_mask_[from].contains(to); }

  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }

  /// Set of u with an arc u -> v.
  const IndexSet& in_mask(int v) const { return in_mask_[v]; }
  /// Set of w with an arc v -> w.
  const IndexSet& out_mask(int v) const { return out_mask_[v]; }
  /// In- and out-neighbours combined.
  const IndexSet& neighbor_mask(int v) const { return nbr_mask_[v]; }

  /// Arcs in deterministic order (by source id, then target id).
  const std::vector<std::pair<int, int>>& arcs() const { return arc_list_; }

  /// Same graph with every arc reversed.
  OrientedGraph reversed() const;

  /// Serializes back to the description format parsed by parse().
  std::string to_text() const;

 private:
  OrientedGraph() = default;
  void add_arc_checked(int from, int to, int line);
  void finalize();

  std::vector<std::string> names_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<IndexSet> out_mask_, in_mask_, nbr_mask_;
  std::vector<std::pair<int, int>> arc_list_;
};

}  // namespace hkdim
