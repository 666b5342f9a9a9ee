#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hkdim/graph.hpp"
#include "hkdim/order.hpp"
#include "hkdim/structure.hpp"
#include "hkdim/word.hpp"

namespace hkdim {

/// A family of words v_0 b_1^+ v_1 ... b_s^+ v_s: literal words
/// interleaved with repeated blocks, each block the full vertex word of one
/// cycle. literals.size() == blocks.size() + 1.
struct StarExpression {
  std::vector<Word> literals;
  std::vector<Word> blocks;

  int star_count() const { return static_cast<int>(blocks.size()); }
  friend bool operator==(const StarExpression&, const StarExpression&) =
      default;
};

/// The ascending word x_1 x_2 ... x_n around a cycle, in stored rotation.
Word cycle_word(const SimpleCycle& cycle);

/// Builds the backbone word over the non-cycle vertices of the
/// cycle-reachable subgraph: starts from the ascending product of the
/// terminal vertices (path count 1), then inserts each remaining vertex,
/// largest first, at the front and directly after each occurrence of its
/// counted neighbours. Every inserted vertex y ends up occurring exactly
/// k_y times. Returns the empty word when the graph is a disjoint union of
/// cycles (plus vertices outside the cycle-reachable subgraph).
Word build_backbone_word(const OrientedGraph& g, const CycleStructure& cs,
                         const VertexOrder& order);

/// Interleaves repeated cycle blocks into the backbone, processing cycles
/// from the one with the biggest vertices down. The expression splits at
/// each occurrence of a vertex adjacent to the current cycle and wraps the
/// pieces in blocks, so the total number of blocks is exactly the dimension
/// formula value. Throws Error when the graph has no cycle.
StarExpression build_star_expression(const OrientedGraph& g,
                                     const CycleStructure& cs,
                                     const VertexOrder& order);

/// One member of the family: each block repeated its (positive) exponent.
/// Throws Error on length mismatch or non-positive exponents.
Word instantiate(const StarExpression& expr, std::span<const int> exponents);

/// Literals in word format, blocks as `( word )+`.
std::string format_star_expression(const OrientedGraph& g,
                                   const StarExpression& expr);

struct WitnessOptions {
  int grid_max = 3;              // exponents range over {1..grid_max}
  std::size_t sample_cap = 5000; // random subsample above this many points
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct WitnessReport {
  int star_count = 0;
  long long formula_value = 0;
  std::size_t samples_checked = 0;
  bool all_normal = false;
  bool all_distinct = false;
  std::optional<Word> counterexample;

  bool passed() const {
    return all_normal && all_distinct && star_count == formula_value;
  }
};

/// Certifies the lower bound witness: instantiates the expression over the
/// exponent grid, checks every sample is normal, that samples are pairwise
/// distinct as letter sequences, and that the block count equals the
/// formula value. A failing report carries a counterexample word.
WitnessReport verify_witness(const OrientedGraph& g, const StarExpression& expr,
                             const WitnessOptions& options = {});

}  // namespace hkdim
