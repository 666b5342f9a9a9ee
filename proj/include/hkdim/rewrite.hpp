#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hkdim/cycles.hpp"
#include "hkdim/graph.hpp"
#include "hkdim/order.hpp"
#include "hkdim/word.hpp"

namespace hkdim {

/// w -/-> t : t does not occur in w and no letter of w has an arc into t.
bool not_into(const OrientedGraph& g, const Word& w, int t);

/// t -/-> w : t does not occur in w and t has no arc into a letter of w.
bool not_from(const OrientedGraph& g, int t, const Word& w);

/// t and w are disconnected: both of the above.
bool disconnected(const OrientedGraph& g, int t, const Word& w);

/// The three reduction shapes of the rewriting system.
///   AbsorbRight: t w t -> t w   when w -/-> t
///   AbsorbLeft:  t w t -> w t   when t -/-> w
///   Commute:     t1 w t2 -> t2 t1 w   when t1 > t2 and t2 disconnected
///                from t1 w
/// Every replacement is strictly smaller in deg-lex.
enum class RedexKind { AbsorbRight, AbsorbLeft, Commute };

struct ReductionMatch {
  RedexKind kind;
  std::size_t begin;  // span [begin, end) within the word
  std::size_t end;
  Word replacement;

  friend bool operator==(const ReductionMatch&, const ReductionMatch&) =
      default;
};

/// All matches in w, sorted by (begin, span length, kind). AbsorbRight and
/// AbsorbLeft spans pair consecutive occurrences of the same letter only.
std::vector<ReductionMatch> find_redexes(const OrientedGraph& g,
                                         const VertexOrder& order,
                                         const Word& w);

/// True when w admits no reduction.
bool is_normal(const OrientedGraph& g, const VertexOrder& order, const Word& w);

/// Assuming `prefix` is normal, decides whether appending `letter` keeps it
/// normal. Only factors ending at the new last position need checking, so
/// this costs O(|prefix| * vertex_count / 64).
bool extension_is_normal(const OrientedGraph& g, const VertexOrder& order,
                         std::span<const int> prefix, int letter);

struct RewriteStrategy {
  enum class Kind { Leftmost, Randomized };
  Kind kind = Kind::Leftmost;
  std::uint64_t seed = 0;

  static RewriteStrategy leftmost() { return {}; }
  static RewriteStrategy randomized(std::uint64_t seed) {
    return {Kind::Randomized, seed};
  }
};

struct NormalFormResult {
  Word normal;
  std::size_t steps = 0;
};

/// Rewrites until no reduction applies. Terminates because every step
/// strictly decreases deg-lex; the step budget (default 10*|w|^2 + 100)
/// only guards against implementation bugs and raises BudgetError.
/// Leftmost picks the match with the smallest start, then the shortest
/// span, then AbsorbRight < AbsorbLeft < Commute.
NormalFormResult normal_form(const OrientedGraph& g, const VertexOrder& order,
                             Word w,
                             RewriteStrategy strategy = RewriteStrategy::leftmost(),
                             std::size_t step_budget = 0);

/// The length-N period word of a cycle x_1 -> ... -> x_N -> x_1 at a given
/// offset in {0, ..., N-2}: x_N (x_1 ... x_offset) (x_{N-1} ... x_{offset+1}).
/// Offset 0 gives the descending word x_N x_{N-1} ... x_1.
Word cycle_period_word(const SimpleCycle& cycle, int offset);

struct PeriodicSupportResult {
  enum class Kind {
    ConfirmedFactor,     // w is a factor of some repeated period word
    NotPeriodicNormal,   // some small power of w is not normal
    Violation,           // should never occur; would falsify this library
  };
  Kind kind;
  int offset = -1;  // set for ConfirmedFactor
};

/// Desk-scale consequence check for periodic normal words: if w, w^2, ...,
/// w^max_power are all normal then w must be supported on exactly one full
/// cycle and occur as a factor of that cycle's repeated period word.
PeriodicSupportResult periodic_support_check(const OrientedGraph& g,
                                             const std::vector<SimpleCycle>& cycles,
                                             const VertexOrder& order,
                                             const Word& w, int max_power);

}  // namespace hkdim
