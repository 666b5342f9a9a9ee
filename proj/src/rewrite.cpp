#include "hkdim/rewrite.hpp"

#include <algorithm>
#include <random>

#include "hkdim/errors.hpp"

namespace hkdim {

namespace {

void check_letter(const OrientedGraph& g, int letter) {
  if (letter < 0 || letter >= g.vertex_count())
    throw Error("unknown vertex id " + std::to_string(letter));
}

void check_word(const OrientedGraph& g, const Word& w) {
  for (int letter : w) check_letter(g, letter);
}

}  // namespace

bool not_into(const OrientedGraph& g, const Word& w, int t) {
  check_letter(g, t);
  check_word(g, w);
  if (count_occurrences(w, t) != 0) return false;
  return !support(g, w).intersects(g.in_mask(t));
}

bool not_from(const OrientedGraph& g, int t, const Word& w) {
  check_letter(g, t);
  check_word(g, w);
  if (count_occurrences(w, t) != 0) return false;
  return !support(g, w).intersects(g.out_mask(t));
}

bool disconnected(const OrientedGraph& g, int t, const Word& w) {
  check_letter(g, t);
  check_word(g, w);
  if (count_occurrences(w, t) != 0) return false;
  auto supp = support(g, w);
  return !supp.intersects(g.in_mask(t)) && !supp.intersects(g.out_mask(t));
}

// Core backward scan for the factors of w ending at position `end`. Calls
// `emit(kind, begin)` for every match; emit returns false to stop early.
//
// Walking i from end-1 downward, `between` accumulates the support of
// letters strictly between i and end. Pairing stops at the nearest earlier
// occurrence of c = w[end]: only consecutive equal letters form absorb
// spans, and a commute factor must not contain c at all.
template <typename Emit>
static void scan_redexes_at(const OrientedGraph& g, const VertexOrder& order,
                            std::span<const int> w, std::size_t end,
                            Emit&& emit) {
  const int c = w[end];
  const IndexSet& into_c = g.in_mask(c);
  const IndexSet& from_c = g.out_mask(c);
  bool can_absorb_right = true;  // no x -> c among the in-between letters
  bool can_absorb_left = true;   // no c -> x among the in-between letters
  bool can_commute = true;       // c disconnected from the factor so far

  for (std::size_t i = end; i-- > 0;) {
    const int x = w[i];
    if (x == c) {
      if (can_absorb_right &&
          !emit(RedexKind::AbsorbRight, i))
        return;
      if (can_absorb_left && !emit(RedexKind::AbsorbLeft, i)) return;
      return;  // deeper factors would contain c strictly inside
    }
    if (into_c.contains(x)) {
      can_absorb_right = false;
      can_commute = false;
    }
    if (from_c.contains(x)) {
      can_absorb_left = false;
      can_commute = false;
    }
    if (can_commute && order.less(c, x)) {
      if (!emit(RedexKind::Commute, i)) return;
    }
    if (!can_absorb_right && !can_absorb_left && !can_commute) return;
  }
}

bool extension_is_normal(const OrientedGraph& g, const VertexOrder& order,
                         std::span<const int> prefix, int letter) {
  // Scan over the virtual word prefix + letter.
  const int c = letter;
  const IndexSet& into_c = g.in_mask(c);
  const IndexSet& from_c = g.out_mask(c);
  bool can_absorb_right = true;
  bool can_absorb_left = true;
  bool can_commute = true;

  for (std::size_t i = prefix.size(); i-- > 0;) {
    const int x = prefix[i];
    if (x == c) return !can_absorb_right && !can_absorb_left;
    if (into_c.contains(x)) {
      can_absorb_right = false;
      can_commute = false;
    }
    if (from_c.contains(x)) {
      can_absorb_left = false;
      can_commute = false;
    }
    if (can_commute && order.less(c, x)) return false;
    if (!can_absorb_right && !can_absorb_left && !can_commute) return true;
  }
  return true;
}

std::vector<ReductionMatch> find_redexes(const OrientedGraph& g,
                                         const VertexOrder& order,
                                         const Word& w) {
  check_word(g, w);
  std::vector<ReductionMatch> matches;
  for (std::size_t end = 0; end < w.size(); ++end) {
    scan_redexes_at(g, order, w, end,
                    [&](RedexKind kind, std::size_t begin) {
                      ReductionMatch m;
                      m.kind = kind;
                      m.begin = begin;
                      m.end = end + 1;
                      switch (kind) {
                        case RedexKind::AbsorbRight:  // t w t -> t w
                          m.replacement.assign(w.begin() + begin,
                                               w.begin() + end);
                          break;
                        case RedexKind::AbsorbLeft:  // t w t -> w t
                          m.replacement.assign(w.begin() + begin + 1,
                                               w.begin() + end + 1);
                          break;
                        case RedexKind::Commute:  // t1 v t2 -> t2 t1 v
                          m.replacement.push_back(w[end]);
                          m.replacement.insert(m.replacement.end(),
                                               w.begin() + begin,
                                               w.begin() + end);
                          break;
                      }
                      matches.push_back(std::move(m));
                      return true;
                    });
  }
  std::sort(matches.begin(), matches.end(),
            [](const ReductionMatch& a, const ReductionMatch& b) {
              if (a.begin != b.begin) return a.begin < b.begin;
              if (a.end - a.begin != b.end - b.begin)
                return a.end - a.begin < b.end - b.begin;
              return static_cast<int>(a.kind) < static_cast<int>(b.kind);
            });
  return matches;
}

bool is_normal(const OrientedGraph& g, const VertexOrder& order,
               const Word& w) {
  check_word(g, w);
  std::span<const int> letters(w);
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!extension_is_normal(g, order, letters.first(j), w[j])) return false;
  }
  return true;
}

NormalFormResult normal_form(const OrientedGraph& g, const VertexOrder& order,
                             Word w, RewriteStrategy strategy,
                             std::size_t step_budget) {
  check_word(g, w);
  if (step_budget == 0) step_budget = 10 * w.size() * w.size() + 100;
  std::mt19937_64 rng(strategy.seed);

  NormalFormResult result;
  result.steps = 0;
  while (true) {
    auto matches = find_redexes(g, order, w);
    if (matches.empty()) break;
    if (result.steps >= step_budget)
      throw BudgetError("rewrite step budget exceeded; this indicates a bug");
    const ReductionMatch& m =
        strategy.kind == RewriteStrategy::Kind::Leftmost
            ? matches.front()
            : matches[rng() % matches.size()];
    Word next;
    next.reserve(w.size());
    next.insert(next.end(), w.begin(), w.begin() + m.begin);
    next.insert(next.end(), m.replacement.begin(), m.replacement.end());
    next.insert(next.end(), w.begin() + m.end, w.end());
    w = std::move(next);
    ++result.steps;
  }
  result.normal = std::move(w);
  return result;
}

Word cycle_period_word(const SimpleCycle& cycle, int offset) {
  const int n = cycle.length();
  if (offset < 0 || offset > n - 2)
    throw Error("period offset " + std::to_string(offset) +
                " out of range for a cycle of length " + std::to_string(n));
  // x_N (x_1 ... x_offset) (x_{N-1} ... x_{offset+1}) in the stored rotation.
  Word w;
  w.reserve(n);
  w.push_back(cycle.vertices[n - 1]);
  for (int p = 1; p <= offset; ++p) w.push_back(cycle.vertices[p - 1]);
  for (int p = n - 1; p >= offset + 1; --p) w.push_back(cycle.vertices[p - 1]);
  return w;
}

PeriodicSupportResult periodic_support_check(const OrientedGraph& g,
                                             const std::vector<SimpleCycle>& cycles,
                                             const VertexOrder& order,
                                             const Word& w, int max_power) {
  if (w.empty()) throw Error("periodic support check needs a non-empty word");
  check_word(g, w);

  Word power;
  for (int m = 1; m <= max_power; ++m) {
    power.insert(power.end(), w.begin(), w.end());
    if (!is_normal(g, order, power))
      return {PeriodicSupportResult::Kind::NotPeriodicNormal, -1};
  }

  auto supp = support(g, w);
  for (const auto& cycle : cycles) {
    IndexSet cycle_set(g.vertex_count());
    for (int v : cycle.vertices) cycle_set.add(v);
    if (!(supp == cycle_set)) continue;

    const int n = cycle.length();
    const int reps = static_cast<int>((w.size() + n - 1) / n) + 1;
    for (int offset = 0; offset <= n - 2; ++offset) {
      Word period = cycle_period_word(cycle, offset);
      Word repeated;
      repeated.reserve(period.size() * reps);
      for (int r = 0; r < reps; ++r)
        repeated.insert(repeated.end(), period.begin(), period.end());
      if (std::search(repeated.begin(), repeated.end(), w.begin(), w.end()) !=
          repeated.end()) {
        return {PeriodicSupportResult::Kind::ConfirmedFactor, offset};
      }
    }
    return {PeriodicSupportResult::Kind::Violation, -1};
  }
  return {PeriodicSupportResult::Kind::Violation, -1};
}

}  // namespace hkdim
