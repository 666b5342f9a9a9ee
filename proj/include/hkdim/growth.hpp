#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hkdim/gk.hpp"
#include "hkdim/graph.hpp"
#include "hkdim/order.hpp"

namespace hkdim {

/// Exact counts of normal words by length. density[n] is the number of
/// normal words of length n (density[0] = 1 for the identity), cumulative
/// its running sum. When the word budget runs out the series is returned
/// as counted so far with `truncated` set; expect that on graphs of
/// infinite growth.
struct GrowthSeries {
  std::vector<long long> density;
  std::vector<long long> cumulative;
  int max_len = 0;
  bool truncated = false;
};

struct EnumerationOptions {
  long long budget = 10'000'000;  // total words counted
  int jobs = 1;                   // >1 shards the search by first letter
};

/// Depth-first enumeration of normal words up to max_len, extending normal
/// prefixes only; factors of normal words are normal, so the pruning is
/// lossless. Sharded runs merge per-length counts by summation and match
/// the sequential result exactly whenever the budget is not hit.
GrowthSeries enumerate_normal_words(const OrientedGraph& g,
                                    const VertexOrder& order, int max_len,
                                    const EnumerationOptions& options = {});

/// Sequential variant that calls `visit` on every normal word (including
/// the identity). Returning false from the visitor aborts the walk.
/// Returns true when the walk completed within the budget.
bool visit_normal_words(const OrientedGraph& g, const VertexOrder& order,
                        int max_len, long long budget,
                        const std::function<bool(std::span<const int>)>& visit);

struct DegreeEstimate {
  double estimate = 0.0;
  int rounded = 0;
  int window_begin = 0;
  int window_end = 0;
  double residual = 0.0;  // RMS deviation of the log-log fit
};

/// Least-squares slope of log g(n) against log n over the tail window
/// [max_len/2, max_len]; an eventually constant g estimates 0. Requires
/// max_len >= 12 and a non-truncated series.
DegreeEstimate estimate_degree(const GrowthSeries& series);

struct CrossValidateOptions {
  long long budget = 10'000'000;
  double tolerance = 0.35;
  int guard = 4;        // refuse formula values above this...
  bool force = false;   // ...unless forced
  int jobs = 1;
};

struct CrossValidation {
  GkReport formula;
  GrowthSeries series;
  DegreeEstimate empirical;
  bool agree = false;
};

/// Empirically validates the closed formula: enumerates normal words,
/// fits the growth degree, and compares. agree requires the rounded
/// estimate to equal the formula value and the raw estimate to sit within
/// the tolerance. Throws Error for graphs of infinite dimension and, to
/// keep enumeration tractable, for formula values above the guard.
CrossValidation cross_validate(const OrientedGraph& g, int max_len,
                               const CrossValidateOptions& options = {});

}  // namespace hkdim
