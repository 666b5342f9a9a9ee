#include "hkdim/growth.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "hkdim/errors.hpp"
#include "hkdim/rewrite.hpp"
#include "hkdim/structure.hpp"

namespace hkdim {

namespace {

// Depth-first walk over normal words, extending normal prefixes only.
// `counter` is shared between shards; when it crosses the budget every
// shard stops and the run is flagged truncated.
struct Walker {
  const OrientedGraph& g;
  const VertexOrder& order;
  int max_len;
  long long budget;
  std::atomic<long long>& counter;
  std::vector<long long> density;
  std::vector<int> word;
  bool truncated = false;

  Walker(const OrientedGraph& graph, const VertexOrder& ord, int len,
         long long total_budget, std::atomic<long long>& shared)
      : g(graph),
        order(ord),
        max_len(len),
        budget(total_budget),
        counter(shared),
        density(len + 1, 0) {}

  // Counts the current word and recurses; returns false once the budget is
  // exhausted.
  bool walk() {
    if (counter.fetch_add(1, std::memory_order_relaxed) >= budget) {
      truncated = true;
      return false;
    }
    ++density[word.size()];
    if (static_cast<int>(word.size()) == max_len) return true;
    for (int c = 0; c < g.vertex_count(); ++c) {
      if (!extension_is_normal(g, order, word, c)) continue;
      word.push_back(c);
      bool ok = walk();
      word.pop_back();
      if (!ok) return false;
    }
    return true;
  }
};

GrowthSeries assemble(std::vector<long long> density, int max_len,
                      bool truncated) {
  GrowthSeries series;
  series.density = std::move(density);
  series.max_len = max_len;
  series.truncated = truncated;
  series.cumulative.resize(series.density.size());
  long long running = 0;
  for (std::size_t n = 0; n < series.density.size(); ++n) {
    running += series.density[n];
    series.cumulative[n] = running;
  }
  return series;
}

}  // namespace

GrowthSeries enumerate_normal_words(const OrientedGraph& g,
                                    const VertexOrder& order, int max_len,
                                    const EnumerationOptions& options) {
  if (max_len < 0) throw Error("max_len must be non-negative");
  const int n = g.vertex_count();
  std::atomic<long long> counter{0};

  if (options.jobs <= 1 || max_len == 0 || n == 0) {
    Walker walker(g, order, max_len, options.budget, counter);
    walker.walk();
    return assemble(std::move(walker.density), max_len, walker.truncated);
  }

  // Shard by first letter: every single-letter word is normal, and each
  // shard owns the subtree below one of them. Counts merge by summation,
  // so an untruncated sharded run is identical to the sequential one.
  std::vector<Walker> walkers;
  walkers.reserve(n);
  for (int c = 0; c < n; ++c) {
    walkers.emplace_back(g, order, max_len, options.budget, counter);
    walkers.back().word.push_back(c);
  }
  counter.fetch_add(1);  // the identity, counted below

  std::atomic<int> next{0};
  auto run = [&] {
    while (true) {
      int mine = next.fetch_add(1);
      if (mine >= n) break;
      walkers[mine].walk();
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::min(options.jobs, n);
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();

  std::vector<long long> density(max_len + 1, 0);
  density[0] = 1;
  bool truncated = false;
  for (const auto& w : walkers) {
    truncated = truncated || w.truncated;
    for (std::size_t i = 0; i < density.size(); ++i) density[i] += w.density[i];
  }
  return assemble(std::move(density), max_len, truncated);
}

bool visit_normal_words(const OrientedGraph& g, const VertexOrder& order,
                        int max_len, long long budget,
                        const std::function<bool(std::span<const int>)>& visit) {
  if (max_len < 0) throw Error("max_len must be non-negative");
  long long used = 0;
  std::vector<int> word;
  // Iterative DFS mirroring Walker, with the visitor in the loop.
  std::function<bool()> walk = [&]() -> bool {
    if (used >= budget) return false;
    ++used;
    if (!visit(word)) return false;
    if (static_cast<int>(word.size()) == max_len) return true;
    for (int c = 0; c < g.vertex_count(); ++c) {
      if (!extension_is_normal(g, order, word, c)) continue;
      word.push_back(c);
      bool ok = walk();
      word.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return walk();
}

DegreeEstimate estimate_degree(const GrowthSeries& series) {
  if (series.truncated)
    throw Error("cannot estimate a degree from a budget-truncated series");
  if (series.max_len < 12)
    throw Error("series too short for a degree estimate (need max_len >= 12)");

  DegreeEstimate est;
  est.window_begin = std::max(series.max_len / 2, 1);
  est.window_end = series.max_len;

  // Eventually constant growth: the monoid ran out of new normal words.
  bool constant = true;
  for (int n = est.window_begin + 1; n <= est.window_end; ++n) {
    if (series.density[n] != 0) {
      constant = false;
      break;
    }
  }
  if (constant) {
    est.estimate = 0.0;
    est.rounded = 0;
    est.residual = 0.0;
    return est;
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int points = est.window_end - est.window_begin + 1;
  for (int n = est.window_begin; n <= est.window_end; ++n) {
    double x = std::log(static_cast<double>(n));
    double y = std::log(static_cast<double>(series.cumulative[n]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = points * sxx - sx * sx;
  est.estimate = (points * sxy - sx * sy) / denom;
  const double intercept = (sy - est.estimate * sx) / points;

  double sq = 0;
  for (int n = est.window_begin; n <= est.window_end; ++n) {
    double x = std::log(static_cast<double>(n));
    double y = std::log(static_cast<double>(series.cumulative[n]));
    double d = y - (intercept + est.estimate * x);
    sq += d * d;
  }
  est.residual = std::sqrt(sq / points);
  est.rounded = static_cast<int>(std::llround(est.estimate));
  return est;
}

CrossValidation cross_validate(const OrientedGraph& g, int max_len,
                               const CrossValidateOptions& options) {
  CrossValidation cv;
  cv.formula = gk_dimension(g);
  if (!cv.formula.finite)
    throw Error("cross-validation needs a finite dimension");
  const long long d = *cv.formula.gk;
  if (d > options.guard && !options.force)
    throw Error("formula value " + std::to_string(d) +
                " exceeds the enumeration guard (" +
                std::to_string(options.guard) + "); pass force to override");

  auto cs = analyze_cycle_structure(g);
  auto order = build_order(g, cs);
  cv.series = enumerate_normal_words(
      g, order, max_len, EnumerationOptions{options.budget, options.jobs});
  cv.empirical = estimate_degree(cv.series);
  cv.agree = cv.empirical.rounded == d &&
             std::abs(cv.empirical.estimate - static_cast<double>(d)) <=
                 options.tolerance;
  return cv;
}

}  // namespace hkdim
