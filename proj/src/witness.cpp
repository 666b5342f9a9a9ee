#include "hkdim/witness.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "hkdim/errors.hpp"
#include "hkdim/gk.hpp"
#include "hkdim/rewrite.hpp"

namespace hkdim {

Word cycle_word(const SimpleCycle& cycle) { return cycle.vertices; }

Word build_backbone_word(const OrientedGraph& g, const CycleStructure& cs,
                         const VertexOrder& order) {
  std::vector<int> inner;
  for (int v : cs.cycle_reachable) {
    if (!cs.is_cycle_vertex(v)) inner.push_back(v);
  }
  if (inner.empty()) return {};

  std::sort(inner.begin(), inner.end(),
            [&](int a, int b) { return order.less(a, b); });

  // Terminal vertices (path count 1) are the largest block of the order;
  // the seed word is their ascending product.
  Word word;
  std::vector<int> rest;
  for (int v : inner) {
    if (cs.counts.path_count[v] == 1) {
      word.push_back(v);
    } else {
      rest.push_back(v);
    }
  }
  if (word.empty())
    throw InternalError("cycle-reachable subgraph without terminal vertices");

  // Insert every remaining vertex, largest first. At insertion time the
  // counted neighbours of y (out-neighbours for FromCycles, in-neighbours
  // for ToCycles) all carry smaller path counts, hence are bigger in the
  // order and already placed; y goes at the front and after each of their
  // occurrences, which makes y occur exactly k_y times.
  for (auto it = rest.rbegin(); it != rest.rend(); ++it) {
    const int y = *it;
    const auto& counted = cs.counts.direction[y] == DirectionClass::FromCycles
                              ? g.out_mask(y)
                              : g.in_mask(y);
    Word next;
    next.reserve(word.size() + 1);
    next.push_back(y);
    for (int z : word) {
      next.push_back(z);
      if (counted.contains(z)) next.push_back(y);
    }
    word = std::move(next);
  }

  for (int v : inner) {
    if (count_occurrences(word, v) != cs.counts.path_count[v])
      throw InternalError("backbone multiplicity mismatch at '" + g.name(v) +
                          "'");
  }
  return word;
}

namespace {

struct Token {
  bool star = false;
  Word word;  // the block word for stars, literal letters otherwise
};

// Smallest 1-based cycle position joined by an arc with z.
int attachment_position(const OrientedGraph& g, const SimpleCycle& cycle,
                        int z) {
  for (int p = 0; p < cycle.length(); ++p) {
    int x = cycle.vertices[p];
    if (g.has_arc(z, x) || g.has_arc(x, z)) return p + 1;
  }
  throw InternalError("vertex '" + g.name(z) +
                      "' is not adjacent to the cycle it split on");
}

}  // namespace

StarExpression build_star_expression(const OrientedGraph& g,
                                     const CycleStructure& cs,
                                     const VertexOrder& order) {
  if (cs.cycles.empty())
    throw Error("graph has no cycle; the star expression is undefined");

  std::vector<Token> tokens;
  for (int letter : build_backbone_word(g, cs, order)) {
    tokens.push_back(Token{false, Word{letter}});
  }

  // Process cycles from the one with the biggest vertices down. Each round
  // splits the expression at every occurrence of a vertex adjacent to the
  // cycle and interleaves repeated cycle blocks with split literals.
  for (int j = static_cast<int>(cs.cycles.size()) - 1; j >= 0; --j) {
    const SimpleCycle& cycle = cs.cycles[j];
    const Word block = cycle_word(cycle);
    IndexSet adjacent(g.vertex_count());
    long long expected_segments = 0;
    for (int v : cs.adjacency[j]) {
      adjacent.add(v);
      expected_segments += cs.counts.path_count[v];
    }

    // Minimal-length segments, each ending at an occurrence of an adjacent
    // vertex; the unsplit tail stays in `current`.
    std::vector<std::vector<Token>> segments;
    std::vector<int> segment_anchor;  // the adjacent vertex closing each one
    std::vector<Token> current;
    for (auto& token : tokens) {
      bool closes = !token.star && token.word.size() == 1 &&
                    adjacent.contains(token.word[0]);
      current.push_back(std::move(token));
      if (closes) {
        segment_anchor.push_back(current.back().word[0]);
        segments.push_back(std::move(current));
        current.clear();
      }
    }
    if (static_cast<long long>(segments.size()) != expected_segments)
      throw InternalError("segment count does not match adjacency counts");

    std::vector<Token> next;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      const int pos = attachment_position(g, cycle, segment_anchor[i]);
      next.push_back(Token{true, block});
      if (pos > 1) {
        Word prefix(cycle.vertices.begin(), cycle.vertices.begin() + pos - 1);
        next.push_back(Token{false, std::move(prefix)});
      }
      for (auto& t : segments[i]) next.push_back(std::move(t));
      Word suffix(cycle.vertices.begin() + pos - 1, cycle.vertices.end());
      next.push_back(Token{false, std::move(suffix)});
    }
    next.push_back(Token{true, block});
    for (auto& t : current) next.push_back(std::move(t));
    tokens = std::move(next);
  }

  StarExpression expr;
  Word literal;
  for (auto& token : tokens) {
    if (token.star) {
      expr.literals.push_back(std::move(literal));
      literal.clear();
      expr.blocks.push_back(std::move(token.word));
    } else {
      literal.insert(literal.end(), token.word.begin(), token.word.end());
    }
  }
  expr.literals.push_back(std::move(literal));

  long long expected_stars = 0;
  for (std::size_t j = 0; j < cs.cycles.size(); ++j) {
    long long sum = 0;
    for (int v : cs.adjacency[j]) sum += cs.counts.path_count[v];
    expected_stars += sum + 1;
  }
  if (expr.star_count() != expected_stars)
    throw InternalError("star count does not match the dimension formula");
  return expr;
}

Word instantiate(const StarExpression& expr, std::span<const int> exponents) {
  if (static_cast<int>(exponents.size()) != expr.star_count())
    throw Error("expected " + std::to_string(expr.star_count()) +
                " exponents, got " + std::to_string(exponents.size()));
  for (int e : exponents) {
    if (e < 1) throw Error("exponents must be positive");
  }
  Word out = expr.literals[0];
  for (std::size_t i = 0; i < expr.blocks.size(); ++i) {
    for (int r = 0; r < exponents[i]; ++r) {
      out.insert(out.end(), expr.blocks[i].begin(), expr.blocks[i].end());
    }
    out.insert(out.end(), expr.literals[i + 1].begin(),
               expr.literals[i + 1].end());
  }
  return out;
}

std::string format_star_expression(const OrientedGraph& g,
                                   const StarExpression& expr) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const std::string& piece) {
    if (!first) out << ' ';
    out << piece;
    first = false;
  };
  for (std::size_t i = 0; i <= expr.blocks.size(); ++i) {
    if (!expr.literals[i].empty()) emit(format_word(g, expr.literals[i]));
    if (i < expr.blocks.size())
      emit("( " + format_word(g, expr.blocks[i]) + " )+");
  }
  return out.str();
}

WitnessReport verify_witness(const OrientedGraph& g, const StarExpression& expr,
                             const WitnessOptions& options) {
  WitnessReport report;
  report.star_count = expr.star_count();

  auto formula = gk_dimension(g);
  if (!formula.finite || !formula.gk)
    throw Error("witness verification needs a finite dimension");
  report.formula_value = *formula.gk;

  auto cs = analyze_cycle_structure(g);
  auto order = build_order(g, cs);

  // Exponent grid {1..E}^s, randomly subsampled above the cap.
  const int s = expr.star_count();
  const int e_max = options.grid_max;
  double total = 1;
  for (int i = 0; i < s; ++i) total *= e_max;

  std::vector<std::vector<int>> grid;
  if (total <= static_cast<double>(options.sample_cap)) {
    std::vector<int> point(s, 1);
    while (true) {
      grid.push_back(point);
      int i = 0;
      while (i < s && point[i] == e_max) point[i++] = 1;
      if (i == s) break;
      ++point[i];
    }
  } else {
    std::mt19937_64 rng(options.seed);
    std::set<std::vector<int>> seen;
    while (seen.size() < options.sample_cap) {
      std::vector<int> point(s);
      for (int i = 0; i < s; ++i)
        point[i] = 1 + static_cast<int>(rng() % e_max);
      seen.insert(std::move(point));
    }
    grid.assign(seen.begin(), seen.end());
  }

  report.all_normal = true;
  report.all_distinct = true;
  std::set<Word> produced;
  for (const auto& point : grid) {
    Word w = instantiate(expr, point);
    ++report.samples_checked;
    if (!is_normal(g, order, w)) {
      report.all_normal = false;
      report.counterexample = std::move(w);
      break;
    }
    if (!produced.insert(w).second) {
      report.all_distinct = false;
      report.counterexample = std::move(w);
      break;
    }
  }
  return report;
}

}  // namespace hkdim
