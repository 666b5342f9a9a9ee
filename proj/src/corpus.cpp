#include "hkdim/corpus.hpp"

#include <random>
#include <string>

#include "hkdim/cycles.hpp"
#include "hkdim/errors.hpp"

namespace hkdim {

namespace {

// Bounded draw built from raw engine output so corpora are identical across
// platforms (std::uniform_int_distribution is implementation-defined).
int draw(std::mt19937_64& rng, int lo, int hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

OrientedGraph random_graph(std::mt19937_64& rng, const CorpusSpec& spec) {
  const int target = draw(rng, spec.vertex_range.first, spec.vertex_range.second);
  int wanted_cycles =
      draw(rng, spec.cycle_count_range.first, spec.cycle_count_range.second);

  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> arcs;
  auto fresh = [&] {
    vertices.push_back("v" + std::to_string(vertices.size()));
    return vertices.back();
  };

  // Disjoint cycles of length 3-5, as many as the vertex budget allows.
  while (wanted_cycles-- > 0 && target - static_cast<int>(vertices.size()) >= 3) {
    const int remaining = target - static_cast<int>(vertices.size());
    const int len = draw(rng, 3, std::min(5, remaining));
    std::vector<std::string> ring;
    for (int i = 0; i < len; ++i) ring.push_back(fresh());
    for (int i = 0; i < len; ++i) arcs.emplace_back(ring[i], ring[(i + 1) % len]);
  }
  if (vertices.empty()) fresh();  // acyclic corpora start from a lone root

  // Attach tree vertices by a single arc each, direction chosen at random.
  int attachments =
      draw(rng, spec.attachment_range.first, spec.attachment_range.second);
  attachments = std::min(attachments, target - static_cast<int>(vertices.size()));
  for (int i = 0; i < attachments; ++i) {
    const std::string anchor = vertices[draw(rng, 0, vertices.size() - 1)];
    const std::string leaf = fresh();
    if (rng() & 1) {
      arcs.emplace_back(anchor, leaf);
    } else {
      arcs.emplace_back(leaf, anchor);
    }
  }

  // Occasionally sprinkle extra arcs; these can join cycles and produce
  // instances of infinite dimension.
  if (rng() % 3 == 0) {
    const int extra = draw(rng, 1, 2);
    for (int i = 0; i < extra; ++i) {
      const int a = draw(rng, 0, vertices.size() - 1);
      const int b = draw(rng, 0, vertices.size() - 1);
      if (a == b) continue;
      bool clash = false;
      for (const auto& [u, v] : arcs) {
        if ((u == vertices[a] && v == vertices[b]) ||
            (u == vertices[b] && v == vertices[a])) {
          clash = true;
          break;
        }
      }
      if (!clash) arcs.emplace_back(vertices[a], vertices[b]);
    }
  }

  return OrientedGraph::from_lists(vertices, arcs);
}

}  // namespace

std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<CorpusEntry> out;
  out.reserve(spec.count);
  constexpr int kRejectionBudget = 500;

  for (int i = 0; i < spec.count; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
      OrientedGraph g = random_graph(rng, spec);
      const bool finite = finiteness_check(g).finite;
      if (spec.constraint == CorpusSpec::Constraint::MustBeFinite && !finite)
        continue;
      out.push_back(CorpusEntry{std::move(g), finite});
      placed = true;
      break;
    }
    if (!placed)
      throw BudgetError("corpus rejection budget exceeded for seed " +
                        std::to_string(spec.seed));
  }
  return out;
}

}  // namespace hkdim
