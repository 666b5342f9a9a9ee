#include "hkdim/gk.hpp"

#include "hkdim/cycles.hpp"
#include "hkdim/structure.hpp"

namespace hkdim {

namespace {

std::vector<std::string> names_of(const OrientedGraph& g,
                                  const std::vector<int>& vertices) {
  std::vector<std::string> out;
  out.reserve(vertices.size());
  for (int v : vertices) out.push_back(g.name(v));
  return out;
}

}  // namespace

GkReport gk_dimension(const OrientedGraph& g) {
  GkReport report;
  auto fin = finiteness_check(g);
  if (!fin.finite) {
    const auto& w = *fin.witness;
    report.finite = false;
    report.infinite_witness =
        WitnessDoc{names_of(g, w.cycle_a.vertices),
                   names_of(g, w.cycle_b.vertices), names_of(g, w.path)};
    return report;
  }

  report.finite = true;
  if (fin.cycles.empty()) {
    report.gk = 0;  // acyclic graph: the monoid is finite
    return report;
  }

  auto cs = analyze_cycle_structure(g);
  long long total = 0;
  for (std::size_t j = 0; j < cs.cycles.size(); ++j) {
    report.cycles.push_back(names_of(g, cs.cycles[j].vertices));
    CycleSummand summand;
    summand.cycle = static_cast<int>(j) + 1;
    long long sum = 0;
    for (int v : cs.adjacency[j]) {
      summand.adjacent.emplace_back(g.name(v), cs.counts.path_count[v]);
      sum += cs.counts.path_count[v];
    }
    summand.summand = sum + 1;
    total += summand.summand;
    report.per_cycle.push_back(std::move(summand));
  }
  report.gk = total;
  return report;
}

}  // namespace hkdim
