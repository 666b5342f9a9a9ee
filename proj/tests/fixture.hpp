// Loads the 12-vertex golden fixture and pins it against its documented
// invariants before any test trusts it.

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hkdim/graph.hpp"
#include "hkdim/structure.hpp"

#ifndef HKDIM_FIXTURE_DIR
#define HKDIM_FIXTURE_DIR "tests/fixtures"
#endif

namespace fixtures {

inline std::string read(const std::string& name) {
  std::ifstream in(std::string(HKDIM_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline hkdim::OrientedGraph load(const std::string& name) {
  return hkdim::OrientedGraph::parse(read(name));
}

// The golden graph: two triangles x11->x21->x31 and x12->x22->x32 with
// attachments y1..y5 and an outside vertex y6. The loader cross-checks the
// documented path counts and adjacency sets and refuses to hand out a
// fixture that drifted.
inline hkdim::OrientedGraph load_golden() {
  auto g = load("example4.graph");
  auto cs = hkdim::analyze_cycle_structure(g);
  auto expect_k = [&](const char* name, long long k) {
    if (cs.counts.path_count[g.index(name)] != k)
      throw std::runtime_error(std::string("fixture drift: k_") + name);
  };
  expect_k("y1", 3);
  expect_k("y2", 1);
  expect_k("y3", 1);
  expect_k("y4", 1);
  expect_k("y5", 1);
  auto expect_adjacent = [&](std::size_t j, std::vector<std::string> names) {
    std::vector<int> want;
    for (const auto& n : names) want.push_back(g.index(n));
    std::sort(want.begin(), want.end());
    if (cs.adjacency.at(j) != want)
      throw std::runtime_error("fixture drift: adjacency of cycle " +
                               std::to_string(j + 1));
  };
  expect_adjacent(0, {"y1", "y4"});
  expect_adjacent(1, {"y4", "y5"});
  return g;
}

}  // namespace fixtures
