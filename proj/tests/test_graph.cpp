#include <algorithm>

#include "doctest.h"

#include "hkdim/corpus.hpp"
#include "hkdim/cycles.hpp"
#include "hkdim/errors.hpp"
#include "hkdim/gk.hpp"
#include "hkdim/graph.hpp"
#include "hkdim/json_io.hpp"
#include "hkdim/structure.hpp"
#include "fixture.hpp"
#include "oracles.hpp"

using namespace hkdim;

namespace {

OrientedGraph triangle() {
  return OrientedGraph::parse("vertices: a b c\nedges: a->b b->c c->a\n");
}

std::vector<std::string> names_of(const OrientedGraph& g,
                                  const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int v : ids) out.push_back(g.name(v));
  return out;
}

int line_of(const char* text) {
  try {
    OrientedGraph::parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("parse: vertices and arcs in declaration order") {
  auto g = OrientedGraph::parse("vertices: a b\nedges: a->b\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.arc_count() == 1);
  CHECK(g.name(0) == "a");
  CHECK(g.name(1) == "b");
  CHECK(g.has_arc(0, 1));
  CHECK_FALSE(g.has_arc(1, 0));
}

TEST_CASE("parse: comments, blank lines, several edges lines") {
  auto g = OrientedGraph::parse(
      "# header\n\nvertices: a b c\n# middle\nedges: a->b\nedges: b->c\n");
  CHECK(g.arc_count() == 2);
}

TEST_CASE("parse: rejects invalid input with line numbers") {
  CHECK(line_of("vertices: a\nedges: a->a\n") == 2);            // self-loop
  CHECK(line_of("vertices: a b\nedges: a->b\nedges: b->a\n") == 3);  // 2-cycle
  CHECK(line_of("vertices: a b\nedges: a->b a->b\n") == 2);     // duplicate
  CHECK(line_of("vertices: a\nedges: a->z\n") == 2);            // undeclared
  CHECK(line_of("vertices: a\nwhat is this\n") == 2);           // syntax
  CHECK(line_of("vertices: a a\n") == 1);                       // dup vertex
  CHECK(line_of("edges: a->b\nvertices: a b\n") == 1);          // order
  CHECK_THROWS_AS(OrientedGraph::parse("# nothing\n"), ParseError);
}

TEST_CASE("parse: golden fixture has 12 vertices and 13 arcs") {
  auto g = fixtures::load_golden();
  CHECK(g.vertex_count() == 12);
  CHECK(g.arc_count() == 13);
}

TEST_CASE("to_text round-trips through parse") {
  auto g = fixtures::load_golden();
  auto h = OrientedGraph::parse(g.to_text());
  CHECK(h.names() == g.names());
  CHECK(h.arcs() == g.arcs());
}

TEST_CASE("simple_cycles: triangle, DAG, golden graph") {
  auto cycles = simple_cycles(triangle());
  REQUIRE(cycles.size() == 1);
  CHECK(names_of(triangle(), cycles[0].vertices) ==
        std::vector<std::string>{"a", "b", "c"});

  CHECK(simple_cycles(fixtures::load("dag.graph")).empty());

  auto g = fixtures::load_golden();
  auto two = simple_cycles(g);
  REQUIRE(two.size() == 2);
  CHECK(two[0].length() == 3);
  CHECK(two[1].length() == 3);
  CHECK(names_of(g, two[0].vertices) ==
        std::vector<std::string>{"x11", "x21", "x31"});
  CHECK(names_of(g, two[1].vertices) ==
        std::vector<std::string>{"x12", "x22", "x32"});
}

TEST_CASE("simple_cycles: canonical rotation starts at the least name") {
  auto g = OrientedGraph::parse("vertices: m z a\nedges: m->z z->a a->m\n");
  auto cycles = simple_cycles(g);
  REQUIRE(cycles.size() == 1);
  CHECK(names_of(g, cycles[0].vertices) ==
        std::vector<std::string>{"a", "m", "z"});
}

TEST_CASE("simple_cycles: overlapping cycles are each reported once") {
  auto g = OrientedGraph::parse(
      "vertices: a b c d\nedges: a->b b->c c->a b->d d->a\n");
  auto cycles = simple_cycles(g);
  CHECK(cycles.size() == 2);
  CHECK_THROWS_AS(simple_cycles(g, 1), BudgetError);
}

TEST_CASE("finiteness: disjoint triangles are finite") {
  auto g = OrientedGraph::parse(
      "vertices: a b c d e f\nedges: a->b b->c c->a d->e e->f f->d\n");
  auto fin = finiteness_check(g);
  CHECK(fin.finite);
  CHECK(fin.cycles.size() == 2);
}

TEST_CASE("finiteness: a single connecting arc is the witness") {
  auto g = fixtures::load("two_triangles_joined.graph");
  auto fin = finiteness_check(g);
  REQUIRE_FALSE(fin.finite);
  REQUIRE(fin.witness.has_value());
  CHECK(names_of(g, fin.witness->path) == std::vector<std::string>{"c", "d"});
}

TEST_CASE("finiteness: cycles sharing vertices give a length-0 witness") {
  auto g = OrientedGraph::parse(
      "vertices: a b c d\nedges: a->b b->c c->a b->d d->a\n");
  auto fin = finiteness_check(g);
  REQUIRE_FALSE(fin.finite);
  REQUIRE(fin.witness.has_value());
  CHECK(fin.witness->path.size() == 1);  // a shared vertex
}

TEST_CASE("finiteness: golden graph is finite") {
  CHECK(finiteness_check(fixtures::load_golden()).finite);
}

TEST_CASE("infinite witnesses are concrete: real cycles, a real path") {
  std::mt19937_64 rng(424242);
  int seen = 0;
  for (int trial = 0; trial < 200 && seen < 10; ++trial) {
    auto g = oracle::random_small_graph(rng, 6);
    auto fin = finiteness_check(g);
    if (fin.finite) continue;
    ++seen;
    REQUIRE(fin.witness.has_value());
    const auto& w = *fin.witness;
    CAPTURE(g.to_text());
    auto check_cycle = [&](const SimpleCycle& c) {
      REQUIRE(c.length() >= 3);
      for (int i = 0; i < c.length(); ++i) {
        CHECK(g.has_arc(c.vertices[i], c.vertices[(i + 1) % c.length()]));
      }
    };
    check_cycle(w.cycle_a);
    check_cycle(w.cycle_b);
    CHECK_FALSE(w.cycle_a == w.cycle_b);
    REQUIRE_FALSE(w.path.empty());
    for (std::size_t i = 0; i + 1 < w.path.size(); ++i) {
      CHECK(g.has_arc(w.path[i], w.path[i + 1]));
    }
    auto on = [](const SimpleCycle& c, int v) {
      return std::find(c.vertices.begin(), c.vertices.end(), v) !=
             c.vertices.end();
    };
    CHECK(on(w.cycle_a, w.path.front()));
    CHECK(on(w.cycle_b, w.path.back()));
  }
  CHECK(seen == 10);
}

TEST_CASE("finiteness agrees with the exhaustive two-cycle search") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    auto g = oracle::random_small_graph(rng, 6);
    CAPTURE(g.to_text());
    CHECK(finiteness_check(g).finite == !oracle::has_two_connected_cycles(g));
  }
}

TEST_CASE("finiteness cycles equal the enumerated cycles on finite graphs") {
  CorpusSpec spec;
  spec.seed = 7;
  spec.count = 20;
  for (const auto& entry : generate_corpus(spec)) {
    auto fin = finiteness_check(entry.graph);
    REQUIRE(fin.finite);
    auto enumerated = simple_cycles(entry.graph);
    CHECK(fin.cycles == enumerated);
    // On finite graphs the cycles are pairwise vertex-disjoint.
    std::vector<char> used(entry.graph.vertex_count(), 0);
    for (const auto& cycle : enumerated) {
      for (int v : cycle.vertices) {
        CHECK_FALSE(used[v]);
        used[v] = 1;
      }
    }
  }
}

TEST_CASE("cycle-reachable subgraph: golden graph excludes only y6") {
  auto g = fixtures::load_golden();
  auto reachable = cycle_reachable_subgraph(g, simple_cycles(g));
  CHECK(reachable.size() == 11);
  auto names = names_of(g, reachable);
  CHECK(std::find(names.begin(), names.end(), "y6") == names.end());
}

TEST_CASE("cycle-reachable subgraph: isolated vertices stay out") {
  auto g = OrientedGraph::parse("vertices: a b c z\nedges: a->b b->c c->a\n");
  auto reachable = cycle_reachable_subgraph(g, simple_cycles(g));
  CHECK(names_of(g, reachable) == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("cycle-reachable subgraph: pendant sink is included") {
  auto g =
      OrientedGraph::parse("vertices: a b c y\nedges: a->b b->c c->a a->y\n");
  auto reachable = cycle_reachable_subgraph(g, simple_cycles(g));
  CHECK(reachable.size() == 4);
}

TEST_CASE("classify_and_count: golden graph path counts") {
  auto g = fixtures::load_golden();
  auto cs = analyze_cycle_structure(g);
  CHECK(cs.counts.path_count[g.index("y1")] == 3);
  CHECK(cs.counts.path_count[g.index("y2")] == 1);
  CHECK(cs.counts.path_count[g.index("y3")] == 1);
  CHECK(cs.counts.path_count[g.index("y4")] == 1);
  CHECK(cs.counts.path_count[g.index("y5")] == 1);
  CHECK(cs.counts.direction[g.index("y1")] == DirectionClass::FromCycles);
  CHECK(cs.counts.direction[g.index("y5")] == DirectionClass::ToCycles);
  CHECK_FALSE(cs.counts.direction[g.index("y6")].has_value());
  CHECK_FALSE(cs.counts.direction[g.index("x11")].has_value());
}

TEST_CASE("classify_and_count: sink below a cycle counts one path") {
  auto g =
      OrientedGraph::parse("vertices: a b c y\nedges: a->b b->c c->a a->y\n");
  auto cs = analyze_cycle_structure(g);
  CHECK(cs.counts.path_count[g.index("y")] == 1);
}

TEST_CASE("classify_and_count: refuses vertices with paths both ways") {
  // x sits on a path from one cycle into another; callers must run the
  // finiteness check first, and this guard catches them if they do not.
  auto g = OrientedGraph::parse(
      "vertices: a b c x d e f\n"
      "edges: a->b b->c c->a a->x x->d d->e e->f f->d\n");
  REQUIRE_FALSE(finiteness_check(g).finite);
  auto cycles = simple_cycles(g);
  auto reachable = cycle_reachable_subgraph(g, cycles);
  CHECK_THROWS_AS(classify_and_count(g, cycles, reachable), InternalError);
}

TEST_CASE("classify_and_count: chain below a cycle") {
  auto g = OrientedGraph::parse(
      "vertices: a b c y1 y2\nedges: a->b b->c c->a a->y1 y1->y2\n");
  auto cs = analyze_cycle_structure(g);
  CHECK(cs.counts.path_count[g.index("y1")] == 2);
  CHECK(cs.counts.path_count[g.index("y2")] == 1);
}

TEST_CASE("path counts match exhaustive simple-path enumeration") {
  CorpusSpec spec;
  spec.seed = 11;
  spec.count = 25;
  spec.vertex_range = {3, 12};
  for (const auto& entry : generate_corpus(spec)) {
    const auto& g = entry.graph;
    auto cs = analyze_cycle_structure(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!cs.counts.direction[v]) continue;
      CAPTURE(g.to_text());
      CAPTURE(g.name(v));
      const long long expected =
          cs.counts.direction[v] == DirectionClass::FromCycles
              ? oracle::count_paths_from(g, v)
              : oracle::count_paths_to(g, v);
      CHECK(cs.counts.path_count[v] == expected);

      // DP self-consistency: k_x = 1 + sum over counted neighbours.
      long long sum = 1;
      const auto& nbrs = cs.counts.direction[v] == DirectionClass::FromCycles
                             ? g.out(v)
                             : g.in(v);
      for (int z : nbrs) sum += cs.counts.path_count[z];
      CHECK(cs.counts.path_count[v] == sum);
    }
  }
}

TEST_CASE("adjacency_to_cycles: golden graph sets") {
  auto g = fixtures::load_golden();
  auto adjacency = adjacency_to_cycles(g, simple_cycles(g));
  REQUIRE(adjacency.size() == 2);
  CHECK(names_of(g, adjacency[0]) == std::vector<std::string>{"y1", "y4"});
  CHECK(names_of(g, adjacency[1]) == std::vector<std::string>{"y4", "y5"});
}

TEST_CASE("adjacency_to_cycles: lone cycle has an empty set") {
  auto g = triangle();
  auto adjacency = adjacency_to_cycles(g, simple_cycles(g));
  REQUIRE(adjacency.size() == 1);
  CHECK(adjacency[0].empty());
}

TEST_CASE("adjacency_to_cycles: pendant sink is adjacent") {
  auto g =
      OrientedGraph::parse("vertices: a b c y\nedges: a->b b->c c->a a->y\n");
  auto adjacency = adjacency_to_cycles(g, simple_cycles(g));
  CHECK(names_of(g, adjacency[0]) == std::vector<std::string>{"y"});
}

TEST_CASE("build_order: golden graph full ranking") {
  auto g = fixtures::load_golden();
  auto cs = analyze_cycle_structure(g);
  auto order = build_order(g, cs);
  const std::vector<std::string> expected{"x11", "x21", "x31", "x12",
                                          "x22", "x32", "y1",  "y2",
                                          "y3",  "y4",  "y5",  "y6"};
  for (std::size_t i = 0; i + 1 < expected.size(); ++i) {
    CAPTURE(expected[i]);
    CHECK(order.less(g.index(expected[i]), g.index(expected[i + 1])));
  }
}

TEST_CASE("build_order: alternates still satisfy the order invariants") {
  CorpusSpec spec;
  spec.seed = 3;
  spec.count = 10;
  for (const auto& entry : generate_corpus(spec)) {
    const auto& g = entry.graph;
    auto cs = analyze_cycle_structure(g);
    for (OrderOptions options :
         {OrderOptions{}, OrderOptions{true, false}, OrderOptions{false, true}}) {
      auto order = build_order(g, cs, options);
      // cycle vertices below everything else, in consistent blocks
      for (int v = 0; v < g.vertex_count(); ++v) {
        for (int w = 0; w < g.vertex_count(); ++w) {
          if (cs.is_cycle_vertex(v) && !cs.is_cycle_vertex(w))
            CHECK(order.less(v, w));
          if (cs.in_cycle_reachable[v] && !cs.in_cycle_reachable[w])
            CHECK(order.less(v, w));
          if (!cs.is_cycle_vertex(v) && !cs.is_cycle_vertex(w) &&
              cs.in_cycle_reachable[v] && cs.in_cycle_reachable[w] &&
              cs.counts.path_count[v] < cs.counts.path_count[w])
            CHECK(order.less(w, v));
        }
      }
      // within a cycle, the stored rotation is ascending
      for (const auto& cycle : cs.cycles) {
        for (int i = 0; i + 1 < cycle.length(); ++i)
          CHECK(order.less(cycle.vertices[i], cycle.vertices[i + 1]));
      }
    }
  }
}

TEST_CASE("gk_dimension: golden graph is 8 with summands 5 and 3") {
  auto report = gk_dimension(fixtures::load_golden());
  REQUIRE(report.finite);
  CHECK(report.gk == 8);
  REQUIRE(report.per_cycle.size() == 2);
  CHECK(report.per_cycle[0].summand == 5);
  CHECK(report.per_cycle[1].summand == 3);
}

TEST_CASE("gk_dimension: single cycles of length 3, 4, 5 give 1") {
  for (int n : {3, 4, 5}) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> arcs;
    for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
    for (int i = 0; i < n; ++i) arcs.emplace_back(names[i], names[(i + 1) % n]);
    auto report = gk_dimension(OrientedGraph::from_lists(names, arcs));
    CHECK(report.gk == 1);
  }
}

TEST_CASE("gk_dimension: acyclic graphs give 0") {
  CHECK(gk_dimension(fixtures::load("dag.graph")).gk == 0);
  CHECK(gk_dimension(fixtures::load("edge.graph")).gk == 0);
}

TEST_CASE("gk_dimension: infinite iff finiteness_check fails") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_small_graph(rng, 6);
    CHECK(gk_dimension(g).finite == finiteness_check(g).finite);
  }
}

TEST_CASE("gk_dimension is invariant under arc reversal") {
  CorpusSpec spec;
  spec.seed = 5;
  spec.count = 20;
  for (const auto& entry : generate_corpus(spec)) {
    auto forward = gk_dimension(entry.graph);
    auto backward = gk_dimension(entry.graph.reversed());
    CHECK(forward.gk == backward.gk);
  }
  auto golden = fixtures::load_golden();
  CHECK(gk_dimension(golden).gk == gk_dimension(golden.reversed()).gk);
}

TEST_CASE("GkReport JSON round-trips") {
  auto finite_report = gk_dimension(fixtures::load_golden());
  nlohmann::json j = finite_report;
  CHECK(j.at("finite") == true);
  CHECK(j.at("gk") == 8);
  CHECK(j.at("per_cycle")[0].at("A")[0].at("vertex") == "y1");
  GkReport back = j.get<GkReport>();
  CHECK(back == finite_report);

  auto infinite_report =
      gk_dimension(fixtures::load("two_triangles_joined.graph"));
  nlohmann::json ji = infinite_report;
  CHECK(ji.at("gk").is_null());
  CHECK(ji.get<GkReport>() == infinite_report);
}

TEST_CASE("corpus generation is deterministic and honors finiteness") {
  CorpusSpec spec;
  spec.seed = 42;
  spec.count = 8;
  auto first = generate_corpus(spec);
  auto second = generate_corpus(spec);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].graph.to_text() == second[i].graph.to_text());
    CHECK(first[i].finite);
  }

  spec.constraint = CorpusSpec::Constraint::Any;
  for (const auto& entry : generate_corpus(spec)) {
    CHECK(entry.finite == finiteness_check(entry.graph).finite);
  }
}
