// Command-line front end: graph validation, cycle listing, the dimension
// formula, normal forms, normal-word enumeration, formula-vs-growth
// cross-checks, the lower-bound witness, and corpus generation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hkdim/corpus.hpp"
#include "hkdim/cycles.hpp"
#include "hkdim/errors.hpp"
#include "hkdim/gk.hpp"
#include "hkdim/graph.hpp"
#include "hkdim/growth.hpp"
#include "hkdim/json_io.hpp"
#include "hkdim/rewrite.hpp"
#include "hkdim/structure.hpp"
#include "hkdim/witness.hpp"
#include "hkdim/word.hpp"

namespace {

using namespace hkdim;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

OrientedGraph load_graph(const std::string& path) {
  return OrientedGraph::parse(read_file(path));
}

VertexOrder default_order(const OrientedGraph& g) {
  if (finiteness_check(g).finite)
    return build_order(g, analyze_cycle_structure(g));
  return VertexOrder::declaration_order(g.vertex_count());
}

int run_validate(const std::string& path) {
  auto g = load_graph(path);
  std::cout << "ok: " << g.vertex_count() << " vertices, " << g.arc_count()
            << " arcs\n";
  return 0;
}

int run_cycles(const std::string& path, long long budget) {
  auto g = load_graph(path);
  for (const auto& cycle : simple_cycles(g, budget)) {
    for (std::size_t i = 0; i < cycle.vertices.size(); ++i) {
      std::cout << (i ? " " : "") << g.name(cycle.vertices[i]);
    }
    std::cout << '\n';
  }
  return 0;
}

int run_gk(const std::string& path, bool as_json) {
  auto g = load_graph(path);
  auto report = gk_dimension(g);
  if (as_json) {
    std::cout << nlohmann::json(report).dump(2) << '\n';
  } else if (report.finite) {
    std::cout << *report.gk << '\n';
  } else {
    std::cout << "infinite\n";
  }
  return 0;
}

int run_nf(const std::string& path, const std::string& word_text,
           bool check_only) {
  auto g = load_graph(path);
  auto order = default_order(g);
  Word w = parse_word(g, word_text);
  if (check_only) {
    std::cout << (is_normal(g, order, w) ? "true" : "false") << '\n';
    return 0;
  }
  auto result = normal_form(g, order, std::move(w));
  std::cout << format_word(g, result.normal) << '\n';
  return 0;
}

int run_enumerate(const std::string& path, int max_len, long long budget,
                  int jobs, bool csv) {
  auto g = load_graph(path);
  auto series = enumerate_normal_words(g, default_order(g), max_len,
                                       EnumerationOptions{budget, jobs});
  if (!csv) std::cout << "n,p,g\n";
  for (int n = 0; n <= series.max_len; ++n) {
    std::cout << n << ',' << series.density[n] << ',' << series.cumulative[n]
              << '\n';
  }
  if (series.truncated) {
    std::cerr << "warning: enumeration truncated by the word budget ("
              << budget << ")\n";
  }
  return 0;
}

int run_crosscheck(const std::string& path, int max_len, long long budget,
                   double tolerance, bool force, int jobs, bool as_json) {
  auto g = load_graph(path);
  CrossValidateOptions options;
  options.budget = budget;
  options.tolerance = tolerance;
  options.force = force;
  options.jobs = jobs;
  auto cv = cross_validate(g, max_len, options);
  if (as_json) {
    std::cout << cross_validation_json(cv).dump(2) << '\n';
    return 0;
  }
  std::cout << "formula: " << *cv.formula.gk << '\n'
            << "estimate: " << cv.empirical.estimate << " (rounded "
            << cv.empirical.rounded << ", residual " << cv.empirical.residual
            << ", window " << cv.empirical.window_begin << ".."
            << cv.empirical.window_end << ")\n"
            << "agree: " << (cv.agree ? "true" : "false") << '\n';
  return 0;
}

int run_witness(const std::string& path, int grid, bool as_json) {
  auto g = load_graph(path);
  auto cs = analyze_cycle_structure(g);
  auto order = build_order(g, cs);
  auto backbone = build_backbone_word(g, cs, order);
  auto expr = build_star_expression(g, cs, order);
  WitnessOptions options;
  options.grid_max = grid;
  auto report = verify_witness(g, expr, options);

  if (as_json) {
    std::cout << witness_report_json(g, expr, backbone, report).dump(2)
              << '\n';
  } else {
    std::cout << "backbone: " << format_word(g, backbone) << '\n'
              << "expression: " << format_star_expression(g, expr) << '\n'
              << "stars: " << report.star_count << '\n'
              << "formula: " << report.formula_value << '\n'
              << "samples: " << report.samples_checked << '\n'
              << "all normal: " << (report.all_normal ? "true" : "false")
              << '\n'
              << "all distinct: " << (report.all_distinct ? "true" : "false")
              << '\n'
              << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
    if (report.counterexample) {
      std::cout << "counterexample: "
                << format_word(g, *report.counterexample) << '\n';
    }
  }
  return report.passed() ? 0 : 1;
}

int run_corpus(std::uint64_t seed, int count, bool finite_only,
               const std::string& out_dir) {
  CorpusSpec spec;
  spec.seed = seed;
  spec.count = count;
  spec.constraint = finite_only ? CorpusSpec::Constraint::MustBeFinite
                                : CorpusSpec::Constraint::Any;
  auto corpus = generate_corpus(spec);

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      std::ostringstream name;
      name << "corpus_" << seed << "_" << i << ".graph";
      std::ofstream out(std::filesystem::path(out_dir) / name.str());
      out << "# seed " << seed << " index " << i << " finite "
          << (corpus[i].finite ? "true" : "false") << '\n'
          << corpus[i].graph.to_text();
    }
    std::cout << "wrote " << corpus.size() << " graphs to " << out_dir << '\n';
    return 0;
  }

  std::cout << "# corpus seed=" << seed << " count=" << count << '\n';
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::cout << "# graph " << i << " finite="
              << (corpus[i].finite ? "true" : "false") << '\n'
              << corpus[i].graph.to_text();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth invariants of Hecke-Kiselman monoid algebras"};
  app.require_subcommand(1);

  std::string path, word_text, out_dir;
  int max_len = 40, jobs = 1, grid = 3;
  long long budget = 10'000'000, cycle_budget = 1'000'000;
  double tolerance = 0.35;
  bool as_json = false, csv = false, force = false, finite_only = false;
  std::uint64_t seed = 1;
  int count = 10;

  auto* validate = app.add_subcommand("validate", "Parse and check a graph file");
  validate->add_option("file", path)->required();

  auto* cycles = app.add_subcommand("cycles", "List all simple cycles");
  cycles->add_option("file", path)->required();
  cycles->add_option("--budget", cycle_budget, "Maximum number of cycles");

  auto* gk = app.add_subcommand("gk", "Gelfand-Kirillov dimension");
  gk->add_option("file", path)->required();
  gk->add_flag("--json", as_json, "Emit the full JSON report");

  auto* nf = app.add_subcommand("nf", "Normal form of a word");
  nf->add_option("file", path)->required();
  nf->add_option("--word", word_text, "Whitespace-separated vertex names")
      ->required();

  auto* normal = app.add_subcommand("normal", "Is the word already normal?");
  normal->add_option("file", path)->required();
  normal->add_option("--word", word_text)->required();

  auto* enumerate = app.add_subcommand("enumerate",
                                       "Count normal words by length");
  enumerate->add_option("file", path)->required();
  enumerate->add_option("--max-len", max_len)->required();
  enumerate->add_option("--budget", budget, "Total word budget");
  enumerate->add_option("--jobs", jobs, "Shard the search by first letter");
  enumerate->add_flag("--csv", csv, "Rows only, no header");

  auto* crosscheck = app.add_subcommand(
      "crosscheck", "Compare the formula with the enumerated growth degree");
  crosscheck->add_option("file", path)->required();
  crosscheck->add_option("--max-len", max_len);
  crosscheck->add_option("--budget", budget);
  crosscheck->add_option("--tolerance", tolerance);
  crosscheck->add_option("--jobs", jobs);
  crosscheck->add_flag("--force", force, "Override the formula-value guard");
  crosscheck->add_flag("--json", as_json);

  auto* witness = app.add_subcommand("witness",
                                     "Build and verify the lower-bound witness");
  witness->add_option("file", path)->required();
  witness->add_option("--grid", grid, "Exponent grid upper bound");
  witness->add_flag("--json", as_json);

  auto* corpus = app.add_subcommand("corpus", "Generate a seeded graph corpus");
  corpus->add_option("--seed", seed)->required();
  corpus->add_option("--count", count)->required();
  corpus->add_flag("--finite-only", finite_only);
  corpus->add_option("--out-dir", out_dir, "Write one file per graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return run_validate(path);
    if (*cycles) return run_cycles(path, cycle_budget);
    if (*gk) return run_gk(path, as_json);
    if (*nf) return run_nf(path, word_text, false);
    if (*normal) return run_nf(path, word_text, true);
    if (*enumerate) return run_enumerate(path, max_len, budget, jobs, csv);
    if (*crosscheck)
      return run_crosscheck(path, max_len, budget, tolerance, force, jobs,
                            as_json);
    if (*witness) return run_witness(path, grid, as_json);
    if (*corpus) return run_corpus(seed, count, finite_only, out_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
