#include "hkdim/json_io.hpp"

namespace hkdim {

using nlohmann::json;

void to_json(json& j, const GkReport& report) {
  j = json::object();
  j["finite"] = report.finite;
  j["gk"] = report.gk ? json(*report.gk) : json(nullptr);
  j["cycles"] = report.cycles;
  auto per_cycle = json::array();
  for (const auto& entry : report.per_cycle) {
    auto adjacent = json::array();
    for (const auto& [vertex, k] : entry.adjacent) {
      adjacent.push_back({{"vertex", vertex}, {"k", k}});
    }
    per_cycle.push_back({{"cycle", entry.cycle},
                         {"A", std::move(adjacent)},
                         {"summand", entry.summand}});
  }
  j["per_cycle"] = std::move(per_cycle);
  if (report.infinite_witness) {
    j["infinite_witness"] = {{"cycle_a", report.infinite_witness->cycle_a},
                             {"cycle_b", report.infinite_witness->cycle_b},
                             {"path", report.infinite_witness->path}};
  } else {
    j["infinite_witness"] = nullptr;
  }
}

void from_json(const json& j, GkReport& report) {
  report = GkReport{};
  report.finite = j.at("finite").get<bool>();
  if (!j.at("gk").is_null()) report.gk = j.at("gk").get<long long>();
  report.cycles = j.at("cycles").get<std::vector<std::vector<std::string>>>();
  for (const auto& entry : j.at("per_cycle")) {
    CycleSummand summand;
    summand.cycle = entry.at("cycle").get<int>();
    for (const auto& a : entry.at("A")) {
      summand.adjacent.emplace_back(a.at("vertex").get<std::string>(),
                                    a.at("k").get<long long>());
    }
    summand.summand = entry.at("summand").get<long long>();
    report.per_cycle.push_back(std::move(summand));
  }
  if (!j.at("infinite_witness").is_null()) {
    const auto& w = j.at("infinite_witness");
    report.infinite_witness =
        WitnessDoc{w.at("cycle_a").get<std::vector<std::string>>(),
                   w.at("cycle_b").get<std::vector<std::string>>(),
                   w.at("path").get<std::vector<std::string>>()};
  }
}

json cross_validation_json(const CrossValidation& cv) {
  json j;
  j["formula"] = cv.formula;
  j["empirical"] = {{"estimate", cv.empirical.estimate},
                    {"rounded", cv.empirical.rounded},
                    {"window", {cv.empirical.window_begin, cv.empirical.window_end}},
                    {"residual", cv.empirical.residual}};
  j["agree"] = cv.agree;
  return j;
}

json witness_report_json(const OrientedGraph& g, const StarExpression& expr,
                         const Word& backbone, const WitnessReport& report) {
  json j;
  j["backbone"] = format_word(g, backbone);
  j["expression"] = format_star_expression(g, expr);
  j["stars"] = report.star_count;
  j["formula"] = report.formula_value;
  j["samples"] = report.samples_checked;
  j["all_normal"] = report.all_normal;
  j["all_distinct"] = report.all_distinct;
  j["passed"] = report.passed();
  j["counterexample"] = report.counterexample
                            ? json(format_word(g, *report.counterexample))
                            : json(nullptr);
  return j;
}

}  // namespace hkdim
