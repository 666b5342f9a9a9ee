#pragma once

#include <string>

#include "json.hpp"

#include "hkdim/gk.hpp"
#include "hkdim/growth.hpp"
#include "hkdim/witness.hpp"

namespace hkdim {

// Report schema:
//   {"finite": bool, "gk": int|null, "cycles": [[name...]...],
//    "per_cycle": [{"cycle": j, "A": [{"vertex": name, "k": int}...],
//                   "summand": int}...],
//    "infinite_witness": {"cycle_a": [...], "cycle_b": [...],
//                         "path": [...]} | null}
void to_json(nlohmann::json& j, const GkReport& report);
void from_json(const nlohmann::json& j, GkReport& report);

nlohmann::json cross_validation_json(const CrossValidation& cv);
nlohmann::json witness_report_json(const OrientedGraph& g,
                                   const StarExpression& expr,
                                   const Word& backbone,
                                   const WitnessReport& report);

}  // namespace hkdim
