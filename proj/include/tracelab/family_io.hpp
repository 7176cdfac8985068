#pragma once

#include <json.hpp>

#include <string>

#include "tracelab/constructions.hpp"
#include "tracelab/family.hpp"
#include "tracelab/solver.hpp"
#include "tracelab/verify.hpp"
#include "tracelab/weights.hpp"

namespace tracelab {

using Json = nlohmann::json;

/// Family JSON: {"version":1,"n":<int>,"edges":[[<int>...],...]} with edges
/// as sorted element arrays. The canonical text is the compact dump with
/// alphabetically ordered keys plus a trailing newline, so save/load
/// round-trips bit-exactly.
Json family_to_json(const SetFamily& f);
SetFamily family_from_json(const Json& j);
std::string family_to_json_string(const SetFamily& f);
SetFamily family_from_json_string(const std::string& text);
void save_family(const SetFamily& f, const std::string& path);
SetFamily load_family(const std::string& path);

/// One-line text format for logs and golden files:
/// n=<k>;<hex-rank>,<hex-rank>,... with colex ranks ascending.
std::string family_to_text(const SetFamily& f);
SetFamily family_from_text(const std::string& line);

/// WeightFn JSON: {"table":[["1","1"],["1","2"],...],"tail":["0","1"]} with
/// rationals as decimal strings num/den.
Json weight_fn_to_json(const WeightFn& f);
WeightFn weight_fn_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json check_report_to_json(const CheckReport& rep);
Json replay_report_to_json(const ReplayReport& rep);
Json construction_report_to_json(const ConstructionReport& rep);

/// Solver payload {n,s,value,optimal,backend,witness,millis}. Every field
/// except millis is deterministic for fixed inputs.
Json solve_result_to_json(const SolveResult& res);

}  // namespace tracelab
