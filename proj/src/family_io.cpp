#include "tracelab/family_io.hpp"

#include <fstream>
#include <sstream>

namespace tracelab {

Json family_to_json(const SetFamily& f) {
  Json edges = Json::array();
  for (SetMask e : f.edges()) edges.push_back(e.elements());
  return Json{{"version", 1}, {"n", f.ground_size()}, {"edges", edges}};
}

SetFamily family_from_json(const Json& j) {
  if (!j.is_object() || j.value("version", 0) != 1)
    throw std::invalid_argument("family JSON: expected an object with version 1");
  const int n = j.at("n").get<int>();
  std::vector<SetMask> edges;
  for (const auto& arr : j.at("edges")) edges.push_back(SetMask::from_elements(arr.get<std::vector<ElementId>>()));
  return SetFamily(n, std::move(edges));
}

std::string family_to_json_string(const SetFamily& f) { return family_to_json(f).dump() + "\n"; }

SetFamily family_from_json_string(const std::string& text) { return family_from_json(Json::parse(text)); }

void save_family(const SetFamily& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << family_to_json_string(f);
}

SetFamily load_family(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return family_from_json_string(buf.str());
}

std::string family_to_text(const SetFamily& f) {
  std::string out = "n=" + std::to_string(f.ground_size()) + ";";
  bool first = true;
  char hex[32];
  for (SetMask e : f.edges()) {
    if (!first) out += ',';
    std::snprintf(hex, sizeof hex, "%llx", static_cast<unsigned long long>(e.bits()));
    out += hex;
    first = false;
  }
  return out;
}

SetFamily family_from_text(const std::string& line) {
  if (line.rfind("n=", 0) != 0) throw std::invalid_argument("family text: expected n=<k>;...");
  const auto semi = line.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("family text: missing ';'");
  const int n = std::stoi(line.substr(2, semi - 2));
  std::vector<SetMask> edges;
  std::size_t pos = semi + 1;
  while (pos < line.size()) {
    auto comma = line.find(',', pos);
    if (comma == std::string::npos) comma = line.size();
    edges.push_back(SetMask(std::stoull(line.substr(pos, comma - pos), nullptr, 16)));
    pos = comma + 1;
  }
  return SetFamily(n, std::move(edges));
}

Json rational_to_json(const Rational& r) { return Json::array({r.num().str(), r.den().str()}); }

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational JSON: expected [num, den]");
  return Rational(BigInt(j[0].get<std::string>()), BigInt(j[1].get<std::string>()));
}

Json weight_fn_to_json(const WeightFn& f) {
  Json table = Json::array();
  for (const Rational& r : f.table()) table.push_back(rational_to_json(r));
  return Json{{"table", table}, {"tail", rational_to_json(f.tail())}};
}

WeightFn weight_fn_from_json(const Json& j) {
  std::vector<Rational> table;
  for (const auto& entry : j.at("table")) table.push_back(rational_from_json(entry));
  return WeightFn(std::move(table), rational_from_json(j.at("tail")));
}

Json check_report_to_json(const CheckReport& rep) {
  Json j{{"check", rep.check_id}, {"params", rep.params},      {"examined", rep.examined},
         {"passed", rep.passed},  {"skipped", rep.skipped},    {"outcome", to_string(rep.outcome)},
         {"millis", rep.millis}};
  if (rep.min_slack) j["min_slack"] = rep.min_slack->to_fraction_string();
  if (rep.counterexample) {
    Json ce{{"clause", rep.counterexample->clause},
            {"lhs", rep.counterexample->lhs},
            {"rhs", rep.counterexample->rhs}};
    if (!rep.counterexample->params.empty()) ce["params"] = rep.counterexample->params;
    if (rep.counterexample->family) ce["family"] = family_to_text(*rep.counterexample->family);
    j["counterexample"] = ce;
  }
  return j;
}

Json replay_report_to_json(const ReplayReport& rep) {
  Json j{{"check", "replay"},
         {"scheme", to_string(rep.scheme)},
         {"d", rep.d},
         {"c", rep.c},
         {"n", rep.n},
         {"hypothesis_ok", rep.hypothesis_ok},
         {"pass", rep.pass},
         {"edge_count", rep.edge_count},
         {"share_accounting_ok", rep.share_accounting_ok},
         {"per_vertex_target", rep.per_vertex_target.to_fraction_string()},
         {"required_total", rep.required_total.to_fraction_string()},
         {"total_weight", rep.total_weight.to_fraction_string()},
         {"millis", rep.millis}};
  if (!rep.hypothesis_ok) j["hypothesis_failure"] = rep.hypothesis_failure;
  if (!rep.failure.empty()) j["failure"] = rep.failure;

  const auto& cls = rep.classification;
  Json jc;
  jc["light"] = cls.light;
  jc["chosen"] = cls.chosen;
  Json clusters = Json::array();
  for (std::size_t i = 0; i < cls.clusters.size(); ++i)
    clusters.push_back(Json{{"vertex", cls.chosen[i]},
                            {"members", cls.clusters[i].elements()},
                            {"type", cls.chosen_is_l2[i] ? "l2" : "l1"}});
  jc["clusters"] = clusters;
  Json per_class = Json::array();
  for (const auto& vc : cls.vertex_class) per_class.push_back(to_string(vc));
  jc["vertex_class"] = per_class;
  Json anchors = Json::object();
  for (std::size_t v = 0; v < cls.anchor.size(); ++v)
    if (cls.anchor[v] >= 0) anchors[std::to_string(v)] = cls.chosen[static_cast<std::size_t>(cls.anchor[v])];
  jc["anchors"] = anchors;
  Json s_edges = Json::array();
  for (SetMask e : cls.s_edges) s_edges.push_back(e.elements());
  jc["s_edges"] = s_edges;
  jc["light_main_count"] = cls.light_main_count;
  if (cls.light_small_c_count >= 0) jc["light_small_c_count"] = cls.light_small_c_count;
  j["classification"] = jc;

  Json sums = Json::array();
  for (const auto& [label, sum] : rep.class_sums) sums.push_back(Json{{"class", label}, {"sum", sum.to_fraction_string()}});
  j["class_sums"] = sums;
  return j;
}

Json construction_report_to_json(const ConstructionReport& rep) {
  Json j{{"n", rep.n},
         {"s", rep.s},
         {"edge_count", rep.edge_count},
         {"min_degree", rep.min_degree},
         {"hereditary", rep.hereditary},
         {"degree_histogram", rep.degree_histogram},
         {"pass", rep.pass}};
  if (rep.claimed_edge_count) j["claimed_edge_count"] = *rep.claimed_edge_count;
  if (rep.claimed_min_degree) j["claimed_min_degree"] = *rep.claimed_min_degree;
  if (rep.pass) j["implied_bound"] = rep.implied_bound;
  if (!rep.failure.empty()) j["failure"] = rep.failure;
  return j;
}

Json solve_result_to_json(const SolveResult& res) {
  Json j{{"n", res.n},
         {"s", res.s},
         {"value", res.value},
         {"optimal", res.optimal},
         {"backend", to_string(res.backend)},
         {"millis", res.millis}};
  if (res.witness)
    j["witness"] = family_to_json(res.witness->family());
  else
    j["witness"] = nullptr;
  if (res.never_fails) j["never_fails"] = true;
  if (res.timed_out) j["timed_out"] = true;
  return j;
}

}  // namespace tracelab
