#pragma once

// Text and JSON renderings of the Hardy report. JSON keys keep insertion
// order and every number is an exact string ("1/12", never 0.0833...).

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>

#include "qsem/dsl.hpp"
#include "qsem/hardy.hpp"
#include "qsem/semantics.hpp"

namespace qsem {

using Json = nlohmann::ordered_json;

/// Payload of a truth value as an exact string, null for Gap.
inline Json value_json(const TruthValue& v) {
  auto x = v.value();
  return x ? Json(x->str()) : Json(nullptr);
}

inline Json truth_json(const TruthValue& v) {
  Json j;
  j["kind"] = std::string(to_string(v.kind()));
  j["value"] = value_json(v);
  return j;
}

/// Pretty-printed JSON with a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// {"queries": [{query, semantics, result-kind, value}, ...]}
inline Json queries_to_json(const std::vector<dsl::QueryResult>& results) {
  Json queries = Json::array();
  for (const auto& r : results) {
    Json q;
    q["query"] = r.query;
    q["semantics"] = r.semantics;
    q["result-kind"] = std::string(to_string(r.value.kind()));
    q["value"] = value_json(r.value);
    queries.push_back(std::move(q));
  }
  Json doc;
  doc["queries"] = std::move(queries);
  return doc;
}

inline std::string queries_to_text(const std::vector<dsl::QueryResult>& results) {
  std::string out;
  for (const auto& r : results) out += r.query + " => " + r.value.str() + "\n";
  return out;
}

namespace hardy {

inline Json to_json(const HardyScenario& s, const ParadoxReport& r) {
  Json basis = Json::array();
  for (const char* b : kBasisLabels) basis.push_back(b);

  const auto& c = r.classical_chain;
  Json chain;
  chain["premises"] = c.premises;
  chain["O_in_Psi_notO"] = std::string(to_string(c.o_initial.kind()));
  chain["classical_conclusion"] = c.classical_conclusion.get_str();
  chain["quantum_value"] = c.quantum_value.get_str();
  chain["contradiction"] = c.contradiction;

  const auto& sv = r.supervaluationist;
  Json super;
  super["O_in_Psi_notO"] = std::string(to_string(sv.o_initial.kind()));
  super["D1_in_Psi_D1"] = std::string(to_string(sv.d1_final.kind()));
  super["D1_in_Psi_notO"] = std::string(to_string(sv.d1_initial.kind()));
  super["O_in_Psi_D1"] = std::string(to_string(sv.o_final.kind()));
  super["kerO_vs_ranD1"] = std::string(to_string(sv.incomparability.ker_o_vs_ran_d1));
  super["kerO_vs_kerD1"] = std::string(to_string(sv.incomparability.ker_o_vs_ker_d1));
  super["gap_allows_nonzero_probability"] = sv.gap_allows_nonzero_probability;

  Json many;
  many["D1_in_Psi_notO"] = truth_json(r.many_valued.d1_initial);
  many["O_in_Psi_D1"] = truth_json(r.many_valued.o_final);

  Json weak;
  weak["D1"] = value_json(r.weak.d1);
  weak["O"] = value_json(r.weak.o);
  weak["D1_kind"] = std::string(to_string(r.weak.d1.kind()));
  weak["O_kind"] = std::string(to_string(r.weak.o.kind()));
  weak["D1_selection"] = {{"pre", s.psi_not_o.label()}, {"post", s.psi_d1.label()}};
  weak["O_selection"] = {{"pre", s.psi_d1.label()}, {"post", s.psi_not_o.label()}};
  weak["O_false_does_not_force_D1_zero"] = r.weak.o_false_does_not_force_d1_zero;
  weak["D1_nonzero_does_not_force_O_nonzero"] = r.weak.d1_nonzero_does_not_force_o_nonzero;

  Json table;
  table["pre"] = s.psi_not_o.label();
  table["post"] = s.psi_d1.label();
  table["extension"] = true;
  Json entries = Json::object();
  for (const auto& e : r.which_way) entries[e.arms] = e.weak_value.str();
  table["entries"] = entries;
  table["total"] = r.which_way_total.str();

  Json report;
  report["basis"] = basis;
  report["states"] = {{s.psi_not_o.label(), s.psi_not_o.vector().str()},
                      {s.psi_d1.label(), s.psi_d1.vector().str()}};
  report["classical_chain"] = chain;
  report["supervaluationist_section"] = super;
  report["many_valued_section"] = many;
  report["weak_section"] = weak;
  report["which_way_table"] = table;

  Json doc;
  doc["hardy_report"] = report;
  return doc;
}

inline std::string to_text(const HardyScenario& s, const ParadoxReport& r) {
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << "Hardy's paradox report\n";
  os << "basis: ";
  for (std::size_t i = 0; i < kBasisLabels.size(); ++i)
    os << (i ? ", " : "") << kBasisLabels[i];
  os << "\n";
  os << "initial state " << s.psi_not_o.label() << " = " << s.psi_not_o.vector().str()
     << " (unnormalized)\n";
  os << "final state " << s.psi_d1.label() << " = " << s.psi_d1.vector().str()
     << " (unnormalized)\n";

  const auto& c = r.classical_chain;
  os << "\n[classical bivalent chain]\n";
  for (const auto& p : c.premises) os << "premise: " << p << "\n";
  os << "[[O]] in " << s.psi_not_o.label() << ": " << c.o_initial.str() << "\n";
  os << "classical conclusion: P[D1]=" << c.classical_conclusion.get_str()
     << "; quantum value: " << c.quantum_value.get_str() << "; "
     << (c.contradiction ? "PARADOX" : "consistent") << "\n";

  const auto& sv = r.supervaluationist;
  os << "\n[supervaluationist semantics]\n";
  os << "O in Psi_notO: " << sv.o_initial.str() << "\n";
  os << "D1 in Psi_D1: " << sv.d1_final.str() << "\n";
  os << "D1 in Psi_notO: " << sv.d1_initial.str() << "\n";
  os << "O in Psi_D1: " << sv.o_final.str() << "\n";
  os << "ker(P_O) vs ran(P_D1): " << to_string(sv.incomparability.ker_o_vs_ran_d1) << "\n";
  os << "ker(P_O) vs ker(P_D1): " << to_string(sv.incomparability.ker_o_vs_ker_d1) << "\n";
  os << "gap leaves P[D1] nonzero: " << yes(sv.gap_allows_nonzero_probability) << "\n";

  os << "\n[many-valued semantics]\n";
  os << "D1 in Psi_notO: " << r.many_valued.d1_initial.str() << "\n";
  os << "O in Psi_D1: " << r.many_valued.o_final.str() << "\n";

  os << "\n[weak-valued semantics]\n";
  os << "D1 (pre Psi_notO, post Psi_D1): " << r.weak.d1.str() << "\n";
  os << "O (pre Psi_D1, post Psi_notO): " << r.weak.o.str() << "\n";
  os << "[[O]] = 0 does not force weak [[D1]] = 0: "
     << yes(r.weak.o_false_does_not_force_d1_zero) << "\n";
  os << "[[D1]] != 0 does not force weak [[O]] != 0: "
     << yes(r.weak.d1_nonzero_does_not_force_o_nonzero) << "\n";

  os << "\n[which-way weak values, pre Psi_notO, post Psi_D1] (extension)\n";
  for (const auto& e : r.which_way)
    os << e.arms[0] << "^A " << e.arms[1] << "^B: " << e.weak_value.str() << "\n";
  os << "total = " << r.which_way_total.str() << "\n";
  return os.str();
}

}  // namespace hardy
}  // namespace qsem
