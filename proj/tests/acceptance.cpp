// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "properties.hpp"
#include "qsem/dsl.hpp"
#include "qsem/hardy.hpp"
#include "qsem/report.hpp"
#include "support.hpp"

namespace {

using namespace qsem;
namespace fs = std::filesystem;

struct Criterion {
  std::string id;
  std::string title;
  std::function<std::string()> check;  // empty string on success
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class A, class B>
std::string expect_eq(const std::string& what, const A& got, const B& want) {
  if (got == want) return "";
  std::ostringstream os;
  os << what << ": got " << got << ", want " << want;
  return os.str();
}

std::string join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts)
    if (!p.empty()) out += (out.empty() ? "" : "; ") + p;
  return out;
}

const hardy::HardyScenario& scenario() {
  static const hardy::HardyScenario s = hardy::build_scenario();
  return s;
}

std::string ac1() {
  const auto& s = scenario();
  return expect_eq("born_degree(P_D1, Psi_notO)", born_degree(s.p_d1, s.psi_not_o),
                   make_rational(1, 12));
}

std::string ac2() {
  const auto& s = scenario();
  return expect_eq("born_degree(P_O, Psi_D1)", born_degree(s.p_o, s.psi_d1), make_rational(1, 4));
}

std::string ac3() {
  const auto& s = scenario();
  return join({expect_eq("weak_value(P_D1, Psi_notO, Psi_D1)",
                         weak_value(s.p_d1, s.psi_not_o, s.psi_d1), Scalar(1)),
               expect_eq("weak_value(P_O, Psi_D1, Psi_notO)",
                         weak_value(s.p_o, s.psi_d1, s.psi_not_o), Scalar(0))});
}

std::string ac4() {
  const auto& s = scenario();
  return join({expect_eq("(P_O, Psi_notO)", supervaluate(s.p_o, s.psi_not_o).str(), "ClassicalFalse"),
               expect_eq("(P_D1, Psi_D1)", supervaluate(s.p_d1, s.psi_d1).str(), "ClassicalTrue"),
               expect_eq("(P_D1, Psi_notO)", supervaluate(s.p_d1, s.psi_not_o).str(), "Gap"),
               expect_eq("(P_O, Psi_D1)", supervaluate(s.p_o, s.psi_d1).str(), "Gap")});
}

std::string ac5() {
  auto w = hardy::incomparability_witness(scenario());
  return join({expect_eq("ker(P_O) vs ran(P_D1)", std::string(to_string(w.ker_o_vs_ran_d1)),
                         "Incomparable"),
               expect_eq("ker(P_O) vs ker(P_D1)", std::string(to_string(w.ker_o_vs_ker_d1)),
                         "Incomparable")});
}

std::string ac6() {
  using testing::cd;
  using testing::FloatVec;
  const std::map<std::string, long> want{{"OO", 0}, {"ON", 1}, {"NO", 1}, {"NN", -1}};
  auto table = hardy::which_way_table(scenario());
  if (table.size() != 4) return "table has " + std::to_string(table.size()) + " entries";

  // Independent floating-point model: normalized kets, arms built from
  // single-particle kets directly.
  const double h = 1.0 / std::sqrt(2.0);
  FloatVec o{1, 0}, n{0, 1}, d1{h, -h};
  FloatVec pre{0, 1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1 / std::sqrt(3.0)};
  FloatVec post = testing::fkron(d1, d1);
  std::map<char, FloatVec> arm{{'O', o}, {'N', n}};

  std::string err;
  for (const auto& e : table) {
    auto it = want.find(e.arms);
    if (it == want.end()) return "unexpected arms " + e.arms;
    err = join({err, expect_eq(e.arms + " exact", e.weak_value, Scalar(it->second))});
    cd f = testing::float_weak_value(
        testing::fouter(testing::fkron(arm[e.arms[0]], arm[e.arms[1]])), pre, post);
    if (std::abs(f - cd(double(it->second), 0)) > 1e-12)
      err = join({err, e.arms + " float oracle " + std::to_string(f.real()) + "+" +
                           std::to_string(f.imag()) + "i"});
  }
  // OO is the O-projector with the pre-selection in its kernel.
  err = join({err, expect_eq("OO anchor", weak_value(scenario().p_o, scenario().psi_not_o,
                                                     scenario().psi_d1),
                             Scalar(0))});
  return err;
}

std::string ac7() {
  using namespace qsem::testing;
  constexpr int kCases = 1000;
  struct Named {
    const char* name;
    PropertyOutcome (*fn)(Rng&, int);
  };
  const Named props[] = {{"bridge", bridge_biconditional},
                         {"weak/Born", weak_born_coincidence},
                         {"eigenstate", eigenstate_reduction},
                         {"additivity", weak_additivity},
                         {"scale", scale_invariance},
                         {"projector", projector_invariants}};
  std::string err;
  std::uint64_t seed = 0xC0FFEE;
  for (const auto& p : props) {
    Rng rng(seed++);
    PropertyOutcome o = p.fn(rng, kCases);
    if (o.cases < kCases) err = join({err, std::string(p.name) + " ran too few cases"});
    if (!o.ok())
      err = join({err, std::string(p.name) + ": " + std::to_string(o.failures) +
                           " failures, first: " + o.first_failure});
  }
  return err;
}

std::string ac8() {
  const auto& s = scenario();
  auto rep = hardy::paradox_report(s);
  std::string err;

  // Oracle equivalence: the script's answers against the programmatic report.
  auto results = dsl::run(dsl::check(dsl::parse(slurp(fs::path(QSEM_SCRIPTS_DIR) / "hardy.qsem"))));
  std::map<std::string, TruthValue> by_query;
  for (const auto& r : results) by_query[r.query] = r.value;
  const std::pair<std::string, TruthValue> expected[] = {
      {"eval supervaluationist P_O in psi_notO", rep.supervaluationist.o_initial},
      {"eval supervaluationist P_D1 in psi_D1", rep.supervaluationist.d1_final},
      {"eval supervaluationist P_D1 in psi_notO", rep.supervaluationist.d1_initial},
      {"eval supervaluationist P_O in psi_D1", rep.supervaluationist.o_final},
      {"eval many_valued P_D1 in psi_notO", rep.many_valued.d1_initial},
      {"eval many_valued P_O in psi_D1", rep.many_valued.o_final},
      {"eval weak P_D1 in psi_notO post psi_D1", rep.weak.d1},
      {"eval weak P_O in psi_D1 post psi_notO", rep.weak.o},
      {"eval weak P_OA (x) P_OB in psi_notO post psi_D1", TruthValue::classical_false()},
      {"eval weak P_OA (x) P_NB in psi_notO post psi_D1", TruthValue::weak(rep.which_way[1].weak_value)},
      {"eval weak P_NA (x) P_OB in psi_notO post psi_D1", TruthValue::weak(rep.which_way[2].weak_value)},
      {"eval weak P_NA (x) P_NB in psi_notO post psi_D1", TruthValue::weak(rep.which_way[3].weak_value)},
  };
  if (results.size() != std::size(expected))
    err = join({err, "script produced " + std::to_string(results.size()) + " results"});
  for (const auto& [q, v] : expected) {
    auto it = by_query.find(q);
    if (it == by_query.end()) err = join({err, "missing query '" + q + "'"});
    else err = join({err, expect_eq(q, it->second.str(), v.str())});
  }
  // OO is ClassicalFalse under weak_valued because Psi_notO lies in its kernel;
  // its raw weak value must still be the table entry.
  err = join({err, expect_eq("OO weak value", rep.which_way[0].weak_value, Scalar(0))});

  // Golden file.
  std::string golden = slurp(fs::path(QSEM_GOLDEN_DIR) / "hardy.json");
  if (dump(hardy::to_json(s, rep)) != golden) err = join({err, "hardy JSON differs from golden file"});

  // Round trip over the corpus.
  int files = 0;
  for (const auto& e : fs::directory_iterator(QSEM_SCRIPTS_DIR)) {
    if (e.path().extension() != ".qsem") continue;
    ++files;
    dsl::Script a = dsl::parse(slurp(e.path()));
    dsl::Script b = dsl::parse(dsl::print(a));
    if (!dsl::same_structure(a, b) || dsl::print(b) != dsl::print(a))
      err = join({err, "round trip failed for " + e.path().filename().string()});
  }
  if (files == 0) err = join({err, "empty script corpus"});
  return err;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "Born degree of D1 in Psi_notO is 1/12", ac1},
      {"AC2", "Born degree of O in Psi_D1 is 1/4", ac2},
      {"AC3", "weak values of D1 and O are 1 and 0", ac3},
      {"AC4", "supervaluationist outcomes", ac4},
      {"AC5", "incomparability witness", ac5},
      {"AC6", "which-way weak values vs float oracle (1e-12)", ac6},
      {"AC7", "property suite, 1000 cases each, dims 2-8", ac7},
      {"AC8", "Hardy script, golden JSON, parse round trip", ac8},
  };
  auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& c : criteria) {
    std::string why;
    try {
      why = c.check();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (why.empty()) {
      std::cout << "[PASS] " << c.id << " " << c.title << "\n";
    } else {
      ++failed;
      std::cout << "[FAIL] " << c.id << " " << c.title << ": " << why << "\n";
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << "(" << std::size(criteria) - failed << "/"
            << std::size(criteria) << ", " << secs << " s)\n";
  return failed ? 1 : 0;
}
