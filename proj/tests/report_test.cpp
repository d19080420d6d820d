#include <gtest/gtest.h>

#include "qsem/report.hpp"

namespace qsem {
namespace {

class HardyReport : public ::testing::Test {
 protected:
  hardy::HardyScenario s = hardy::build_scenario();
  hardy::ParadoxReport r = hardy::paradox_report(s);
};

TEST_F(HardyReport, JsonSections) {
  Json j = hardy::to_json(s, r)["hardy_report"];
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"basis", "states", "classical_chain",
                                            "supervaluationist_section", "many_valued_section",
                                            "weak_section", "which_way_table"}));
  EXPECT_EQ(j["basis"][0], "OA(x)OB");
  EXPECT_EQ(j["basis"][3], "NA(x)NB");
  EXPECT_EQ(j["classical_chain"]["quantum_value"], "1/12");
  EXPECT_EQ(j["classical_chain"]["classical_conclusion"], "0");
  EXPECT_EQ(j["classical_chain"]["contradiction"], true);
  EXPECT_EQ(j["supervaluationist_section"]["D1_in_Psi_notO"], "Gap");
  EXPECT_EQ(j["supervaluationist_section"]["kerO_vs_ranD1"], "Incomparable");
  EXPECT_EQ(j["many_valued_section"]["D1_in_Psi_notO"]["value"], "1/12");
  EXPECT_EQ(j["many_valued_section"]["O_in_Psi_D1"]["value"], "1/4");
  EXPECT_EQ(j["weak_section"]["D1"], "1");
  EXPECT_EQ(j["weak_section"]["O"], "0");
  EXPECT_EQ(j["which_way_table"]["entries"]["NN"], "-1");
  EXPECT_EQ(j["which_way_table"]["total"], "1");
}

TEST_F(HardyReport, JsonReparsesToTheSameDocument) {
  std::string text = dump(hardy::to_json(s, r));
  EXPECT_EQ(dump(Json::parse(text)), text);
  EXPECT_EQ(text.find("0.08"), std::string::npos);
}

TEST_F(HardyReport, TextNarrative) {
  std::string t = hardy::to_text(s, r);
  EXPECT_NE(t.find("classical conclusion: P[D1]=0; quantum value: 1/12; PARADOX"), std::string::npos);
  EXPECT_NE(t.find("D1 in Psi_notO: Gap"), std::string::npos);
  EXPECT_NE(t.find("D1 in Psi_notO: Degree(1/12)"), std::string::npos);
  EXPECT_NE(t.find("O in Psi_D1: Degree(1/4)"), std::string::npos);
  EXPECT_NE(t.find("Weak(1)"), std::string::npos);
  EXPECT_NE(t.find("N^A N^B: -1"), std::string::npos);
  EXPECT_NE(t.find("total = 1\n"), std::string::npos);
  EXPECT_LT(t.find("[classical"), t.find("[supervaluationist"));
  EXPECT_LT(t.find("[supervaluationist"), t.find("[many-valued"));
  EXPECT_LT(t.find("[many-valued"), t.find("[weak-valued"));
}

TEST(QueryRendering, JsonAndText) {
  auto results = dsl::run(dsl::check(dsl::parse(
      "let up = ket[1, 0]\nlet plus = ket[1, 1]\n"
      "eval supervaluationist proj(up) in plus\neval many_valued proj(up) in plus\n")));
  Json j = queries_to_json(results);
  ASSERT_EQ(j["queries"].size(), 2u);
  EXPECT_EQ(j["queries"][0]["result-kind"], "Gap");
  EXPECT_TRUE(j["queries"][0]["value"].is_null());
  EXPECT_EQ(j["queries"][1]["value"], "1/2");
  EXPECT_EQ(j["queries"][1]["semantics"], "many_valued");
  EXPECT_EQ(queries_to_text(results),
            "eval supervaluationist proj(up) in plus => Gap\n"
            "eval many_valued proj(up) in plus => Degree(1/2)\n");
  EXPECT_EQ(dump(queries_to_json({})), "{\n  \"queries\": []\n}\n");
}

}  // namespace
}  // namespace qsem
