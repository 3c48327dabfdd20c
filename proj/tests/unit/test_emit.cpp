#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "instance.hpp"
#include "json.hpp"
#include "res/emit.hpp"

using namespace res;
using nlohmann::json;
using restest::Session;

TEST_CASE("argument descriptions") {
  Session s(restest::load_fixture("example1.res"));
  CHECK(describe(s.structure.argument(ArgumentId{2})) == "t2_neg: <!e2, {Al1}>");
}

TEST_CASE("compare output in text and json") {
  Session s(restest::load_fixture("example1.res"));
  auto cond = s.given("e1 & e2");
  auto trace = explain(cond, s.p("{Al1}"), s.p("{Al3}"));
  auto text = emit_compare(cond, "e1 & e2", trace, OutputFormat::kText);
  CHECK(text.find("{Al1} vs {Al3}: Incomparable") != std::string::npos);
  auto j = json::parse(emit_compare(cond, "e1 & e2", trace, OutputFormat::kJson));
  CHECK(j["verdict"] == "Incomparable");
  CHECK(j["p1_leq_p2"] == false);
  CHECK(j["supports"]["p2"].size() == 1);
}

TEST_CASE("explain json lists provenance for each match") {
  Session s(restest::load_fixture("hominids.res"));
  const std::string g = "e1 & e2 & e12 & e23 & e13";
  auto cond = s.given(g);
  auto j = json::parse(emit_explain(cond, g, explain(cond, s.p("{B1}"), s.p("{B5}")), OutputFormat::kJson));
  CHECK(j["verdict"] == "StrictlyLess");
  REQUIRE(j["directions"].size() == 2);
  const auto& fwd = j["directions"][0];
  CHECK(fwd["holds"] == true);
  REQUIRE(fwd["matches"].size() == 1);
  CHECK(fwd["matches"][0]["support"] == "theory_b1");
  CHECK(fwd["matches"][0]["provenance"][0]["source"] == "declaration");
  // Ten supports of {B5}; only d12_b5 is dominated by theory_b1.
  CHECK(j["directions"][1]["unmatched"].size() == 9);
}

TEST_CASE("rank text marks the matrix") {
  Session s(restest::load_fixture("example1.res"));
  auto cond = s.given("!e1 & !e2");
  auto r = rank(cond, candidate_set(s.structure.conclusion_frame(), CandidateMode::kSingletons));
  auto text = emit_rank(cond, "!e1 & !e2", r, OutputFormat::kText);
  CHECK(text.find("maximal: {Al1}\n") != std::string::npos);
  auto j = json::parse(emit_rank(cond, "!e1 & !e2", r, OutputFormat::kJson));
  CHECK(j["maximal"] == json::array({"{Al1}"}));
  CHECK(j["matrix"][1][2] == "Incomparable");
}

TEST_CASE("diagram dot output") {
  Session s(restest::load_fixture("example1.res"));
  auto cond = s.given("!e1 & !e2");
  auto d = hasse(cond, candidate_set(s.structure.conclusion_frame(), CandidateMode::kSingletonsAndComplements));
  auto dot = emit_diagram(cond, "!e1 & !e2", d, OutputFormat::kDot);
  CHECK(dot.rfind("digraph \"example1\" {", 0) == 0);
  CHECK(dot.find("rankdir=BT;") != std::string::npos);
  CHECK(dot.find("n1 -> n0;") != std::string::npos);
  CHECK(dot.back() == '\n');
  CHECK_THROWS(emit_rank(cond, "", rank(cond, d.candidates), OutputFormat::kDot));
}

TEST_CASE("check output reports violations") {
  auto doc = parse_structure(
      "structure bad\nevidence atoms: e1, e2\nalternatives: A, B\n"
      "arg g: e1 => {A}\narg s: e1 & e2 => {B}\nrel: s < g\n");
  auto es = build_structure(doc);
  auto cl = build_closure(es);
  CheckResult result{es.validate(), check_consistency(cl, es), audit_disjunction_constraint(es)};
  auto j = json::parse(emit_check(es, result, OutputFormat::kJson));
  CHECK(j["consistent"] == false);
  REQUIRE(j["violations"].size() == 1);
  auto text = emit_check(es, result, OutputFormat::kText);
  CHECK(text.find("s < g") != std::string::npos);
}

TEST_CASE("json output is well formed for random structures and queries") {
  std::mt19937 rng(2718);
  restest::InstanceShape shape;
  for (int i = 0; i < 100; ++i) {
    Session s(restest::to_structure(restest::random_instance(rng, shape)));
    const auto given = restest::random_satisfiable(rng, s.structure.evidence_frame()->atom_count());
    auto cond = condition(s.structure, s.closure, restest::sentence(s.structure.evidence_frame(), given));
    const std::string g = to_formula(cond.given());
    auto all = candidate_set(s.structure.conclusion_frame(), CandidateMode::kAll);

    auto jc = json::parse(emit_condition(cond, g, OutputFormat::kJson));
    REQUIRE(jc["triggered"].size() == cond.triggered().size());

    auto jr = json::parse(emit_rank(cond, g, rank(cond, all), OutputFormat::kJson));
    REQUIRE(jr["matrix"].size() == all.size());
    REQUIRE_FALSE(jr["maximal"].empty());

    auto d = hasse(cond, all);
    auto jd = json::parse(emit_diagram(cond, g, d, OutputFormat::kJson));
    std::size_t members = 0;
    for (const auto& n : jd["nodes"]) members += n["members"].size();
    REQUIRE(members == all.size());
    REQUIRE(jd["edges"].size() == d.edges.size());

    const auto& p1 = all[rng() % all.size()];
    const auto& p2 = all[rng() % all.size()];
    auto je = json::parse(emit_explain(cond, g, explain(cond, p1, p2), OutputFormat::kJson));
    REQUIRE(je["verdict"] == std::string(to_string(compare(cond, p1, p2))));
  }
}
