#include <catch2/catch_amalgamated.hpp>

#include "quasiper/json_io.hpp"
#include "support.hpp"

using namespace quasiper;
using qt::W;

TEST_CASE("classification reports round-trip through JSON") {
  for (const char* rules :
       {"a->ab;b->aba", "a->abaaba;b->baabaaba", "a->ba;b->bba",
        "a->aa;b->bb", "a->a;b->ba", "a->ab;b->ba"}) {
    Morphism f = Morphism::parse(rules);
    SearchBudget budget = SearchBudget::from_main_bound(5);
    FamilyReport report = classify(f, budget);
    json j = report_to_json(f, budget, false, report);
    ParsedReport back = report_from_json(j);
    CHECK(back.morphism == f);
    CHECK(back.budget == budget);
    CHECK(back.report == report);
    // and the serialization itself is stable
    CHECK(report_to_json(back.morphism, back.budget, back.strict, back.report)
              .dump() == j.dump());
  }
}

TEST_CASE("strict reports round-trip") {
  Morphism f = Morphism::parse("a->abaaba;b->baabaaba");
  FamilyReport report = classify(f, SearchBudget{}, true);
  ParsedReport back =
      report_from_json(report_to_json(f, SearchBudget{}, true, report));
  CHECK(back.strict);
  CHECK(back.report == report);
}

TEST_CASE("automaton dump") {
  auto f = Morphism::parse("a->ab;b->aba");
  auto A = CoverAutomaton::build(f, W(f.alphabet(), "aba"),
                                 AutomatonMode::finite_words);
  json j = automaton_to_json(A);
  CHECK(j.at("schema") == "quasiper/1");
  CHECK(j.at("q") == "aba");
  CHECK(j.at("mode") == "finite");
  CHECK(j.at("states").size() == 4);
  CHECK(j.at("edges").size() == 8);
  CHECK(j.at("initial") == 0);
  CHECK(j.at("finals").size() == 2);

  auto Ainf = CoverAutomaton::build(f, W(f.alphabet(), "aba"),
                                    AutomatonMode::infinite_words);
  json ji = automaton_to_json(Ainf);
  CHECK(ji.at("mode") == "infinite");
  CHECK(ji.at("finals").size() == 4);
}

TEST_CASE("sweep serialization") {
  auto findings = oracle::sweep(2, 2);
  json j = sweep_to_json(findings);
  CHECK(j.at("rows").size() == 36);
  CHECK(j.at("non_implications")
            .at("strong_infinite_not_strong_finite")
            .size() > 0);
  CHECK(oracle::sweep_csv(findings).substr(0, 5) == "index");
}

TEST_CASE("verdict JSON carries usable certificates") {
  Morphism f = Morphism::parse("a->ba;b->bba");
  Verdict v = weak_qp_infinite(f);
  json j = to_json(f.alphabet(), v);
  CHECK(j.at("status") == "true");
  CHECK(j.at("certificate").at("type") == "witness");
  Verdict back = verdict_from_json(f.alphabet(), j);
  CHECK(back == v);
}
