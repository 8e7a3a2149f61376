#ifndef QUASIPER_JSON_IO_HPP
#define QUASIPER_JSON_IO_HPP

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "quasiper/classify.hpp"
#include "quasiper/cover_automaton.hpp"
#include "quasiper/infinite_word.hpp"
#include "quasiper/morphism.hpp"
#include "quasiper/oracle.hpp"

namespace quasiper {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "quasiper/1";

inline json to_json(const Word& w) { return w.str(); }

inline json to_json(const std::optional<Word>& w) {
  return w ? json(w->str()) : json(nullptr);
}

inline json to_json(const WitnessWord& w) {
  if (std::holds_alternative<Word>(w))
    return json{{"kind", "finite"}, {"word", std::get<Word>(w).str()}};
  return json{{"kind", "infinite"},
              {"word", std::get<EventuallyPeriodicWord>(w).str()}};
}

inline json to_json(const SearchBudget& b) {
  return json{{"finite_witness_len", b.finite_witness_len},
              {"pair_component_len", b.pair_component_len},
              {"imprimitivity_bound", b.imprimitivity_bound},
              {"iterate_depth", b.iterate_depth},
              {"fixed_point_prefix_len", b.fixed_point_prefix_len},
              {"product_state_ceiling", b.product_state_ceiling}};
}

inline SearchBudget budget_from_json(const json& j) {
  SearchBudget b;
  b.finite_witness_len = j.at("finite_witness_len").get<std::size_t>();
  b.pair_component_len = j.at("pair_component_len").get<std::size_t>();
  b.imprimitivity_bound = j.at("imprimitivity_bound").get<std::size_t>();
  b.iterate_depth = j.at("iterate_depth").get<std::size_t>();
  b.fixed_point_prefix_len = j.at("fixed_point_prefix_len").get<std::size_t>();
  b.product_state_ceiling = j.at("product_state_ceiling").get<std::size_t>();
  return b;
}

inline json to_json(const AlphabetRef& alpha, const Certificate& cert) {
  json j;
  if (const auto* c = std::get_if<CoveringCertificate>(&cert)) {
    j["type"] = "covering";
    json qs = json::array();
    for (const Word& q : c->quasiperiods) qs.push_back(q.str());
    j["quasiperiods"] = std::move(qs);
    json autos = json::array();
    for (const AutomatonSummary& s : c->automata)
      autos.push_back(json{{"q", s.q.str()},
                           {"states", s.states},
                           {"complete", s.complete}});
    j["automata"] = std::move(autos);
    json lq = json::object();
    for (const auto& [a, q] : c->letter_quasiperiods)
      lq[std::string(1, alpha->symbol(a))] = q.str();
    j["letter_quasiperiods"] = std::move(lq);
    json uni = json::object();
    for (const auto& [a, qs2] : c->uniform_by_first_letter) {
      json arr = json::array();
      for (const Word& q : qs2) arr.push_back(q.str());
      uni[std::string(1, alpha->symbol(a))] = std::move(arr);
    }
    j["uniform_by_first_letter"] = std::move(uni);
    json gaps = json::array();
    for (const auto& [q, u] : c->exact_image_gaps)
      gaps.push_back(json{{"q", q.str()}, {"word", u.str()}});
    j["exact_image_gaps"] = std::move(gaps);
  } else if (const auto* c2 = std::get_if<CounterexampleCertificate>(&cert)) {
    j["type"] = "counterexample";
    j["word"] = c2->word.str();
    j["reason"] =
        c2->reason ==
                CounterexampleCertificate::Reason::superprimitive_letter_image
            ? "superprimitive-letter-image"
            : "uncovered-word";
    j["verified_word"] = to_json(c2->verified_word);
  } else if (const auto* c3 = std::get_if<WitnessCertificate>(&cert)) {
    j["type"] = "witness";
    j["preimage"] = to_json(c3->preimage);
    j["image"] = to_json(c3->image);
    j["quasiperiod"] = c3->quasiperiod.str();
    j["minimal_quasiperiod"] = to_json(c3->minimal_quasiperiod);
    j["rule"] = c3->rule;
  } else if (const auto* c4 =
                 std::get_if<SufficientConditionCertificate>(&cert)) {
    j["type"] = "sufficient-condition";
    j["rule"] = c4->rule;
  } else {
    const auto& c5 = std::get<BudgetExhaustedCertificate>(cert);
    j["type"] = "budget-exhausted";
    j["budget"] = to_json(c5.budget);
    j["fixed_point_heuristic"] = c5.fixed_point_heuristic;
    j["heuristic_quasiperiod"] = to_json(c5.heuristic_quasiperiod);
  }
  return j;
}

inline json to_json(const AlphabetRef& alpha, const Verdict& v) {
  return json{{"status", to_string(v.status)},
              {"certificate", to_json(alpha, v.certificate)}};
}

namespace detail {

inline std::optional<Word> optional_word_from_json(const AlphabetRef& alpha,
                                                   const json& j) {
  if (j.is_null()) return std::nullopt;
  return Word::parse(alpha, j.get<std::string>());
}

inline WitnessWord witness_word_from_json(const AlphabetRef& alpha,
                                          const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const std::string text = j.at("word").get<std::string>();
  if (kind == "finite") return Word::parse(alpha, text);
  if (kind == "infinite") return EventuallyPeriodicWord::parse(alpha, text);
  throw std::invalid_argument("unknown witness word kind: " + kind);
}

}  // namespace detail

inline Certificate certificate_from_json(const AlphabetRef& alpha,
                                         const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "covering") {
    CoveringCertificate c;
    for (const auto& q : j.at("quasiperiods"))
      c.quasiperiods.push_back(Word::parse(alpha, q.get<std::string>()));
    for (const auto& s : j.at("automata"))
      c.automata.push_back(AutomatonSummary{
          Word::parse(alpha, s.at("q").get<std::string>()),
          s.at("states").get<std::size_t>(), s.at("complete").get<bool>()});
    for (const auto& [key, value] : j.at("letter_quasiperiods").items())
      c.letter_quasiperiods.emplace_back(
          *alpha->letter(key[0]),
          Word::parse(alpha, value.get<std::string>()));
    for (const auto& [key, value] : j.at("uniform_by_first_letter").items()) {
      std::vector<Word> qs;
      for (const auto& q : value)
        qs.push_back(Word::parse(alpha, q.get<std::string>()));
      c.uniform_by_first_letter.emplace_back(*alpha->letter(key[0]),
                                             std::move(qs));
    }
    for (const auto& g : j.at("exact_image_gaps"))
      c.exact_image_gaps.emplace_back(
          Word::parse(alpha, g.at("q").get<std::string>()),
          Word::parse(alpha, g.at("word").get<std::string>()));
    return c;
  }
  if (type == "counterexample") {
    CounterexampleCertificate c{
        Word::parse(alpha, j.at("word").get<std::string>()),
        j.at("reason").get<std::string>() == "superprimitive-letter-image"
            ? CounterexampleCertificate::Reason::superprimitive_letter_image
            : CounterexampleCertificate::Reason::uncovered_word,
        detail::optional_word_from_json(alpha, j.at("verified_word"))};
    return c;
  }
  if (type == "witness") {
    WitnessCertificate c{
        detail::witness_word_from_json(alpha, j.at("preimage")),
        detail::witness_word_from_json(alpha, j.at("image")),
        Word::parse(alpha, j.at("quasiperiod").get<std::string>()),
        detail::optional_word_from_json(alpha, j.at("minimal_quasiperiod")),
        j.at("rule").get<std::string>()};
    return c;
  }
  if (type == "sufficient-condition")
    return SufficientConditionCertificate{j.at("rule").get<std::string>()};
  if (type == "budget-exhausted")
    return BudgetExhaustedCertificate{
        budget_from_json(j.at("budget")),
        j.at("fixed_point_heuristic").get<bool>(),
        detail::optional_word_from_json(alpha,
                                        j.at("heuristic_quasiperiod"))};
  throw std::invalid_argument("unknown certificate type: " + type);
}

inline Verdict verdict_from_json(const AlphabetRef& alpha, const json& j) {
  const std::string status = j.at("status").get<std::string>();
  Verdict v;
  v.status = status == "true"    ? Status::yes
             : status == "false" ? Status::no
                                 : Status::unknown;
  v.certificate = certificate_from_json(alpha, j.at("certificate"));
  return v;
}

inline json report_to_json(const Morphism& f, const SearchBudget& budget,
                           bool strict, const FamilyReport& report,
                           const json& timings = nullptr) {
  const AlphabetRef& alpha = f.alphabet();
  return json{{"schema", kSchemaTag},
              {"kind", "classify-report"},
              {"morphism", f.str()},
              {"budgets", to_json(budget)},
              {"strict", strict},
              {"verdicts",
               json{{"strong_finite", to_json(alpha, report.strong_finite)},
                    {"strong_infinite", to_json(alpha, report.strong_infinite)},
                    {"weak_finite", to_json(alpha, report.weak_finite)},
                    {"weak_infinite", to_json(alpha, report.weak_infinite)}}},
              {"timings", timings}};
}

struct ParsedReport {
  Morphism morphism;
  SearchBudget budget;
  bool strict = false;
  FamilyReport report;
};

inline ParsedReport report_from_json(const json& j) {
  Morphism f = Morphism::parse(j.at("morphism").get<std::string>());
  const AlphabetRef& alpha = f.alphabet();
  const json& v = j.at("verdicts");
  FamilyReport report{verdict_from_json(alpha, v.at("strong_finite")),
                      verdict_from_json(alpha, v.at("strong_infinite")),
                      verdict_from_json(alpha, v.at("weak_finite")),
                      verdict_from_json(alpha, v.at("weak_infinite"))};
  return ParsedReport{std::move(f), budget_from_json(j.at("budgets")),
                      j.at("strict").get<bool>(), std::move(report)};
}

inline json automaton_to_json(const CoverAutomaton& A) {
  json states = json::array();
  for (std::size_t i = 0; i < A.state_count(); ++i) {
    const CoverState s = A.state(i);
    states.push_back(json{{"id", i},
                          {"p", A.q().prefix(s.prefix_len).str()},
                          {"s", A.q().substr(s.prefix_len, s.suffix_len).str()}});
  }
  json edges = json::array();
  for (std::size_t i = 0; i < A.state_count(); ++i)
    for (Letter a : A.alphabet()->letters()) {
      int t = A.next(static_cast<int>(i), a);
      if (t == CoverAutomaton::kNoTransition) continue;
      edges.push_back(json{{"from", i},
                           {"letter", std::string(1, A.alphabet()->symbol(a))},
                           {"to", t}});
    }
  json finals = json::array();
  for (int s : A.final_states()) finals.push_back(s);
  return json{{"schema", kSchemaTag},
              {"kind", "cover-automaton"},
              {"morphism", A.morphism().str()},
              {"q", A.q().str()},
              {"mode", to_string(A.mode())},
              {"states", std::move(states)},
              {"edges", std::move(edges)},
              {"initial", 0},
              {"finals", std::move(finals)}};
}

inline json sweep_to_json(const oracle::SweepFindings& findings) {
  json rows = json::array();
  for (const oracle::SweepRow& row : findings.rows)
    rows.push_back(
        json{{"index", row.index},
             {"morphism", row.morphism.str()},
             {"strong_finite", to_string(row.report.strong_finite.status)},
             {"strong_infinite", to_string(row.report.strong_infinite.status)},
             {"weak_finite", to_string(row.report.weak_finite.status)},
             {"weak_infinite", to_string(row.report.weak_infinite.status)}});
  auto indices = [](const std::vector<std::size_t>& v) {
    json arr = json::array();
    for (std::size_t i : v) arr.push_back(i);
    return arr;
  };
  return json{
      {"schema", kSchemaTag},
      {"kind", "sweep"},
      {"rows", std::move(rows)},
      {"non_implications",
       json{{"strong_infinite_not_strong_finite",
             indices(findings.strong_infinite_not_strong_finite)},
            {"weak_finite_not_weak_infinite",
             indices(findings.weak_finite_not_weak_infinite)},
            {"weak_infinite_not_strong_infinite",
             indices(findings.weak_infinite_not_strong_infinite)},
            {"weak_finite_not_strong_finite",
             indices(findings.weak_finite_not_strong_finite)}}}};
}

}  // namespace quasiper

#endif  // QUASIPER_JSON_IO_HPP
