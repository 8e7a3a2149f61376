// Command-line front end: quasiperiodicity analysis of words, eventually
// periodic infinite words and morphisms, with JSON/DOT/CSV output.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quasiper/classify.hpp"
#include "quasiper/cover_automaton.hpp"
#include "quasiper/infinite_word.hpp"
#include "quasiper/json_io.hpp"
#include "quasiper/langops.hpp"
#include "quasiper/morphism.hpp"
#include "quasiper/oracle.hpp"
#include "quasiper/word.hpp"

namespace {

using quasiper::json;

quasiper::AlphabetRef alphabet_of_text(const std::string& text) {
  std::string symbols;
  for (char c : text) {
    if (c < 'a' || c > 'z') continue;
    if (symbols.find(c) == std::string::npos) symbols.push_back(c);
  }
  if (symbols.empty()) symbols = "a";
  std::sort(symbols.begin(), symbols.end());
  return quasiper::Alphabet::make(symbols);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_word_analyze(const std::string& text) {
  const auto alpha = alphabet_of_text(text);
  const quasiper::Word w = quasiper::Word::parse(alpha, text);
  json j{{"schema", quasiper::kSchemaTag}, {"kind", "word-analysis"}};
  j["word"] = w.str();
  j["length"] = w.size();
  const quasiper::CoverResult r = quasiper::quasiperiod(w);
  j["quasiperiod"] = quasiper::to_json(r.quasiperiod);
  j["cover_positions"] = r.cover_positions;
  json all = json::array();
  for (const quasiper::Word& q : quasiper::all_quasiperiods(w))
    all.push_back(q.str());
  j["quasiperiods"] = std::move(all);
  j["superprimitive"] = !r.has_value();
  const auto root = quasiper::primitive_root(w);
  j["primitive_root"] =
      json{{"root", root.root.str()}, {"exponent", root.exponent}};
  emit(j);
  return 0;
}

int run_inf_analyze(const std::string& text) {
  // the trailing ^w marker is syntax, not a letter
  std::string body = text;
  if (auto pos = body.rfind("^w"); pos != std::string::npos)
    body.erase(pos);
  const auto alpha = alphabet_of_text(body);
  const auto w = quasiper::EventuallyPeriodicWord::parse(alpha, text);
  json j{{"schema", quasiper::kSchemaTag}, {"kind", "infinite-word-analysis"}};
  j["input"] = text;
  j["normal_form"] = w.str();
  const auto q = quasiper::quasiperiod(w);
  j["quasiperiodic"] = q.has_value();
  j["quasiperiod"] = quasiper::to_json(q);
  emit(j);
  return 0;
}

int run_classify(const std::string& rules, std::size_t budget, bool strict,
                 bool timings, std::size_t product_ceiling) {
  const quasiper::Morphism f = quasiper::Morphism::parse(rules);
  quasiper::SearchBudget b = quasiper::SearchBudget::from_main_bound(budget);
  if (product_ceiling > 0) b.product_state_ceiling = product_ceiling;
  const auto t0 = std::chrono::steady_clock::now();
  const quasiper::FamilyReport report = quasiper::classify(f, b, strict);
  const auto t1 = std::chrono::steady_clock::now();
  json timing = nullptr;
  if (timings)
    timing = json{{"total_ms",
                   std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                       .count()}};
  emit(quasiper::report_to_json(f, b, strict, report, timing));
  return 0;
}

int run_qset(const std::string& rules) {
  const quasiper::Morphism f = quasiper::Morphism::parse(rules);
  json qs = json::array();
  for (const quasiper::Word& q : quasiper::candidate_quasiperiods(f))
    qs.push_back(q.str());
  emit(json{{"schema", quasiper::kSchemaTag},
            {"kind", "qset"},
            {"morphism", f.str()},
            {"quasiperiod_candidates", std::move(qs)}});
  return 0;
}

int run_automaton(const std::string& rules, const std::string& q_text,
                  const std::string& mode_text, const std::string& dot_path,
                  int enumerate_len) {
  const quasiper::Morphism f = quasiper::Morphism::parse(rules);
  const quasiper::Word q = quasiper::Word::parse(f.alphabet(), q_text);
  const quasiper::AutomatonMode mode =
      mode_text == "infinite" ? quasiper::AutomatonMode::infinite_words
                              : quasiper::AutomatonMode::finite_words;
  const auto A = quasiper::CoverAutomaton::build(f, q, mode);
  if (!dot_path.empty()) {
    if (dot_path == "-") {
      std::cout << A.to_dot();
      return 0;
    }
    std::ofstream out(dot_path);
    if (!out) throw std::invalid_argument("cannot write " + dot_path);
    out << A.to_dot();
  }
  json j = quasiper::automaton_to_json(A);
  if (enumerate_len >= 0) {
    json words = json::array();
    for (const quasiper::Word& u : quasiper::enumerate_accepted(
             A, static_cast<std::size_t>(enumerate_len)))
      words.push_back(u.str());
    j["accepted_words"] = std::move(words);
  }
  emit(j);
  return 0;
}

int run_sweep(std::size_t alphabet_size, std::size_t max_image_len,
              std::size_t budget, bool csv, std::size_t threads) {
  quasiper::SearchBudget b = quasiper::oracle::sweep_default_budget();
  if (budget > 0) {
    b.finite_witness_len = budget;
    b.pair_component_len = std::min<std::size_t>(budget, 4);
  }
  const auto findings =
      quasiper::oracle::sweep(alphabet_size, max_image_len, b, threads);
  if (csv)
    std::cout << quasiper::oracle::sweep_csv(findings);
  else
    emit(quasiper::sweep_to_json(findings));
  return 0;
}

int run_oracle_check(const std::string& rules, const std::string& q_text,
                     std::size_t max_len, std::size_t words_max_len,
                     std::size_t transfer_samples, std::uint64_t seed) {
  if (rules.empty() && words_max_len == 0 && transfer_samples == 0)
    throw std::invalid_argument(
        "oracle-check needs --morphism/--q, --words-max-len or "
        "--transfer-samples");
  json j{{"schema", quasiper::kSchemaTag}, {"kind", "oracle-check"}};
  bool ok = true;
  if (!rules.empty()) {
    const quasiper::Morphism f = quasiper::Morphism::parse(rules);
    const quasiper::Word q = quasiper::Word::parse(f.alphabet(), q_text);
    const auto r = quasiper::oracle::automaton_oracle_check(f, q, max_len);
    ok = ok && r.ok;
    j["automaton"] = json{{"morphism", f.str()},
                          {"q", q.str()},
                          {"max_len", max_len},
                          {"checked_words", r.checked},
                          {"ok", r.ok},
                          {"mismatch", quasiper::to_json(r.mismatch)}};
  }
  if (words_max_len > 0) {
    const auto r = quasiper::oracle::words_agreement_check(words_max_len);
    ok = ok && r.ok;
    j["words_agreement"] = json{{"max_len", words_max_len},
                                {"checked_words", r.checked},
                                {"ok", r.ok},
                                {"mismatch", quasiper::to_json(r.mismatch)}};
  }
  if (transfer_samples > 0) {
    const auto r =
        quasiper::oracle::quasiperiod_transfer_check(seed, transfer_samples);
    ok = ok && r.violations == 0 && r.samples == transfer_samples;
    j["quasiperiod_transfer"] =
        json{{"seed", seed},
             {"samples", r.samples},
             {"attempts", r.attempts},
             {"violations", r.violations}};
  }
  j["ok"] = ok;
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasiperiodicity analysis for words and morphisms"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for sampled checks");

  std::string word_text;
  auto* word_cmd = app.add_subcommand("word-analyze",
                                      "covers and quasiperiods of a word");
  word_cmd->add_option("word", word_text, "word over a-z")->required();

  std::string inf_text;
  auto* inf_cmd = app.add_subcommand(
      "inf-analyze", "quasiperiodicity of an eventually periodic word");
  inf_cmd->add_option("word", inf_text, "infinite word, e.g. bb(ab)^w")
      ->required();

  std::string classify_rules;
  std::size_t classify_budget = 8, classify_ceiling = 0;
  bool strict = false, timings = false;
  auto* classify_cmd =
      app.add_subcommand("classify", "four-family morphism classification");
  classify_cmd->add_option("morphism", classify_rules, "e.g. a->ab;b->aba")
      ->required();
  classify_cmd->add_option("--budget", classify_budget,
                           "bound for witness searches");
  classify_cmd->add_flag("--strict", strict,
                         "report exact-image acceptance gaps");
  classify_cmd->add_flag("--timings", timings, "include timings in output");
  classify_cmd->add_option("--product-ceiling", classify_ceiling,
                           "product state ceiling (0 = default)");

  std::string qset_rules;
  auto* qset_cmd =
      app.add_subcommand("qset", "candidate quasiperiods of a morphism");
  qset_cmd->add_option("morphism", qset_rules, "e.g. a->ab;b->aba")
      ->required();

  std::string auto_rules, auto_q, auto_mode = "finite", auto_dot;
  int auto_enumerate = -1;
  auto* auto_cmd = app.add_subcommand("automaton", "cover automaton of (f, q)");
  auto_cmd->add_option("morphism", auto_rules, "e.g. a->ab;b->aba")
      ->required();
  auto_cmd->add_option("--q", auto_q, "candidate quasiperiod")->required();
  auto_cmd->add_option("--mode", auto_mode, "finite|infinite")
      ->check(CLI::IsMember({"finite", "infinite"}));
  auto_cmd->add_option("--dot", auto_dot, "write Graphviz DOT here ('-' = stdout)");
  auto_cmd->add_option("--enumerate", auto_enumerate,
                       "list accepted words up to this length");

  std::size_t sweep_alpha = 2, sweep_len = 2, sweep_budget = 0,
              sweep_threads = 0;
  bool sweep_csv_out = false;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "classify all small morphisms");
  sweep_cmd->add_option("--alphabet-size", sweep_alpha, "2 or 3");
  sweep_cmd->add_option("--max-image-len", sweep_len, "image length bound")
      ->required();
  sweep_cmd->add_option("--budget", sweep_budget, "witness search bound");
  sweep_cmd->add_option("--threads", sweep_threads, "worker threads");
  sweep_cmd->add_flag("--csv", sweep_csv_out, "CSV instead of JSON");

  std::string oc_rules, oc_q;
  std::size_t oc_max_len = 7, oc_words_len = 0, oc_transfer = 0;
  auto* oc_cmd = app.add_subcommand(
      "oracle-check", "brute-force cross-checks of the fast paths");
  oc_cmd->add_option("--morphism", oc_rules, "morphism for the automaton check");
  oc_cmd->add_option("--q", oc_q, "candidate quasiperiod");
  oc_cmd->add_option("--max-len", oc_max_len, "word length bound");
  oc_cmd->add_option("--words-max-len", oc_words_len,
                     "compare naive and fast covers over binary words");
  oc_cmd->add_option("--transfer-samples", oc_transfer,
                     "sampled cover-transfer checks");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (word_cmd->parsed()) return run_word_analyze(word_text);
    if (inf_cmd->parsed()) return run_inf_analyze(inf_text);
    if (classify_cmd->parsed())
      return run_classify(classify_rules, classify_budget, strict, timings,
                          classify_ceiling);
    if (qset_cmd->parsed()) return run_qset(qset_rules);
    if (auto_cmd->parsed())
      return run_automaton(auto_rules, auto_q, auto_mode, auto_dot,
                           auto_enumerate);
    if (sweep_cmd->parsed())
      return run_sweep(sweep_alpha, sweep_len, sweep_budget, sweep_csv_out,
                       sweep_threads);
    if (oc_cmd->parsed())
      return run_oracle_check(oc_rules, oc_q, oc_max_len, oc_words_len,
                              oc_transfer, seed);
  } catch (const quasiper::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
