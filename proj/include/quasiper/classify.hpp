#ifndef QUASIPER_CLASSIFY_HPP
#define QUASIPER_CLASSIFY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "quasiper/cover_automaton.hpp"
#include "quasiper/infinite_word.hpp"
#include "quasiper/langops.hpp"
#include "quasiper/morphism.hpp"
#include "quasiper/word.hpp"

namespace quasiper {

/// Bounds for the semi-decision searches.
struct SearchBudget {
  std::size_t finite_witness_len = 8;
  std::size_t pair_component_len = 4;
  std::size_t imprimitivity_bound = 6;
  std::size_t iterate_depth = 2;
  std::size_t fixed_point_prefix_len = 200;
  std::size_t product_state_ceiling = kDefaultProductCeiling;

  static SearchBudget from_main_bound(std::size_t n) {
    SearchBudget b;
    b.finite_witness_len = n;
    b.pair_component_len = n;
    b.imprimitivity_bound = std::max<std::size_t>(n, 6);
    return b;
  }

  friend bool operator==(const SearchBudget&, const SearchBudget&) = default;
};

enum class Status { yes, no, unknown };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::yes: return "true";
    case Status::no: return "false";
    default: return "unknown";
  }
}

struct AutomatonSummary {
  Word q;
  std::size_t states = 0;
  bool complete = false;
  friend bool operator==(const AutomatonSummary&,
                         const AutomatonSummary&) = default;
};

/// Proof that the covering test succeeded: the candidate set, one automaton
/// summary per candidate, per-letter covers of the images (finite sense) and
/// per-first-letter uniform quasiperiods (infinite sense).
struct CoveringCertificate {
  std::vector<Word> quasiperiods;
  std::vector<AutomatonSummary> automata;
  std::vector<std::pair<Letter, Word>> letter_quasiperiods;
  std::vector<std::pair<Letter, std::vector<Word>>> uniform_by_first_letter;
  std::vector<std::pair<Word, Word>> exact_image_gaps;  // strict mode: (q, u)
  friend bool operator==(const CoveringCertificate&,
                         const CoveringCertificate&) = default;
};

struct CounterexampleCertificate {
  enum class Reason { superprimitive_letter_image, uncovered_word };
  Word word;
  Reason reason = Reason::uncovered_word;
  /// Strict mode: a word whose image was directly verified non-quasiperiodic.
  std::optional<Word> verified_word;
  friend bool operator==(const CounterexampleCertificate&,
                         const CounterexampleCertificate&) = default;
};

using WitnessWord = std::variant<Word, EventuallyPeriodicWord>;

/// A non-quasiperiodic preimage whose image is quasiperiodic, with the
/// certifying cover of the image.
struct WitnessCertificate {
  WitnessWord preimage;
  WitnessWord image;
  Word quasiperiod;
  std::optional<Word> minimal_quasiperiod;  // of infinite images
  std::string rule;
  friend bool operator==(const WitnessCertificate&,
                         const WitnessCertificate&) = default;
};

struct SufficientConditionCertificate {
  std::string rule;
  friend bool operator==(const SufficientConditionCertificate&,
                         const SufficientConditionCertificate&) = default;
};

struct BudgetExhaustedCertificate {
  SearchBudget budget;
  bool fixed_point_heuristic = false;
  std::optional<Word> heuristic_quasiperiod;
  friend bool operator==(const BudgetExhaustedCertificate&,
                         const BudgetExhaustedCertificate&) = default;
};

using Certificate =
    std::variant<CoveringCertificate, CounterexampleCertificate,
                 WitnessCertificate, SufficientConditionCertificate,
                 BudgetExhaustedCertificate>;

struct Verdict {
  Status status = Status::unknown;
  Certificate certificate = BudgetExhaustedCertificate{};
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct FamilyReport {
  Verdict strong_finite;
  Verdict strong_infinite;
  Verdict weak_finite;
  Verdict weak_infinite;
  friend bool operator==(const FamilyReport&, const FamilyReport&) = default;
};

/// Q(f): the non-empty words q that are factors of f(a)^3 with
/// |q| <= 2|f(a)| for every letter a, in shortlex order. Every quasiperiod
/// of an image f(u) or f(w) of a strongly quasiperiodic morphism lies here.
inline std::vector<Word> candidate_quasiperiods(const Morphism& f) {
  std::set<Word> common;
  bool first = true;
  for (Letter a : f.alphabet()->letters()) {
    const Word cube = f.image(a).repeat(3);
    const std::size_t cap = 2 * f.image(a).size();
    std::set<Word> factors;
    for (std::size_t len = 1; len <= std::min(cap, cube.size()); ++len)
      for (std::size_t pos = 0; pos + len <= cube.size(); ++pos)
        factors.insert(cube.substr(pos, len));
    if (first) {
      common = std::move(factors);
      first = false;
    } else {
      std::set<Word> keep;
      for (const Word& w : common)
        if (factors.count(w)) keep.insert(w);
      common = std::move(keep);
    }
  }
  return std::vector<Word>(common.begin(), common.end());
}

namespace detail {

inline Word letter_word(const AlphabetRef& alpha,
                        std::initializer_list<Letter> ls) {
  Word w(alpha);
  for (Letter a : ls) w.push_back(a);
  return w;
}

/// All non-empty words of length <= max_len in shortlex order.
inline std::vector<Word> words_up_to(const AlphabetRef& alpha,
                                     std::size_t max_len) {
  std::vector<Word> out;
  std::size_t level_begin = 0;
  for (Letter a : alpha->letters()) out.push_back(letter_word(alpha, {a}));
  for (std::size_t len = 2; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (Letter a : alpha->letters()) out.push_back(out[i] + a);
    level_begin = level_end;
  }
  return out;
}

/// Words with pairwise distinct letters (the empty word included), shortlex.
inline std::vector<Word> injective_words(const AlphabetRef& alpha) {
  std::vector<Word> out{Word(alpha)};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= alpha->size(); ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (Letter a : alpha->letters()) {
        bool used = false;
        for (Letter b : out[i].letters())
          if (a == b) used = true;
        if (!used) out.push_back(out[i] + a);
      }
    level_begin = level_end;
  }
  return out;
}

inline bool contains_letter(const Word& w, Letter a) {
  for (Letter b : w.letters())
    if (a == b) return true;
  return false;
}

struct StrongAnalysis {
  std::vector<Word> qset;
  std::vector<CoverAutomaton> automata;
  UnionUniversality result;
};

inline StrongAnalysis analyze_union(const Morphism& f, AutomatonMode mode,
                                    std::size_t ceiling) {
  StrongAnalysis out;
  out.qset = candidate_quasiperiods(f);
  out.automata.reserve(out.qset.size());
  for (const Word& q : out.qset)
    out.automata.push_back(CoverAutomaton::build(f, q, mode));
  std::vector<const CoverAutomaton*> ptrs;
  ptrs.reserve(out.automata.size());
  for (const CoverAutomaton& A : out.automata) ptrs.push_back(&A);
  out.result = union_universal(ptrs, f.alphabet(), ceiling);
  return out;
}

inline std::vector<AutomatonSummary> summarize(
    const std::vector<CoverAutomaton>& automata) {
  std::vector<AutomatonSummary> out;
  out.reserve(automata.size());
  for (const CoverAutomaton& A : automata)
    out.push_back(AutomatonSummary{A.q(), A.state_count(), A.is_complete()});
  return out;
}

/// Strict-mode probe: words u with f(u) = q for a superprimitive q in Q(f).
/// Acceptance of such u by the automaton of q does not witness a
/// quasiperiodic image.
inline std::vector<std::pair<Word, Word>> exact_image_gaps(
    const Morphism& f, const std::vector<Word>& qset) {
  std::vector<std::pair<Word, Word>> gaps;
  for (const Word& q : qset) {
    if (!is_superprimitive(q)) continue;
    // DFS over words whose image is still a prefix of q
    std::vector<Word> stack{Word(f.alphabet())};
    while (!stack.empty()) {
      Word u = std::move(stack.back());
      stack.pop_back();
      Word img = apply(f, u);
      if (img == q && !u.empty()) {
        gaps.emplace_back(q, u);
        continue;
      }
      for (Letter a : f.alphabet()->letters()) {
        Word ext = img + f.image(a);
        if (ext.size() <= q.size() && q.starts_with(ext))
          stack.push_back(u + a);
      }
    }
  }
  std::sort(gaps.begin(), gaps.end(),
            [](const auto& x, const auto& y) {
              if (!(x.first == y.first)) return x.first < y.first;
              return x.second < y.second;
            });
  return gaps;
}

}  // namespace detail

/// Whether every finite word maps to a quasiperiodic word: all letter images
/// must be quasiperiodic and the cover automata of Q(f) must jointly accept
/// every word.
inline Verdict strong_qp_finite(const Morphism& f,
                                const SearchBudget& budget = {},
                                bool strict = false) {
  std::vector<std::pair<Letter, Word>> letter_qps;
  for (Letter a : f.alphabet()->letters()) {
    CoverResult r = quasiperiod(f.image(a));
    if (!r.has_value()) {
      CounterexampleCertificate cert{
          detail::letter_word(f.alphabet(), {a}),
          CounterexampleCertificate::Reason::superprimitive_letter_image,
          std::nullopt};
      if (strict) cert.verified_word = cert.word;
      return Verdict{Status::no, std::move(cert)};
    }
    letter_qps.emplace_back(a, *r.quasiperiod);
  }
  auto analysis = detail::analyze_union(f, AutomatonMode::finite_words,
                                        budget.product_state_ceiling);
  if (analysis.result.universal) {
    CoveringCertificate cert;
    cert.quasiperiods = analysis.qset;
    cert.automata = detail::summarize(analysis.automata);
    cert.letter_quasiperiods = std::move(letter_qps);
    if (strict) cert.exact_image_gaps = detail::exact_image_gaps(f, cert.quasiperiods);
    return Verdict{Status::yes, std::move(cert)};
  }
  CounterexampleCertificate cert{*analysis.result.counterexample,
                                 CounterexampleCertificate::Reason::uncovered_word,
                                 std::nullopt};
  if (strict) {
    for (const Word& u : detail::words_up_to(
             f.alphabet(),
             std::max(budget.finite_witness_len, cert.word.size()))) {
      if (!is_quasiperiodic(apply(f, u))) {
        cert.verified_word = u;
        break;
      }
    }
  }
  return Verdict{Status::no, std::move(cert)};
}

/// Whether every infinite word maps to a quasiperiodic word: the all-final
/// cover automata of Q(f) must jointly accept every finite word.
inline Verdict strong_qp_infinite(const Morphism& f,
                                  const SearchBudget& budget = {},
                                  bool /*strict*/ = false) {
  auto analysis = detail::analyze_union(f, AutomatonMode::infinite_words,
                                        budget.product_state_ceiling);
  if (analysis.result.universal) {
    CoveringCertificate cert;
    cert.quasiperiods = analysis.qset;
    cert.automata = detail::summarize(analysis.automata);
    for (Letter a : f.alphabet()->letters()) {
      std::vector<Word> qs;
      for (const CoverAutomaton& A : analysis.automata)
        if (A.covers_cone(a)) qs.push_back(A.q());
      cert.uniform_by_first_letter.emplace_back(a, std::move(qs));
    }
    return Verdict{Status::yes, std::move(cert)};
  }
  return Verdict{
      Status::no,
      CounterexampleCertificate{
          *analysis.result.counterexample,
          CounterexampleCertificate::Reason::uncovered_word, std::nullopt}};
}

struct ImprimitivityWitness {
  Word trigger;  // a^i b or a b^j with imprimitive image
  EventuallyPeriodicWord witness;
  Word quasiperiod;
  friend bool operator==(const ImprimitivityWitness&,
                         const ImprimitivityWitness&) = default;
};

namespace detail {

/// Case analysis for an imprimitive f(first^i second) = w^k, k >= 2 over a
/// binary alphabet. Produces an eventually periodic non-quasiperiodic word
/// whose image is quasiperiodic, with the certifying cover.
inline std::optional<std::pair<EventuallyPeriodicWord, Word>>
imprimitive_case_analysis(const Morphism& f, Letter first, Letter second,
                          std::size_t i, const Word& root) {
  const AlphabetRef& alpha = f.alphabet();
  const Word& fa = f.image(first);
  if (primitive_root(fa).root == primitive_root(f.image(second)).root) {
    // both images are powers of the same word z: f(first second^w) = z^w
    return std::make_pair(
        EventuallyPeriodicWord(letter_word(alpha, {first}),
                               letter_word(alpha, {second})),
        primitive_root(fa).root);
  }
  if (root.size() >= i * fa.size()) {
    // root = fa^i x, f(second) = x root^(k-1):
    // f(second first second^w) is (x fa^i x)-covered
    Word x = root.substr(i * fa.size(), root.size() - i * fa.size());
    Word q = x + fa.repeat(i) + x;
    return std::make_pair(
        EventuallyPeriodicWord(letter_word(alpha, {second, first}),
                               letter_word(alpha, {second})),
        std::move(q));
  }
  if (root.size() > (i - 1) * fa.size()) {
    // root = fa^(i-1) x with fa = xy and y a border partner of fa:
    // fa = (xy)^(l+1) x and f(first second first^w) is xyx-covered
    Word x = root.substr((i - 1) * fa.size(), root.size() - (i - 1) * fa.size());
    if (x.size() >= fa.size()) return std::nullopt;
    auto od = overlap_decomposition(fa, x.size());
    if (!od) return std::nullopt;
    Word q = od->x + od->y + od->x;
    return std::make_pair(
        EventuallyPeriodicWord(letter_word(alpha, {first, second}),
                               letter_word(alpha, {first})),
        std::move(q));
  }
  return std::nullopt;  // Fine-Wilf regime, handled by the common-root branch
}

}  // namespace detail

/// Searches a^i b and a b^j (i, j <= bound) for an imprimitive image. On a
/// hit, builds a non-quasiperiodic eventually periodic word with
/// quasiperiodic image via the case analysis, verifying the result; falls
/// back to probing the four canonical shapes.
inline std::optional<ImprimitivityWitness> imprimitivity_witness(
    const Morphism& f, std::size_t bound) {
  if (f.alphabet()->size() != 2)
    throw std::invalid_argument(
        "imprimitivity search requires a binary alphabet");
  const AlphabetRef& alpha = f.alphabet();
  const Letter a{0}, b{1};

  auto finish = [&](const Word& trigger, Letter first, Letter second,
                    std::size_t i,
                    const Word& conjugate) -> std::optional<ImprimitivityWitness> {
    const PrimitiveRoot pr = primitive_root(conjugate);
    if (pr.exponent < 2) return std::nullopt;
    auto built =
        detail::imprimitive_case_analysis(f, first, second, i, pr.root);
    if (built && !is_quasiperiodic(built->first) &&
        is_q_quasiperiodic(apply(f, built->first), built->second))
      return ImprimitivityWitness{trigger, built->first, built->second};
    // fallback: scan the four canonical shapes directly
    const EventuallyPeriodicWord shapes[] = {
        EventuallyPeriodicWord(detail::letter_word(alpha, {a}),
                               detail::letter_word(alpha, {b})),
        EventuallyPeriodicWord(detail::letter_word(alpha, {a, b}),
                               detail::letter_word(alpha, {a})),
        EventuallyPeriodicWord(detail::letter_word(alpha, {b}),
                               detail::letter_word(alpha, {a})),
        EventuallyPeriodicWord(detail::letter_word(alpha, {b, a}),
                               detail::letter_word(alpha, {b}))};
    for (const EventuallyPeriodicWord& w : shapes) {
      if (is_quasiperiodic(w)) continue;
      if (auto mq = quasiperiod(apply(f, w)))
        return ImprimitivityWitness{trigger, w, *mq};
    }
    return std::nullopt;
  };

  for (std::size_t i = 1; i <= bound; ++i) {
    Word u = detail::letter_word(alpha, {a}).repeat(i) +
             detail::letter_word(alpha, {b});
    if (auto got = finish(u, a, b, i, apply(f, u))) return got;
  }
  for (std::size_t j = 2; j <= bound; ++j) {
    Word u = detail::letter_word(alpha, {a}) +
             detail::letter_word(alpha, {b}).repeat(j);
    // f(a b^j) is imprimitive iff its conjugate f(b^j a) is
    Word conjugate = apply(f, detail::letter_word(alpha, {b}).repeat(j) +
                                  detail::letter_word(alpha, {a}));
    if (auto got = finish(u, b, a, j, conjugate)) return got;
  }
  return std::nullopt;
}

struct DemiqpWitness {
  EventuallyPeriodicWord witness;
  Word quasiperiod;
  friend bool operator==(const DemiqpWitness&, const DemiqpWitness&) = default;
};

/// Enumerates the canonical shapes of non-quasiperiodic eventually periodic
/// words — purely periodic words over distinct letters, and x a y (b z)^w
/// with x, y, z repeating no letter, a absent from xyz and b absent from z —
/// and returns the first one whose image is covered by some q in Q(f).
inline std::optional<DemiqpWitness> demiqp_search(const Morphism& f) {
  const AlphabetRef& alpha = f.alphabet();
  const std::vector<Word> qset = candidate_quasiperiods(f);
  if (qset.empty()) return std::nullopt;

  const std::vector<Word> inj = detail::injective_words(alpha);
  std::vector<EventuallyPeriodicWord> candidates;
  for (const Word& p : inj)
    if (!p.empty()) candidates.emplace_back(Word(alpha), p);
  for (const Word& x : inj)
    for (Letter a : alpha->letters()) {
      if (detail::contains_letter(x, a)) continue;
      for (const Word& y : inj) {
        if (detail::contains_letter(y, a)) continue;
        for (Letter b : alpha->letters())
          for (const Word& z : inj) {
            if (detail::contains_letter(z, a) ||
                detail::contains_letter(z, b))
              continue;
            candidates.emplace_back(x + a + y,
                                    detail::letter_word(alpha, {b}) + z);
          }
      }
    }

  struct Probe {
    EventuallyPeriodicWord word;
    EventuallyPeriodicWord image;
  };
  std::vector<Probe> probes;
  std::set<std::string> seen;
  for (const EventuallyPeriodicWord& w : candidates) {
    if (!seen.insert(w.str()).second) continue;
    if (is_quasiperiodic(w)) continue;
    probes.push_back(Probe{w, apply(f, w)});
  }
  for (const Word& q : qset)
    for (const Probe& p : probes)
      if (is_q_quasiperiodic(p.image, q)) return DemiqpWitness{p.word, q};
  return std::nullopt;
}

namespace detail {

inline bool letter_power_images(const Morphism& f) {
  for (Letter a : f.alphabet()->letters())
    for (Letter b : f.image(a).letters())
      if (!(a == b)) return false;
  return true;
}

inline WitnessCertificate make_infinite_witness(
    const Morphism& f, const EventuallyPeriodicWord& preimage, Word q,
    std::string rule) {
  EventuallyPeriodicWord image = apply(f, preimage);
  std::optional<Word> minimal = quasiperiod(image);
  return WitnessCertificate{preimage, image, std::move(q), std::move(minimal),
                            std::move(rule)};
}

/// The sufficient conditions for mapping some non-quasiperiodic infinite
/// word to a quasiperiodic one, tried in order; every returned witness is
/// re-verified.
inline std::optional<WitnessCertificate> weak_infinite_route_search(
    const Morphism& f, const SearchBudget& budget,
    const Verdict* strong_inf_cached) {
  const AlphabetRef& alpha = f.alphabet();
  const auto letters = alpha->letters();

  // non-prefix / non-suffix morphisms
  if (auto cv = code_violation(f)) {
    if (cv->kind == CodeViolation::Kind::prefix) {
      // f(x) prefix of f(y): f(y x y^w) is f(yx)-covered
      EventuallyPeriodicWord w(letter_word(alpha, {cv->second, cv->first}),
                               letter_word(alpha, {cv->second}));
      Word q = f.image(cv->second) + f.image(cv->first);
      if (!is_quasiperiodic(w) && is_q_quasiperiodic(apply(f, w), q))
        return make_infinite_witness(f, w, q, "prefix-code-violation");
    } else if (cv->kind == CodeViolation::Kind::suffix) {
      // f(x) suffix of f(y): f(x y^w) is f(xy)-covered
      EventuallyPeriodicWord w(letter_word(alpha, {cv->first}),
                               letter_word(alpha, {cv->second}));
      Word q = f.image(cv->first) + f.image(cv->second);
      if (!is_quasiperiodic(w) && is_q_quasiperiodic(apply(f, w), q))
        return make_infinite_witness(f, w, q, "suffix-code-violation");
    }
  }

  // strongly quasiperiodic on infinite words already maps a b^w somewhere
  // quasiperiodic
  if (letters.size() >= 2) {
    Verdict strong = strong_inf_cached ? *strong_inf_cached
                                       : strong_qp_infinite(f, budget);
    if (strong.status == Status::yes) {
      EventuallyPeriodicWord w(letter_word(alpha, {letters[0]}),
                               letter_word(alpha, {letters[1]}));
      EventuallyPeriodicWord image = apply(f, w);
      if (auto mq = quasiperiod(image); mq && !is_quasiperiodic(w))
        return WitnessCertificate{w, image, *mq, mq,
                                  "strongly-quasiperiodic-image"};
    }
  }

  if (letters.size() == 2) {
    if (auto iw = imprimitivity_witness(f, budget.imprimitivity_bound)) {
      WitnessCertificate cert = make_infinite_witness(
          f, iw->witness, iw->quasiperiod, "imprimitive-image");
      return cert;
    }
  }

  if (auto dq = demiqp_search(f))
    return make_infinite_witness(f, dq->witness, dq->quasiperiod,
                                 "demiqp-shape");

  // bounded enumeration of u v^w pairs in normal form
  const auto words = words_up_to(alpha, budget.pair_component_len);
  for (const Word& u : words)
    for (const Word& v : words) {
      EventuallyPeriodicWord w(u, v);
      if (!(w.preperiod() == u) || !(w.period() == v)) continue;
      if (is_quasiperiodic(w)) continue;
      EventuallyPeriodicWord image = apply(f, w);
      if (auto mq = quasiperiod(image))
        return WitnessCertificate{w, image, *mq, mq, "bounded-pair-search"};
    }
  return std::nullopt;
}

struct FixedPointHeuristic {
  Letter letter{};
  Word quasiperiod;
};

/// Covers positions of a long fixed-point prefix with a stable short
/// candidate; evidence only, never a verdict by itself.
inline std::optional<FixedPointHeuristic> fixed_point_heuristic(
    const Morphism& f, const SearchBudget& budget) {
  if (!is_growing(f)) return std::nullopt;
  auto shortest_cover_of_prefix = [](const Word& p) -> std::optional<Word> {
    for (std::size_t len = 1; len * 4 <= p.size(); ++len) {
      Word q = p.prefix(len);
      auto occ = occurrences(p, q);
      if (occ.empty() || occ.front() != 0) continue;
      bool ok = true;
      std::size_t covered = 0;
      for (std::size_t o : occ) {
        if (o > covered) { ok = false; break; }
        covered = std::max(covered, o + len);
      }
      if (ok && covered + len >= p.size()) return q;
    }
    return std::nullopt;
  };
  for (Letter a : f.alphabet()->letters()) {
    if (!is_prolongable(f, a)) continue;
    const std::size_t n = std::max<std::size_t>(budget.fixed_point_prefix_len, 32);
    Word full = fixed_point_prefix(f, a, n);
    auto q_full = shortest_cover_of_prefix(full);
    auto q_half = shortest_cover_of_prefix(full.prefix(n / 2));
    if (q_full && q_half && *q_full == *q_half)
      return FixedPointHeuristic{a, *q_full};
  }
  return std::nullopt;
}

/// Turns a witness for f^k into one for f: the smallest i with a
/// quasiperiodic f^i-image makes f^(i-1) of the witness a witness for f.
inline WitnessCertificate rebase_iterate_witness(
    const Morphism& f, std::size_t k, const EventuallyPeriodicWord& pre,
    const std::string& inner_rule) {
  EventuallyPeriodicWord current = pre;
  for (std::size_t i = 1; i <= k; ++i) {
    EventuallyPeriodicWord image = apply(f, current);
    if (auto mq = quasiperiod(image))
      return WitnessCertificate{current, image, *mq, mq,
                                "iterate-reduction(k=" + std::to_string(k) +
                                    "," + inner_rule + ")"};
    current = image;
  }
  throw std::logic_error("iterate reduction lost its witness");
}

}  // namespace detail

/// Whether f maps some non-quasiperiodic finite word to a quasiperiodic one.
/// True via: a quasiperiodic letter image, a prefix/suffix code violation,
/// an imprimitive image over a binary alphabet, or bounded enumeration.
/// False only for the unary identity; otherwise unknown.
inline Verdict weak_qp_finite(const Morphism& f,
                              const SearchBudget& budget = {}) {
  const AlphabetRef& alpha = f.alphabet();
  const auto letters = alpha->letters();

  if (letters.size() == 1 &&
      f.image(letters[0]) == detail::letter_word(alpha, {letters[0]}))
    return Verdict{Status::no, SufficientConditionCertificate{"unary-identity"}};

  for (Letter a : letters) {
    CoverResult r = quasiperiod(f.image(a));
    if (r.has_value())
      return Verdict{Status::yes,
                     WitnessCertificate{detail::letter_word(alpha, {a}),
                                        f.image(a), *r.quasiperiod,
                                        std::nullopt,
                                        "quasiperiodic-letter-image"}};
  }

  if (auto cv = code_violation(f);
      cv && cv->kind != CodeViolation::Kind::non_code) {
    const bool prefix = cv->kind == CodeViolation::Kind::prefix;
    for (std::size_t k = 2; k <= 5; ++k) {
      // prefix violation: f(y^k x) is f(yx)-covered; suffix: f(x y^k), f(xy)
      Word repeated = detail::letter_word(alpha, {cv->second}).repeat(k);
      Word u = prefix ? repeated + cv->first
                      : detail::letter_word(alpha, {cv->first}) + repeated;
      Word q = prefix ? f.image(cv->second) + f.image(cv->first)
                      : f.image(cv->first) + f.image(cv->second);
      Word img = apply(f, u);
      if (!is_quasiperiodic(u) && is_q_quasiperiodic(img, q))
        return Verdict{Status::yes,
                       WitnessCertificate{u, img, q, std::nullopt,
                                          prefix ? "prefix-code-violation"
                                                 : "suffix-code-violation"}};
    }
  }

  if (letters.size() == 2) {
    const Letter a = letters[0], b = letters[1];
    auto probe = [&](const Word& u) -> std::optional<Verdict> {
      Word img = apply(f, u);
      PrimitiveRoot pr = primitive_root(img);
      if (pr.exponent < 2 || is_quasiperiodic(u)) return std::nullopt;
      return Verdict{Status::yes,
                     WitnessCertificate{u, img, pr.root, std::nullopt,
                                        "imprimitive-image"}};
    };
    for (std::size_t i = 1; i <= budget.imprimitivity_bound; ++i)
      if (auto v = probe(detail::letter_word(alpha, {a}).repeat(i) +
                         detail::letter_word(alpha, {b})))
        return *v;
    for (std::size_t j = 2; j <= budget.imprimitivity_bound; ++j)
      if (auto v = probe(detail::letter_word(alpha, {a}) +
                         detail::letter_word(alpha, {b}).repeat(j)))
        return *v;
  }

  for (const Word& u :
       detail::words_up_to(alpha, budget.finite_witness_len)) {
    if (is_quasiperiodic(u)) continue;
    Word img = apply(f, u);
    CoverResult r = quasiperiod(img);
    if (r.has_value())
      return Verdict{Status::yes,
                     WitnessCertificate{u, img, *r.quasiperiod, std::nullopt,
                                        "bounded-search"}};
  }
  BudgetExhaustedCertificate cert;
  cert.budget = budget;
  return Verdict{Status::unknown, std::move(cert)};
}

/// Whether f maps some non-quasiperiodic infinite word to a quasiperiodic
/// one. Sufficient conditions are tried on f and on its powers f^k; false
/// only when every image is a power of its own letter.
inline Verdict weak_qp_infinite(const Morphism& f,
                                const SearchBudget& budget = {},
                                const Verdict* strong_inf_cached = nullptr) {
  if (detail::letter_power_images(f))
    return Verdict{Status::no,
                   SufficientConditionCertificate{"letter-power-images"}};

  for (std::size_t k = 1; k <= std::max<std::size_t>(budget.iterate_depth, 1);
       ++k) {
    Morphism fk = k == 1 ? f : compose_power(f, k);
    auto found = detail::weak_infinite_route_search(
        fk, budget, k == 1 ? strong_inf_cached : nullptr);
    if (!found) continue;
    if (k == 1) return Verdict{Status::yes, std::move(*found)};
    return Verdict{Status::yes,
                   detail::rebase_iterate_witness(
                       f, k, std::get<EventuallyPeriodicWord>(found->preimage),
                       found->rule)};
  }

  BudgetExhaustedCertificate cert;
  cert.budget = budget;
  if (auto heur = detail::fixed_point_heuristic(f, budget)) {
    cert.fixed_point_heuristic = true;
    cert.heuristic_quasiperiod = heur->quasiperiod;
  }
  return Verdict{Status::unknown, std::move(cert)};
}

/// Runs the four verdicts and enforces the implication structure between
/// them (strong-finite implies strong-infinite and weak-finite;
/// strong-infinite implies weak-infinite on alphabets with at least two
/// letters).
inline FamilyReport classify(const Morphism& f, const SearchBudget& budget = {},
                             bool strict = false) {
  FamilyReport report{
      strong_qp_finite(f, budget, strict),
      strong_qp_infinite(f, budget, strict),
      weak_qp_finite(f, budget),
      Verdict{},
  };
  report.weak_infinite = weak_qp_infinite(f, budget, &report.strong_infinite);

  if (report.strong_finite.status == Status::yes) {
    if (report.strong_infinite.status != Status::yes)
      throw std::logic_error(
          "strongly quasiperiodic on finite words but not on infinite words");
    if (report.weak_finite.status != Status::yes)
      throw std::logic_error(
          "strongly but not weakly quasiperiodic on finite words");
  }
  if (report.strong_infinite.status == Status::yes &&
      f.alphabet()->size() >= 2 &&
      report.weak_infinite.status != Status::yes)
    throw std::logic_error(
        "strongly but not weakly quasiperiodic on infinite words");
  return report;
}

}  // namespace quasiper

#endif  // QUASIPER_CLASSIFY_HPP
