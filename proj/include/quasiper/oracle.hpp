#ifndef QUASIPER_ORACLE_HPP
#define QUASIPER_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "quasiper/classify.hpp"
#include "quasiper/cover_automaton.hpp"
#include "quasiper/morphism.hpp"
#include "quasiper/word.hpp"

// Brute-force reference implementations. Deliberately naive and independent
// of the fast paths (direct scans, no failure functions, no prefix
// shortcuts), so agreement is evidence rather than tautology.

namespace quasiper::oracle {

inline bool occurs_at(const Word& w, const Word& q, std::size_t pos) {
  if (pos + q.size() > w.size()) return false;
  for (std::size_t j = 0; j < q.size(); ++j)
    if (!(w[pos + j] == q[j])) return false;
  return true;
}

inline bool naive_is_q_quasiperiodic(const Word& w, const Word& q) {
  if (q.empty() || w == q) return false;
  std::vector<bool> covered(w.size(), false);
  for (std::size_t pos = 0; pos + q.size() <= w.size(); ++pos)
    if (occurs_at(w, q, pos))
      for (std::size_t j = 0; j < q.size(); ++j) covered[pos + j] = true;
  for (bool c : covered)
    if (!c) return false;
  return !w.empty();
}

/// Tries every non-empty proper factor of w as a cover, by direct position
/// marking; shortest success.
inline std::optional<Word> naive_quasiperiod(const Word& w) {
  for (std::size_t len = 1; len < w.size(); ++len)
    for (std::size_t start = 0; start + len <= w.size(); ++start) {
      Word q = w.substr(start, len);
      if (naive_is_q_quasiperiodic(w, q)) return q;
    }
  return std::nullopt;
}

struct AutomatonOracleResult {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<Word> mismatch;
};

/// Exhaustively compares automaton acceptance with the defining condition:
/// u is accepted iff f(u) is empty, equals q, or is q-quasiperiodic.
inline AutomatonOracleResult automaton_oracle_check(const Morphism& f,
                                                    const Word& q,
                                                    std::size_t max_len) {
  const CoverAutomaton A =
      CoverAutomaton::build(f, q, AutomatonMode::finite_words);
  AutomatonOracleResult result;
  std::vector<Word> level{Word(f.alphabet())};
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const Word& u : level) {
      const Word img = apply(f, u);
      const bool expected =
          img.empty() || img == q || naive_is_q_quasiperiodic(img, q);
      ++result.checked;
      if (A.accepts(u) != expected) {
        result.ok = false;
        result.mismatch = u;
        return result;
      }
    }
    if (len == max_len) break;
    std::vector<Word> next;
    next.reserve(level.size() * f.alphabet()->size());
    for (const Word& u : level)
      for (Letter a : f.alphabet()->letters()) next.push_back(u + a);
    level = std::move(next);
  }
  return result;
}

struct SweepRow {
  std::size_t index = 0;
  Morphism morphism;
  FamilyReport report;
};

struct SweepFindings {
  std::vector<SweepRow> rows;
  // decided rows witnessing the false converses
  std::vector<std::size_t> strong_infinite_not_strong_finite;
  std::vector<std::size_t> weak_finite_not_weak_infinite;
  std::vector<std::size_t> weak_infinite_not_strong_infinite;
  std::vector<std::size_t> weak_finite_not_strong_finite;
};

inline SearchBudget sweep_default_budget() {
  SearchBudget b;
  b.finite_witness_len = 6;
  b.pair_component_len = 3;
  b.iterate_depth = 2;
  return b;
}

/// Classifies every morphism over the first `alphabet_size` letters whose
/// images have length <= max_image_len, in image-tuple shortlex order.
/// Rows are independent and computed in parallel; output order is by
/// enumeration index.
inline SweepFindings sweep(std::size_t alphabet_size,
                           std::size_t max_image_len,
                           const SearchBudget& budget = sweep_default_budget(),
                           std::size_t threads = 0) {
  if (alphabet_size < 1 || alphabet_size > 3)
    throw std::invalid_argument("sweep supports alphabets of 1 to 3 letters");
  if (max_image_len < 1 || max_image_len > 4)
    throw std::invalid_argument("sweep supports image lengths 1 to 4");
  const AlphabetRef alpha =
      Alphabet::make(std::string("abc").substr(0, alphabet_size));
  const std::vector<Word> images = detail::words_up_to(alpha, max_image_len);

  std::vector<Morphism> morphisms;
  std::vector<std::size_t> picks(alphabet_size, 0);
  for (;;) {
    std::vector<Word> imgs;
    imgs.reserve(alphabet_size);
    for (std::size_t p : picks) imgs.push_back(images[p]);
    morphisms.emplace_back(alpha, std::move(imgs));
    std::size_t at = alphabet_size;
    while (at-- > 0) {
      if (++picks[at] < images.size()) break;
      picks[at] = 0;
      if (at == 0) goto done;
    }
  }
done:

  std::vector<std::optional<SweepRow>> slots(morphisms.size());
  if (threads == 0)
    threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  threads = std::min(threads, morphisms.size());
  auto work = [&](std::size_t worker) {
    for (std::size_t i = worker; i < morphisms.size(); i += threads)
      slots[i] = SweepRow{i, morphisms[i], classify(morphisms[i], budget)};
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (std::thread& t : pool) t.join();

  SweepFindings findings;
  findings.rows.reserve(slots.size());
  for (auto& slot : slots) findings.rows.push_back(std::move(*slot));
  for (const SweepRow& row : findings.rows) {
    const FamilyReport& r = row.report;
    if (r.strong_infinite.status == Status::yes &&
        r.strong_finite.status == Status::no)
      findings.strong_infinite_not_strong_finite.push_back(row.index);
    if (r.weak_finite.status == Status::yes &&
        r.weak_infinite.status == Status::no)
      findings.weak_finite_not_weak_infinite.push_back(row.index);
    if (r.weak_infinite.status == Status::yes &&
        r.strong_infinite.status == Status::no)
      findings.weak_infinite_not_strong_infinite.push_back(row.index);
    if (r.weak_finite.status == Status::yes &&
        r.strong_finite.status == Status::no)
      findings.weak_finite_not_strong_finite.push_back(row.index);
  }
  return findings;
}

struct AgreementResult {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<Word> mismatch;
};

/// Compares the fast shortest-cover computation with the naive one over all
/// binary words of length <= max_len.
inline AgreementResult words_agreement_check(std::size_t max_len) {
  const AlphabetRef alpha = Alphabet::make("ab");
  AgreementResult result;
  for (const Word& w : quasiper::detail::words_up_to(alpha, max_len)) {
    ++result.checked;
    const CoverResult fast = quasiperiod(w);
    const std::optional<Word> naive = naive_quasiperiod(w);
    const bool same = fast.has_value() == naive.has_value() &&
                      (!naive || *fast.quasiperiod == *naive);
    if (!same) {
      result.ok = false;
      result.mismatch = w;
      return result;
    }
  }
  return result;
}

struct TransferCheckResult {
  std::size_t samples = 0;
  std::size_t attempts = 0;
  std::size_t violations = 0;
  std::optional<Morphism> first_violation;
};

/// Seeded sampling of (f, u, v, k) with k|f(u)| >= |f(v)| and both f(u) and
/// f(u^k v u^k) quasiperiodic; their shortest covers must coincide.
inline TransferCheckResult quasiperiod_transfer_check(
    std::uint64_t seed, std::size_t target_samples,
    std::size_t max_attempts = 2'000'000) {
  const AlphabetRef alpha = Alphabet::make("ab");
  const std::vector<Word> pool = quasiper::detail::words_up_to(alpha, 3);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_k(1, 3);
  TransferCheckResult result;
  while (result.samples < target_samples &&
         result.attempts < max_attempts) {
    ++result.attempts;
    Morphism f(alpha, {pool[pick(rng)], pool[pick(rng)]});
    const Word& u = pool[pick(rng)];
    const Word& v = pool[pick(rng)];
    const std::size_t k = pick_k(rng);
    const Word fu = apply(f, u);
    if (k * fu.size() < apply(f, v).size()) continue;
    const CoverResult qu = quasiperiod(fu);
    if (!qu.has_value()) continue;
    const Word big = apply(f, u.repeat(k) + v + u.repeat(k));
    const CoverResult qbig = quasiperiod(big);
    if (!qbig.has_value()) continue;
    ++result.samples;
    if (!(*qu.quasiperiod == *qbig.quasiperiod)) {
      ++result.violations;
      if (!result.first_violation) result.first_violation = f;
    }
  }
  return result;
}

inline std::string sweep_csv(const SweepFindings& findings) {
  std::ostringstream os;
  os << "index,morphism,strong_finite,strong_infinite,weak_finite,"
        "weak_infinite\n";
  for (const SweepRow& row : findings.rows)
    os << row.index << ',' << row.morphism.str() << ','
       << to_string(row.report.strong_finite.status) << ','
       << to_string(row.report.strong_infinite.status) << ','
       << to_string(row.report.weak_finite.status) << ','
       << to_string(row.report.weak_infinite.status) << '\n';
  return os.str();
}

}  // namespace quasiper::oracle

#endif  // QUASIPER_ORACLE_HPP
