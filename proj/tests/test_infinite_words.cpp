#include <catch2/catch_amalgamated.hpp>

#include "quasiper/infinite_word.hpp"
#include "support.hpp"

using namespace quasiper;
using qt::W;

namespace {
const AlphabetRef ab = Alphabet::make("ab");

std::vector<Word> words_with_empty(const AlphabetRef& alpha,
                                   std::size_t max_len) {
  std::vector<Word> out{Word(alpha)};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Letter a : alpha->letters()) out.push_back(out[i] + a);
    begin = end;
  }
  return out;
}

// raw x y^w prefix, independent of the normal form machinery
Word raw_prefix(const Word& x, const Word& y, std::size_t n) {
  Word out(x.alphabet());
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(i < x.size() ? x[i] : y[(i - x.size()) % y.size()]);
  return out;
}

// independent long-prefix decision of q-coverage: positions covered by
// occurrences are eventually periodic, so a bounded check is exact
bool prefix_oracle_covers(const EventuallyPeriodicWord& w, const Word& q) {
  const std::size_t m = w.preperiod().size() +
                        q.size() * w.period().size() + 2 * q.size() + 2;
  const Word p = w.prefix(m + q.size() + 1);
  std::vector<bool> covered(m, false);
  for (std::size_t pos = 0; pos + q.size() <= p.size(); ++pos) {
    bool hit = true;
    for (std::size_t j = 0; j < q.size() && hit; ++j)
      hit = p[pos + j] == q[j];
    if (hit)
      for (std::size_t j = 0; j < q.size(); ++j)
        if (pos + j < m) covered[pos + j] = true;
  }
  for (bool c : covered)
    if (!c) return false;
  return true;
}
}  // namespace

TEST_CASE("normal form") {
  auto w = EventuallyPeriodicWord(W(ab, "bb"), W(ab, "abab"));
  CHECK(w.preperiod().str() == "b");
  CHECK(w.period().str() == "ba");
  CHECK(w.str() == "b(ba)^w");

  CHECK(EventuallyPeriodicWord(W(ab, "ab"), W(ab, "ab")).str() == "(ab)^w");
  CHECK(EventuallyPeriodicWord(W(ab, "a"), W(ab, "ba")).str() == "(ab)^w");
  CHECK_THROWS_AS(EventuallyPeriodicWord(W(ab, "a"), Word(ab)),
                  std::invalid_argument);
}

TEST_CASE("normal form preserves the infinite word") {
  for (const Word& x : words_with_empty(ab, 3))
    for (const Word& y : words_with_empty(ab, 3)) {
      if (y.empty()) continue;
      EventuallyPeriodicWord w(x, y);
      CHECK(w.prefix(24) == raw_prefix(x, y, 24));
      // period stays primitive, preperiod never absorbs further
      CHECK(primitive_root(w.period()).exponent == 1);
      if (!w.preperiod().empty())
        CHECK_FALSE(w.preperiod().back() == w.period().back());
    }
}

TEST_CASE("prefix") {
  CHECK(EventuallyPeriodicWord(W(ab, "bb"), W(ab, "ab")).prefix(6).str() ==
        "bbabab");
  CHECK(EventuallyPeriodicWord(Word(ab), W(ab, "a")).prefix(3).str() == "aaa");
  CHECK(EventuallyPeriodicWord(W(ab, "ab"), W(ab, "ba")).prefix(5).str() ==
        "abbab");
}

TEST_CASE("coverage of infinite words") {
  const EventuallyPeriodicWord abw(Word(ab), W(ab, "ab"));
  CHECK(is_q_quasiperiodic(abw, W(ab, "aba")));
  CHECK(is_q_quasiperiodic(abw, W(ab, "ab")));
  CHECK_FALSE(is_q_quasiperiodic(abw, W(ab, "a")));

  const EventuallyPeriodicWord bbabw(W(ab, "bb"), W(ab, "ab"));
  for (const Word& q : words_with_empty(ab, 6))
    if (!q.empty()) CHECK_FALSE(is_q_quasiperiodic(bbabw, q));

  const EventuallyPeriodicWord aw(Word(ab), W(ab, "a"));
  CHECK(is_q_quasiperiodic(aw, W(ab, "a")));
}

TEST_CASE("shortest cover of infinite words") {
  auto q = quasiperiod(EventuallyPeriodicWord(Word(ab), W(ab, "ab")));
  REQUIRE(q);
  CHECK(q->str() == "ab");
  CHECK_FALSE(quasiperiod(EventuallyPeriodicWord(W(ab, "bb"), W(ab, "ab"))));
  CHECK_FALSE(quasiperiod(EventuallyPeriodicWord(W(ab, "a"), W(ab, "b"))));
}

TEST_CASE("coverage implies covered prefixes") {
  const EventuallyPeriodicWord w(W(ab, "ba"), W(ab, "ab"));
  for (const Word& q : words_with_empty(ab, 5)) {
    if (q.empty()) continue;
    if (!is_q_quasiperiodic(w, q)) continue;
    const std::size_t n =
        w.preperiod().size() + 4 * w.period().size() + 4 * q.size();
    const Word p = w.prefix(n);
    std::vector<bool> covered(n, false);
    for (std::size_t pos : occurrences(p, q))
      for (std::size_t j = 0; j < q.size(); ++j) covered[pos + j] = true;
    for (std::size_t i = 0; i + q.size() <= n; ++i) CHECK(covered[i]);
  }
}

TEST_CASE("infinite word quasiperiod candidate bound") {
  // the fast path only tries prefixes shorter than twice the period; the
  // long-prefix oracle additionally scans lengths up to |x| + 2|y|
  for (const Word& x : words_with_empty(ab, 4))
    for (const Word& y : words_with_empty(ab, 4)) {
      if (y.empty()) continue;
      EventuallyPeriodicWord w(x, y);
      if (!(w.preperiod() == x) || !(w.period() == y)) continue;
      std::optional<Word> oracle;
      const std::size_t bound = 2 * w.period().size() + w.preperiod().size();
      for (std::size_t len = 1; len <= bound && !oracle; ++len) {
        Word q = w.prefix(len);
        if (prefix_oracle_covers(w, q)) oracle = q;
      }
      auto fast = quasiperiod(w);
      REQUIRE(fast.has_value() == oracle.has_value());
      if (fast) CHECK(*fast == *oracle);
    }
}

TEST_CASE("infinite quasiperiods are superprimitive prefixes") {
  for (const Word& x : words_with_empty(ab, 3))
    for (const Word& y : words_with_empty(ab, 3)) {
      if (y.empty()) continue;
      EventuallyPeriodicWord w(x, y);
      auto q = quasiperiod(w);
      if (!q) continue;
      CHECK(is_superprimitive(*q));
      CHECK(w.prefix(q->size()) == *q);
    }
}

TEST_CASE("parse and print") {
  auto w = EventuallyPeriodicWord::parse(ab, "bb(ab)^w");
  CHECK(w.str() == "b(ba)^w");
  CHECK(EventuallyPeriodicWord::parse(ab, "(ab)^w").str() == "(ab)^w");
  CHECK_THROWS_AS(EventuallyPeriodicWord::parse(ab, "abab"),
                  std::invalid_argument);
  CHECK_THROWS_AS(EventuallyPeriodicWord::parse(ab, "a(b)w"),
                  std::invalid_argument);
  CHECK_THROWS_AS(EventuallyPeriodicWord::parse(ab, "a()^w"),
                  std::invalid_argument);
}
