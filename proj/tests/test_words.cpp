#include <catch2/catch_amalgamated.hpp>

#include "quasiper/word.hpp"
#include "support.hpp"

using namespace quasiper;
using qt::W;

namespace {
const AlphabetRef ab = Alphabet::make("ab");
const AlphabetRef abc = Alphabet::make("abc");

std::vector<Word> all_words(const AlphabetRef& alpha, std::size_t max_len) {
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
}  // namespace

TEST_CASE("coverage by a fixed candidate") {
  const Word w = W(ab, "ababaabababaabababa");
  CHECK(is_q_quasiperiodic(w, W(ab, "aba")));
  CHECK(is_q_quasiperiodic(w, W(ab, "ababa")));
  CHECK_FALSE(is_q_quasiperiodic(W(ab, "aba"), W(ab, "aba")));
  CHECK_FALSE(is_q_quasiperiodic(W(ab, "abaab"), W(ab, "aba")));
  CHECK_FALSE(is_q_quasiperiodic(W(ab, "ab"), W(ab, "aba")));
  CHECK_THROWS_AS(is_q_quasiperiodic(w, Word(ab)), std::invalid_argument);
  CHECK_THROWS_AS(is_q_quasiperiodic(w, W(abc, "aba")),
                  std::invalid_argument);
}

TEST_CASE("shortest cover") {
  auto r = quasiperiod(W(ab, "ababaabababaabababa"));
  REQUIRE(r.has_value());
  CHECK(r.quasiperiod->str() == "aba");
  REQUIRE_FALSE(r.cover_positions.empty());
  CHECK(r.cover_positions.front() == 0);
  for (std::size_t i = 1; i < r.cover_positions.size(); ++i)
    CHECK(r.cover_positions[i] - r.cover_positions[i - 1] <= 3);

  auto r2 = quasiperiod(W(ab, "aa"));
  REQUIRE(r2.has_value());
  CHECK(r2.quasiperiod->str() == "a");

  CHECK_FALSE(quasiperiod(W(abc, "abacaba")).has_value());
  CHECK_FALSE(quasiperiod(W(ab, "a")).has_value());
}

TEST_CASE("all quasiperiods") {
  // besides aba and ababa, the length-12 border covers the word with two
  // overlapping occurrences
  auto qs = qt::strs(all_quasiperiods(W(ab, "ababaabababaabababa")));
  CHECK(qs ==
        std::vector<std::string>{"aba", "ababa", "ababaabababa"});
}

TEST_CASE("superprimitivity") {
  CHECK(is_superprimitive(W(abc, "abacaba")));
  CHECK_FALSE(is_superprimitive(W(ab, "ababa")));
  CHECK(is_superprimitive(W(ab, "a")));
  CHECK_THROWS_AS(is_superprimitive(Word(ab)), std::invalid_argument);
}

TEST_CASE("primitive root") {
  auto r = primitive_root(W(ab, "abab"));
  CHECK(r.root.str() == "ab");
  CHECK(r.exponent == 2);
  r = primitive_root(W(ab, "abaaba"));
  CHECK(r.root.str() == "aba");
  CHECK(r.exponent == 2);
  r = primitive_root(W(ab, "aba"));
  CHECK(r.root.str() == "aba");
  CHECK(r.exponent == 1);
  CHECK_THROWS_AS(primitive_root(Word(ab)), std::invalid_argument);
}

TEST_CASE("primitive root reconstructs and is primitive") {
  for (const Word& w : all_words(ab, 10)) {
    if (w.empty()) continue;
    const auto r = primitive_root(w);
    CHECK(r.root.repeat(r.exponent) == w);
    // the root has no period d < |root| dividing its length
    for (std::size_t d = 1; d < r.root.size(); ++d) {
      if (r.root.size() % d != 0) continue;
      CHECK_FALSE(r.root.prefix(d).repeat(r.root.size() / d) == r.root);
    }
  }
}

TEST_CASE("overlap decomposition") {
  auto od = overlap_decomposition(W(ab, "aabaa"), 3);
  REQUIRE(od);
  CHECK(od->x.str() == "aa");
  CHECK(od->y.str() == "b");
  CHECK(od->repetitions == 0);

  od = overlap_decomposition(W(ab, "ababa"), 2);
  REQUIRE(od);
  CHECK(od->x.str() == "a");
  CHECK(od->y.str() == "b");
  CHECK(od->repetitions == 1);
  CHECK(is_q_quasiperiodic(W(ab, "ababa"), od->x + od->y + od->x));

  CHECK_FALSE(overlap_decomposition(W(abc, "abc"), 1));
  CHECK_THROWS_AS(overlap_decomposition(W(ab, "aab"), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(overlap_decomposition(W(ab, "aab"), 3),
                  std::invalid_argument);
}

TEST_CASE("overlap decomposition reconstructs and certifies covers") {
  for (const Word& q : all_words(ab, 9)) {
    if (q.size() < 2) continue;
    for (std::size_t d = 1; d < q.size(); ++d) {
      auto od = overlap_decomposition(q, d);
      const bool has_border = q.substr(d, q.size() - d) == q.prefix(q.size() - d);
      REQUIRE(od.has_value() == has_border);
      if (!od) continue;
      const Word xy = od->x + od->y;
      CHECK(xy.size() == d);
      CHECK(xy.repeat(od->repetitions + 1) + od->x == q);
      if (od->repetitions >= 1)
        CHECK(is_q_quasiperiodic(q, od->x + od->y + od->x));
    }
  }
}

TEST_CASE("every long factor of a covered word contains the cover") {
  for (const Word& w : all_words(ab, 10)) {
    if (w.size() < 2) continue;
    for (const Word& q : all_quasiperiods(w)) {
      const std::size_t flen = 2 * q.size() - 1;
      for (std::size_t pos = 0; pos + flen <= w.size(); ++pos) {
        const Word factor = w.substr(pos, flen);
        CHECK_FALSE(occurrences(factor, q).empty());
      }
    }
  }
}

TEST_CASE("shortest cover is superprimitive") {
  for (const Word& w : all_words(ab, 11)) {
    auto r = quasiperiod(w);
    if (r.has_value()) CHECK(is_superprimitive(*r.quasiperiod));
  }
}

TEST_CASE("word basics") {
  CHECK_THROWS_AS(W(ab, "abc"), std::invalid_argument);
  CHECK(W(ab, "ab") + W(ab, "ba") == W(ab, "abba"));
  CHECK_THROWS_AS(W(ab, "ab") + W(abc, "c"), std::invalid_argument);
  CHECK(W(ab, "ab").repeat(3).str() == "ababab");
  CHECK(W(ab, "a") < W(ab, "b"));
  CHECK(W(ab, "b") < W(ab, "aa"));  // shortlex
  CHECK(occurrences(W(ab, "ababa"), W(ab, "aba")) ==
        std::vector<std::size_t>{0, 2});
}
