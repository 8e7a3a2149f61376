#ifndef QUASIPER_LANGOPS_HPP
#define QUASIPER_LANGOPS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quasiper/cover_automaton.hpp"
#include "quasiper/word.hpp"

namespace quasiper {

/// Product exploration exceeded the configured state ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultProductCeiling = 5'000'000;

struct UnionUniversality {
  bool universal = false;
  std::optional<Word> counterexample;  // shortest word rejected by all
};

namespace detail {

struct TupleHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int32_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

/// Decides whether every word over the alphabet is accepted by at least one
/// automaton, by BFS over the product of sink-completed automata. A product
/// state is bad iff every component is sunk or (finite mode) non-final.
/// Returns the shortest rejected word otherwise, ties broken by letter order.
inline UnionUniversality union_universal(
    const std::vector<const CoverAutomaton*>& automata,
    const AlphabetRef& alpha,
    std::size_t product_ceiling = kDefaultProductCeiling) {
  if (automata.empty()) {
    // no automaton accepts anything, the empty word included
    return UnionUniversality{false, Word(alpha)};
  }
  for (const CoverAutomaton* A : automata)
    require_same_alphabet(alpha, A->alphabet());

  // A complete component never sinks; in infinite mode it accepts everything.
  for (const CoverAutomaton* A : automata)
    if (A->is_complete()) {
      if (A->mode() == AutomatonMode::infinite_words)
        return UnionUniversality{true, std::nullopt};
      bool all_final = true;
      for (std::size_t i = 0; i < A->state_count() && all_final; ++i)
        all_final = A->is_final(static_cast<int>(i));
      if (all_final) return UnionUniversality{true, std::nullopt};
    }

  constexpr std::int32_t kSink = -1;
  const std::size_t m = automata.size();
  const std::size_t k = alpha->size();

  // worst case: the product of the sink-completed state counts
  double product_bound = 1.0;
  for (const CoverAutomaton* A : automata)
    product_bound *= static_cast<double>(A->state_count() + 1);

  auto is_bad = [&](const std::vector<std::int32_t>& tuple) {
    for (std::size_t i = 0; i < m; ++i)
      if (tuple[i] != kSink && automata[i]->is_final(tuple[i])) return false;
    return true;
  };

  std::vector<std::vector<std::int32_t>> states;
  std::vector<std::pair<std::int32_t, std::uint8_t>> parent;  // (index, letter)
  std::unordered_map<std::vector<std::int32_t>, std::int32_t,
                     detail::TupleHash>
      index;

  std::vector<std::int32_t> initial(m, 0);
  states.push_back(initial);
  parent.emplace_back(-1, 0);
  index.emplace(std::move(initial), 0);

  auto rebuild_word = [&](std::int32_t at) {
    std::vector<Letter> letters;
    while (at != 0) {
      auto [prev, a] = parent[static_cast<std::size_t>(at)];
      letters.push_back(Letter{a});
      at = prev;
    }
    std::reverse(letters.begin(), letters.end());
    return Word(alpha, std::move(letters));
  };

  if (is_bad(states[0]))
    return UnionUniversality{false, rebuild_word(0)};

  for (std::size_t head = 0; head < states.size(); ++head) {
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<std::int32_t> next(m);
      for (std::size_t i = 0; i < m; ++i)
        next[i] = states[head][i] == kSink
                      ? kSink
                      : automata[i]->next(states[head][i],
                                          Letter{static_cast<std::uint8_t>(a)});
      auto [it, inserted] =
          index.emplace(next, static_cast<std::int32_t>(states.size()));
      if (!inserted) continue;
      if (states.size() >= product_ceiling) {
        std::ostringstream os;
        os << "product exploration exceeded " << product_ceiling
           << " states (worst-case bound " << product_bound << ")";
        throw ResourceLimitError(os.str());
      }
      states.push_back(std::move(next));
      parent.emplace_back(static_cast<std::int32_t>(head),
                          static_cast<std::uint8_t>(a));
      if (is_bad(states.back()))
        return UnionUniversality{
            false, rebuild_word(static_cast<std::int32_t>(states.size() - 1))};
    }
  }
  return UnionUniversality{true, std::nullopt};
}

/// All accepted words of length <= max_len, in shortlex order.
inline std::vector<Word> enumerate_accepted(const CoverAutomaton& A,
                                            std::size_t max_len) {
  std::vector<Word> out;
  struct Item {
    int state;
    Word word;
  };
  std::deque<Item> queue;
  queue.push_back(Item{0, Word(A.alphabet())});
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    if (A.is_final(item.state)) out.push_back(item.word);
    if (item.word.size() == max_len) continue;
    for (Letter a : A.alphabet()->letters()) {
      int t = A.next(item.state, a);
      if (t == CoverAutomaton::kNoTransition) continue;
      queue.push_back(Item{t, item.word + a});
    }
  }
  return out;
}

}  // namespace quasiper

#endif  // QUASIPER_LANGOPS_HPP
