#ifndef QUASIPER_TESTS_SUPPORT_HPP
#define QUASIPER_TESTS_SUPPORT_HPP

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "quasiper/cover_automaton.hpp"
#include "quasiper/word.hpp"

namespace qt {

inline quasiper::Word W(const quasiper::AlphabetRef& alpha,
                        const std::string& text) {
  return quasiper::Word::parse(alpha, text);
}

// (lp, ls, letter, lp', ls') — relabeling-independent since states are the
// (p, s) pairs themselves
using Edge = std::tuple<std::size_t, std::size_t, char, std::size_t,
                        std::size_t>;

inline std::set<Edge> edge_set(const quasiper::CoverAutomaton& A) {
  std::set<Edge> out;
  for (std::size_t i = 0; i < A.state_count(); ++i)
    for (quasiper::Letter a : A.alphabet()->letters()) {
      int t = A.next(static_cast<int>(i), a);
      if (t == quasiper::CoverAutomaton::kNoTransition) continue;
      const auto from = A.state(i);
      const auto to = A.state(static_cast<std::size_t>(t));
      out.insert(Edge{from.prefix_len, from.suffix_len,
                      A.alphabet()->symbol(a), to.prefix_len, to.suffix_len});
    }
  return out;
}

inline std::set<std::pair<std::size_t, std::size_t>> state_set(
    const quasiper::CoverAutomaton& A) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& s : A.states()) out.insert({s.prefix_len, s.suffix_len});
  return out;
}

inline std::vector<std::string> strs(const std::vector<quasiper::Word>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

}  // namespace qt

#endif
