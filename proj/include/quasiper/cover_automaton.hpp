#ifndef QUASIPER_COVER_AUTOMATON_HPP
#define QUASIPER_COVER_AUTOMATON_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quasiper/morphism.hpp"
#include "quasiper/word.hpp"

namespace quasiper {

enum class AutomatonMode { finite_words, infinite_words };

inline const char* to_string(AutomatonMode m) {
  return m == AutomatonMode::finite_words ? "finite" : "infinite";
}

/// State (p, s) of the cover automaton, stored as lengths: p = q[0..lp) and
/// s = q[lp..lp+ls). Since ps is a proper prefix of q, the lengths determine
/// the words.
struct CoverState {
  std::size_t prefix_len = 0;
  std::size_t suffix_len = 0;
  friend constexpr auto operator<=>(const CoverState&,
                                    const CoverState&) = default;
};

/// Single transition step. Reading letter a from state (p, s) appends f(a)
/// to the tracked prefix ps of q and greedily chains occurrences of q:
/// the first must start inside p, each next one at or before the covered
/// end. The new state is the longest suffix of the result that is a proper
/// prefix of q, split at the covered end. Occurrences of q that cannot be
/// chained kill the transition, as does an uncovered remainder of length
/// >= |q| or one that is not a prefix of q.
inline std::optional<CoverState> cover_transition(const Morphism& f,
                                                  const Word& q,
                                                  CoverState from, Letter a) {
  const std::size_t n = q.size();
  const Word t = q.prefix(from.prefix_len + from.suffix_len) + f.image(a);
  const auto occ = occurrences(t, q);
  std::size_t covered = from.prefix_len;
  bool chained = false;
  for (std::size_t o : occ) {
    if (o > covered) break;
    covered = std::max(covered, o + n);
    chained = true;
  }
  if (!chained && !occ.empty()) return std::nullopt;  // disconnected
  const std::size_t rest = t.size() - covered;
  if (rest >= n) return std::nullopt;
  // Longest suffix of t of length in [rest, n) that is a prefix of q; its
  // last `rest` letters are the uncovered remainder.
  for (std::size_t len = std::min(n - 1, t.size()) + 1; len-- > rest;)
    if (t.suffix(len) == q.prefix(len))
      return CoverState{len - rest, rest};
  return std::nullopt;
}

/// The partial deterministic automaton recognizing words u whose image is
/// empty, equal to q, or q-quasiperiodic (finite mode accepts at states with
/// s = empty; infinite mode accepts at every state).
class CoverAutomaton {
 public:
  static constexpr int kNoTransition = -1;

  static CoverAutomaton build(Morphism f, Word q, AutomatonMode mode) {
    if (q.empty())
      throw std::invalid_argument("cover automaton needs a non-empty q");
    require_same_alphabet(f.alphabet(), q.alphabet());
    CoverAutomaton A(std::move(f), std::move(q), mode);
    const std::size_t k = A.f_.alphabet()->size();
    std::map<CoverState, int> index;
    A.states_.push_back(CoverState{0, 0});
    index.emplace(CoverState{0, 0}, 0);
    for (std::size_t s = 0; s < A.states_.size(); ++s) {
      A.delta_.emplace_back(k, kNoTransition);
      for (std::size_t a = 0; a < k; ++a) {
        auto next = cover_transition(A.f_, A.q_, A.states_[s],
                                     Letter{static_cast<std::uint8_t>(a)});
        if (!next) continue;
        auto [it, inserted] =
            index.emplace(*next, static_cast<int>(A.states_.size()));
        if (inserted) A.states_.push_back(*next);
        A.delta_[s][a] = it->second;
      }
    }
    return A;
  }

  const Morphism& morphism() const { return f_; }
  const Word& q() const { return q_; }
  AutomatonMode mode() const { return mode_; }
  const AlphabetRef& alphabet() const { return f_.alphabet(); }

  std::size_t state_count() const { return states_.size(); }
  const std::vector<CoverState>& states() const { return states_; }
  CoverState state(std::size_t i) const { return states_.at(i); }

  int next(int state, Letter a) const {
    return delta_[static_cast<std::size_t>(state)][a.id];
  }

  bool is_final(int state) const {
    if (mode_ == AutomatonMode::infinite_words) return true;
    return states_[static_cast<std::size_t>(state)].suffix_len == 0;
  }

  std::vector<int> final_states() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < states_.size(); ++i)
      if (is_final(static_cast<int>(i))) out.push_back(static_cast<int>(i));
    return out;
  }

  /// Runs u from the initial state; absent when the run dies.
  std::optional<int> run(const Word& u) const {
    require_same_alphabet(alphabet(), u.alphabet());
    int s = 0;
    for (Letter a : u.letters()) {
      s = next(s, a);
      if (s == kNoTransition) return std::nullopt;
    }
    return s;
  }

  bool accepts(const Word& u) const {
    auto s = run(u);
    return s && is_final(*s);
  }

  /// Every reachable state has a transition for every letter.
  bool is_complete() const {
    for (const auto& row : delta_)
      for (int t : row)
        if (t == kNoTransition) return false;
    return true;
  }

  /// Whether every word starting with `a` keeps the run alive: the
  /// sub-automaton reachable through `a` is complete. In infinite mode this
  /// certifies that images of all infinite words starting with `a` are
  /// q-quasiperiodic.
  bool covers_cone(Letter a) const {
    int start = next(0, a);
    if (start == kNoTransition) return false;
    std::vector<bool> visited(states_.size(), false);
    std::vector<int> stack{start};
    visited[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      for (int t : delta_[static_cast<std::size_t>(s)]) {
        if (t == kNoTransition) return false;
        if (!visited[static_cast<std::size_t>(t)]) {
          visited[static_cast<std::size_t>(t)] = true;
          stack.push_back(t);
        }
      }
    }
    return true;
  }

  std::string state_label(std::size_t i) const {
    const CoverState& s = states_[i];
    const std::string p = q_.prefix(s.prefix_len).str();
    const std::string suf =
        q_.substr(s.prefix_len, s.suffix_len).str();
    return "(" + (p.empty() ? "\xce\xb5" : p) + "," +
           (suf.empty() ? "\xce\xb5" : suf) + ")";
  }

  /// Graphviz export; states in construction order, edges by letter.
  std::string to_dot() const {
    std::ostringstream os;
    os << "digraph cover_automaton {\n";
    os << "  rankdir=LR;\n";
    os << "  label=\"q = " << q_.str() << " (" << to_string(mode_)
       << " mode)\";\n";
    os << "  start [shape=point];\n";
    for (std::size_t i = 0; i < states_.size(); ++i) {
      os << "  s" << i << " [label=\"" << state_label(i) << "\", shape="
         << (is_final(static_cast<int>(i)) ? "doublecircle" : "circle")
         << "];\n";
    }
    os << "  start -> s0;\n";
    for (std::size_t i = 0; i < states_.size(); ++i)
      for (std::size_t a = 0; a < delta_[i].size(); ++a)
        if (delta_[i][a] != kNoTransition)
          os << "  s" << i << " -> s" << delta_[i][a] << " [label=\""
             << alphabet()->symbol(Letter{static_cast<std::uint8_t>(a)})
             << "\"];\n";
    os << "}\n";
    return os.str();
  }

 private:
  CoverAutomaton(Morphism f, Word q, AutomatonMode mode)
      : f_(std::move(f)), q_(std::move(q)), mode_(mode) {}

  Morphism f_;
  Word q_;
  AutomatonMode mode_;
  std::vector<CoverState> states_;
  std::vector<std::vector<int>> delta_;
};

}  // namespace quasiper

#endif  // QUASIPER_COVER_AUTOMATON_HPP
