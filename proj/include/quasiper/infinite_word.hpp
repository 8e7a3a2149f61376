#ifndef QUASIPER_INFINITE_WORD_HPP
#define QUASIPER_INFINITE_WORD_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "quasiper/word.hpp"

namespace quasiper {

/// An eventually periodic infinite word x·y^w, kept in normal form: the
/// period is primitive and the preperiod is the shortest one denoting the
/// same infinite word (it never ends with the period's last letter, since
/// that letter would absorb into a rotated period).
class EventuallyPeriodicWord {
 public:
  EventuallyPeriodicWord(Word preperiod, Word period)
      : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty())
      throw std::invalid_argument("period must be non-empty");
    require_same_alphabet(preperiod_.alphabet(), period_.alphabet());
    period_ = primitive_root(period_).root;
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
      // x'c (zc)^w = x' (cz)^w
      Word rotated(period_.alphabet());
      rotated.push_back(period_.back());
      rotated = rotated + period_.prefix(period_.size() - 1);
      period_ = std::move(rotated);
      preperiod_.pop_back();
    }
  }

  /// Parses the textual form `x(y)^w`, e.g. `bb(ab)^w` or `(ab)^w`.
  static EventuallyPeriodicWord parse(const AlphabetRef& alpha,
                                      std::string_view text) {
    auto open = text.find('(');
    if (open == std::string_view::npos)
      throw std::invalid_argument("expected 'preperiod(period)^w'");
    auto close = text.find(')', open);
    if (close == std::string_view::npos || text.substr(close) != ")^w")
      throw std::invalid_argument("expected 'preperiod(period)^w'");
    Word pre = Word::parse(alpha, text.substr(0, open));
    Word per = Word::parse(alpha, text.substr(open + 1, close - open - 1));
    return EventuallyPeriodicWord(std::move(pre), std::move(per));
  }

  const Word& preperiod() const { return preperiod_; }
  const Word& period() const { return period_; }
  const AlphabetRef& alphabet() const { return period_.alphabet(); }

  Letter at(std::size_t i) const {
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
  }

  Word prefix(std::size_t n) const {
    Word out(alphabet());
    for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
    return out;
  }

  std::string str() const {
    return preperiod_.str() + "(" + period_.str() + ")^w";
  }

  friend bool operator==(const EventuallyPeriodicWord& x,
                         const EventuallyPeriodicWord& y) {
    return x.preperiod_ == y.preperiod_ && x.period_ == y.period_;
  }

 private:
  Word preperiod_;
  Word period_;
};

namespace detail {

inline bool occurs_at(const EventuallyPeriodicWord& w, const Word& q,
                      std::size_t pos) {
  for (std::size_t j = 0; j < q.size(); ++j)
    if (!(w.at(pos + j) == q[j])) return false;
  return true;
}

}  // namespace detail

/// Whether occurrences of q cover every position of the infinite word.
/// Coverage is simulated greedily; once the occurrence window lies in the
/// periodic tail, a repeated residue of the covered end modulo the period
/// proves the chain continues forever.
inline bool is_q_quasiperiodic(const EventuallyPeriodicWord& w,
                               const Word& q) {
  if (q.empty()) throw std::invalid_argument("quasiperiod must be non-empty");
  require_same_alphabet(w.alphabet(), q.alphabet());
  const std::size_t n = q.size();
  const std::size_t pre = w.preperiod().size();
  const std::size_t per = w.period().size();
  std::set<std::size_t> seen;
  std::size_t covered = 0;
  for (;;) {
    if (covered >= pre + n) {
      std::size_t residue = (covered - pre) % per;
      if (!seen.insert(residue).second) return true;
    }
    // Farthest extension: the latest occurrence that still touches `covered`.
    bool extended = false;
    const std::size_t lo = (covered + 1 > n) ? covered + 1 - n : 0;
    for (std::size_t o = covered + 1; o-- > lo;) {
      if (detail::occurs_at(w, q, o)) {
        covered = o + n;
        extended = true;
        break;
      }
    }
    if (!extended) return false;
  }
}

/// Shortest quasiperiod of w, or absent. A quasiperiod is a prefix of w, and
/// a superprimitive cover of x·y^w (y primitive) is shorter than 2|y|: an
/// occurrence in the tail repeats |y| later, and a self-overlap with shift
/// <= |q|/2 decomposes as (xy)^l x with l >= 1, contradicting
/// superprimitivity. Hence candidate lengths 1 .. 2|y|-1.
inline std::optional<Word> quasiperiod(const EventuallyPeriodicWord& w) {
  for (std::size_t len = 1; len + 1 <= 2 * w.period().size(); ++len) {
    Word q = w.prefix(len);
    if (is_q_quasiperiodic(w, q)) return q;
  }
  return std::nullopt;
}

inline bool is_quasiperiodic(const EventuallyPeriodicWord& w) {
  return quasiperiod(w).has_value();
}

}  // namespace quasiper

#endif  // QUASIPER_INFINITE_WORD_HPP
