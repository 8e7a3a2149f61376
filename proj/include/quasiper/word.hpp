#ifndef QUASIPER_WORD_HPP
#define QUASIPER_WORD_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quasiper/alphabet.hpp"

namespace quasiper {

/// A finite word over a shared alphabet. Value type; the ordering used
/// throughout the library is length-lexicographic (shortlex).
class Word {
 public:
  explicit Word(AlphabetRef alpha) : alpha_(std::move(alpha)) {
    check_alpha();
  }

  Word(AlphabetRef alpha, std::vector<Letter> letters)
      : alpha_(std::move(alpha)), letters_(std::move(letters)) {
    check_alpha();
    for (Letter a : letters_)
      if (a.id >= alpha_->size())
        throw std::invalid_argument("letter id out of range for alphabet");
  }

  static Word parse(const AlphabetRef& alpha, std::string_view text) {
    Word w(alpha);
    w.letters_.reserve(text.size());
    for (char c : text) {
      auto a = alpha->letter(c);
      if (!a)
        throw std::invalid_argument(std::string("letter '") + c +
                                    "' is not in the alphabet");
      w.letters_.push_back(*a);
    }
    return w;
  }

  const AlphabetRef& alphabet() const { return alpha_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word prefix(std::size_t n) const { return substr(0, std::min(n, size())); }

  Word suffix(std::size_t n) const {
    n = std::min(n, size());
    return substr(size() - n, n);
  }

  Word substr(std::size_t pos, std::size_t len) const {
    if (pos > size() || pos + len > size())
      throw std::out_of_range("substring out of range");
    return Word(alpha_, std::vector<Letter>(letters_.begin() + pos,
                                            letters_.begin() + pos + len));
  }

  bool starts_with(const Word& p) const {
    return p.size() <= size() &&
           std::equal(p.letters_.begin(), p.letters_.end(), letters_.begin());
  }

  bool ends_with(const Word& s) const {
    return s.size() <= size() &&
           std::equal(s.letters_.begin(), s.letters_.end(),
                      letters_.end() - static_cast<std::ptrdiff_t>(s.size()));
  }

  friend Word operator+(const Word& x, const Word& y) {
    require_same_alphabet(x.alpha_, y.alpha_);
    Word out = x;
    out.letters_.insert(out.letters_.end(), y.letters_.begin(),
                        y.letters_.end());
    return out;
  }

  friend Word operator+(const Word& x, Letter a) {
    Word out = x;
    out.push_back(a);
    return out;
  }

  void push_back(Letter a) {
    if (a.id >= alpha_->size())
      throw std::invalid_argument("letter id out of range for alphabet");
    letters_.push_back(a);
  }

  void pop_back() { letters_.pop_back(); }

  Word repeat(std::size_t k) const {
    Word out(alpha_);
    out.letters_.reserve(size() * k);
    for (std::size_t i = 0; i < k; ++i)
      out.letters_.insert(out.letters_.end(), letters_.begin(),
                          letters_.end());
    return out;
  }

  std::string str() const {
    std::string out;
    out.reserve(size());
    for (Letter a : letters_) out.push_back(alpha_->symbol(a));
    return out;
  }

  friend bool operator==(const Word& x, const Word& y) {
    return same_alphabet(x.alpha_, y.alpha_) && x.letters_ == y.letters_;
  }

  /// Shortlex: shorter words first, then letter-id lexicographic.
  friend bool operator<(const Word& x, const Word& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.letters_ < y.letters_;
  }

 private:
  void check_alpha() const {
    if (!alpha_) throw std::invalid_argument("word requires an alphabet");
  }

  AlphabetRef alpha_;
  std::vector<Letter> letters_;
};

/// KMP failure function: fail[i] = length of the longest proper border of
/// w[0..i].
inline std::vector<std::size_t> failure_function(const Word& w) {
  std::vector<std::size_t> fail(w.size(), 0);
  for (std::size_t i = 1, k = 0; i < w.size(); ++i) {
    while (k > 0 && !(w[i] == w[k])) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

/// All start offsets of pattern occurrences in text, ascending.
inline std::vector<std::size_t> occurrences(const Word& text,
                                            const Word& pattern) {
  require_same_alphabet(text.alphabet(), pattern.alphabet());
  if (pattern.empty())
    throw std::invalid_argument("occurrences of the empty word are undefined");
  std::vector<std::size_t> out;
  const auto fail = failure_function(pattern);
  std::size_t k = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (k > 0 && !(text[i] == pattern[k])) k = fail[k - 1];
    if (text[i] == pattern[k]) ++k;
    if (k == pattern.size()) {
      out.push_back(i + 1 - pattern.size());
      k = fail[k - 1];
    }
  }
  return out;
}

namespace detail {

// Occurrence chaining: the sorted occurrence list covers every position of a
// length-n word iff it starts at 0, ends at n-|q|, and consecutive starts are
// at most |q| apart (abutting allowed).
inline bool occurrences_cover(const std::vector<std::size_t>& occ,
                              std::size_t text_len, std::size_t q_len) {
  if (occ.empty()) return false;
  if (occ.front() != 0) return false;
  if (occ.back() + q_len != text_len) return false;
  for (std::size_t i = 1; i < occ.size(); ++i)
    if (occ[i] - occ[i - 1] > q_len) return false;
  return true;
}

}  // namespace detail

/// Whether occurrences of q cover every position of w, with w != q.
inline bool is_q_quasiperiodic(const Word& w, const Word& q) {
  if (q.empty()) throw std::invalid_argument("quasiperiod must be non-empty");
  require_same_alphabet(w.alphabet(), q.alphabet());
  if (w.size() <= q.size()) return false;  // covers w == q and shorter w
  return detail::occurrences_cover(occurrences(w, q), w.size(), q.size());
}

/// Outcome of the shortest-cover computation.
struct CoverResult {
  std::optional<Word> quasiperiod;
  /// Occurrence start offsets witnessing coverage; first is 0, consecutive
  /// offsets differ by at most |quasiperiod|.
  std::vector<std::size_t> cover_positions;

  bool has_value() const { return quasiperiod.has_value(); }
};

/// Shortest quasiperiod of w, or absent when w is superprimitive.
/// A quasiperiod is necessarily a prefix and a suffix of w, so candidates are
/// the proper prefixes of w in increasing length.
inline CoverResult quasiperiod(const Word& w) {
  for (std::size_t len = 1; len < w.size(); ++len) {
    Word q = w.prefix(len);
    if (!w.ends_with(q)) continue;
    auto occ = occurrences(w, q);
    if (detail::occurrences_cover(occ, w.size(), len))
      return CoverResult{std::move(q), std::move(occ)};
  }
  return CoverResult{};
}

/// Every q such that w is q-quasiperiodic, in increasing length.
inline std::vector<Word> all_quasiperiods(const Word& w) {
  std::vector<Word> out;
  for (std::size_t len = 1; len < w.size(); ++len) {
    Word q = w.prefix(len);
    if (!w.ends_with(q)) continue;
    if (detail::occurrences_cover(occurrences(w, q), w.size(), len))
      out.push_back(std::move(q));
  }
  return out;
}

inline bool is_quasiperiodic(const Word& w) {
  return quasiperiod(w).has_value();
}

inline bool is_superprimitive(const Word& w) {
  if (w.empty())
    throw std::invalid_argument("superprimitivity of the empty word is undefined");
  return !is_quasiperiodic(w);
}

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 1;
};

/// Shortest u with w = u^k; exponent k is maximal.
inline PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty())
    throw std::invalid_argument("primitive root of the empty word is undefined");
  const auto fail = failure_function(w);
  const std::size_t period = w.size() - fail.back();
  if (w.size() % period == 0 && period < w.size())
    return PrimitiveRoot{w.prefix(period), w.size() / period};
  return PrimitiveRoot{w, 1};
}

inline bool is_primitive(const Word& w) {
  return primitive_root(w).exponent == 1;
}

struct OverlapDecomposition {
  Word x;
  Word y;
  /// q = (xy)^(repetitions+1) x; repetitions >= 1 certifies that q is
  /// xyx-quasiperiodic.
  std::size_t repetitions = 0;
};

/// Decomposes a self-overlap of q with shift d: when q has a border of
/// length |q|-d, writes q[0..d) = xy and the border as (xy)^l x.
/// Returns absent when the border does not exist.
inline std::optional<OverlapDecomposition> overlap_decomposition(
    const Word& q, std::size_t d) {
  if (d == 0 || d >= q.size())
    throw std::invalid_argument("overlap shift out of range");
  const std::size_t border = q.size() - d;
  if (!(q.substr(d, border) == q.prefix(border))) return std::nullopt;
  const std::size_t reps = border / d;
  const std::size_t rest = border % d;
  return OverlapDecomposition{q.prefix(rest), q.substr(rest, d - rest), reps};
}

}  // namespace quasiper

#endif  // QUASIPER_WORD_HPP
