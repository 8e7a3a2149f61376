#ifndef QUASIPER_MORPHISM_HPP
#define QUASIPER_MORPHISM_HPP

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quasiper/infinite_word.hpp"
#include "quasiper/word.hpp"

namespace quasiper {

/// A non-erasing morphism given by its letter images.
class Morphism {
 public:
  Morphism(AlphabetRef alpha, std::vector<Word> images)
      : alpha_(std::move(alpha)), images_(std::move(images)) {
    if (!alpha_) throw std::invalid_argument("morphism requires an alphabet");
    if (images_.size() != alpha_->size())
      throw std::invalid_argument("morphism needs one image per letter");
    for (const Word& im : images_) {
      require_same_alphabet(alpha_, im.alphabet());
      if (im.empty())
        throw std::invalid_argument("erasing morphisms are not supported");
    }
  }

  /// Parses `a->ab;b->aba`. The alphabet is the set of rule left-hand sides
  /// in sorted symbol order; images must use only those letters.
  static Morphism parse(std::string_view text) {
    std::vector<std::pair<char, std::string>> rules;
    std::string symbols;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto end = text.find(';', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view rule = text.substr(pos, end - pos);
      auto arrow = rule.find("->");
      if (rule.size() < 4 || arrow == std::string_view::npos || arrow != 1)
        throw std::invalid_argument(
            "morphism rule must look like 'a->ab' (got '" + std::string(rule) +
            "')");
      char lhs = rule[0];
      std::string image(rule.substr(arrow + 2));
      if (image.empty())
        throw std::invalid_argument("erasing rule for letter '" +
                                    std::string(1, lhs) + "'");
      if (symbols.find(lhs) != std::string::npos)
        throw std::invalid_argument("duplicate rule for letter '" +
                                    std::string(1, lhs) + "'");
      symbols.push_back(lhs);
      rules.emplace_back(lhs, std::move(image));
      pos = end + 1;
      if (end == text.size()) break;
    }
    if (rules.empty()) throw std::invalid_argument("empty morphism");
    std::sort(symbols.begin(), symbols.end());
    AlphabetRef alpha = Alphabet::make(symbols);
    std::vector<Word> images(alpha->size(), Word(alpha));
    for (auto& [lhs, image] : rules)
      images[alpha->letter(lhs)->id] = Word::parse(alpha, image);
    return Morphism(std::move(alpha), std::move(images));
  }

  const AlphabetRef& alphabet() const { return alpha_; }
  const Word& image(Letter a) const { return images_.at(a.id); }
  const std::vector<Word>& images() const { return images_; }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) out.push_back(';');
      out.push_back(alpha_->symbol(Letter{static_cast<std::uint8_t>(i)}));
      out += "->";
      out += images_[i].str();
    }
    return out;
  }

  std::size_t min_image_length() const {
    std::size_t m = images_.front().size();
    for (const Word& im : images_) m = std::min(m, im.size());
    return m;
  }

  std::size_t max_image_length() const {
    std::size_t m = 0;
    for (const Word& im : images_) m = std::max(m, im.size());
    return m;
  }

  friend bool operator==(const Morphism& f, const Morphism& g) {
    return same_alphabet(f.alpha_, g.alpha_) && f.images_ == g.images_;
  }

 private:
  AlphabetRef alpha_;
  std::vector<Word> images_;
};

inline Word apply(const Morphism& f, const Word& w) {
  require_same_alphabet(f.alphabet(), w.alphabet());
  Word out(f.alphabet());
  for (Letter a : w.letters()) out = out + f.image(a);
  return out;
}

inline EventuallyPeriodicWord apply(const Morphism& f,
                                    const EventuallyPeriodicWord& w) {
  require_same_alphabet(f.alphabet(), w.alphabet());
  return EventuallyPeriodicWord(apply(f, w.preperiod()), apply(f, w.period()));
}

inline Morphism compose(const Morphism& f, const Morphism& g) {
  require_same_alphabet(f.alphabet(), g.alphabet());
  std::vector<Word> images;
  images.reserve(g.images().size());
  for (const Word& im : g.images()) images.push_back(apply(f, im));
  return Morphism(f.alphabet(), std::move(images));
}

inline Morphism compose_power(const Morphism& f, std::size_t k) {
  if (k == 0) throw std::invalid_argument("morphism power must be positive");
  Morphism out = f;
  for (std::size_t i = 1; i < k; ++i) out = compose(f, out);
  return out;
}

inline Morphism primitive_root_morphism(const Morphism& f) {
  std::vector<Word> images;
  images.reserve(f.images().size());
  for (const Word& im : f.images()) images.push_back(primitive_root(im).root);
  return Morphism(f.alphabet(), std::move(images));
}

/// Evidence that the image family is not a prefix code, not a suffix code,
/// or not a code at all. For `non_code`, `trace` holds two distinct letter
/// sequences with equal images.
struct CodeViolation {
  enum class Kind { prefix, suffix, non_code };
  Kind kind = Kind::prefix;
  Letter first{};   // f(first) is a prefix/suffix of f(second)
  Letter second{};
  std::vector<Word> trace;

  friend bool operator==(const CodeViolation&, const CodeViolation&) = default;
};

/// Sardinas-Patterson with witness tracking: finds two distinct letter
/// sequences with equal images, or absent when the image set is a code.
inline std::optional<std::pair<Word, Word>> find_ambiguity(const Morphism& f) {
  const auto letters = f.alphabet()->letters();
  struct Node {
    Word overhang;  // f(longer) = f(shorter) + overhang
    Word shorter;
    Word longer;
  };
  std::deque<Node> queue;
  std::map<Word, bool> seen;  // by overhang
  for (Letter x : letters)
    for (Letter y : letters) {
      if (x == y) continue;
      const Word& fx = f.image(x);
      const Word& fy = f.image(y);
      if (fx == fy) {
        Word u(f.alphabet()), v(f.alphabet());
        u.push_back(x);
        v.push_back(y);
        return std::make_pair(std::move(u), std::move(v));
      }
      if (fy.starts_with(fx)) {
        Word u(f.alphabet()), v(f.alphabet());
        u.push_back(x);
        v.push_back(y);
        Node node{fy.substr(fx.size(), fy.size() - fx.size()), std::move(u),
                  std::move(v)};
        if (seen.emplace(node.overhang, true).second)
          queue.push_back(std::move(node));
      }
    }
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (Letter c : letters) {
      const Word& fc = f.image(c);
      if (fc.size() <= node.overhang.size()) {
        if (!node.overhang.starts_with(fc)) continue;
        Word shorter = node.shorter + c;
        if (fc.size() == node.overhang.size())
          return std::make_pair(std::move(shorter), node.longer);
        Node next{node.overhang.substr(fc.size(),
                                       node.overhang.size() - fc.size()),
                  std::move(shorter), node.longer};
        if (seen.emplace(next.overhang, true).second)
          queue.push_back(std::move(next));
      } else if (fc.starts_with(node.overhang)) {
        // the previously longer side becomes the shorter one
        Node next{fc.substr(node.overhang.size(),
                            fc.size() - node.overhang.size()),
                  node.longer, node.shorter + c};
        if (seen.emplace(next.overhang, true).second)
          queue.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

/// First prefix violation in letter order, else first suffix violation,
/// else a Sardinas-Patterson ambiguity, else absent.
inline std::optional<CodeViolation> code_violation(const Morphism& f) {
  const auto letters = f.alphabet()->letters();
  for (Letter x : letters)
    for (Letter y : letters)
      if (!(x == y) && f.image(y).starts_with(f.image(x)))
        return CodeViolation{CodeViolation::Kind::prefix, x, y, {}};
  for (Letter x : letters)
    for (Letter y : letters)
      if (!(x == y) && f.image(y).ends_with(f.image(x)))
        return CodeViolation{CodeViolation::Kind::suffix, x, y, {}};
  if (auto amb = find_ambiguity(f))
    return CodeViolation{CodeViolation::Kind::non_code,
                         amb->first[0],
                         amb->second[0],
                         {amb->first, amb->second}};
  return std::nullopt;
}

/// Letters a with |f^n(a)| unbounded. A letter grows iff it reaches a letter
/// c with |f(c)| >= 2 whose image meets c's own strongly connected component;
/// integer-only analysis on the letter dependency graph.
inline std::vector<bool> growing_letters(const Morphism& f) {
  const std::size_t n = f.alphabet()->size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (Letter b : f.image(Letter{static_cast<std::uint8_t>(a)}).letters())
      reach[a][b.id] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  std::vector<bool> seed(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    const Word& im = f.image(Letter{static_cast<std::uint8_t>(c)});
    if (im.size() < 2) continue;
    for (Letter d : im.letters())
      if (d.id == c || reach[d.id][c]) {
        seed[c] = true;
        break;
      }
  }
  std::vector<bool> growing(n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      if (seed[c] && (a == c || reach[a][c])) {
        growing[a] = true;
        break;
      }
  return growing;
}

inline bool is_growing(const Morphism& f) {
  const auto g = growing_letters(f);
  for (bool b : g)
    if (!b) return false;
  return true;
}

inline bool is_prolongable(const Morphism& f, Letter a) {
  const Word& im = f.image(a);
  return im.size() >= 2 && im[0] == a;
}

/// Length-n prefix of the fixed point reached by iterating f from a.
inline Word fixed_point_prefix(const Morphism& f, Letter a, std::size_t n) {
  if (!is_prolongable(f, a))
    throw std::invalid_argument("morphism is not prolongable on this letter");
  Word w(f.alphabet());
  w.push_back(a);
  while (w.size() < n) w = apply(f, w);
  return w.prefix(n);
}

}  // namespace quasiper

#endif  // QUASIPER_MORPHISM_HPP
