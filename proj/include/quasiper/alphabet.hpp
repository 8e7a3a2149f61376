#ifndef QUASIPER_ALPHABET_HPP
#define QUASIPER_ALPHABET_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quasiper {

/// Index of a letter within an Alphabet.
struct Letter {
  std::uint8_t id = 0;
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// An ordered, immutable set of letter symbols. Words and morphisms keep a
/// shared reference to the alphabet they are defined over; values over
/// different alphabets may not be combined.
class Alphabet {
 public:
  explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty())
      throw std::invalid_argument("alphabet must not be empty");
    if (symbols_.size() > 256)
      throw std::invalid_argument("alphabet too large");
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      for (std::size_t j = i + 1; j < symbols_.size(); ++j)
        if (symbols_[i] == symbols_[j])
          throw std::invalid_argument("duplicate letter in alphabet");
  }

  static std::shared_ptr<const Alphabet> make(std::string symbols) {
    return std::make_shared<const Alphabet>(std::move(symbols));
  }

  std::size_t size() const { return symbols_.size(); }

  char symbol(Letter a) const {
    if (a.id >= symbols_.size())
      throw std::invalid_argument("letter id out of range for alphabet");
    return symbols_[a.id];
  }

  std::optional<Letter> letter(char c) const {
    auto pos = symbols_.find(c);
    if (pos == std::string::npos) return std::nullopt;
    return Letter{static_cast<std::uint8_t>(pos)};
  }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(symbols_.size());
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      out.push_back(Letter{static_cast<std::uint8_t>(i)});
    return out;
  }

  const std::string& symbols() const { return symbols_; }

  friend bool operator==(const Alphabet& x, const Alphabet& y) {
    return x.symbols_ == y.symbols_;
  }

 private:
  std::string symbols_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

inline bool same_alphabet(const AlphabetRef& x, const AlphabetRef& y) {
  return x == y || (x && y && *x == *y);
}

inline void require_same_alphabet(const AlphabetRef& x, const AlphabetRef& y) {
  if (!same_alphabet(x, y))
    throw std::invalid_argument("values are over different alphabets");
}

}  // namespace quasiper

#endif  // QUASIPER_ALPHABET_HPP
