#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ifsembed {

/// Zero-based letter index into an IFS alphabet. Text forms are one-based.
using Letter = std::uint32_t;

/// Finite word over {0..m-1}; the empty word names the identity cylinder.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word repeat(Letter letter, std::size_t count) {
    return Word(std::vector<Letter>(count, letter));
  }
  /// Parses the one-based text form: plain digits when the alphabet has at
  /// most nine letters ("127"), otherwise dot-separated numbers ("1.12.3").
  static Word parse(std::string_view text, std::size_t alphabet);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  Word append(Letter letter) const;
  Word concat(const Word& tail) const;
  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t n) const;
  bool starts_with(const Word& prefix) const;
  /// Neither word is a prefix of the other.
  bool incomparable_with(const Word& other) const;

  std::string str(std::size_t alphabet) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// All m^length words in lexicographic order.
std::vector<Word> all_words(std::size_t alphabet, std::size_t length);

/// Rewrites a word over the p-th power alphabet (letters indexing Lambda^p in
/// lexicographic order) as a word over the base alphabet.
Word expand_power_word(const Word& powered, std::size_t base_alphabet, std::size_t power);

}  // namespace ifsembed
