#include "ifsembed/word.hpp"

#include <cctype>

#include "ifsembed/error.hpp"

namespace ifsembed {

namespace {

Letter checked_letter(unsigned long one_based, std::size_t alphabet, std::string_view text) {
  if (one_based < 1 || one_based > alphabet) {
    throw ParseError("letter out of range in word '" + std::string(text) + "'");
  }
  return static_cast<Letter>(one_based - 1);
}

}  // namespace

Word Word::parse(std::string_view text, std::size_t alphabet) {
  std::vector<Letter> letters;
  if (alphabet <= 9) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("invalid character in word '" + std::string(text) + "'");
      }
      letters.push_back(checked_letter(static_cast<unsigned long>(c - '0'), alphabet, text));
    }
    return Word(std::move(letters));
  }
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('.', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view part = text.substr(start, end - start);
    if (part.empty()) throw ParseError("empty letter in word '" + std::string(text) + "'");
    unsigned long value = 0;
    for (char c : part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("invalid character in word '" + std::string(text) + "'");
      }
      value = value * 10 + static_cast<unsigned long>(c - '0');
      if (value > alphabet) break;
    }
    letters.push_back(checked_letter(value, alphabet, text));
    start = end + 1;
  }
  return Word(std::move(letters));
}

Word Word::append(Letter letter) const {
  Word out = *this;
  out.letters_.push_back(letter);
  return out;
}

Word Word::concat(const Word& tail) const {
  Word out = *this;
  out.letters_.insert(out.letters_.end(), tail.letters_.begin(), tail.letters_.end());
  return out;
}

Word Word::prefix(std::size_t n) const {
  if (n >= size()) return *this;
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<long>(n)));
}

Word Word::suffix_from(std::size_t n) const {
  if (n >= size()) return Word();
  return Word(std::vector<Letter>(letters_.begin() + static_cast<long>(n), letters_.end()));
}

bool Word::starts_with(const Word& p) const {
  if (p.size() > size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (letters_[i] != p.letters_[i]) return false;
  }
  return true;
}

bool Word::incomparable_with(const Word& other) const {
  return !starts_with(other) && !other.starts_with(*this);
}

std::string Word::str(std::size_t alphabet) const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (alphabet > 9 && i) out += '.';
    out += std::to_string(letters_[i] + 1);
  }
  return out;
}

std::vector<Word> all_words(std::size_t alphabet, std::size_t length) {
  std::vector<Word> out{Word()};
  for (std::size_t level = 0; level < length; ++level) {
    std::vector<Word> next;
    next.reserve(out.size() * alphabet);
    for (const auto& w : out) {
      for (Letter a = 0; a < alphabet; ++a) next.push_back(w.append(a));
    }
    out = std::move(next);
  }
  return out;
}

Word expand_power_word(const Word& powered, std::size_t base_alphabet, std::size_t power) {
  std::vector<Letter> letters;
  letters.reserve(powered.size() * power);
  for (Letter big : powered.letters()) {
    std::vector<Letter> digits(power);
    std::size_t value = big;
    for (std::size_t k = power; k-- > 0;) {
      digits[k] = static_cast<Letter>(value % base_alphabet);
      value /= base_alphabet;
    }
    letters.insert(letters.end(), digits.begin(), digits.end());
  }
  return Word(std::move(letters));
}

}  // namespace ifsembed
