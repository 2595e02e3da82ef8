#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pingpong/matrix.hpp"

namespace pingpong {

enum class Letter { R, T };

struct Syllable {
  Letter letter;
  long exponent;  // nonzero
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Word in the generators R and T. Stored freely reduced: adjacent syllables
/// use distinct letters and no exponent is zero.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);

  /// Parses e.g. "(R^6 T)^2 (R^6 T^-1)^2". Grammar:
  ///   word := factor+ ; factor := atom ['^' int] ; atom := 'R' | 'T' | '(' word ')'
  /// Whitespace is ignored. Throws ParseError.
  static Word parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }

  Word inverse() const;
  Word pow(long e) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

  /// Canonical text, e.g. "R^6 T R^6 T^-1"; "1" for the empty word.
  std::string str() const;

 private:
  void append(Syllable s);
  std::vector<Syllable> syllables_;
};

/// Left-to-right product of generator powers.
Mat eval_word(const Word& w, const Mat& r, const Mat& t);

}  // namespace pingpong
