#include "pingpong/word.hpp"

#include <cctype>
#include <map>

namespace pingpong {

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  Word word() {
    Word w;
    bool any = false;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') break;
      w = w * factor();
      any = true;
    }
    if (!any) fail("expected a word");
    return w;
  }

  Word factor() {
    Word a = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      a = a.pow(integer());
    }
    return a;
  }

  Word atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'R' || c == 'T') {
      ++pos_;
      return Word({{c == 'R' ? Letter::R : Letter::T, 1}});
    }
    if (c == '(') {
      ++pos_;
      Word inner = word();
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail("expected 'R', 'T' or '('");
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer exponent");
    if (pos_ - digits > 9) fail("exponent too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word::Word(std::vector<Syllable> syllables) {
  for (const auto& s : syllables) append(s);
}

void Word::append(Syllable s) {
  if (s.exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().letter == s.letter) {
    syllables_.back().exponent += s.exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back(s);
}

Word Word::parse(std::string_view text) { return WordParser(text).parse(); }

Word Word::inverse() const {
  Word out;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) out.append({it->letter, -it->exponent});
  return out;
}

Word Word::pow(long e) const {
  const Word base = e < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out = out * base;
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  for (const auto& s : b.syllables_) out.append(s);
  return out;
}

std::string Word::str() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.letter == Letter::R ? 'R' : 'T';
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

Mat eval_word(const Word& w, const Mat& r, const Mat& t) {
  if (r.dim() != t.dim()) throw DimensionMismatch("eval_word: generators differ in dimension");
  std::map<std::pair<Letter, long>, Mat> powers;
  Mat out = Mat::identity(r.dim());
  for (const auto& s : w.syllables()) {
    auto key = std::make_pair(s.letter, s.exponent);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, (s.letter == Letter::R ? r : t).pow(s.exponent)).first;
    out = out * it->second;
  }
  return out;
}

}  // namespace pingpong
