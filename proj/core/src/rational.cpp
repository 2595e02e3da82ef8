#include "pingpong/rational.hpp"

#include <cctype>

namespace pingpong {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) throw ParseError("invalid integer '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rat(parse_integer(text.substr(0, slash)), den);
}

Rat Rat::inverse() const {
  if (is_zero()) throw SingularMatrix("inverse of zero");
  return Rat(mpq_class(1 / value_));
}

BigInt Rat::ceil() const {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw SingularMatrix("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace pingpong
