#include "pingpong/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace pingpong {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatPoly RatPoly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

Rat RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rat RatPoly::operator()(const Rat& x) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  const Rat lead = leading();
  std::vector<Rat> v = coeffs_;
  for (auto& c : v) c /= lead;
  return RatPoly(std::move(v));
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& quot, RatPoly& rem) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rat> r = a.coeffs_;
  const int db = b.degree();
  std::vector<Rat> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
  for (int i = a.degree(); i >= db; --i) {
    const Rat c = r[static_cast<std::size_t>(i)] / b.leading();
    q[static_cast<std::size_t>(i - db)] = c;
    if (c.is_zero()) continue;
    for (int k = 0; k <= db; ++k) r[static_cast<std::size_t>(i - db + k)] -= c * b.coeffs_[static_cast<std::size_t>(k)];
  }
  quot = RatPoly(std::move(q));
  rem = RatPoly(std::move(r));
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool RatPoly::is_squarefree() const {
  if (degree() <= 0) return true;
  return gcd(*this, derivative()).degree() == 0;
}

std::optional<IntPoly> RatPoly::to_integer() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (!c.is_integer()) return std::nullopt;
    out.push_back(c.num());
  }
  return IntPoly(std::move(out));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return RatPoly(std::move(v));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(v));
}

std::string RatPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rat(1);
    if (!unit || i == 0) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly out{1};
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

RatPoly IntPoly::to_rational() const {
  std::vector<Rat> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.emplace_back(c);
  return RatPoly(std::move(v));
}

IntPoly IntPoly::exact_div(const IntPoly& b) const {
  RatPoly q, r;
  RatPoly::divmod(to_rational(), b.to_rational(), q, r);
  auto qi = q.to_integer();
  if (!r.is_zero() || !qi) throw Error("polynomial " + b.str() + " does not divide " + str());
  return *qi;
}

IntPoly cyclotomic(unsigned n) {
  if (n == 0) throw Error("cyclotomic polynomial of order 0");
  // x^n - 1 = prod_{d | n} Phi_d(x)
  std::vector<BigInt> v(n + 1, BigInt(0));
  v.front() = -1;
  v.back() = 1;
  IntPoly p(std::move(v));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = p.exact_div(cyclotomic(d));
  }
  return p;
}

}  // namespace pingpong
