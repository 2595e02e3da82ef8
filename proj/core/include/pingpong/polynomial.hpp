#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pingpong/rational.hpp"

namespace pingpong {

class IntPoly;

/// Univariate polynomial with rational coefficients, constant term first.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);

  static RatPoly monomial(const Rat& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int i) const;
  Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

  Rat operator()(const Rat& x) const;
  RatPoly derivative() const;
  RatPoly monic() const;

  /// Euclidean division; throws Error when dividing by zero.
  static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& quot, RatPoly& rem);
  /// Monic gcd (zero if both inputs are zero).
  static RatPoly gcd(RatPoly a, RatPoly b);
  bool is_squarefree() const;

  std::optional<IntPoly> to_integer() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Univariate polynomial with unbounded integer coefficients, constant term first.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPoly pow(unsigned e) const;
  /// Exact division; throws Error if b does not divide this with integer quotient.
  IntPoly exact_div(const IntPoly& b) const;
  RatPoly to_rational() const;

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string str(char var = 'x') const { return to_rational().str(var); }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// The n-th cyclotomic polynomial, n >= 1.
IntPoly cyclotomic(unsigned n);

inline std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.str(); }
inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

}  // namespace pingpong
