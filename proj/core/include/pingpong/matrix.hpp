#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pingpong/polynomial.hpp"
#include "pingpong/rational.hpp"

namespace pingpong {

class NotUnipotent : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

/// Dimensions the engine works in: the SL(2) demo and Sp(4).
bool supported_dim(int dim);

/// Column vector of rationals.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int dim);
  Vec(std::initializer_list<Rat> entries);
  explicit Vec(std::vector<Rat> entries);

  int dim() const { return static_cast<int>(entries_.size()); }
  const Rat& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  Rat& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
  std::span<const Rat> entries() const { return entries_; }

  bool is_zero() const;

  friend Vec operator+(const Vec& a, const Vec& b);
  friend Vec operator-(const Vec& a, const Vec& b);
  friend Vec operator*(const Rat& s, const Vec& v);
  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  std::vector<Rat> entries_;
};

/// Square matrix of rationals stored row-major. The dimension is fixed at
/// construction and restricted to {2, 4}.
class Mat {
 public:
  Mat() = default;
  /// Zero matrix.
  explicit Mat(int dim);
  /// Row-major literal, e.g. Mat{{1, 2}, {3, 4}}.
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(int dim);
  static Mat zero(int dim) { return Mat(dim); }
  static Mat from_columns(std::span<const Vec> columns);
  static Mat scalar(int dim, const Rat& s);

  int dim() const { return dim_; }
  const Rat& operator()(int r, int c) const { return data_[index(r, c)]; }
  Rat& operator()(int r, int c) { return data_[index(r, c)]; }
  std::span<const Rat> entries() const { return data_; }

  Vec column(int c) const;
  Vec row(int r) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_integral() const;

  Mat transpose() const;
  Rat trace() const;
  Rat det() const;
  int rank() const;

  /// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrix.
  Mat inverse() const;
  /// Integer power; negative exponents go through inverse().
  Mat pow(long e) const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Rat& s) { return a *= s; }
  friend Mat operator*(const Rat& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  Mat operator-() const;

  friend bool operator==(const Mat&, const Mat&) = default;

  std::string str() const;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r * dim_ + c); }

  int dim_ = 0;
  std::vector<Rat> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);
std::ostream& operator<<(std::ostream& os, const Vec& v);

/// Exact product; throws DimensionMismatch.
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_inverse(const Mat& a);

/// Monic det(xI - a) by Faddeev-LeVerrier.
RatPoly charpoly(const Mat& a);

/// True when (a - I)^dim == 0.
bool is_unipotent(const Mat& a);
/// Smallest e >= 1 with l^e == 0, or 0 when l is not nilpotent.
int nilpotency_index(const Mat& l);

/// log(a) = sum_{m=1}^{dim-1} (-1)^{m+1} (a-I)^m / m for unipotent a.
Mat nilpotent_log(const Mat& a);
/// exp(l) = sum_{m=0}^{dim-1} l^m / m! for nilpotent l.
Mat nilpotent_exp(const Mat& l);

}  // namespace pingpong
