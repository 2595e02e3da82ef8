#pragma once

#include <vector>

#include "pingpong/matrix.hpp"

namespace pingpong {

/// Polynomial in one integer variable with matrix coefficients,
/// C_0 + C_1 n + C_2 n^2 + C_3 n^3. The degree is bounded by 3 because
/// every nilpotent Z in dimension 4 satisfies Z^4 = 0.
class MatPoly {
 public:
  static constexpr int kMaxDegree = 3;

  MatPoly() = default;
  /// Constant family.
  explicit MatPoly(Mat c0);
  /// Trailing zero coefficients are dropped (a zero family keeps C_0).
  explicit MatPoly(std::vector<Mat> coeffs);

  int dim() const { return coeffs_.front().dim(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Mat>& coeffs() const { return coeffs_; }
  const Mat& coeff(int m) const { return coeffs_[static_cast<std::size_t>(m)]; }

  /// Polynomial of entry (r, c).
  RatPoly entry(int r, int c) const;

  /// Same family with n replaced by -n.
  MatPoly reflected() const;

  friend MatPoly operator*(const Mat& left, const MatPoly& f);
  friend MatPoly operator*(const MatPoly& f, const Mat& right);
  friend bool operator==(const MatPoly&, const MatPoly&) = default;

 private:
  std::vector<Mat> coeffs_;
};

/// sum_m C_m n^m, exact.
Mat matpoly_eval(const MatPoly& f, long n);

/// exp(nZ) = sum_m n^m Z^m / m! as a polynomial in n (Z nilpotent).
MatPoly exp_family(const Mat& z);

}  // namespace pingpong
