#include "pingpong/matpoly.hpp"

namespace pingpong {

MatPoly::MatPoly(Mat c0) { coeffs_.push_back(std::move(c0)); }

MatPoly::MatPoly(std::vector<Mat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error("MatPoly needs at least one coefficient");
  for (const auto& c : coeffs_) {
    if (c.dim() != coeffs_.front().dim()) throw DimensionMismatch("MatPoly coefficients differ in dimension");
  }
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (degree() > kMaxDegree) throw Error("MatPoly degree exceeds 3");
}

RatPoly MatPoly::entry(int r, int c) const {
  std::vector<Rat> v;
  v.reserve(coeffs_.size());
  for (const auto& m : coeffs_) v.push_back(m(r, c));
  return RatPoly(std::move(v));
}

MatPoly MatPoly::reflected() const {
  std::vector<Mat> out = coeffs_;
  for (std::size_t m = 1; m < out.size(); m += 2) out[m] = -out[m];
  return MatPoly(std::move(out));
}

MatPoly operator*(const Mat& left, const MatPoly& f) {
  std::vector<Mat> out;
  out.reserve(f.coeffs_.size());
  for (const auto& c : f.coeffs_) out.push_back(left * c);
  return MatPoly(std::move(out));
}

MatPoly operator*(const MatPoly& f, const Mat& right) {
  std::vector<Mat> out;
  out.reserve(f.coeffs_.size());
  for (const auto& c : f.coeffs_) out.push_back(c * right);
  return MatPoly(std::move(out));
}

Mat matpoly_eval(const MatPoly& f, long n) {
  const Rat x(n);
  Mat acc = f.coeffs().back();
  for (int m = f.degree() - 1; m >= 0; --m) acc = acc * x + f.coeff(m);
  return acc;
}

MatPoly exp_family(const Mat& z) {
  if (nilpotency_index(z) == 0) throw NotNilpotent("exp_family: matrix is not nilpotent");
  std::vector<Mat> coeffs;
  Mat term = Mat::identity(z.dim());
  Rat factorial(1);
  for (int m = 0; m < z.dim() && !term.is_zero(); ++m) {
    if (m > 0) {
      term = term * z;
      factorial *= Rat(m);
    }
    coeffs.push_back(term * factorial.inverse());
  }
  return MatPoly(std::move(coeffs));
}

}  // namespace pingpong
