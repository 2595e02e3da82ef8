#include "pingpong/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace pingpong {

namespace {

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

void require_supported(int dim) {
  if (!supported_dim(dim)) throw DimensionMismatch("unsupported dimension " + std::to_string(dim));
}

}  // namespace

bool supported_dim(int dim) { return dim == 2 || dim == 4; }

Vec::Vec(int dim) : entries_(static_cast<std::size_t>(dim)) { require_supported(dim); }

Vec::Vec(std::initializer_list<Rat> entries) : entries_(entries) { require_supported(dim()); }

Vec::Vec(std::vector<Rat> entries) : entries_(std::move(entries)) { require_supported(dim()); }

bool Vec::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  require_same_dim(a.dim(), b.dim(), "vector sum");
  Vec out = a;
  for (int i = 0; i < a.dim(); ++i) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same_dim(a.dim(), b.dim(), "vector difference");
  Vec out = a;
  for (int i = 0; i < a.dim(); ++i) out[i] -= b[i];
  return out;
}

Vec operator*(const Rat& s, const Vec& v) {
  Vec out = v;
  for (int i = 0; i < v.dim(); ++i) out[i] *= s;
  return out;
}

Mat::Mat(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim * dim)) { require_supported(dim); }

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) : dim_(static_cast<int>(rows.size())) {
  require_supported(dim_);
  data_.reserve(static_cast<std::size_t>(dim_ * dim_));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim_) throw DimensionMismatch("matrix literal is not square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Mat Mat::identity(int dim) { return scalar(dim, Rat(1)); }

Mat Mat::scalar(int dim, const Rat& s) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = s;
  return m;
}

Mat Mat::from_columns(std::span<const Vec> columns) {
  const int dim = static_cast<int>(columns.size());
  Mat m(dim);
  for (int c = 0; c < dim; ++c) {
    require_same_dim(columns[static_cast<std::size_t>(c)].dim(), dim, "from_columns");
    for (int r = 0; r < dim; ++r) m(r, c) = columns[static_cast<std::size_t>(c)][r];
  }
  return m;
}

Vec Mat::column(int c) const {
  Vec v(dim_);
  for (int r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Mat::row(int r) const {
  Vec v(dim_);
  for (int c = 0; c < dim_; ++c) v[c] = (*this)(r, c);
  return v;
}

bool Mat::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Mat::is_identity() const { return *this == identity(dim_); }

bool Mat::is_integral() const {
  for (const auto& e : data_) {
    if (!e.is_integer()) return false;
  }
  return true;
}

Mat Mat::transpose() const {
  Mat t(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rat Mat::trace() const {
  Rat t;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Rat Mat::det() const {
  Mat a = *this;
  Rat det(1);
  for (int col = 0; col < dim_; ++col) {
    int pivot = col;
    while (pivot < dim_ && a(pivot, col).is_zero()) ++pivot;
    if (pivot == dim_) return Rat(0);
    if (pivot != col) {
      for (int c = 0; c < dim_; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < dim_; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rat f = a(r, col) / a(col, col);
      for (int c = col; c < dim_; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

int Mat::rank() const {
  Mat a = *this;
  int rank = 0;
  for (int col = 0; col < dim_ && rank < dim_; ++col) {
    int pivot = rank;
    while (pivot < dim_ && a(pivot, col).is_zero()) ++pivot;
    if (pivot == dim_) continue;
    for (int c = 0; c < dim_; ++c) std::swap(a(pivot, c), a(rank, c));
    for (int r = rank + 1; r < dim_; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rat f = a(r, col) / a(rank, col);
      for (int c = col; c < dim_; ++c) a(r, c) -= f * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

Mat Mat::inverse() const {
  Mat a = *this;
  Mat inv = identity(dim_);
  for (int col = 0; col < dim_; ++col) {
    int pivot = col;
    while (pivot < dim_ && a(pivot, col).is_zero()) ++pivot;
    if (pivot == dim_) throw SingularMatrix("matrix is singular:\n" + str());
    if (pivot != col) {
      for (int c = 0; c < dim_; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rat p = a(col, col).inverse();
    for (int c = 0; c < dim_; ++c) {
      a(col, c) *= p;
      inv(col, c) *= p;
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rat f = a(r, col);
      for (int c = 0; c < dim_; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

Mat Mat::pow(long e) const {
  Mat base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Mat out = identity(dim_);
  while (n > 0) {
    if (n & 1UL) out = out * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return out;
}

Mat& Mat::operator+=(const Mat& o) {
  require_same_dim(dim_, o.dim_, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_dim(dim_, o.dim_, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Mat& Mat::operator*=(const Rat& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

Mat Mat::operator-() const {
  Mat out = *this;
  for (auto& e : out.data_) e = -e;
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_dim(a.dim_, b.dim_, "matrix product");
  const int n = a.dim_;
  Mat out(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const Rat& ark = a(r, k);
      if (ark.is_zero()) continue;
      for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

Vec operator*(const Mat& a, const Vec& v) {
  require_same_dim(a.dim(), v.dim(), "matrix-vector product");
  Vec out(v.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) out[r] += a(r, c) * v[c];
  return out;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const auto& e : m.entries()) {
    cells.push_back(e.str());
    width = std::max(width, cells.back().size());
  }
  for (int r = 0; r < m.dim(); ++r) {
    os << "  [";
    for (int c = 0; c < m.dim(); ++c) {
      const auto& cell = cells[static_cast<std::size_t>(r * m.dim() + c)];
      os << std::string(width - cell.size() + (c == 0 ? 0 : 2), ' ') << cell;
    }
    os << "]\n";
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
  os << '(';
  for (int i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  return os << ")^T";
}

Mat mat_mul(const Mat& a, const Mat& b) { return a * b; }

Mat mat_inverse(const Mat& a) { return a.inverse(); }

RatPoly charpoly(const Mat& a) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const int n = a.dim();
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  Mat mk = Mat::zero(n);
  for (int k = 1; k <= n; ++k) {
    mk = a * mk + Mat::scalar(n, c[static_cast<std::size_t>(n - k + 1)]);
    c[static_cast<std::size_t>(n - k)] = -(a * mk).trace() / Rat(k);
  }
  return RatPoly(std::move(c));
}

bool is_unipotent(const Mat& a) {
  return (a - Mat::identity(a.dim())).pow(a.dim()).is_zero();
}

int nilpotency_index(const Mat& l) {
  Mat p = l;
  for (int e = 1; e <= l.dim(); ++e) {
    if (p.is_zero()) return e;
    p = p * l;
  }
  return 0;
}

Mat nilpotent_log(const Mat& a) {
  if (!is_unipotent(a)) throw NotUnipotent("nilpotent_log: matrix is not unipotent:\n" + a.str());
  const int n = a.dim();
  const Mat x = a - Mat::identity(n);
  Mat term = Mat::identity(n);
  Mat out = Mat::zero(n);
  for (int m = 1; m < n; ++m) {
    term = term * x;
    const Rat coeff = Rat(m % 2 == 1 ? 1 : -1) / Rat(m);
    out += term * coeff;
  }
  return out;
}

Mat nilpotent_exp(const Mat& l) {
  if (nilpotency_index(l) == 0) throw NotNilpotent("nilpotent_exp: matrix is not nilpotent:\n" + l.str());
  const int n = l.dim();
  Mat term = Mat::identity(n);
  Mat out = Mat::identity(n);
  Rat factorial(1);
  for (int m = 1; m < n; ++m) {
    term = term * l;
    factorial *= Rat(m);
    out += term * factorial.inverse();
  }
  return out;
}

}  // namespace pingpong
