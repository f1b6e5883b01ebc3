#include "mtk/matrix.hpp"

#include <stdexcept>

namespace mtk {

CycloMatrix CycloMatrix::identity(std::size_t n) {
  CycloMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloNum(1);
  return m;
}

CycloMatrix CycloMatrix::conj_transpose() const {
  CycloMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
  return r;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

std::int64_t CycloMatrix::common_order() const {
  std::int64_t n = 1;
  for (const auto& x : data_) n = lcm_order(n, x.order());
  return n;
}

CycloMatrix CycloMatrix::embedded(std::int64_t order) const {
  CycloMatrix r = *this;
  for (auto& x : r.data_) x = x.embed(order);
  return r;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  const std::int64_t n = lcm_order(a.common_order(), b.common_order());
  const CycloMatrix ae = a.embedded(n);
  const CycloMatrix be = b.embedded(n);
  CycloMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      CycloNum acc(Rational(0), n);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const CycloNum& x = ae(i, k);
        const CycloNum& y = be(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
      }
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

CycloMatrix operator*(const CycloNum& s, const CycloMatrix& a) {
  CycloMatrix r = a;
  for (auto& x : r.data_) x = s * x;
  return r;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (!(a.data_[i] == b.data_[i])) return false;
  return true;
}

CycloNum determinant(CycloMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return CycloNum(1);
  m = m.embedded(m.common_order());
  CycloNum prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return CycloNum(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    const CycloNum prev_inv = prev.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) * prev_inv;
      }
      m(i, k) = CycloNum(0);
    }
    prev = m(k, k);
  }
  CycloNum det = m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace mtk
