#pragma once

#include <cstddef>
#include <vector>

#include "mtk/cyclo.hpp"

namespace mtk {

/// Dense row-major matrix of cyclotomic numbers.
class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CycloMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycloNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycloNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  CycloMatrix conj_transpose() const;
  CycloMatrix transpose() const;
  /// Every entry embedded into Q(zeta_order).
  CycloMatrix embedded(std::int64_t order) const;
  /// lcm of the entry orders.
  std::int64_t common_order() const;

  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(const CycloNum& s, const CycloMatrix& a);
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycloNum> data_;
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
CycloNum determinant(CycloMatrix m);

}  // namespace mtk
