#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "elliptica/complex_math.hpp"

namespace elliptica {

/// Dense row-major square matrix of complex entries.
template <typename T>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  Complex<T>& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex<T>& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<Complex<T>> data_;
};

/// Determinant by Gaussian elimination with partial pivoting.
template <typename T>
Complex<T> determinant(SquareMatrix<T> m) {
  const std::size_t n = m.size();
  Complex<T> det{1};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    T best = std::abs(m(col, col));
    for (std::size_t row = col + 1; row < n; ++row) {
      const T mag = std::abs(m(row, col));
      if (mag > best) {
        best = mag;
        pivot = row;
      }
    }
    if (best == T(0)) return Complex<T>{};
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(pivot, j));
      det = -det;
    }
    const Complex<T> diag = m(col, col);
    det *= diag;
    for (std::size_t row = col + 1; row < n; ++row) {
      const Complex<T> factor = m(row, col) / diag;
      if (factor == Complex<T>{}) continue;
      for (std::size_t j = col + 1; j < n; ++j) m(row, j) -= factor * m(col, j);
    }
  }
  return det;
}

}  // namespace elliptica
