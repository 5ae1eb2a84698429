#pragma once

// Dense exact linear algebra over a field: Gauss-Jordan inversion and
// determinants. Zero entries are skipped, so triangular-ish systems are cheap.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace capelli {

template <class C>
using Matrix = std::vector<std::vector<C>>;

template <class C>
struct Inversion {
  Matrix<C> inverse;
  C determinant;
};

/// Inverse and determinant, or nullopt when singular.
template <class C>
std::optional<Inversion<C>> invert(Matrix<C> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("invert: matrix is not square");
  Matrix<C> inv(n, std::vector<C>(n, C(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = C(1);
  C det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(inv[piv], inv[col]);
      det = -det;
    }
    const C p = a[col][col];
    det *= p;
    const C pinv = C(1) / p;
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[col][j].is_zero()) a[col][j] *= pinv;
      if (!inv[col][j].is_zero()) inv[col][j] *= pinv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const C f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[col][j].is_zero()) a[r][j] -= f * a[col][j];
        if (!inv[col][j].is_zero()) inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return Inversion<C>{std::move(inv), std::move(det)};
}

/// Determinant by elimination.
template <class C>
C determinant(Matrix<C> a) {
  const std::size_t n = a.size();
  C det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return C(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const C pinv = C(1) / a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const C f = a[r][col] * pinv;
      for (std::size_t j = col; j < n; ++j)
        if (!a[col][j].is_zero()) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

}  // namespace capelli
