#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "stml/errors.hpp"
#include "stml/series.hpp"

namespace stml {
namespace linalg {

/// Inverse of a dense n x n matrix with entries in the jet scalar ring
/// (double or nested Series), by Gauss-Jordan elimination with partial
/// pivoting on the constant part. Row-major storage.
template <class T>
std::vector<T> inverse(std::vector<T> a, int n) {
  std::vector<T> inv;
  inv.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.push_back(constant_of(a[0], i == j ? 1.0 : 0.0));

  double scale = 0.0;
  for (const T& e : a) scale = std::max(scale, std::abs(constant_part(e)));
  const double tiny = 1e-13 * std::max(scale, 1.0);

  auto at = [n](std::vector<T>& m, int i, int j) -> T& {
    return m[static_cast<std::size_t>(i) * n + j];
  };

  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(constant_part(at(a, col, col)));
    for (int row = col + 1; row < n; ++row) {
      double cand = std::abs(constant_part(at(a, row, col)));
      if (cand > best) {
        best = cand;
        piv = row;
      }
    }
    if (best < tiny) throw DegeneracyError("singular matrix in jet inverse", {});
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(at(a, piv, j), at(a, col, j));
        std::swap(at(inv, piv, j), at(inv, col, j));
      }
    T d = at(a, col, col);
    for (int j = 0; j < n; ++j) {
      at(a, col, j) = divide(at(a, col, j), d);
      at(inv, col, j) = divide(at(inv, col, j), d);
    }
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      T factor = at(a, row, col);
      for (int j = 0; j < n; ++j) {
        at(a, row, j) -= factor * at(a, col, j);
        at(inv, row, j) -= factor * at(inv, col, j);
      }
    }
  }
  return inv;
}

/// Determinant of a dense double matrix by LU with partial pivoting.
double determinant(std::vector<double> a, int n);

/// Eigenvalues of a symmetric double matrix by cyclic Jacobi sweeps,
/// sorted ascending. Deterministic for a fixed input.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

/// (positive count, negative count) of eigenvalues; throws DegeneracyError
/// if some |eigenvalue| < tol * scale, where scale is the largest magnitude.
std::pair<int, int> inertia(const std::vector<double>& a, int n, double tol = 1e-10);

}  // namespace linalg
}  // namespace stml
