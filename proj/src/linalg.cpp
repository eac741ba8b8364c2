#include "stml/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace stml {
namespace linalg {

double determinant(std::vector<double> a, int n) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(at(row, col)) > std::abs(at(piv, col))) piv = row;
    if (at(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(col, j));
      det = -det;
    }
    det *= at(col, col);
    for (int row = col + 1; row < n; ++row) {
      double f = at(row, col) / at(col, col);
      for (int j = col; j < n; ++j) at(row, j) -= f * at(col, j);
    }
  }
  return det;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (off < 1e-30) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::pair<int, int> inertia(const std::vector<double>& a, int n, double tol) {
  std::vector<double> eig = symmetric_eigenvalues(a, n);
  double scale = 0.0;
  for (double e : eig) scale = std::max(scale, std::abs(e));
  const double cutoff = tol * std::max(scale, 1e-300);
  int plus = 0, minus = 0;
  for (double e : eig) {
    if (std::abs(e) < cutoff)
      throw DegeneracyError("near-zero eigenvalue in signature computation", {});
    (e > 0.0 ? plus : minus) += 1;
  }
  return {plus, minus};
}

}  // namespace linalg
}  // namespace stml
