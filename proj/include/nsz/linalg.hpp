#ifndef NSZ_LINALG_HPP
#define NSZ_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "nsz/scalar.hpp"

namespace nsz {

using QVec = std::vector<Rat>;
using QMat = std::vector<std::vector<Rat>>;

inline QMat q_identity(size_t n) {
  QMat m(n, QVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QMat q_mul(const QMat& a, const QMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMat r(n, QVec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

inline QVec q_apply(const QMat& a, const QVec& x) {
  QVec r(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0) r[i] += a[i][j] * x[j];
  return r;
}

// Exact determinant by fraction-free (Bareiss) elimination on a common
// integer scaling of the matrix.
inline Rat q_det(const QMat& a) {
  size_t n = a.size();
  if (n == 0) return Rat(1);
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  Rat scale(1);
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rat> row(n);
    for (size_t j = 0; j < n; ++j) {
      row[j] = a[i][j];
      row[j].canonicalize();
    }
    Int den(1);
    for (size_t j = 0; j < n; ++j) den = lcm(den, rat_den(row[j]));
    scale /= Rat(den);
    for (size_t j = 0; j < n; ++j) {
      Rat v = row[j] * Rat(den);
      m[i][j] = rat_num(v);
    }
  }
  Int prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num / prev;  // exact by Bareiss
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return Rat(sign) * Rat(m[n - 1][n - 1]) * scale;
}

// Row echelon solve of A x = b with a deterministic free-variable policy:
// columns are scanned left to right, non-pivot variables are set to 0.
// Returns nullopt when inconsistent. Elimination is fraction-free on
// integer-scaled rows with per-row content stripping.
inline std::optional<QVec> solve_consistent(const QMat& a, const QVec& b) {
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) throw std::invalid_argument("solve_consistent: size mismatch");

  // Integerize the augmented matrix row by row.
  std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    std::vector<Rat> row(cols + 1);
    for (size_t j = 0; j < cols; ++j) row[j] = a[i][j];
    row[cols] = b[i];
    Int den(1);
    for (auto& v : row) {
      v.canonicalize();
      den = lcm(den, rat_den(v));
    }
    for (size_t j = 0; j <= cols; ++j) m[i][j] = rat_num(row[j] * Rat(den));
  }

  auto strip_content = [cols](std::vector<Int>& row) {
    Int g(0);
    for (size_t j = 0; j <= cols; ++j) g = gcd(g, row[j]);
    if (g > 1)
      for (size_t j = 0; j <= cols; ++j) row[j] /= g;
  };

  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    strip_content(m[rank]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Int p = m[rank][col], q = m[i][col];
      Int g = gcd(p, q);
      Int mp = p / g, mq = q / g;
      for (size_t j = 0; j <= cols; ++j) m[i][j] = m[i][j] * mp - m[rank][j] * mq;
      strip_content(m[i]);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t i = rank; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;

  QVec x(cols, Rat(0));
  for (size_t i = 0; i < rank; ++i) {
    Rat v(m[i][cols], m[i][pivot_col[i]]);
    v.canonicalize();
    x[pivot_col[i]] = v;
  }
  return x;
}

// Rank of a rational matrix.
inline size_t q_rank(QMat a) {
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (size_t i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / a[rank][col];
      for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Characteristic polynomial det(t I - M), monic, by exact Hessenberg
// reduction. Returned as coefficients c[0..n] with c[n] = 1.
inline QVec charpoly(QMat m) {
  size_t n = m.size();
  for (auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("charpoly: matrix not square");
    for (auto& v : row) v.canonicalize();
  }

  // Reduce to upper Hessenberg form by exact similarity transforms.
  for (size_t col = 0; col + 2 < n; ++col) {
    size_t piv = col + 1;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      std::swap(m[piv], m[col + 1]);
      for (size_t i = 0; i < n; ++i) std::swap(m[i][piv], m[i][col + 1]);
    }
    for (size_t i = col + 2; i < n; ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[col + 1][col];
      for (size_t j = 0; j < n; ++j) m[i][j] -= f * m[col + 1][j];
      for (size_t j = 0; j < n; ++j) m[j][col + 1] += f * m[j][i];
    }
  }

  // p_k(t) = charpoly of the leading k x k block (Hessenberg recurrence).
  std::vector<QVec> p(n + 1);
  p[0] = {Rat(1)};
  for (size_t k = 1; k <= n; ++k) {
    // p_k = (t - m[k-1][k-1]) p_{k-1} - sum_{i=1}^{k-1} m[k-1-i][k-1] (prod subdiag) p_{k-1-i}
    QVec cur(k + 1, Rat(0));
    for (size_t j = 0; j < p[k - 1].size(); ++j) {
      cur[j + 1] += p[k - 1][j];
      cur[j] -= m[k - 1][k - 1] * p[k - 1][j];
    }
    Rat subprod(1);
    for (size_t i = 1; i < k; ++i) {
      subprod *= m[k - i][k - i - 1];
      if (subprod == 0) break;
      Rat coeff = m[k - 1 - i][k - 1] * subprod;
      if (coeff == 0) continue;
      for (size_t j = 0; j < p[k - 1 - i].size(); ++j) cur[j] -= coeff * p[k - 1 - i][j];
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

// Exact Lagrange interpolation: given k+1 nodes/values, returns coefficients
// c[0..k] of the unique degree-<=k polynomial through them.
inline QVec lagrange_interpolate(const QVec& xs, const QVec& ys) {
  size_t k = xs.size();
  if (ys.size() != k) throw std::invalid_argument("lagrange_interpolate: size mismatch");
  QVec acc(k, Rat(0));
  for (size_t i = 0; i < k; ++i) {
    // Basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j).
    QVec basis{Rat(1)};
    Rat denom(1);
    for (size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      QVec nb(basis.size() + 1, Rat(0));
      for (size_t t = 0; t < basis.size(); ++t) {
        nb[t + 1] += basis[t];
        nb[t] -= xs[j] * basis[t];
      }
      basis = std::move(nb);
      denom *= xs[i] - xs[j];
    }
    Rat w = ys[i] / denom;
    for (size_t t = 0; t < basis.size(); ++t) acc[t] += w * basis[t];
  }
  return acc;
}

}  // namespace nsz

#endif
