#ifndef NSZ_SUPPORT_HPP
#define NSZ_SUPPORT_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "nsz/poly.hpp"

namespace nsz {

using LatticePoint = std::vector<Int>;

// Finite set of integer exponent vectors in Z^n.
struct SupportSet {
  int dim = 0;  // ambient n
  std::vector<LatticePoint> points;

  void validate() const {
    if (points.empty()) throw std::invalid_argument("SupportSet: empty");
    for (const auto& p : points)
      if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("SupportSet: ragged point");
  }

  bool contains_origin() const {
    for (const auto& p : points)
      if (std::all_of(p.begin(), p.end(), [](const Int& x) { return x == 0; })) return true;
    return false;
  }

  static SupportSet from_points(int dim, std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    SupportSet s{dim, std::move(pts)};
    s.validate();
    return s;
  }
};

// Union of exponent sets; with the affine frame flag also 0 and e_1..e_n.
inline SupportSet support(const std::vector<MultiPoly>& fs, bool include_affine_frame = false) {
  if (fs.empty()) throw std::invalid_argument("support: empty polynomial list");
  int n = fs[0].nvars();
  std::set<LatticePoint> pts;
  for (const auto& f : fs) {
    if (f.nvars() != n) throw std::invalid_argument("support: variable-count mismatch");
    for (const auto& [m, c] : f.terms()) {
      LatticePoint p(n);
      for (int i = 0; i < n; ++i) p[i] = m[i];
      pts.insert(std::move(p));
    }
  }
  if (include_affine_frame) {
    pts.insert(LatticePoint(n, Int(0)));
    for (int i = 0; i < n; ++i) {
      LatticePoint e(n, Int(0));
      e[i] = 1;
      pts.insert(std::move(e));
    }
  }
  return SupportSet{n, std::vector<LatticePoint>(pts.begin(), pts.end())};
}

// Basis of the Z-module generated by the points of A, plus coordinates of
// every point in that basis.
struct LatticeData {
  int rank = 0;
  std::vector<LatticePoint> basis;                 // rank vectors in Z^n
  std::vector<std::vector<Int>> coordinates;       // one row per point of A, length rank
};

namespace detail {

// Hermite-style integer row reduction; returns the nonzero rows.
inline std::vector<LatticePoint> row_basis(std::vector<LatticePoint> rows, int n) {
  std::vector<LatticePoint> basis;
  int col = 0;
  size_t r0 = 0;
  while (col < n && r0 < rows.size()) {
    // Euclidean reduction in this column.
    while (true) {
      size_t best = rows.size();
      for (size_t i = r0; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || int_abs(rows[i][col]) < int_abs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;  // column all zero
      std::swap(rows[r0], rows[best]);
      bool done = true;
      for (size_t i = r0 + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q = rows[i][col] / rows[r0][col];  // truncated division is fine here
        for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r0][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r0][col] != 0) {
      if (rows[r0][col] < 0)
        for (int j = 0; j < n; ++j) rows[r0][j] = -rows[r0][j];
      ++r0;
    }
    ++col;
  }
  rows.resize(r0);
  return rows;
}

}  // namespace detail

inline LatticeData lattice_data(const SupportSet& a) {
  a.validate();
  int n = a.dim;
  LatticeData out;
  out.basis = detail::row_basis(a.points, n);
  out.rank = static_cast<int>(out.basis.size());
  // Express each point in the echelon basis by back-substitution on pivots.
  std::vector<int> pivot_col(out.rank);
  for (int i = 0; i < out.rank; ++i) {
    int c = 0;
    while (out.basis[i][c] == 0) ++c;
    pivot_col[i] = c;
  }
  for (const auto& p : a.points) {
    LatticePoint residue = p;
    std::vector<Int> coords(out.rank, Int(0));
    for (int i = 0; i < out.rank; ++i) {
      int c = pivot_col[i];
      if (residue[c] == 0) continue;
      if (residue[c] % out.basis[i][c] != 0)
        throw std::logic_error("lattice_data: point not in generated lattice");
      Int q = residue[c] / out.basis[i][c];
      coords[i] = q;
      for (int j = 0; j < n; ++j) residue[j] -= q * out.basis[i][j];
    }
    for (int j = 0; j < n; ++j)
      if (residue[j] != 0) throw std::logic_error("lattice_data: reduction failed");
    out.coordinates.push_back(std::move(coords));
  }
  return out;
}

}  // namespace nsz

#endif
