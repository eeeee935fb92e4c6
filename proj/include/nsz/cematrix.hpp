#ifndef NSZ_CEMATRIX_HPP
#define NSZ_CEMATRIX_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsz/linalg.hpp"
#include "nsz/rng.hpp"
#include "nsz/support.hpp"
#include "nsz/volume.hpp"

namespace nsz {

struct DegenerateLifting : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Facet inequalities c.x <= rhs of the convex hull of full-rank points in
// Z^r, r in {1,2,3}.
struct FacetIneq {
  std::vector<Int> c;
  Int rhs;
};

inline std::vector<FacetIneq> facet_inequalities(const std::vector<LatticePoint>& pts, int r) {
  std::vector<FacetIneq> out;
  if (r == 1) {
    Int lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    out.push_back({{Int(1)}, hi});
    out.push_back({{Int(-1)}, -lo});
    return out;
  }
  if (r == 2) {
    auto h = hull2(pts);
    if (h.size() < 3) throw std::invalid_argument("facet_inequalities: degenerate 2D hull");
    for (size_t i = 0; i < h.size(); ++i) {
      const auto& a = h[i];
      const auto& b = h[(i + 1) % h.size()];
      std::vector<Int> c{b[1] - a[1], -(b[0] - a[0])};
      out.push_back({c, c[0] * a[0] + c[1] * a[1]});
    }
    return out;
  }
  if (r == 3) {
    for (const auto& f : facets3(pts)) out.push_back({f.normal, f.offset});
    if (out.empty()) throw std::invalid_argument("facet_inequalities: degenerate 3D hull");
    return out;
  }
  throw std::invalid_argument("facet_inequalities: rank > 3 not supported");
}

// Exact simplex (Bland's rule) for min c.x s.t. Ax = b, x >= 0.
// Returns nullopt when infeasible. unique_optimum reports whether every
// nonbasic reduced cost is strictly positive at the optimum.
struct LpResult {
  QVec x;
  bool unique_optimum = false;
};

inline std::optional<LpResult> lp_solve(const QMat& a, const QVec& b, const QVec& c) {
  size_t m = a.size(), n = c.size();
  // Phase 1: artificial variables, then phase 2 on the same tableau.
  size_t total = n + m;
  QMat t(m, QVec(total + 1, Rat(0)));
  for (size_t i = 0; i < m; ++i) {
    Rat scale = b[i] < 0 ? Rat(-1) : Rat(1);
    for (size_t j = 0; j < n; ++j) t[i][j] = scale * a[i][j];
    t[i][n + i] = 1;
    t[i][total] = scale * b[i];
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  auto pivot = [&](size_t row, size_t col) {
    Rat piv = t[row][col];
    for (size_t j = 0; j <= total; ++j) t[row][j] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (size_t j = 0; j <= total; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  };

  auto run_simplex = [&](const QVec& cost, size_t ncols) -> void {
    while (true) {
      // Reduced costs via the basic-cost multipliers.
      QVec y(m, Rat(0));
      for (size_t i = 0; i < m; ++i) y[i] = cost[basis[i]];
      size_t enter = ncols;
      for (size_t j = 0; j < ncols; ++j) {
        Rat red = cost[j];
        for (size_t i = 0; i < m; ++i)
          if (t[i][j] != 0) red -= y[i] * t[i][j];
        if (red < 0) {
          enter = j;  // Bland: smallest index
          break;
        }
      }
      if (enter == ncols) return;
      size_t leave = m;
      Rat best;
      for (size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = t[i][total] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) throw std::runtime_error("lp_solve: unbounded");
      pivot(leave, enter);
    }
  };

  QVec phase1_cost(total, Rat(0));
  for (size_t j = n; j < total; ++j) phase1_cost[j] = 1;
  run_simplex(phase1_cost, total);
  Rat obj(0);
  for (size_t i = 0; i < m; ++i)
    if (basis[i] >= n) obj += t[i][total];
  if (obj != 0) return std::nullopt;
  // Drive leftover artificials out of the basis where possible.
  for (size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    for (size_t j = 0; j < n; ++j)
      if (t[i][j] != 0) {
        pivot(i, j);
        break;
      }
  }

  QVec phase2_cost(total, Rat(0));
  for (size_t j = 0; j < n; ++j) phase2_cost[j] = c[j];
  run_simplex(phase2_cost, n);

  LpResult res;
  res.x.assign(n, Rat(0));
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < n) res.x[basis[i]] = t[i][total];
  // Uniqueness: strict positivity of every nonbasic reduced cost.
  QVec y(m, Rat(0));
  for (size_t i = 0; i < m; ++i) y[i] = phase2_cost[basis[i]];
  res.unique_optimum = true;
  std::vector<bool> is_basic(n, false);
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < n) is_basic[basis[i]] = true;
  for (size_t j = 0; j < n && res.unique_optimum; ++j) {
    if (is_basic[j]) continue;
    Rat red = phase2_cost[j];
    for (size_t i = 0; i < m; ++i)
      if (t[i][j] != 0) red -= y[i] * t[i][j];
    if (red <= 0) res.unique_optimum = false;
  }
  return res;
}

}  // namespace detail

// Default generic shift: small distinct positive rationals per axis.
inline std::vector<Rat> ce_default_epsilon(int r, const Int& coord_span, std::uint64_t seed = 0) {
  std::vector<Rat> eps(r);
  Int den = 2 * (r + 1) * coord_span + 3 + 2 * Int(static_cast<long>(seed % 97));
  for (int i = 0; i < r; ++i) {
    eps[i] = Rat(2 * i + 1, den);
    eps[i].canonicalize();
  }
  return eps;
}

// Integer points of ((r+1) Conv(A) + eps) in lattice coordinates, lex order.
// A point exactly on the boundary of the shifted dilate makes eps
// non-generic and raises an error.
inline std::vector<LatticePoint> ce_point_set(const SupportSet& a, const std::vector<Rat>& epsilon,
                                              int r) {
  a.validate();
  LatticeData ld = lattice_data(a);
  if (ld.rank != r) throw std::invalid_argument("ce_point_set: lattice dimension of A differs from r");
  if (static_cast<int>(epsilon.size()) != r) throw std::invalid_argument("ce_point_set: epsilon size");
  std::vector<LatticePoint> pts;
  for (const auto& coords : ld.coordinates) pts.push_back(coords);
  auto ineqs = detail::facet_inequalities(pts, r);

  // Bounding box of (r+1)Q + eps.
  std::vector<Int> lo(r), hi(r);
  for (int c = 0; c < r; ++c) {
    Int mn = pts[0][c], mx = pts[0][c];
    for (const auto& p : pts) {
      mn = std::min(mn, p[c]);
      mx = std::max(mx, p[c]);
    }
    Rat lov = Rat(mn) * (r + 1) + epsilon[c];
    Rat hiv = Rat(mx) * (r + 1) + epsilon[c];
    mpz_fdiv_q(lo[c].get_mpz_t(), lov.get_num().get_mpz_t(), lov.get_den().get_mpz_t());
    mpz_cdiv_q(hi[c].get_mpz_t(), hiv.get_num().get_mpz_t(), hiv.get_den().get_mpz_t());
  }

  std::vector<LatticePoint> result;
  LatticePoint z = lo;
  while (true) {
    bool inside = true;
    for (const auto& iq : ineqs) {
      Rat lhs(0);
      for (int c = 0; c < r; ++c) lhs += Rat(iq.c[c]) * (Rat(z[c]) - epsilon[c]);
      Rat rhs = Rat(iq.rhs) * (r + 1);
      if (lhs == rhs)
        throw std::invalid_argument("ce_point_set: non-generic epsilon (lattice point on boundary)");
      if (lhs > rhs) {
        inside = false;
        break;
      }
    }
    if (inside) result.push_back(z);
    int c = r - 1;
    while (c >= 0) {
      if (z[c] < hi[c]) {
        ++z[c];
        break;
      }
      z[c] = lo[c];
      --c;
    }
    if (c < 0) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

// Symbolic Canny-Emiris matrix for r+1 generic polynomials with common
// support A. Entries are indices into the generic coefficient groups:
// entry (row,col) = (i, alpha) meaning variable U_{i,alpha}, or empty.
struct CEMatrixSpec {
  int order = 0;
  int r = 0;
  std::vector<LatticePoint> points;                      // E, lex order (lattice coords)
  std::vector<std::pair<int, LatticePoint>> row_content; // per row: (i, vertex alpha)
  std::vector<std::vector<std::optional<std::pair<int, LatticePoint>>>> grid;
};

inline CEMatrixSpec ce_matrix(const SupportSet& a, int r, const std::vector<Rat>& epsilon,
                              std::uint64_t lifting_seed) {
  a.validate();
  LatticeData ld = lattice_data(a);
  if (ld.rank != r) throw std::invalid_argument("ce_matrix: lattice dimension of A differs from r");
  std::vector<LatticePoint> apts;
  for (const auto& coords : ld.coordinates) apts.push_back(coords);
  size_t nsupp = apts.size();

  auto epts = ce_point_set(a, epsilon, r);
  size_t order = epts.size();

  // Random integer liftings per polynomial, from the seed.
  Rng rng(lifting_seed);
  std::vector<std::vector<Int>> lift(r + 1, std::vector<Int>(nsupp));
  for (int i = 0; i <= r; ++i)
    for (size_t k = 0; k < nsupp; ++k) lift[i][k] = Int(rng.next_int(0, (1L << 20) - 1));

  std::map<LatticePoint, size_t> eindex;
  for (size_t i = 0; i < order; ++i) eindex[epts[i]] = i;

  CEMatrixSpec spec;
  spec.order = static_cast<int>(order);
  spec.r = r;
  spec.points = epts;
  spec.grid.assign(order, std::vector<std::optional<std::pair<int, LatticePoint>>>(order));

  // LP data shared by all points: columns are (i, alpha) pairs.
  size_t ncols = (r + 1) * nsupp;
  size_t nrows = r + (r + 1);
  QMat A(nrows, QVec(ncols, Rat(0)));
  QVec cost(ncols, Rat(0));
  for (int i = 0; i <= r; ++i)
    for (size_t k = 0; k < nsupp; ++k) {
      size_t col = i * nsupp + k;
      for (int c = 0; c < r; ++c) A[c][col] = Rat(apts[k][c]);
      A[r + i][col] = 1;
      cost[col] = Rat(lift[i][k]);
    }

  for (size_t pi = 0; pi < order; ++pi) {
    QVec b(nrows, Rat(0));
    for (int c = 0; c < r; ++c) b[c] = Rat(epts[pi][c]) - epsilon[c];
    for (int i = 0; i <= r; ++i) b[r + i] = 1;
    auto lp = detail::lp_solve(A, b, cost);
    if (!lp) throw std::logic_error("ce_matrix: point not in the dilated polytope");
    if (!lp->unique_optimum)
      throw DegenerateLifting("ce_matrix: tied lifted cells; retry with a new lifting seed");
    // Summand supports of the optimal cell.
    int content_i = -1;
    size_t content_k = 0;
    for (int i = r; i >= 0; --i) {
      size_t count = 0, last = 0;
      for (size_t k = 0; k < nsupp; ++k)
        if (lp->x[i * nsupp + k] != 0) {
          ++count;
          last = k;
        }
      if (count == 1) {
        content_i = i;
        content_k = last;
        break;
      }
    }
    if (content_i < 0)
      throw DegenerateLifting("ce_matrix: no vertex summand in cell; retry with a new lifting seed");
    const LatticePoint& alpha = apts[content_k];
    spec.row_content.emplace_back(content_i, alpha);
    // Row = x^{p - alpha} F_i: entry at column p - alpha + beta for beta in A.
    for (size_t k = 0; k < nsupp; ++k) {
      LatticePoint q(r);
      for (int c = 0; c < r; ++c) q[c] = epts[pi][c] - alpha[c] + apts[k][c];
      auto it = eindex.find(q);
      if (it == eindex.end())
        throw DegenerateLifting("ce_matrix: row monomial escapes the point set; retry lifting");
      spec.grid[pi][it->second] = std::make_pair(content_i, apts[k]);
    }
  }
  return spec;
}

// Specialize the symbolic matrix with numeric coefficients per (i, alpha).
inline QMat ce_specialize(const CEMatrixSpec& spec,
                          const std::map<std::pair<int, LatticePoint>, Rat>& values) {
  QMat m(spec.order, QVec(spec.order, Rat(0)));
  for (int i = 0; i < spec.order; ++i)
    for (int j = 0; j < spec.order; ++j)
      if (spec.grid[i][j]) {
        auto it = values.find(*spec.grid[i][j]);
        if (it == values.end()) throw std::invalid_argument("ce_specialize: missing coefficient");
        m[i][j] = it->second;
      }
  return m;
}

// Sylvester resultant of two univariate polynomials given by coefficient
// vectors (index = exponent), degrees df and dg.
inline Rat sylvester_resultant(const QVec& f, int df, const QVec& g, int dg) {
  if (df < 1 || dg < 1) throw std::invalid_argument("sylvester_resultant: positive degrees required");
  size_t n = static_cast<size_t>(df + dg);
  QMat s(n, QVec(n, Rat(0)));
  for (int row = 0; row < dg; ++row)
    for (int k = 0; k <= df; ++k) s[row][row + k] = f[df - k];
  for (int row = 0; row < df; ++row)
    for (int k = 0; k <= dg; ++k) s[dg + row][row + k] = g[dg - k];
  return q_det(s);
}

struct ZeroResultant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResultantCheck {
  Rat det;
  Rat resultant;
  bool quotient_ok = false;
  std::vector<Rat> ratios;  // det/res for the given and the extra specializations
};

using CESpecialization = std::map<std::pair<int, LatticePoint>, Rat>;

// Builds the CE matrix, retrying liftings until generic.
inline CEMatrixSpec ce_matrix_generic(const SupportSet& a, int r, const std::vector<Rat>& epsilon,
                                      std::uint64_t lifting_seed, int max_attempts = 32) {
  for (int attempt = 0;; ++attempt) {
    try {
      return ce_matrix(a, r, epsilon, lifting_seed + attempt);
    } catch (const DegenerateLifting&) {
      if (attempt >= max_attempts) throw;
    }
  }
}

namespace detail {
// Exponent-indexed coefficient vectors from a univariate specialization.
inline std::pair<QVec, QVec> coeff_vectors(const LatticeData& ld, const CESpecialization& values,
                                           int d) {
  QVec fc(d + 1, Rat(0)), gc(d + 1, Rat(0));
  for (const auto& coords : ld.coordinates) {
    int e = static_cast<int>(coords[0].get_si());
    auto fit = values.find({0, coords});
    auto git = values.find({1, coords});
    if (fit == values.end() || git == values.end())
      throw std::invalid_argument("ce_resultant_check: specialization misses a coefficient");
    fc[e] = fit->second;
    gc[e] = git->second;
  }
  return {fc, gc};
}
}  // namespace detail

// Univariate check: the structured determinant against the
// classical Sylvester resultant, for the given specialization and three more
// random ones; quotient_ok reports a consistent integer quotient.
inline ResultantCheck ce_resultant_check(const SupportSet& a, const CESpecialization& specialization,
                                         std::uint64_t seed = 1) {
  if (a.dim != 1) throw std::invalid_argument("ce_resultant_check: only univariate supports");
  if (lattice_rank(a) != 1) throw std::invalid_argument("ce_resultant_check: support must span a 1D lattice");
  Int span(0);
  for (const auto& p : a.points) span = std::max(span, int_abs(p[0]));
  auto eps = ce_default_epsilon(1, span);
  CEMatrixSpec spec = ce_matrix_generic(a, 1, eps, seed);

  LatticeData ld = lattice_data(a);
  int d = 0;
  for (const auto& coords : ld.coordinates) {
    if (coords[0] < 0) throw std::invalid_argument("ce_resultant_check: negative exponents unsupported");
    d = std::max(d, static_cast<int>(coords[0].get_si()));
  }

  ResultantCheck out;
  auto [fc, gc] = detail::coeff_vectors(ld, specialization, d);
  out.resultant = sylvester_resultant(fc, d, gc, d);
  if (out.resultant == 0)
    throw ZeroResultant("ce_resultant_check: zero resultant at specialization; retry with another");
  out.det = q_det(ce_specialize(spec, specialization));
  out.ratios.push_back(out.det / out.resultant);

  Rng rng(seed * 7919 + 13);
  for (int t = 0; t < 3; ++t) {
    CESpecialization values;
    for (const auto& coords : ld.coordinates) {
      int e = static_cast<int>(coords[0].get_si());
      Rat fv(rng.next_int(-20, 20)), gv(rng.next_int(-20, 20));
      while (e == d && fv == 0) fv = Rat(rng.next_int(-20, 20));
      while (e == d && gv == 0) gv = Rat(rng.next_int(-20, 20));
      values[{0, coords}] = fv;
      values[{1, coords}] = gv;
    }
    auto [rfc, rgc] = detail::coeff_vectors(ld, values, d);
    Rat res = sylvester_resultant(rfc, d, rgc, d);
    if (res == 0) {
      --t;
      continue;
    }
    out.ratios.push_back(q_det(ce_specialize(spec, values)) / res);
  }
  out.quotient_ok = true;
  for (const auto& q : out.ratios)
    if (q != out.ratios[0] || rat_den(q) != 1) out.quotient_ok = false;
  return out;
}

}  // namespace nsz

#endif
