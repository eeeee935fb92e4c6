#ifndef NSZ_QUOTIENT_HPP
#define NSZ_QUOTIENT_HPP

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nsz/groebner.hpp"
#include "nsz/linalg.hpp"
#include "nsz/poly.hpp"
#include "nsz/rng.hpp"

namespace nsz {

struct UnitIdeal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PositiveDimensional : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-dimensional quotient Q[x_1..x_n]/(F_1..F_n) with its standard
// monomial basis and per-variable multiplication matrices.
class QuotientAlgebra {
 public:
  static QuotientAlgebra build(const std::vector<MultiPoly>& gens) {
    QuotientAlgebra q;
    q.generators_ = gens;
    q.nvars_ = gens.at(0).nvars();
    q.gb_ = groebner(gens);
    if (q.gb_.is_unit_ideal()) throw UnitIdeal("quotient_algebra: ideal is the unit ideal");

    // Zero-dimensionality: every variable needs a pure-power leading monomial.
    std::vector<int> cap(q.nvars_, -1);
    for (const auto& g : q.gb_.generators) {
      const Monomial& lm = g.leading_term().first;
      int nz = -1;
      bool pure = true;
      for (int i = 0; i < q.nvars_; ++i) {
        if (lm[i] > 0) {
          if (nz >= 0) pure = false;
          nz = i;
        }
      }
      if (pure && nz >= 0 && (cap[nz] < 0 || lm[nz] < cap[nz])) cap[nz] = lm[nz];
    }
    for (int i = 0; i < q.nvars_; ++i)
      if (cap[i] < 0)
        throw PositiveDimensional("quotient_algebra: ideal is not zero-dimensional");

    // Standard monomials: not divisible by any leading monomial.
    Monomial cur(q.nvars_, 0);
    std::vector<Monomial> lms;
    for (const auto& g : q.gb_.generators) lms.push_back(g.leading_term().first);
    std::function<void(int)> enumerate = [&](int var) {
      if (var == q.nvars_) {
        for (const auto& lm : lms)
          if (divides(lm, cur)) return;
        q.basis_.push_back(cur);
        return;
      }
      for (int e = 0; e < cap[var]; ++e) {
        cur[var] = e;
        enumerate(var + 1);
      }
      cur[var] = 0;
    };
    enumerate(0);
    std::sort(q.basis_.begin(), q.basis_.end(),
              [](const Monomial& a, const Monomial& b) { return grevlex_greater(b, a); });
    for (size_t i = 0; i < q.basis_.size(); ++i) q.index_[q.basis_[i]] = i;

    size_t d = q.basis_.size();
    q.mult_.assign(q.nvars_, QMat(d, QVec(d, Rat(0))));
    for (int v = 0; v < q.nvars_; ++v)
      for (size_t j = 0; j < d; ++j) {
        Monomial m = q.basis_[j];
        m[v] += 1;
        QVec col = q.coords(gb_reduce(MultiPoly::term(q.nvars_, m, Rat(1)), q.gb_.generators));
        for (size_t i = 0; i < d; ++i) q.mult_[v][i][j] = col[i];
      }
    return q;
  }

  int nvars() const { return nvars_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  const GroebnerBasis& gb() const { return gb_; }
  const QMat& mult_matrix(int var) const { return mult_[var]; }

  MultiPoly reduce(const MultiPoly& f) const { return gb_reduce(f, gb_.generators); }

  // Coordinates of the class of f in the standard basis.
  QVec coords(const MultiPoly& f) const {
    MultiPoly r = reduce(f);
    QVec v(basis_.size(), Rat(0));
    for (const auto& [m, c] : r.terms()) {
      auto it = index_.find(m);
      if (it == index_.end()) throw std::logic_error("QuotientAlgebra: reduced form outside basis");
      v[it->second] = c;
    }
    return v;
  }

  MultiPoly from_coords(const QVec& v) const {
    MultiPoly f(nvars_);
    for (size_t i = 0; i < v.size(); ++i) f.add_term(basis_[i], v[i]);
    return f;
  }

  // Multiplication matrix of any polynomial class.
  QMat mult_matrix_of(const MultiPoly& f) const {
    size_t d = dim();
    QMat m(d, QVec(d, Rat(0)));
    MultiPoly fr = reduce(f);
    for (size_t j = 0; j < d; ++j) {
      QVec col = coords(fr * MultiPoly::term(nvars_, basis_[j], Rat(1)));
      for (size_t i = 0; i < d; ++i) m[i][j] = col[i];
    }
    return m;
  }

  // Trace of the multiplication-by-w_j map for each basis monomial; the
  // standard trace of any class is then a dot product with its coordinates.
  const QVec& trace_vector() const {
    if (trace_vec_.empty()) {
      size_t d = dim();
      trace_vec_.assign(d, Rat(0));
      for (size_t j = 0; j < d; ++j) {
        MultiPoly wj = MultiPoly::term(nvars_, basis_[j], Rat(1));
        Rat tr(0);
        for (size_t k = 0; k < d; ++k) {
          QVec col = coords(wj * MultiPoly::term(nvars_, basis_[k], Rat(1)));
          tr += col[k];
        }
        trace_vec_[j] = tr;
      }
    }
    return trace_vec_;
  }

  Rat trace_of(const MultiPoly& f) const {
    const QVec& tv = trace_vector();
    QVec c = coords(f);
    Rat acc(0);
    for (size_t i = 0; i < c.size(); ++i) acc += tv[i] * c[i];
    return acc;
  }

 private:
  int nvars_ = 0;
  std::vector<MultiPoly> generators_;
  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::map<Monomial, size_t, GrevlexGreater> index_;
  std::vector<QMat> mult_;
  mutable QVec trace_vec_;
};

inline QuotientAlgebra quotient_algebra(const std::vector<MultiPoly>& gens) {
  return QuotientAlgebra::build(gens);
}

// Monic characteristic polynomial of the multiplication map of f, with the
// norm and trace read off its ends.
struct CharPolyResult {
  QVec coefficients;  // c[0..D], c[D] = 1
  Rat norm;
  Rat trace;
};

inline CharPolyResult charpoly_of(const QuotientAlgebra& b, const MultiPoly& f) {
  QMat m = b.mult_matrix_of(f);
  CharPolyResult out;
  out.coefficients = charpoly(m);
  size_t d = b.dim();
  out.norm = (d % 2 == 0 ? Rat(1) : Rat(-1)) * out.coefficients[0];
  out.trace = -out.coefficients[d - 1];
  return out;
}

// Adjoint f* = (-1)^{D-1}(f^{D-1} + b_{D-1} f^{D-2} + ... + b_1), reduced;
// satisfies f* f = N(f) in the quotient (verified here).
inline MultiPoly adjoint(const QuotientAlgebra& b, const MultiPoly& f) {
  size_t d = b.dim();
  CharPolyResult cp = charpoly_of(b, f);
  QMat mf = b.mult_matrix_of(f);
  QVec acc(d, Rat(0));
  QVec power = b.coords(MultiPoly::constant(b.nvars(), Rat(1)));  // f^0
  std::vector<QVec> powers{power};
  for (size_t k = 1; k + 1 <= d; ++k) powers.push_back(q_apply(mf, powers.back()));
  // acc = f^{D-1} + b_{D-1} f^{D-2} + ... + b_1 * 1
  for (size_t k = 0; k + 1 <= d; ++k) {
    const Rat coeff = (k + 1 == d) ? Rat(1) : cp.coefficients[k + 1];
    for (size_t i = 0; i < d; ++i) acc[i] += coeff * powers[k][i];
  }
  Rat sign = (d % 2 == 1) ? Rat(1) : Rat(-1);  // (-1)^{D-1}
  for (auto& c : acc) c *= sign;
  MultiPoly fstar = b.from_coords(acc);
  // Identity check: f* f == N(f).
  QVec lhs = b.coords(fstar * f);
  QVec rhs = b.coords(MultiPoly::constant(b.nvars(), cp.norm));
  if (lhs != rhs) throw std::logic_error("adjoint: f* f != N(f)");
  return fstar;
}

// Exact Tr(f* g) via the coefficient c_{D-1} of Q(t) = det(t M_f - M_g),
// plus a floating roots-of-unity oracle evaluation (q > D required).
struct TraceRootsResult {
  Rat exact;
  std::complex<double> oracle;
  double oracle_error;
};

inline TraceRootsResult trace_roots_of_unity(const QuotientAlgebra& b, const MultiPoly& f,
                                             const MultiPoly& g, long q) {
  size_t d = b.dim();
  if (q <= static_cast<long>(d)) throw std::invalid_argument("trace_roots_of_unity: q must exceed dim");
  QMat mf = b.mult_matrix_of(f), mg = b.mult_matrix_of(g);

  // Q(t) by exact interpolation at t = 0..D.
  QVec xs, ys;
  for (size_t k = 0; k <= d; ++k) {
    QMat mt(d, QVec(d, Rat(0)));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) mt[i][j] = Rat(static_cast<long>(k)) * mf[i][j] - mg[i][j];
    xs.push_back(Rat(static_cast<long>(k)));
    ys.push_back(q_det(mt));
  }
  QVec qc = lagrange_interpolate(xs, ys);
  qc.resize(d + 1, Rat(0));
  TraceRootsResult out;
  out.exact = -qc[d - 1];

  // Oracle: -(1/q) sum over q-th roots of unity of det(w M_f - M_g) w^{1-D}.
  auto cdet = [&](std::complex<double> w) {
    std::vector<std::vector<std::complex<double>>> m(d, std::vector<std::complex<double>>(d));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        m[i][j] = w * mpq_get_d(mf[i][j].get_mpq_t()) - mpq_get_d(mg[i][j].get_mpq_t());
    std::complex<double> det(1.0, 0.0);
    for (size_t col = 0; col < d; ++col) {
      size_t piv = col;
      for (size_t r = col + 1; r < d; ++r)
        if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
      if (std::abs(m[piv][col]) == 0.0) return std::complex<double>(0.0, 0.0);
      if (piv != col) {
        std::swap(m[piv], m[col]);
        det = -det;
      }
      det *= m[col][col];
      for (size_t r = col + 1; r < d; ++r) {
        std::complex<double> fct = m[r][col] / m[col][col];
        for (size_t c2 = col; c2 < d; ++c2) m[r][c2] -= fct * m[col][c2];
      }
    }
    return det;
  };
  std::complex<double> acc(0.0, 0.0);
  for (long k = 0; k < q; ++k) {
    double a = 2.0 * M_PI * k / q;
    std::complex<double> w(std::cos(a), std::sin(a));
    acc += cdet(w) * std::pow(w, 1.0 - static_cast<double>(d));
  }
  out.oracle = -acc / static_cast<double>(q);
  out.oracle_error = std::abs(out.oracle - std::complex<double>(mpq_get_d(out.exact.get_mpq_t()), 0.0));
  return out;
}

// The telescoping matrix l_ij, its determinant (pseudo-Jacobian) and the
// monomial splitting with respect to the second variable block.
// Variables 0..n-1 are x, n..2n-1 are y.
struct TraceDecomposition {
  int n = 0;
  std::vector<std::vector<MultiPoly>> l;  // n x n entries in 2n variables
  MultiPoly delta;                        // in 2n variables
  std::vector<MultiPoly> a;               // coefficients in x (n variables)
  std::vector<Monomial> b;                // y-monomials (length n exponents)
  std::vector<MultiPoly> c;               // b_m evaluated at x (monomials in x)
};

inline TraceDecomposition pseudo_jacobian(const std::vector<MultiPoly>& fs) {
  int n = static_cast<int>(fs.size());
  if (n == 0 || fs[0].nvars() != n)
    throw std::invalid_argument("pseudo_jacobian: need a square system (n polynomials in n variables)");
  TraceDecomposition td;
  td.n = n;
  int nn = 2 * n;
  td.l.assign(n, std::vector<MultiPoly>(n, MultiPoly(nn)));
  for (int i = 0; i < n; ++i) {
    for (const auto& [m, coeff] : fs[i].terms()) {
      for (int j = 0; j < n; ++j) {
        if (m[j] == 0) continue;
        // x_1..x_{j-1} keep x-indices; x_{j+1}..x_n move to y; x_j spreads as
        // y_j^{a-1} + y_j^{a-2} x_j + ... + x_j^{a-1}.
        Monomial base(nn, 0);
        for (int t = 0; t < j; ++t) base[t] = m[t];
        for (int t = j + 1; t < n; ++t) base[n + t] = m[t];
        for (int k = 0; k < m[j]; ++k) {
          Monomial term = base;
          term[n + j] += m[j] - 1 - k;
          term[j] += k;
          td.l[i][j].add_term(term, coeff);
        }
      }
    }
  }
  // Determinant by Laplace expansion; n is small here.
  std::function<MultiPoly(std::vector<int>, std::vector<int>)> det =
      [&](std::vector<int> rows, std::vector<int> cols) -> MultiPoly {
    if (rows.size() == 1) return td.l[rows[0]][cols[0]];
    MultiPoly acc(nn);
    for (size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> subrows(rows.begin() + 1, rows.end());
      std::vector<int> subcols;
      for (size_t t = 0; t < cols.size(); ++t)
        if (t != k) subcols.push_back(cols[t]);
      MultiPoly term = td.l[rows[0]][cols[k]] * det(subrows, subcols);
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  td.delta = det(idx, idx);

  // Split delta over its y-monomials.
  std::map<Monomial, MultiPoly> groups;  // y-exponent -> coefficient in x
  for (const auto& [m, coeff] : td.delta.terms()) {
    Monomial ym(m.begin() + n, m.end());
    Monomial xm(m.begin(), m.begin() + n);
    auto it = groups.find(ym);
    if (it == groups.end()) it = groups.emplace(ym, MultiPoly(n)).first;
    it->second.add_term(xm, coeff);
  }
  for (auto& [ym, ax] : groups) {
    td.b.push_back(ym);
    td.a.push_back(ax);
    td.c.push_back(MultiPoly::term(n, ym, Rat(1)));  // b_m(x)
  }
  return td;
}

// Telescoping identity F_i(y) - F_i(x) = sum_j l_ij (y_j - x_j), exact.
inline bool telescoping_identity_holds(const std::vector<MultiPoly>& fs,
                                       const TraceDecomposition& td) {
  int n = td.n, nn = 2 * n;
  for (int i = 0; i < n; ++i) {
    MultiPoly fy(nn), fx(nn);
    for (const auto& [m, coeff] : fs[i].terms()) {
      Monomial my(nn, 0), mx(nn, 0);
      for (int t = 0; t < n; ++t) {
        my[n + t] = m[t];
        mx[t] = m[t];
      }
      fy.add_term(my, coeff);
      fx.add_term(mx, coeff);
    }
    MultiPoly rhs(nn);
    for (int j = 0; j < n; ++j) {
      MultiPoly diff = MultiPoly::variable(nn, n + j) - MultiPoly::variable(nn, j);
      rhs = rhs + td.l[i][j] * diff;
    }
    if (fy - fx != rhs) return false;
  }
  return true;
}

// Jacobian determinant det(dF_i/dx_j) as a polynomial in x.
inline MultiPoly jacobian_det(const std::vector<MultiPoly>& fs) {
  int n = static_cast<int>(fs.size());
  std::vector<std::vector<MultiPoly>> j(n, std::vector<MultiPoly>(n, MultiPoly(n)));
  for (int i = 0; i < n; ++i)
    for (const auto& [m, coeff] : fs[i].terms())
      for (int v = 0; v < n; ++v) {
        if (m[v] == 0) continue;
        Monomial d = m;
        d[v] -= 1;
        j[i][v].add_term(d, coeff * m[v]);
      }
  std::function<MultiPoly(std::vector<int>, std::vector<int>)> det =
      [&](std::vector<int> rows, std::vector<int> cols) -> MultiPoly {
    if (rows.size() == 1) return j[rows[0]][cols[0]];
    MultiPoly acc(n);
    for (size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> subrows(rows.begin() + 1, rows.end());
      std::vector<int> subcols;
      for (size_t t = 0; t < cols.size(); ++t)
        if (t != k) subcols.push_back(cols[t]);
      MultiPoly term = j[rows[0]][cols[k]] * det(subrows, subcols);
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return det(idx, idx);
}

struct NonRadicalInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Squarefree test of the characteristic polynomial of a random small-integer
// linear form; a certificate of radicality when it succeeds.
inline bool radical_certificate(const QuotientAlgebra& b, std::uint64_t seed = 17, int tries = 3) {
  Rng rng(seed);
  for (int attempt = 0; attempt < tries; ++attempt) {
    MultiPoly lin(b.nvars());
    for (int v = 0; v < b.nvars(); ++v)
      lin = lin + Rat(rng.next_int(-10, 10)) * MultiPoly::variable(b.nvars(), v);
    CharPolyResult cp = charpoly_of(b, lin);
    // Squarefree iff gcd(X, X') is constant.
    QVec p = cp.coefficients;
    QVec dp(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) dp[i - 1] = Rat(static_cast<long>(i)) * p[i];
    // Euclidean gcd over Q[t].
    QVec a = p, c = dp;
    auto deg = [](const QVec& v) {
      for (size_t i = v.size(); i-- > 0;)
        if (v[i] != 0) return static_cast<long>(i);
      return -1L;
    };
    while (deg(c) > 0) {
      long da = deg(a), dc = deg(c);
      if (da < dc) {
        std::swap(a, c);
        continue;
      }
      Rat f = a[da] / c[dc];
      for (long i = 0; i <= dc; ++i) a[da - dc + i] -= f * c[i];
      if (deg(a) < deg(c)) std::swap(a, c);
    }
    if (deg(c) == 0) return true;  // gcd constant: squarefree, D distinct values
    if (deg(c) < 0) continue;      // X' = 0 cannot happen for monic X, retry anyway
  }
  return false;
}

// The canonical trace of the complete intersection: the unique functional
// with g = sum_m sigma(g a_m) c_m for every g. Solved exactly from the
// reconstruction identities on the basis monomials.
struct TateTrace {
  QVec sigma;  // sigma(basis monomial)

  Rat apply(const QuotientAlgebra& b, const MultiPoly& g) const {
    QVec c = b.coords(g);
    Rat acc(0);
    for (size_t i = 0; i < c.size(); ++i) acc += sigma[i] * c[i];
    return acc;
  }
};

inline TateTrace tate_trace(const QuotientAlgebra& b, const TraceDecomposition& td,
                            std::uint64_t seed = 17) {
  if (!radical_certificate(b, seed))
    throw NonRadicalInput("tate_trace: radicality certificate failed (non-reduced input?)");
  size_t d = b.dim();
  size_t npairs = td.a.size();
  // Precompute coordinates of the c_m and multiplication matrices of the a_m.
  std::vector<QVec> cvec;
  std::vector<QMat> amat;
  for (size_t m = 0; m < npairs; ++m) {
    cvec.push_back(b.coords(td.c[m]));
    amat.push_back(b.mult_matrix_of(td.a[m]));
  }
  // Spanning check for the c_m classes.
  QMat cmat(d, QVec(npairs, Rat(0)));
  for (size_t m = 0; m < npairs; ++m)
    for (size_t i = 0; i < d; ++i) cmat[i][m] = cvec[m][i];
  if (q_rank(cmat) < d)
    throw NonRadicalInput("tate_trace: the c_m classes do not span the algebra");

  // Unknowns sigma_j; equations: for each basis w_k and coordinate i,
  // sum_m cvec[m][i] * sum_j sigma_j (amat[m])_{j,k} = delta_{ik}.
  QMat sys(d * d, QVec(d, Rat(0)));
  QVec rhs(d * d, Rat(0));
  for (size_t k = 0; k < d; ++k)
    for (size_t i = 0; i < d; ++i) {
      size_t row = k * d + i;
      rhs[row] = (i == k) ? Rat(1) : Rat(0);
      for (size_t j = 0; j < d; ++j) {
        Rat acc(0);
        for (size_t m = 0; m < npairs; ++m) acc += cvec[m][i] * amat[m][j][k];
        sys[row][j] = acc;
      }
    }
  auto sol = solve_consistent(sys, rhs);
  if (!sol) throw NonRadicalInput("tate_trace: reconstruction system inconsistent");
  TateTrace t;
  t.sigma = *sol;

  // The defining identity must reconstruct every basis monomial exactly.
  for (size_t k = 0; k < d; ++k) {
    QVec acc(d, Rat(0));
    for (size_t m = 0; m < npairs; ++m) {
      // sigma(w_k a_m)
      Rat s(0);
      for (size_t j = 0; j < d; ++j) s += t.sigma[j] * amat[m][j][k];
      for (size_t i = 0; i < d; ++i) acc[i] += s * cvec[m][i];
    }
    for (size_t i = 0; i < d; ++i)
      if (acc[i] != ((i == k) ? Rat(1) : Rat(0)))
        throw NonRadicalInput("tate_trace: reconstruction identity failed");
  }

  // The pairs must also assemble the Jacobian class, and sigma(J g) must be
  // the standard trace.
  MultiPoly jac = jacobian_det(b.generators());
  MultiPoly pair_sum(b.nvars());
  for (size_t m = 0; m < npairs; ++m) pair_sum = pair_sum + td.a[m] * td.c[m];
  if (!b.reduce(jac - pair_sum).is_zero())
    throw NonRadicalInput("tate_trace: pairs do not assemble the Jacobian class");
  Rng check_rng(seed ^ 0x5bf03635ULL);
  for (int trial = 0; trial < 5; ++trial) {
    MultiPoly g(b.nvars());
    for (size_t j = 0; j < d; ++j)
      g.add_term(b.basis()[j], Rat(check_rng.next_int(-9, 9)));
    if (b.trace_of(g) != t.apply(b, jac * g))
      throw NonRadicalInput("tate_trace: sigma(J g) differs from the standard trace");
  }
  return t;
}

// Division through the trace formula: q with q f = g in B, built from
// Lambda_m = Tr((J f)* g a_m) and q = (1/N(J f)) sum_m Lambda_m c_m.
struct DivisionResult {
  MultiPoly q;
  bool identity_ok = false;
  int degree_x;
  int degree_cap;  // n * max(deg f, max deg F_i)
};

struct DivisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline DivisionResult divide_trace_formula(const QuotientAlgebra& b, const TraceDecomposition& td,
                                           const MultiPoly& f, const MultiPoly& g) {
  int n = b.nvars();
  MultiPoly jac = jacobian_det(b.generators());
  MultiPoly jf = jac * f;
  CharPolyResult cp = charpoly_of(b, jf);
  if (cp.norm == 0)
    throw DivisionError("divide_trace_formula: N(J f) = 0 (zero divisor or non-reduced input)");
  MultiPoly jfstar = adjoint(b, jf);
  MultiPoly q(n);
  for (size_t m = 0; m < td.a.size(); ++m) {
    Rat lambda = b.trace_of(jfstar * g * td.a[m]);
    if (lambda == 0) continue;
    q = q + (lambda / cp.norm) * td.c[m];
  }
  DivisionResult out;
  out.q = q;
  out.identity_ok = b.reduce(q * f - g).is_zero();
  if (!out.identity_ok)
    throw DivisionError("divide_trace_formula: divisibility fails (q f != g in the quotient)");
  out.degree_x = q.is_zero() ? 0 : q.degree();
  int d = f.degree();
  for (const auto& gen : b.generators()) d = std::max(d, gen.degree());
  out.degree_cap = n * d;
  return out;
}

}  // namespace nsz

#endif
