#ifndef NSZ_POLY_HPP
#define NSZ_POLY_HPP

#include <climits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nsz/monomial.hpp"
#include "nsz/scalar.hpp"

namespace nsz {

// Degree of the zero polynomial; a sentinel distinct from 0 on purpose.
inline constexpr int kNegInfDegree = INT_MIN;

// Sparse multivariate polynomial over Q. Terms are kept grevlex-descending,
// coefficients reduced, zero coefficients never stored. Immutable in spirit:
// every operation returns a fresh value.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rat, GrevlexGreater>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("MultiPoly: negative nvars");
  }

  static MultiPoly constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }

  // x_{index+1} (0-based index).
  static MultiPoly variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
    MultiPoly p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), Rat(1));
    return p;
  }

  static MultiPoly term(int nvars, Monomial m, const Rat& c) {
    MultiPoly p(nvars);
    p.add_term(std::move(m), c);
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  int degree() const {
    if (terms_.empty()) return kNegInfDegree;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  // Max over terms of the exponent sum inside the given block of 0-based
  // variable indices.
  int partial_degree(const std::vector<int>& block) const {
    for (int i : block)
      if (i < 0 || i >= nvars_) throw std::invalid_argument("partial_degree: variable index out of range");
    if (terms_.empty()) return kNegInfDegree;
    int d = 0;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (int i : block) s += m[i];
      d = std::max(d, s);
    }
    return d;
  }

  const Rat& coeff(const Monomial& m) const {
    static const Rat zero(0);
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
  }

  // Leading (grevlex-greatest) term; polynomial must be nonzero.
  const std::pair<const Monomial, Rat>& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    return *terms_.begin();
  }

  // Coefficients are kept reduced; callers may pass unreduced fractions.
  void add_term(Monomial m, const Rat& c) {
    if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("add_term: monomial length mismatch");
    if (c == 0) return;
    Rat cc = c;
    cc.canonicalize();
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(cc));
    } else {
      it->second += cc;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend MultiPoly operator+(const MultiPoly& f, const MultiPoly& g) {
    check_same_vars(f, g);
    MultiPoly r = f;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& f, const MultiPoly& g) {
    check_same_vars(f, g);
    MultiPoly r = f;
    for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& f) {
    MultiPoly r(f.nvars_);
    for (const auto& [m, c] : f.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& f, const MultiPoly& g) {
    check_same_vars(f, g);
    MultiPoly r(f.nvars_);
    for (const auto& [mf, cf] : f.terms_)
      for (const auto& [mg, cg] : g.terms_) r.add_term(mon_mul(mf, mg), cf * cg);
    return r;
  }

  friend MultiPoly operator*(const Rat& c, const MultiPoly& f) {
    MultiPoly r(f.nvars_);
    if (c == 0) return r;
    Rat cc = c;
    cc.canonicalize();
    for (const auto& [m, fc] : f.terms_) r.terms_.emplace(m, cc * fc);
    return r;
  }

  friend bool operator==(const MultiPoly& f, const MultiPoly& g) {
    return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
  }
  friend bool operator!=(const MultiPoly& f, const MultiPoly& g) { return !(f == g); }

  MultiPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
    MultiPoly r = constant(nvars_, Rat(1));
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  Rat eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("eval: point length mismatch");
    // Per-variable power tables up to the partial degrees.
    std::vector<int> maxdeg(nvars_, 0);
    for (const auto& [m, c] : terms_)
      for (int i = 0; i < nvars_; ++i) maxdeg[i] = std::max(maxdeg[i], m[i]);
    std::vector<std::vector<Rat>> pw(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      pw[i].resize(maxdeg[i] + 1);
      pw[i][0] = 1;
      for (int e = 1; e <= maxdeg[i]; ++e) pw[i][e] = pw[i][e - 1] * point[i];
    }
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
      Rat t = c;
      for (int i = 0; i < nvars_; ++i)
        if (m[i] > 0) t *= pw[i][m[i]];
      acc += t;
    }
    return acc;
  }

  // Substitute each variable by an arbitrary polynomial (all with equal nvars).
  MultiPoly compose(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("compose: image count mismatch");
    int out_vars = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images) check_same_count(im.nvars(), out_vars);
    std::vector<int> maxdeg(nvars_, 0);
    for (const auto& [m, c] : terms_)
      for (int i = 0; i < nvars_; ++i) maxdeg[i] = std::max(maxdeg[i], m[i]);
    std::vector<std::vector<MultiPoly>> pw(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      pw[i].reserve(maxdeg[i] + 1);
      pw[i].push_back(constant(out_vars, Rat(1)));
      for (int e = 1; e <= maxdeg[i]; ++e) pw[i].push_back(pw[i].back() * images[i]);
    }
    MultiPoly acc(out_vars);
    for (const auto& [m, c] : terms_) {
      MultiPoly t = constant(out_vars, c);
      for (int i = 0; i < nvars_; ++i)
        if (m[i] > 0) t = t * pw[i][m[i]];
      acc = acc + t;
    }
    return acc;
  }

  // Pad with extra trailing variables.
  MultiPoly extended(int new_nvars) const {
    if (new_nvars < nvars_) throw std::invalid_argument("extended: cannot shrink variable count");
    MultiPoly r(new_nvars);
    for (const auto& [m, c] : terms_) {
      Monomial mm = m;
      mm.resize(new_nvars, 0);
      r.terms_.emplace(std::move(mm), c);
    }
    return r;
  }

 private:
  static void check_same_vars(const MultiPoly& f, const MultiPoly& g) {
    check_same_count(f.nvars_, g.nvars_);
  }
  static void check_same_count(int a, int b) {
    if (a != b) throw std::invalid_argument("variable-count mismatch");
  }

  int nvars_;
  TermMap terms_;
};

// f composed with the affine map x -> matrix*x + shift; the matrix must be
// square of dimension nvars and invertible (so the total degree is preserved).
MultiPoly substitute_affine(const MultiPoly& f,
                            const std::vector<std::vector<Rat>>& matrix,
                            const std::vector<Rat>& shift);

// Adds a homogenizing variable as the LAST variable; every term is scaled by
// its power so all terms reach deg f. dehomogenize(homogenize(f)) == f.
inline MultiPoly homogenize(const MultiPoly& f) {
  int n = f.nvars();
  if (f.is_zero()) return MultiPoly(n + 1);
  int d = f.degree();
  MultiPoly r(n + 1);
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    mm.push_back(d - total_degree(m));
    r.add_term(mm, c);
  }
  return r;
}

// Inverse of homogenize: drop the last variable (set it to 1).
inline MultiPoly dehomogenize(const MultiPoly& f) {
  int n = f.nvars();
  if (n == 0) throw std::invalid_argument("dehomogenize: no variables");
  MultiPoly r(n - 1);
  for (const auto& [m, c] : f.terms()) {
    Monomial mm(m.begin(), m.end() - 1);
    r.add_term(mm, c);
  }
  return r;
}

// f = content * primitive with primitive having coprime integer coefficients
// and positive leading (grevlex) coefficient.
inline std::pair<Rat, MultiPoly> content_and_primitive(const MultiPoly& f) {
  if (f.is_zero()) throw std::domain_error("content_and_primitive of zero polynomial");
  Int num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : f.terms()) {
    num_gcd = gcd(num_gcd, rat_num(c));
    den_lcm = lcm(den_lcm, rat_den(c));
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (f.leading_term().second < 0) content = -content;
  MultiPoly prim = Rat(1) / content * f;
  return {content, prim};
}

namespace detail {
inline bool is_singular(std::vector<std::vector<Rat>> m) {
  size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return true;
    std::swap(m[piv], m[col]);
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return false;
}
}  // namespace detail

inline MultiPoly substitute_affine(const MultiPoly& f,
                                   const std::vector<std::vector<Rat>>& matrix,
                                   const std::vector<Rat>& shift) {
  int n = f.nvars();
  if (static_cast<int>(matrix.size()) != n || static_cast<int>(shift.size()) != n)
    throw std::invalid_argument("substitute_affine: dimension mismatch");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("substitute_affine: matrix not square");
  if (detail::is_singular(matrix)) throw std::invalid_argument("substitute_affine: singular matrix");
  std::vector<MultiPoly> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    MultiPoly u = MultiPoly::constant(n, shift[i]);
    for (int j = 0; j < n; ++j) u = u + matrix[i][j] * MultiPoly::variable(n, j);
    images.push_back(std::move(u));
  }
  return f.compose(images);
}

}  // namespace nsz

#endif
