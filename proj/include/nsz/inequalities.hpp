#ifndef NSZ_INEQUALITIES_HPP
#define NSZ_INEQUALITIES_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nsz/mahler.hpp"
#include "nsz/places.hpp"
#include "nsz/variety_height.hpp"

namespace nsz {

// Result of one executable inequality instance. Exact checks compare
// rationals / valuation integers; Mahler-based checks fold 4*stderr into the
// tolerance.
// double-precision slack folded into every MC tolerance
inline constexpr double kNumericSlack = 1e-9;

struct InequalityCheck {
  std::string name;
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs (after tolerance for MC paths)
  double stderr_used = 0.0;
  bool exact = false;
};

namespace detail {

inline Rat height_base(const MultiPoly& f) {  // exp(h_inf(f)) as a rational
  Rat s = abs_sup(f);
  return s > 1 ? s : Rat(1);
}

inline long hp_ord(const MultiPoly& f, const Int& p) {  // h_p(f)/log p as an integer
  long mo = min_ord_p(f, p);
  return mo < 0 ? -mo : 0;
}

inline InequalityCheck exact_rat_le(const std::string& name, const Rat& lhs, const Rat& rhs) {
  InequalityCheck c;
  c.name = name;
  c.exact = true;
  c.pass = lhs <= rhs;
  c.lhs = log_abs(lhs);
  c.rhs = log_abs(rhs);
  c.slack = c.rhs - c.lhs;
  return c;
}

inline InequalityCheck exact_long_le(const std::string& name, long lhs, long rhs, double logp) {
  InequalityCheck c;
  c.name = name;
  c.exact = true;
  c.pass = lhs <= rhs;
  c.lhs = lhs * logp;
  c.rhs = rhs * logp;
  c.slack = c.rhs - c.lhs;
  return c;
}

}  // namespace detail

// |m(f) - log|f|| <= log(n+1) deg f  (two-sided), MC tolerance 4*stderr.
inline InequalityCheck check_eq1(const MultiPoly& f, long samples = kDefaultSamples,
                                 std::uint64_t seed = 0) {
  MahlerEstimate m = mahler_torus_mc(f, samples, seed);
  double diff = m.value - log_abs_v(f, Place::infinity());
  double bound = std::log(f.nvars() + 1.0) * f.degree();
  InequalityCheck c;
  c.name = "eq1";
  c.lhs = std::fabs(diff);
  c.rhs = bound;
  c.stderr_used = m.stderr_;
  c.slack = c.rhs - c.lhs + 4 * c.stderr_used + kNumericSlack;
  c.pass = c.slack >= 0;
  return c;
}

// Block refinement: |m(f) - log|f|| <= sum_i log(n_i+1) d_i over variable
// groups (0-based index blocks).
inline InequalityCheck check_rgroup(const MultiPoly& f, const std::vector<std::vector<int>>& blocks,
                                    long samples = kDefaultSamples, std::uint64_t seed = 0) {
  MahlerEstimate m = mahler_torus_mc(f, samples, seed);
  double diff = m.value - log_abs_v(f, Place::infinity());
  double bound = 0.0;
  for (const auto& blk : blocks) {
    int d = f.partial_degree(blk);
    if (d == kNegInfDegree) d = 0;
    bound += std::log(static_cast<double>(blk.size()) + 1.0) * d;
  }
  InequalityCheck c;
  c.name = "rgroup";
  c.lhs = std::fabs(diff);
  c.rhs = bound;
  c.stderr_used = m.stderr_;
  c.slack = c.rhs - c.lhs + 4 * c.stderr_used + kNumericSlack;
  c.pass = c.slack >= 0;
  return c;
}

// 0 <= m(f) - m(f; S_n^r) <= r d sum_{i=1}^{n-1} 1/(2i), MC both sides.
inline InequalityCheck check_sphere_gap(const MultiPoly& f, int groups, int group_size,
                                        long samples = kDefaultSamples, std::uint64_t seed = 0) {
  MahlerEstimate mt = mahler_torus_mc(f, samples, seed);
  MahlerEstimate ms = mahler_sphere_mc(f, groups, group_size, samples, seed + 1);
  int d = 0;
  for (int g = 0; g < groups; ++g) {
    std::vector<int> blk;
    for (int i = 0; i < group_size; ++i) blk.push_back(g * group_size + i);
    int pd = f.partial_degree(blk);
    if (pd != kNegInfDegree) d = std::max(d, pd);
  }
  double gap = mt.value - ms.value;
  double upper = groups * d * half_harmonic(group_size - 1);
  InequalityCheck c;
  c.name = "emes";
  c.lhs = gap;
  c.rhs = upper;
  c.stderr_used = std::sqrt(mt.stderr_ * mt.stderr_ + ms.stderr_ * ms.stderr_);
  double tol = 4 * c.stderr_used + kNumericSlack;
  c.pass = gap >= -tol && gap <= upper + tol;
  c.slack = std::min(gap + tol, upper + tol - gap);
  return c;
}

// Sum over all places of log|q|_v = 0, exactly.
inline InequalityCheck check_product_formula(const Rat& q) {
  InequalityCheck c;
  c.name = "product-formula";
  c.exact = true;
  c.pass = product_formula_holds(q);
  c.lhs = c.rhs = 0.0;
  c.slack = 0.0;
  return c;
}

// The eight coefficient-size items. All exact.
inline InequalityCheck check_hprod_1a(const std::vector<MultiPoly>& fs) {
  MultiPoly sum = fs.at(0);
  for (size_t i = 1; i < fs.size(); ++i) sum = sum + fs[i];
  Rat rhs(0);
  for (const auto& f : fs) rhs = std::max(rhs, detail::height_base(f));
  rhs *= Rat(static_cast<long>(fs.size()));
  return detail::exact_rat_le("hprod-1a", detail::height_base(sum), rhs);
}

inline InequalityCheck check_hprod_1b(const std::vector<MultiPoly>& fs) {
  MultiPoly prod = fs.at(0);
  int n = fs[0].nvars();
  long degsum_head = 0;
  for (size_t i = 1; i < fs.size(); ++i) {
    degsum_head += fs[i - 1].degree();
    prod = prod * fs[i];
  }
  // two factors satisfy the sharper min-degree form
  if (fs.size() == 2) degsum_head = std::min(fs[0].degree(), fs[1].degree());
  Rat rhs(1);
  for (const auto& f : fs) rhs *= detail::height_base(f);
  rhs *= Rat(int_pow(Int(n + 1), static_cast<unsigned long>(degsum_head)));
  return detail::exact_rat_le("hprod-1b", detail::height_base(prod), rhs);
}

inline InequalityCheck check_hprod_1c(const MultiPoly& g, const std::vector<MultiPoly>& fs) {
  size_t s = fs.size();
  int n = fs.at(0).nvars();
  int d = 0;
  Rat m(1);
  for (const auto& f : fs) {
    d = std::max(d, f.degree());
    m = std::max(m, detail::height_base(f));
  }
  MultiPoly composed = g.compose(fs);
  Rat base = Rat(static_cast<long>(s + 1)) * Rat(int_pow(Int(n + 1), static_cast<unsigned long>(d))) * m;
  Rat rhs = detail::height_base(g) * rat_pow(base, g.degree());
  return detail::exact_rat_le("hprod-1c", detail::height_base(composed), rhs);
}

inline InequalityCheck check_hprod_1d(const std::vector<MultiPoly>& fs) {
  MultiPoly prod = fs.at(0);
  int n = fs[0].nvars();
  long degsum = fs[0].degree();
  for (size_t i = 1; i < fs.size(); ++i) {
    prod = prod * fs[i];
    degsum += fs[i].degree();
  }
  // |prod| * (n+1)^{2 sum deg} >= prod |f_i|
  Rat lhs(1);
  for (const auto& f : fs) lhs *= abs_sup(f);
  Rat rhs = abs_sup(prod) * Rat(int_pow(Int(n + 1), static_cast<unsigned long>(2 * degsum)));
  return detail::exact_rat_le("hprod-1d", lhs, rhs);
}

inline InequalityCheck check_hprod_2a(const std::vector<MultiPoly>& fs, const Int& p) {
  MultiPoly sum = fs.at(0);
  for (size_t i = 1; i < fs.size(); ++i) sum = sum + fs[i];
  if (sum.is_zero()) throw std::invalid_argument("hprod-2a: sum vanished, redraw instance");
  long rhs = 0;
  for (const auto& f : fs) rhs = std::max(rhs, detail::hp_ord(f, p));
  return detail::exact_long_le("hprod-2a", detail::hp_ord(sum, p), rhs, log_abs(p));
}

inline InequalityCheck check_hprod_2b(const std::vector<MultiPoly>& fs, const Int& p) {
  MultiPoly prod = fs.at(0);
  long rhs = detail::hp_ord(fs[0], p);
  for (size_t i = 1; i < fs.size(); ++i) {
    prod = prod * fs[i];
    rhs += detail::hp_ord(fs[i], p);
  }
  return detail::exact_long_le("hprod-2b", detail::hp_ord(prod, p), rhs, log_abs(p));
}

inline InequalityCheck check_hprod_2c(const MultiPoly& g, const std::vector<MultiPoly>& fs,
                                      const Int& p) {
  long h = 0;
  for (const auto& f : fs) h = std::max(h, detail::hp_ord(f, p));
  MultiPoly composed = g.compose(fs);
  if (composed.is_zero()) throw std::invalid_argument("hprod-2c: composition vanished, redraw instance");
  long rhs = detail::hp_ord(g, p) + static_cast<long>(g.degree()) * h;
  return detail::exact_long_le("hprod-2c", detail::hp_ord(composed, p), rhs, log_abs(p));
}

inline InequalityCheck check_hprod_2d(const std::vector<MultiPoly>& fs, const Int& p) {
  MultiPoly prod = fs.at(0);
  long rhs = min_ord_p(fs[0], p);
  for (size_t i = 1; i < fs.size(); ++i) {
    prod = prod * fs[i];
    rhs += min_ord_p(fs[i], p);
  }
  long lhs = min_ord_p(prod, p);
  InequalityCheck c;
  c.name = "hprod-2d";
  c.exact = true;
  c.pass = lhs == rhs;  // Gauss: equality of valuations
  double lp = log_abs(p);
  c.lhs = -lhs * lp;
  c.rhs = -rhs * lp;
  c.slack = 0.0;
  return c;
}

// h_v(det(f_ij)) bounds for an s x s polynomial matrix.
inline InequalityCheck check_det_bound(const std::vector<std::vector<MultiPoly>>& m,
                                       const Place& place) {
  size_t s = m.size();
  int n = m.at(0).at(0).nvars();
  // Laplace expansion; s stays small.
  std::vector<size_t> cols(s);
  for (size_t i = 0; i < s; ++i) cols[i] = i;
  std::function<MultiPoly(size_t, std::vector<size_t>)> det_of =
      [&](size_t row, std::vector<size_t> cs) -> MultiPoly {
    if (cs.size() == 1) return m[row][cs[0]];
    MultiPoly acc(n);
    for (size_t k = 0; k < cs.size(); ++k) {
      std::vector<size_t> rest;
      for (size_t j = 0; j < cs.size(); ++j)
        if (j != k) rest.push_back(cs[j]);
      MultiPoly sub = det_of(row + 1, rest);
      MultiPoly term = m[row][cs[k]] * sub;
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  MultiPoly det = det_of(0, cols);
  if (det.is_zero()) throw std::invalid_argument("det bound: determinant vanished, redraw instance");
  int d = 0;
  for (const auto& row : m)
    for (const auto& f : row) d = std::max(d, f.degree());
  if (place.archimedean) {
    Rat hb(1);
    for (const auto& row : m)
      for (const auto& f : row) hb = std::max(hb, detail::height_base(f));
    Rat rhs = rat_pow(hb * Rat(static_cast<long>(s)) * Rat(int_pow(Int(n + 1), static_cast<unsigned long>(d))),
                      static_cast<long>(s));
    InequalityCheck c = detail::exact_rat_le("det-arch", detail::height_base(det), rhs);
    return c;
  }
  long h = 0;
  for (const auto& row : m)
    for (const auto& f : row) h = std::max(h, detail::hp_ord(f, place.p));
  InequalityCheck c = detail::exact_long_le("det-padic", detail::hp_ord(det, place.p),
                                            static_cast<long>(s) * h, log_abs(place.p));
  return c;
}

// Operand bundle for the name-dispatched entry point. Fill the fields the
// named inequality needs; arity violations surface as invalid_argument.
struct InequalityInstance {
  std::vector<MultiPoly> fs;
  std::optional<MultiPoly> g;                 // outer polynomial for composition items
  std::optional<Int> p;                       // prime for the p-adic items
  std::vector<std::vector<int>> blocks;       // variable groups for the block lemma
  int groups = 1;                             // sphere shape
  int group_size = 1;
  std::optional<Rat> scalar;                  // for the product formula
  std::vector<std::vector<MultiPoly>> matrix; // for the determinant corollary
  long samples = kDefaultSamples;
  std::uint64_t seed = 0;
};

inline InequalityCheck check_inequality(const std::string& name, const InequalityInstance& in) {
  auto need_fs = [&]() -> const std::vector<MultiPoly>& {
    if (in.fs.empty()) throw std::invalid_argument("check_inequality: '" + name + "' needs fs");
    return in.fs;
  };
  auto need_p = [&]() -> const Int& {
    if (!in.p) throw std::invalid_argument("check_inequality: '" + name + "' needs a prime");
    return *in.p;
  };
  auto need_g = [&]() -> const MultiPoly& {
    if (!in.g) throw std::invalid_argument("check_inequality: '" + name + "' needs g");
    return *in.g;
  };
  if (name == "eq1") return check_eq1(need_fs().at(0), in.samples, in.seed);
  if (name == "rgroup") return check_rgroup(need_fs().at(0), in.blocks, in.samples, in.seed);
  if (name == "emes")
    return check_sphere_gap(need_fs().at(0), in.groups, in.group_size, in.samples, in.seed);
  if (name == "product-formula") {
    if (!in.scalar) throw std::invalid_argument("check_inequality: product-formula needs a scalar");
    return check_product_formula(*in.scalar);
  }
  if (name == "hprod-1a") return check_hprod_1a(need_fs());
  if (name == "hprod-1b") return check_hprod_1b(need_fs());
  if (name == "hprod-1c") return check_hprod_1c(need_g(), need_fs());
  if (name == "hprod-1d") return check_hprod_1d(need_fs());
  if (name == "hprod-2a") return check_hprod_2a(need_fs(), need_p());
  if (name == "hprod-2b") return check_hprod_2b(need_fs(), need_p());
  if (name == "hprod-2c") return check_hprod_2c(need_g(), need_fs(), need_p());
  if (name == "hprod-2d") return check_hprod_2d(need_fs(), need_p());
  if (name == "det-arch") {
    if (in.matrix.empty()) throw std::invalid_argument("check_inequality: det-arch needs a matrix");
    return check_det_bound(in.matrix, Place::infinity());
  }
  if (name == "det-padic") {
    if (in.matrix.empty()) throw std::invalid_argument("check_inequality: det-padic needs a matrix");
    return check_det_bound(in.matrix, Place::prime(need_p()));
  }
  throw std::invalid_argument("check_inequality: unknown inequality name '" + name + "'");
}

}  // namespace nsz

#endif
