#ifndef NSZ_VARIETY_HEIGHT_HPP
#define NSZ_VARIETY_HEIGHT_HPP

#include <set>
#include <stdexcept>
#include <vector>

#include "nsz/mahler.hpp"
#include "nsz/places.hpp"

namespace nsz {

// sum_{i=1}^{n} sum_{j=1}^{i} 1/(2j), the archimedean height of affine
// n-space, exact rational evaluated to double at the end.
inline Rat stoll_number_exact(int n) {
  if (n < 0) throw std::invalid_argument("stoll_number: negative n");
  Rat acc(0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) acc += Rat(1, 2 * j);
  return acc;
}

inline double stoll_number(int n) { return mpq_get_d(stoll_number_exact(n).get_mpq_t()); }

// sum_{i=1}^{n} 1/(2i); the per-coordinate-count sphere correction.
inline Rat half_harmonic_exact(int n) {
  Rat acc(0);
  for (int i = 1; i <= n; ++i) acc += Rat(1, 2 * i);
  return acc;
}

inline double half_harmonic(int n) { return mpq_get_d(half_harmonic_exact(n).get_mpq_t()); }

// Zero-dimensional variety given as a list of distinct rational points.
struct PointVariety {
  std::vector<std::vector<Rat>> points;  // each of length n

  int ambient_dim() const { return points.empty() ? 0 : static_cast<int>(points[0].size()); }
  int degree() const { return static_cast<int>(points.size()); }

  void validate() const {
    if (points.empty()) throw std::invalid_argument("PointVariety: empty variety");
    size_t n = points[0].size();
    for (const auto& p : points)
      if (p.size() != n) throw std::invalid_argument("PointVariety: ragged coordinates");
    std::set<std::vector<Rat>> uniq(points.begin(), points.end());
    if (uniq.size() != points.size()) throw std::invalid_argument("PointVariety: repeated point");
  }
};

// Product of the normalized linear forms of the points: the degree-D form in
// one group of n+1 variables (u_0 distinguished) cutting exactly the variety.
inline MultiPoly point_chow_form(const PointVariety& v) {
  v.validate();
  int n = v.ambient_dim();
  MultiPoly acc = MultiPoly::constant(n + 1, Rat(1));
  for (const auto& pt : v.points) {
    MultiPoly lin = MultiPoly::variable(n + 1, 0);
    for (int i = 0; i < n; ++i) lin = lin + pt[i] * MultiPoly::variable(n + 1, i + 1);
    acc = acc * lin;
  }
  return acc;
}

// Local height of a point variety. Archimedean: closed form
// sum over points of (1/2) log(1 + |xi|^2); p-adic: sum of coordinate heights.
inline double height_point_variety(const PointVariety& v, const Place& place) {
  v.validate();
  double acc = 0.0;
  if (place.archimedean) {
    for (const auto& pt : v.points) {
      Rat s(1);
      for (const Rat& c : pt) s += c * c;
      acc += 0.5 * log_abs(s);
    }
    return acc;
  }
  for (const auto& pt : v.points) {
    long minord = 0;
    for (const Rat& c : pt)
      if (c != 0) minord = std::min(minord, ord_p(c, place.p));
    acc += std::max(0.0, -static_cast<double>(minord) * log_abs(place.p));
  }
  return acc;
}

// Archimedean height through the Chow-form route: sphere Mahler measure of
// the product of linear forms plus the dimension correction. Cross-validates
// the closed form above.
inline MahlerEstimate height_point_variety_mc(const PointVariety& v, long samples = kDefaultSamples,
                                              std::uint64_t seed = 0) {
  v.validate();
  int n = v.ambient_dim();
  MultiPoly ch = point_chow_form(v);
  MahlerEstimate est = mahler_sphere_mc(ch, 1, n + 1, samples, seed);
  est.value += half_harmonic(n) * v.degree();
  return est;
}

// Local height of the hypersurface cut out by a squarefree f whose
// coefficient of x_n^{deg f} is 1 (finiteness of the coordinate projection).
// Archimedean route: sphere Mahler of the homogenization plus the Stoll
// correction; p-adic: exact coefficient height.
inline MahlerEstimate height_hypersurface(const MultiPoly& f, const Place& place,
                                          long samples = kDefaultSamples, std::uint64_t seed = 0) {
  if (f.is_zero()) throw std::invalid_argument("height_hypersurface: zero polynomial");
  int n = f.nvars();
  int d = f.degree();
  Monomial lead(n, 0);
  if (n == 0) throw std::invalid_argument("height_hypersurface: no variables");
  lead[n - 1] = d;
  if (f.coeff(lead) != 1)
    throw std::invalid_argument("height_hypersurface: coefficient of x_n^deg must be 1");
  MahlerEstimate out;
  if (!place.archimedean) {
    out.method = "exact";
    out.value = local_height(f, place);
    return out;
  }
  out = mahler_sphere_mc(homogenize(f), 1, n + 1, samples, seed);
  out.value += stoll_number(n) * d;
  return out;
}

}  // namespace nsz

#endif
