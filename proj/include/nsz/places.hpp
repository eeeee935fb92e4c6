#ifndef NSZ_PLACES_HPP
#define NSZ_PLACES_HPP

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsz/numtheory.hpp"
#include "nsz/poly.hpp"

namespace nsz {

// An absolute value of Q: the archimedean one or a p-adic one.
struct Place {
  bool archimedean;
  Int p;  // valid when !archimedean; p >= 2 prime

  static Place infinity() { return {true, Int(0)}; }
  static Place prime(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("Place::prime: not a prime");
    return {false, p};
  }

  friend bool operator<(const Place& a, const Place& b) {
    if (a.archimedean != b.archimedean) return a.archimedean;  // infinity sorts first
    return a.p < b.p;
  }
  friend bool operator==(const Place& a, const Place& b) {
    return a.archimedean == b.archimedean && (a.archimedean || a.p == b.p);
  }

  std::string name() const { return archimedean ? "inf" : p.get_str(); }
};

// ord_p of a nonzero rational.
inline long ord_p(const Rat& x, const Int& p) {
  if (x == 0) throw std::domain_error("ord_p(0)");
  return ord_at(rat_num(x), p) - ord_at(rat_den(x), p);
}

// min over nonzero coefficients of ord_p; the p-adic size of f is
// p^{-min ord}. f must be nonzero.
inline long min_ord_p(const MultiPoly& f, const Int& p) {
  if (f.is_zero()) throw std::domain_error("min_ord_p of zero polynomial");
  bool first = true;
  long best = 0;
  for (const auto& [m, c] : f.terms()) {
    long o = ord_p(c, p);
    if (first || o < best) best = o;
    first = false;
  }
  return best;
}

// max over coefficients of |c| (archimedean size of f). f nonzero.
inline Rat abs_sup(const MultiPoly& f) {
  if (f.is_zero()) throw std::domain_error("abs_sup of zero polynomial");
  Rat best(0);
  for (const auto& [m, c] : f.terms()) best = std::max(best, rat_abs(c));
  return best;
}

// log |f|_v as a double.
inline double log_abs_v(const MultiPoly& f, const Place& v) {
  if (f.is_zero()) throw std::domain_error("log_abs_v of zero polynomial");
  if (v.archimedean) return log_abs(abs_sup(f));
  return -static_cast<double>(min_ord_p(f, v.p)) * log_abs(v.p);
}

// h_v(f) = max(0, log |f|_v).
inline double local_height(const MultiPoly& f, const Place& v) {
  return std::max(0.0, log_abs_v(f, v));
}

// Every prime at which some coefficient denominator is divisible (the only
// places with positive p-adic height), plus optionally numerator primes.
inline std::set<Int> prime_support(const std::vector<MultiPoly>& fs, bool numerators_too = false) {
  std::set<Int> primes;
  for (const auto& f : fs) {
    for (const auto& [m, c] : f.terms()) {
      for (const auto& [p, e] : factorize(rat_den(c))) primes.insert(p);
      if (numerators_too && rat_num(c) != 0)
        for (const auto& [p, e] : factorize(rat_num(c))) primes.insert(p);
    }
  }
  return primes;
}

struct HeightReport {
  double global = 0.0;
  std::vector<std::pair<Place, double>> locals;  // listed places, finite support
};

// Global height h(f_1,...,f_s) over Q: sum over places of max_i h_v(f_i).
inline HeightReport global_height(const std::vector<MultiPoly>& fs) {
  if (fs.empty()) throw std::invalid_argument("global_height: empty input");
  for (const auto& f : fs)
    if (f.is_zero()) throw std::invalid_argument("global_height: zero polynomial");
  HeightReport rep;
  double at_inf = 0.0;
  for (const auto& f : fs) at_inf = std::max(at_inf, local_height(f, Place::infinity()));
  rep.locals.emplace_back(Place::infinity(), at_inf);
  rep.global = at_inf;
  for (const auto& p : prime_support(fs)) {
    Place v = Place::prime(p);
    double h = 0.0;
    for (const auto& f : fs) h = std::max(h, local_height(f, v));
    rep.locals.emplace_back(v, h);
    rep.global += h;
  }
  return rep;
}

inline double global_height_value(const std::vector<MultiPoly>& fs) {
  return global_height(fs).global;
}

// Exact product-formula check for a nonzero rational: the multiset of prime
// valuations must reconstruct |q| exactly.
inline bool product_formula_holds(const Rat& q) {
  if (q == 0) throw std::domain_error("product_formula_holds(0)");
  Int num = int_abs(rat_num(q)), den = rat_den(q);
  Int rebuilt_num(1), rebuilt_den(1);
  for (const auto& [p, e] : factorize(num)) rebuilt_num *= int_pow(p, e);
  for (const auto& [p, e] : factorize(den)) rebuilt_den *= int_pow(p, e);
  return rebuilt_num == num && rebuilt_den == den;
}

}  // namespace nsz

#endif
