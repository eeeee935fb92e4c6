#ifndef NSZ_SCALAR_HPP
#define NSZ_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsz {

// Exact coefficient domain. Int is sign+magnitude arbitrary precision,
// Rat is kept reduced with positive denominator at all times (GMP
// canonical form).
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
    Rat inv = 1 / base;
    return rat_pow(inv, -e);
  }
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// log|x| for huge integers without overflowing double.
inline double log_abs(const Int& x) {
  if (x == 0) throw std::domain_error("log_abs(0)");
  signed long exp2;
  double m = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(exp2) * std::log(2.0);
}

inline double log_abs(const Rat& x) {
  if (x == 0) throw std::domain_error("log_abs(0)");
  return log_abs(Int(x.get_num())) - log_abs(Int(x.get_den()));
}

inline Int rat_num(const Rat& x) { return Int(x.get_num()); }
inline Int rat_den(const Rat& x) { return Int(x.get_den()); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }
inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Multiplicity of p in x (x != 0), i.e. ord_p(x).
inline long ord_at(const Int& x, const Int& p) {
  if (x == 0) throw std::domain_error("ord_at(0)");
  Int rem;
  return static_cast<long>(mpz_remove(rem.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

inline Int parse_int(const std::string& s) {
  Int v;
  if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_int: bad integer literal '" + s + "'");
  return v;
}

}  // namespace nsz

#endif
