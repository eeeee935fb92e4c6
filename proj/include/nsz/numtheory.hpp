#ifndef NSZ_NUMTHEORY_HPP
#define NSZ_NUMTHEORY_HPP

#include <map>
#include <stdexcept>

#include "nsz/scalar.hpp"

namespace nsz {

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  // 50 Miller-Rabin rounds.
  return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
}

namespace detail {

inline Int pollard_rho(const Int& n, unsigned long c0) {
  // Brent's cycle variant.
  if (n % 2 == 0) return Int(2);
  Int y(2), c(c0), m(128), g(1), r(1), q(1), x, ys;
  while (g == 1) {
    x = y;
    for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
    Int k(0);
    while (k < r && g == 1) {
      ys = y;
      Int lim = std::min(m, Int(r - k));
      for (Int i = 0; i < lim; ++i) {
        y = (y * y + c) % n;
        q = q * int_abs(x - y) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      g = gcd(int_abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

inline void factor_into(Int n, std::map<Int, long>& out) {
  if (n <= 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = n;
  for (unsigned long c = 1; d == n; ++c) d = pollard_rho(n, c);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

// Prime factorization of |n|, n != 0. Sign discarded.
inline std::map<Int, long> factorize(Int n) {
  if (n == 0) throw std::domain_error("factorize(0)");
  if (n < 0) n = -n;
  std::map<Int, long> out;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (n % p == 0) {
      out[Int(p)] += 1;
      n /= p;
    }
  }
  detail::factor_into(n, out);
  return out;
}

}  // namespace nsz

#endif
