#ifndef NSZ_MONOMIAL_HPP
#define NSZ_MONOMIAL_HPP

#include <numeric>
#include <vector>

namespace nsz {

// Exponent vector; length is the ambient variable count of the polynomial
// holding it. Dense on purpose: variable counts stay in single digits.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

// a > b in graded reverse-lexicographic order.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (size_t i = a.size(); i-- > 0;) {
    int diff = a[i] - b[i];
    if (diff != 0) return diff < 0;
  }
  return false;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_greater(a, b);
  }
};

inline bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mon_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Monomial mon_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Monomial mon_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

}  // namespace nsz

#endif
