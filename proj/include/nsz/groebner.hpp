#ifndef NSZ_GROEBNER_HPP
#define NSZ_GROEBNER_HPP

#include <algorithm>
#include <list>
#include <stdexcept>
#include <vector>

#include "nsz/poly.hpp"

namespace nsz {

struct GroebnerBasis {
  std::vector<MultiPoly> generators;  // reduced, monic, grevlex
  int nvars = 0;

  bool is_unit_ideal() const {
    return generators.size() == 1 && generators[0].degree() == 0 && !generators[0].is_zero();
  }
};

// Full normal-form reduction of f by the basis.
inline MultiPoly gb_reduce(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
  MultiPoly rem(f.nvars());
  MultiPoly cur = f;
  while (!cur.is_zero()) {
    const auto& [lm, lc] = cur.leading_term();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const auto& [gm, gc] = g.leading_term();
      if (divides(gm, lm)) {
        Monomial q = mon_div(lm, gm);
        cur = cur - (lc / gc) * (MultiPoly::term(f.nvars(), q, Rat(1)) * g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(lm, lc);
      cur.add_term(lm, -lc);
    }
  }
  return rem;
}

// Buchberger with normal pair selection (smallest lcm in grevlex) and the
// coprimality criterion; returns the unique reduced monic basis.
inline GroebnerBasis groebner(const std::vector<MultiPoly>& fs) {
  if (fs.empty()) throw std::invalid_argument("groebner: empty generator list");
  int n = fs[0].nvars();
  std::vector<MultiPoly> basis;
  for (const auto& f : fs) {
    if (f.nvars() != n) throw std::invalid_argument("groebner: variable-count mismatch");
    if (!f.is_zero()) basis.push_back(Rat(1) / f.leading_term().second * f);
  }
  if (basis.empty()) throw std::invalid_argument("groebner: all generators are zero");

  struct Pair {
    size_t i, j;
    Monomial lcm;
  };
  auto pair_less = [](const Pair& a, const Pair& b) { return grevlex_greater(b.lcm, a.lcm); };
  std::vector<Pair> pairs;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, mon_lcm(basis[i].leading_term().first, basis[j].leading_term().first)});
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *it;
    pairs.erase(it);
    const auto& fi = basis[p.i];
    const auto& fj = basis[p.j];
    const Monomial& mi = fi.leading_term().first;
    const Monomial& mj = fj.leading_term().first;
    // Coprime leading monomials: S-polynomial reduces to zero.
    if (mon_lcm(mi, mj) == mon_mul(mi, mj)) continue;
    MultiPoly spoly = MultiPoly::term(n, mon_div(p.lcm, mi), Rat(1)) * fi -
                      MultiPoly::term(n, mon_div(p.lcm, mj), Rat(1)) * fj;
    MultiPoly r = gb_reduce(spoly, basis);
    if (!r.is_zero()) {
      basis.push_back(Rat(1) / r.leading_term().second * r);
      push_pairs(basis.size() - 1);
    }
  }

  // Minimize: drop generators whose leading monomial is divisible by another's.
  std::vector<MultiPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    const Monomial& mi = basis[i].leading_term().first;
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mj = basis[j].leading_term().first;
      if (divides(mj, mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Reduce each generator against the others.
  std::vector<MultiPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly r = gb_reduce(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(Rat(1) / r.leading_term().second * r);
  }
  std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return grevlex_greater(b.leading_term().first, a.leading_term().first);
  });
  GroebnerBasis gb;
  gb.nvars = n;
  gb.generators = std::move(reduced);
  return gb;
}

}  // namespace nsz

#endif
