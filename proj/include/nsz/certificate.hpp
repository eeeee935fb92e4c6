#ifndef NSZ_CERTIFICATE_HPP
#define NSZ_CERTIFICATE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsz/bounds.hpp"
#include "nsz/linalg.hpp"
#include "nsz/places.hpp"
#include "nsz/poly.hpp"
#include "nsz/quotient.hpp"
#include "nsz/rng.hpp"

namespace nsz {

// Witness of a = sum g_i f_i for a system without common zeros; a and the
// g_i have integer coefficients.
struct BezoutCertificate {
  int n = 0;
  int s = 0;
  Int a;
  std::vector<MultiPoly> g;
  int degree_bound_used = 0;
  std::string provenance;  // "searched" | "fixture" | "external"
};

// Exact identity check a == sum g_i f_i.
inline bool certificate_identity_holds(const BezoutCertificate& cert,
                                       const std::vector<MultiPoly>& fs) {
  if (static_cast<int>(fs.size()) != cert.s) return false;
  int n = cert.n;
  MultiPoly acc(n);
  for (int i = 0; i < cert.s; ++i) {
    if (fs[i].nvars() != n || cert.g[i].nvars() != n) return false;
    acc = acc + cert.g[i] * fs[i];
  }
  return acc == MultiPoly::constant(n, Rat(cert.a));
}

namespace detail {

// Monomials of total degree <= d in n variables, grevlex-descending.
inline std::vector<Monomial> monomials_up_to(int n, int d) {
  std::vector<Monomial> out;
  Monomial cur(n, 0);
  std::function<void(int, int)> rec = [&](int var, int rest) {
    if (var == n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= rest; ++e) {
      cur[var] = e;
      rec(var + 1, rest - e);
    }
    cur[var] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), grevlex_greater);
  return out;
}

}  // namespace detail

enum class SearchStatus {
  found,
  infeasible_at_requested_bound,  // caller bound below the guarantee cap
  infeasible_at_theorem_cap,      // common zeros exist, or an internal error
};

struct SearchResult {
  SearchStatus status;
  std::optional<BezoutCertificate> certificate;
  int last_degree_tried = -1;
  Int theorem_cap;  // 4 n d^n
};

// Feasibility of 1 = sum p_i f_i with deg p_i <= degree as an exact linear
// system; free columns are zeroed (grevlex-on-(i, monomial) column order).
inline std::optional<std::vector<MultiPoly>> bezout_solve_at_degree(
    const std::vector<MultiPoly>& fs, int degree) {
  int n = fs.at(0).nvars();
  int s = static_cast<int>(fs.size());
  int dmax = 0;
  for (const auto& f : fs) {
    if (f.is_zero()) throw std::invalid_argument("bezout_solve: zero polynomial in system");
    dmax = std::max(dmax, f.degree());
  }
  auto cols_mons = detail::monomials_up_to(n, degree);
  auto row_mons = detail::monomials_up_to(n, degree + dmax);
  std::map<Monomial, size_t, GrevlexGreater> row_index;
  for (size_t r = 0; r < row_mons.size(); ++r) row_index[row_mons[r]] = r;

  size_t ncols = static_cast<size_t>(s) * cols_mons.size();
  QMat a(row_mons.size(), QVec(ncols, Rat(0)));
  for (int i = 0; i < s; ++i)
    for (size_t c = 0; c < cols_mons.size(); ++c) {
      size_t col = static_cast<size_t>(i) * cols_mons.size() + c;
      for (const auto& [fm, fc] : fs[i].terms()) {
        Monomial prod = mon_mul(cols_mons[c], fm);
        a[row_index.at(prod)][col] += fc;
      }
    }
  QVec b(row_mons.size(), Rat(0));
  b[row_index.at(Monomial(n, 0))] = 1;

  auto sol = solve_consistent(a, b);
  if (!sol) return std::nullopt;
  std::vector<MultiPoly> ps;
  for (int i = 0; i < s; ++i) {
    MultiPoly p(n);
    for (size_t c = 0; c < cols_mons.size(); ++c)
      p.add_term(cols_mons[c], (*sol)[static_cast<size_t>(i) * cols_mons.size() + c]);
    ps.push_back(std::move(p));
  }
  return ps;
}

// Escalating search from degree 0 to the guarantee cap (or a caller bound),
// clearing denominators on success.
inline SearchResult certificate_search(const std::vector<MultiPoly>& fs,
                                       std::optional<int> degree_bound = std::nullopt) {
  if (fs.empty()) throw std::invalid_argument("certificate_search: empty system");
  int n = fs[0].nvars();
  int s = static_cast<int>(fs.size());
  int d = 1;
  for (const auto& f : fs) d = std::max(d, f.degree());
  SearchResult res;
  res.theorem_cap = 4 * Int(n) * int_pow(Int(d), std::max(1, n));
  Int cap_i = degree_bound ? Int(*degree_bound) : res.theorem_cap;
  int cap = static_cast<int>(cap_i.get_si());

  for (int deg = 0; deg <= cap; ++deg) {
    res.last_degree_tried = deg;
    auto ps = bezout_solve_at_degree(fs, deg);
    if (!ps) continue;
    Int denom(1);
    for (const auto& p : *ps)
      for (const auto& [m, c] : p.terms()) denom = lcm(denom, rat_den(c));
    BezoutCertificate cert;
    cert.n = n;
    cert.s = s;
    cert.a = denom;
    cert.degree_bound_used = deg;
    cert.provenance = "searched";
    for (const auto& p : *ps) cert.g.push_back(Rat(denom) * p);
    if (!certificate_identity_holds(cert, fs))
      throw std::logic_error("certificate_search: internal identity failure");
    res.status = SearchStatus::found;
    res.certificate = std::move(cert);
    return res;
  }
  res.status = (degree_bound && Int(*degree_bound) < res.theorem_cap)
                   ? SearchStatus::infeasible_at_requested_bound
                   : SearchStatus::infeasible_at_theorem_cap;
  return res;
}

// Per-bound comparison outcome attached to a verification.
struct BoundCheck {
  std::string name;
  double bound;
  double actual;
  bool pass;
};

struct VerifyReport {
  bool identity_ok = false;
  int max_cofactor_degree = 0;
  double certificate_height = 0.0;  // h(a, g_1..g_s)
  std::vector<BoundCheck> checks;
};

struct IdentityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact identity check plus degree/height comparisons against the closed-form
// estimates. Comparisons are reports; only the identity is load-bearing.
inline VerifyReport certificate_verify(const BezoutCertificate& cert,
                                       const std::vector<MultiPoly>& fs,
                                       std::optional<Int> delta = std::nullopt,
                                       std::optional<double> eta = std::nullopt,
                                       std::optional<Int> vol = std::nullopt) {
  VerifyReport rep;
  rep.identity_ok = certificate_identity_holds(cert, fs);
  if (!rep.identity_ok) throw IdentityFailure("certificate_verify: a != sum g_i f_i");

  int n = cert.n;
  int s = cert.s;
  int d = 1;
  for (const auto& f : fs) d = std::max(d, f.degree());
  double h = global_height_value(fs);

  rep.max_cofactor_degree = 0;
  for (const auto& g : cert.g)
    if (!g.is_zero()) rep.max_cofactor_degree = std::max(rep.max_cofactor_degree, g.degree());

  std::vector<MultiPoly> all{MultiPoly::constant(n, Rat(cert.a))};
  for (const auto& g : cert.g)
    if (!g.is_zero()) all.push_back(g);
  rep.certificate_height = global_height_value(all);

  BoundInputs in;
  in.counts["n"] = n;
  in.counts["d"] = d;
  in.counts["s"] = s;
  in.reals["h"] = h;
  BoundReport t1 = bound_calculators("theorem1", in);
  rep.checks.push_back({"theorem1-degree", t1.values.at("degree"),
                        static_cast<double>(rep.max_cofactor_degree),
                        rep.max_cofactor_degree <= t1.values.at("degree")});
  rep.checks.push_back({"theorem1-height", t1.values.at("height"), rep.certificate_height,
                        rep.certificate_height <= t1.values.at("height")});
  if (d <= 1) {
    BoundReport b = bound_calculators("d1", in);
    rep.checks.push_back({"d1-height", b.values.at("height"), rep.certificate_height,
                          rep.certificate_height <= b.values.at("height")});
  }
  if (n == 1) {
    BoundReport b = bound_calculators("n1", in);
    rep.checks.push_back({"n1-degree", b.values.at("degree"),
                          static_cast<double>(rep.max_cofactor_degree),
                          rep.max_cofactor_degree <= b.values.at("degree")});
    rep.checks.push_back({"n1-height", b.values.at("height"), rep.certificate_height,
                          rep.certificate_height <= b.values.at("height")});
  }
  if (delta && eta) {
    BoundInputs t2in = in;
    t2in.counts["delta"] = *delta;
    t2in.reals["eta"] = *eta;
    BoundReport b = bound_calculators("theorem2", t2in);
    rep.checks.push_back({"theorem2-degree", b.values.at("degree"),
                          static_cast<double>(rep.max_cofactor_degree),
                          rep.max_cofactor_degree <= b.values.at("degree")});
    rep.checks.push_back({"theorem2-height", b.values.at("height"), rep.certificate_height,
                          rep.certificate_height <= b.values.at("height")});
  }
  if (vol) {
    BoundInputs c3in = in;
    c3in.counts["vol"] = *vol;
    BoundReport b = bound_calculators("cor3", c3in);
    rep.checks.push_back({"cor3-degree", b.values.at("degree"),
                          static_cast<double>(rep.max_cofactor_degree),
                          rep.max_cofactor_degree <= b.values.at("degree")});
    rep.checks.push_back({"cor3-height", b.values.at("height"), rep.certificate_height,
                          rep.certificate_height <= b.values.at("height")});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Fixture families with built-in lower-bound witnesses.

struct Fixture {
  std::vector<MultiPoly> system;
  std::optional<BezoutCertificate> closed_form;  // present for the geometric family
};

// f_1 = x_1 - 1, f_i = x_i - x_{i-1}^d, f_{n+1} = H - x_n^d, with the
// telescoping geometric-series certificate for a = H - 1.
inline Fixture fixture_geometric(int n, int d, const Int& H) {
  if (n < 1 || d < 1 || H < 2) throw std::invalid_argument("fixture_geometric: need n,d >= 1, H >= 2");
  Fixture fx;
  std::vector<MultiPoly>& fs = fx.system;
  fs.push_back(MultiPoly::variable(n, 0) - MultiPoly::constant(n, Rat(1)));
  for (int i = 1; i < n; ++i)
    fs.push_back(MultiPoly::variable(n, i) - MultiPoly::variable(n, i - 1).pow(d));
  fs.push_back(MultiPoly::constant(n, Rat(H)) - MultiPoly::variable(n, n - 1).pow(d));

  auto geom_series = [&](int var) {  // 1 + x_var + ... + x_var^{d-1}
    MultiPoly acc(n);
    for (int e = 0; e < d; ++e) acc = acc + MultiPoly::variable(n, var).pow(e);
    return acc;
  };
  BezoutCertificate cert;
  cert.n = n;
  cert.s = n + 1;
  cert.a = H - 1;
  cert.degree_bound_used = n * (d - 1);
  cert.provenance = "fixture";
  for (int i = 0; i < n; ++i) {
    MultiPoly gi = MultiPoly::constant(n, Rat(1));
    for (int j = i; j < n; ++j) gi = gi * geom_series(j);
    cert.g.push_back(gi);
  }
  cert.g.push_back(MultiPoly::constant(n, Rat(1)));
  if (!certificate_identity_holds(cert, fs))
    throw std::logic_error("fixture_geometric: closed-form certificate failed");
  fx.closed_form = std::move(cert);
  return fx;
}

// f_1 = x_1^d, f_i = x_{i-1} x_n^{d-1} - x_i^d, f_n = x_{n-1} x_n^{d-1} - H.
inline Fixture fixture_masser_philippon(int n, int d, const Int& H) {
  if (n < 2 || d < 2) throw std::invalid_argument("fixture_masser_philippon: need n, d >= 2");
  Fixture fx;
  std::vector<MultiPoly>& fs = fx.system;
  fs.push_back(MultiPoly::variable(n, 0).pow(d));
  for (int i = 1; i + 1 < n; ++i)
    fs.push_back(MultiPoly::variable(n, i - 1) * MultiPoly::variable(n, n - 1).pow(d - 1) -
                 MultiPoly::variable(n, i).pow(d));
  fs.push_back(MultiPoly::variable(n, n - 2) * MultiPoly::variable(n, n - 1).pow(d - 1) -
               MultiPoly::constant(n, Rat(H)));
  return fx;
}

// f_1 = x_1 - H, f_i = x_i - x_{i-1}^d, f_{n+1} = x_n^d.
inline Fixture fixture_dnh(int n, int d, const Int& H) {
  if (n < 1 || d < 1) throw std::invalid_argument("fixture_dnh: need n, d >= 1");
  Fixture fx;
  std::vector<MultiPoly>& fs = fx.system;
  fs.push_back(MultiPoly::variable(n, 0) - MultiPoly::constant(n, Rat(H)));
  for (int i = 1; i < n; ++i)
    fs.push_back(MultiPoly::variable(n, i) - MultiPoly::variable(n, i - 1).pow(d));
  fs.push_back(MultiPoly::variable(n, n - 1).pow(d));
  return fx;
}

// Witness for the dnh family: evaluating at (H, H^d, ..., H^{d^{n-1}})
// forces a = g_{n+1}(point) * H^{d^n}; in particular H^{d^n} divides a.
struct DivisibilityWitness {
  bool identity_ok = false;
  bool divisibility_ok = false;
  Int modulus;
};

inline DivisibilityWitness dnh_witness(const BezoutCertificate& cert, int n, int d, const Int& H) {
  std::vector<Rat> point;
  Int power = H;
  for (int i = 0; i < n; ++i) {
    point.push_back(Rat(power));
    power = int_pow(power, static_cast<unsigned long>(d));
  }
  // power is now H^{d^n}
  DivisibilityWitness w;
  w.modulus = power;
  Rat gval = cert.g.at(n).eval(point);
  w.identity_ok = Rat(cert.a) == gval * Rat(power);
  w.divisibility_ok = cert.a % power == 0;
  return w;
}

// Witness for the Masser-Philippon family via the Laurent specialization
// x_j = H^{d^{n-1-j}} t^{d^{n-j}-1} (1-based j < n), x_n = 1/t: the identity
// collapses to a = g_1(...) H^{d^{n-1}} t^{d^n - d}, so H^{d^{n-1}} | a.
inline DivisibilityWitness mp_witness(const BezoutCertificate& cert, int n, int d, const Int& H) {
  // Laurent polynomials in t as exponent -> coefficient maps.
  using Laurent = std::map<long, Rat>;
  auto lmul = [](const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        r[ea + eb] += ca * cb;
      }
    for (auto it = r.begin(); it != r.end();)
      it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
  };
  // Images of the variables.
  std::vector<Laurent> img(n);
  std::vector<Int> hpow(n);
  std::vector<long> tpow(n);
  for (int j = 1; j < n; ++j) {
    Int he = int_pow(Int(d), static_cast<unsigned long>(n - 1 - j));
    hpow[j - 1] = int_pow(H, he.get_ui());
    Int te = int_pow(Int(d), static_cast<unsigned long>(n - j)) - 1;
    tpow[j - 1] = te.get_si();
    img[j - 1] = Laurent{{tpow[j - 1], Rat(hpow[j - 1])}};
  }
  img[n - 1] = Laurent{{-1, Rat(1)}};

  auto evaluate = [&](const MultiPoly& p) {
    Laurent acc;
    for (const auto& [m, c] : p.terms()) {
      Laurent term{{0, c}};
      for (int v = 0; v < n; ++v)
        for (int e = 0; e < m[v]; ++e) term = lmul(term, img[v]);
      for (const auto& [e, cv] : term) acc[e] += cv;
    }
    for (auto it = acc.begin(); it != acc.end();)
      it = it->second == 0 ? acc.erase(it) : std::next(it);
    return acc;
  };

  DivisibilityWitness w;
  Int hd = int_pow(H, int_pow(Int(d), static_cast<unsigned long>(n - 1)).get_ui());
  w.modulus = hd;
  Int dn = int_pow(Int(d), static_cast<unsigned long>(n));
  long shift = Int(dn - d).get_si();
  // a = g_1(img) * H^{d^{n-1}} * t^{d^n - d}
  Laurent g1 = evaluate(cert.g.at(0));
  Laurent rhs;
  for (const auto& [e, c] : g1) rhs[e + shift] += c * Rat(hd);
  for (auto it = rhs.begin(); it != rhs.end();)
    it = it->second == 0 ? rhs.erase(it) : std::next(it);
  Laurent lhs{{0, Rat(cert.a)}};
  if (cert.a == 0) lhs.clear();
  w.identity_ok = lhs == rhs;
  w.divisibility_ok = cert.a % hd == 0;
  return w;
}

// ---------------------------------------------------------------------------
// Generic-position preparation within the explicit coefficient caps.

struct PreparedSystem {
  std::vector<std::vector<Int>> combination;  // t x s
  std::vector<std::vector<Int>> coord_matrix; // n x n, invertible
  std::vector<Int> coord_shift;               // n
  std::vector<MultiPoly> prepared;             // q_1..q_t, after the coordinate change
  int t = 0;
  std::uint64_t seed_used = 0;
};

struct PreparationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Cut the prefix q_1..q_i down to dimension zero with n-i generic integer
// hyperplanes and certify that the resulting fiber is radical (squarefree
// characteristic polynomial, so the point count equals the algebra
// dimension).
inline bool fiber_check(const std::vector<MultiPoly>& qs, int i, std::uint64_t seed) {
  int n = qs.at(0).nvars();
  Rng rng(seed);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<MultiPoly> fiber(qs.begin(), qs.begin() + i);
    for (int k = 0; k < n - i; ++k) {
      MultiPoly plane = MultiPoly::constant(n, Rat(rng.next_int(-9, 9)));
      for (int v = 0; v < n; ++v)
        plane = plane + Rat(rng.next_int(-9, 9)) * MultiPoly::variable(n, v);
      if (plane.degree() != 1) {
        --k;
        continue;
      }
      fiber.push_back(plane);
    }
    try {
      QuotientAlgebra b = quotient_algebra(fiber);
      if (radical_certificate(b, seed + 7 * attempt)) return true;
    } catch (const UnitIdeal&) {
      continue;  // hyperplanes missed the variety: retry
    } catch (const PositiveDimensional&) {
      continue;
    }
  }
  return false;
}

}  // namespace detail

// Random integer combinations and coordinate change within the height caps,
// validated through the quotient machinery; attempt 0 tries the identity.
inline PreparedSystem prepare_system(const std::vector<MultiPoly>& fs, std::uint64_t seed,
                                     int retry_cap = 16) {
  if (fs.empty()) throw std::invalid_argument("prepare_system: empty system");
  int n = fs[0].nvars();
  int s = static_cast<int>(fs.size());
  int d = 1;
  for (const auto& f : fs) d = std::max(d, f.degree());
  // Entries capped by h <= 2(n+1) log(d+1), i.e. |entry| <= (d+1)^{2(n+1)}.
  Int cap = int_pow(Int(d + 1), static_cast<unsigned long>(2 * (n + 1)));
  long capl = cap > 1000000 ? 1000000L : cap.get_si();
  int tmax = std::min(n + 1, s);

  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt <= retry_cap; ++attempt) {
    Rng rng(Rng(seed).substream(attempt).next_u64());
    PreparedSystem prep;
    prep.seed_used = seed + attempt;
    // Combination matrix and affine change; identity on the first attempt.
    std::vector<std::vector<Int>> comb(tmax, std::vector<Int>(s, Int(0)));
    std::vector<std::vector<Int>> bmat(n, std::vector<Int>(n, Int(0)));
    std::vector<Int> shift(n, Int(0));
    if (attempt == 0) {
      for (int i = 0; i < tmax; ++i) comb[i][i] = 1;
      for (int i = 0; i < n; ++i) bmat[i][i] = 1;
    } else {
      for (int i = 0; i < tmax; ++i)
        for (int j = 0; j < s; ++j) comb[i][j] = Int(rng.next_int(-capl, capl));
      for (int i = 0; i < n; ++i) {
        shift[i] = Int(rng.next_int(-capl, capl));
        for (int j = 0; j < n; ++j) bmat[i][j] = Int(rng.next_int(-capl, capl));
      }
    }
    QMat bq(n, QVec(n));
    QVec bs(n);
    for (int i = 0; i < n; ++i) {
      bs[i] = Rat(shift[i]);
      for (int j = 0; j < n; ++j) bq[i][j] = Rat(bmat[i][j]);
    }
    if (q_det(bq) == 0) {
      last_failure = "singular coordinate change";
      continue;
    }

    std::vector<MultiPoly> qs;
    bool zero_combo = false;
    for (int i = 0; i < tmax; ++i) {
      MultiPoly qi(n);
      for (int j = 0; j < s; ++j) qi = qi + Rat(comb[i][j]) * fs[j];
      if (qi.is_zero()) zero_combo = true;
      qs.push_back(substitute_affine(qi, bq, bs));
    }
    if (zero_combo) {
      last_failure = "combination produced the zero polynomial";
      continue;
    }

    // Find minimal t with 1 in (q_1..q_t).
    int t = -1;
    for (int i = 1; i <= tmax; ++i) {
      GroebnerBasis gb = groebner(std::vector<MultiPoly>(qs.begin(), qs.begin() + i));
      if (gb.is_unit_ideal()) {
        t = i;
        break;
      }
    }
    if (t < 0) {
      last_failure = "no prefix generates the unit ideal (common zeros or bad combination)";
      continue;
    }

    // Radical zero-dimensional fiber checks for every proper prefix.
    bool ok = true;
    for (int i = 1; i < t && ok; ++i)
      if (!detail::fiber_check(qs, i, seed + 101 * attempt + i)) {
        ok = false;
        last_failure = "fiber over 0 not radical/zero-dimensional for a prefix";
      }
    if (!ok) continue;

    prep.combination = std::move(comb);
    prep.coord_matrix = std::move(bmat);
    prep.coord_shift = std::move(shift);
    prep.prepared = std::vector<MultiPoly>(qs.begin(), qs.begin() + t);
    prep.t = t;
    return prep;
  }
  throw PreparationFailure("prepare_system: retries exhausted; last failure: " + last_failure);
}

// Intrinsic degree/height surrogates.
struct IntrinsicParams {
  Int delta;
  double eta = 0.0;
  std::string source;  // "user" | "lemma_dn" | "lemma_sparse"
};

inline IntrinsicParams intrinsic_params_user(const Int& delta, double eta) {
  if (delta < 1 || eta < 0) throw std::invalid_argument("intrinsic_params: need delta >= 1, eta >= 0");
  return {delta, eta, "user"};
}

inline IntrinsicParams intrinsic_params_dn(const std::vector<MultiPoly>& fs) {
  int n = fs.at(0).nvars();
  long s = static_cast<long>(fs.size());
  std::vector<Int> degs;
  int d = 1;
  for (const auto& f : fs) {
    degs.push_back(Int(std::max(1, f.degree())));
    d = std::max(d, f.degree());
  }
  std::sort(degs.rbegin(), degs.rend());
  BoundInputs in;
  in.counts["n"] = n;
  in.counts["s"] = s;
  in.counts["d"] = d;
  in.reals["h"] = global_height_value(fs);
  in.degrees = degs;
  BoundReport rep = bound_calculators("dn", in);
  IntrinsicParams out;
  out.delta = rep.exact_values.at("delta");
  out.eta = rep.values.at("eta");
  out.source = "lemma_dn";
  return out;
}

inline IntrinsicParams intrinsic_params_sparse(const std::vector<MultiPoly>& fs) {
  int n = fs.at(0).nvars();
  long s = static_cast<long>(fs.size());
  int d = 1;
  for (const auto& f : fs) d = std::max(d, f.degree());
  Int vol = normalized_volume(support(fs, /*include_affine_frame=*/true));
  BoundInputs in;
  in.counts["n"] = n;
  in.counts["s"] = s;
  in.counts["d"] = d;
  in.counts["vol"] = vol;
  in.reals["h"] = global_height_value(fs);
  BoundReport rep = bound_calculators("sparse-params", in);
  IntrinsicParams out;
  out.delta = rep.exact_values.at("delta");
  out.eta = rep.values.at("eta");
  out.source = "lemma_sparse";
  return out;
}

// All applicable closed-form bounds for a system, with per-bound pass/fail
// when a certificate is supplied.
struct BoundBundle {
  std::vector<BoundReport> reports;
  std::vector<BoundCheck> checks;  // empty without a certificate
};

inline BoundBundle report_all_bounds(const std::vector<MultiPoly>& fs,
                                     const std::optional<BezoutCertificate>& cert = std::nullopt) {
  BoundBundle out;
  int n = fs.at(0).nvars();
  long s = static_cast<long>(fs.size());
  int d = 1;
  for (const auto& f : fs) d = std::max(d, f.degree());
  double h = global_height_value(fs);

  BoundInputs base;
  base.counts["n"] = n;
  base.counts["d"] = d;
  base.counts["s"] = s;
  base.reals["h"] = h;
  out.reports.push_back(bound_calculators("theorem1", base));
  if (d <= 1) out.reports.push_back(bound_calculators("d1", base));
  if (n == 1) out.reports.push_back(bound_calculators("n1", base));

  IntrinsicParams dn = intrinsic_params_dn(fs);
  BoundInputs t2 = base;
  t2.counts["delta"] = dn.delta;
  t2.reals["eta"] = dn.eta;
  out.reports.push_back(bound_calculators("theorem2", t2));

  std::optional<Int> vol;
  try {
    vol = normalized_volume(support(fs, true));
  } catch (const std::invalid_argument&) {
    // volume only implemented up to lattice rank 3
  }
  if (vol) {
    BoundInputs c3 = base;
    c3.counts["vol"] = *vol;
    out.reports.push_back(bound_calculators("cor3", c3));
  }

  if (cert) {
    VerifyReport vr = certificate_verify(*cert, fs, dn.delta, dn.eta, vol);
    out.checks = vr.checks;
  }
  return out;
}

}  // namespace nsz

#endif
