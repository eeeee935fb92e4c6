#ifndef NSZ_BOUNDS_HPP
#define NSZ_BOUNDS_HPP

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsz/scalar.hpp"
#include "nsz/support.hpp"
#include "nsz/variety_height.hpp"
#include "nsz/volume.hpp"

namespace nsz {

// Named inputs for a bound evaluation. Integer-valued quantities ride in
// `counts`, real-valued ones (heights, local heights) in `reals`, degree
// lists in `degrees`.
struct BoundInputs {
  std::map<std::string, Int> counts;
  std::map<std::string, double> reals;
  std::vector<Int> degrees;          // d_1 >= d_2 >= ... where applicable
  std::vector<double> variety_heights;
  std::vector<Int> variety_degrees;

  Int count(const std::string& k) const {
    auto it = counts.find(k);
    if (it == counts.end()) throw std::invalid_argument("bound inputs: missing count '" + k + "'");
    return it->second;
  }
  long count_l(const std::string& k) const { return count(k).get_si(); }
  double real(const std::string& k) const {
    auto it = reals.find(k);
    if (it == reals.end()) throw std::invalid_argument("bound inputs: missing real '" + k + "'");
    return it->second;
  }
  bool has(const std::string& k) const { return counts.count(k) || reals.count(k); }
};

struct BoundReport {
  std::string statement;
  std::map<std::string, double> values;   // named bound values
  std::map<std::string, Int> exact_values;  // exact integer bounds where available
  std::string formula;                    // echo for audit
};

namespace detail {
inline double dln(long x) { return std::log(static_cast<double>(x)); }
inline double ipow(long b, long e) { return std::pow(static_cast<double>(b), static_cast<double>(e)); }
}  // namespace detail

// Dispatcher for every closed-form degree/height bound the library exposes.
// Every value is evaluated literally from the formula echoed in the report.
inline BoundReport bound_calculators(const std::string& statement, const BoundInputs& in) {
  using detail::dln;
  using detail::ipow;
  BoundReport rep;
  rep.statement = statement;

  auto set = [&rep](const std::string& k, double v) { rep.values[k] = v; };
  auto set_exact = [&rep](const std::string& k, const Int& v) {
    rep.exact_values[k] = v;
    rep.values[k] = mpz_get_d(v.get_mpz_t());
  };

  if (statement == "theorem1") {
    long n = in.count_l("n"), d = in.count_l("d");
    set_exact("degree", 4 * Int(n) * int_pow(Int(d), n));
    rep.formula = "deg <= 4 n d^n ; height <= 4 n (n+1) d^n (h + log s + (n+7) log(n+1) d)";
    if (in.has("h") && in.has("s")) {
      long s = in.count_l("s");
      double h = in.real("h");
      set("height", 4.0 * n * (n + 1) * ipow(d, n) * (h + dln(s) + (n + 7) * dln(n + 1) * d));
    }
    return rep;
  }
  if (statement == "extrinseco") {
    long n = in.count_l("n"), d = in.count_l("d");
    double hv = in.real("hv");
    set_exact("degree", 4 * Int(n) * int_pow(Int(d), n));
    set("height_arch", 4.0 * n * (n + 1) * ipow(d, n) * hv + 4.0 * n * (4 * n + 5) * dln(n + 1) * ipow(d, n + 1));
    set("height_padic", 4.0 * n * (n + 1) * ipow(d, n) * hv);
    rep.formula = "deg <= 4 n d^n ; h_v <= 4 n (n+1) d^n h_v + 4 n (4n+5) log(n+1) d^{n+1}";
    return rep;
  }
  if (statement == "nullstlocal") {
    long n = in.count_l("n"), d = in.count_l("d"), s = in.count_l("s");
    double hv = in.real("hv");
    Int degsum(0);
    double hsum = 0.0;
    long limit = std::min(n, s) - 1;
    for (size_t j = 0; j < in.variety_degrees.size() && static_cast<long>(j) < limit; ++j)
      degsum += in.variety_degrees[j];
    for (double hj : in.variety_heights) hsum += hj;
    Int degsum_all(0);
    for (const auto& dj : in.variety_degrees) degsum_all += dj;
    set_exact("degree", 2 * Int(n) * Int(d) * (1 + degsum));
    double tail = (1.0 + mpz_get_d(degsum_all.get_mpz_t()));
    set("height_arch", 2.0 * n * d * hsum + ((n + 1) * hv + 2.0 * n * (2 * n + 5) * dln(n + 1) * d) * tail);
    set("height_padic", 2.0 * n * d * hsum + (n + 1) * hv * tail);
    rep.formula =
        "deg <= 2 n d (1 + sum deg V_j) ; h_v <= 2 n d sum h_v(V_j) + ((n+1) h_v + 2 n (2n+5) log(n+1) d)(1 + sum deg V_j)";
    return rep;
  }
  if (statement == "theorem2") {
    long n = in.count_l("n"), d = in.count_l("d"), s = in.count_l("s");
    double h = in.real("h"), eta = in.real("eta");
    Int delta = in.count("delta");
    double deltad = mpz_get_d(delta.get_mpz_t());
    set_exact("degree", 2 * Int(n) * Int(n) * Int(d) * delta);
    set("height", (n + 1.0) * (n + 1.0) * d *
                      (2.0 * eta + (h + dln(s)) * deltad + 21.0 * (n + 1) * (n + 1) * d * dln(d + 1) * deltad));
    rep.formula =
        "deg <= 2 n^2 d delta ; height <= (n+1)^2 d (2 eta + (h + log s) delta + 21 (n+1)^2 d log(d+1) delta)";
    return rep;
  }
  if (statement == "cor3") {
    long n = in.count_l("n"), d = in.count_l("d");
    Int vol = in.count("vol");
    double vold = mpz_get_d(vol.get_mpz_t());
    set_exact("degree", 2 * Int(n) * Int(n) * Int(d) * vol);
    rep.formula =
        "deg <= 2 n^2 d V ; height <= 2 (n+1)^3 d V (h + log s + 2^{2n+4} d log(d+1))";
    if (in.has("h") && in.has("s")) {
      long s = in.count_l("s");
      double h = in.real("h");
      set("height", 2.0 * (n + 1) * (n + 1) * (n + 1) * d * vold *
                        (h + dln(s) + ipow(2, 2 * n + 4) * d * dln(d + 1)));
    }
    return rep;
  }
  if (statement == "d1") {
    long n = in.count_l("n");
    double h = in.real("h");
    set("height", (n + 1.0) * (h + dln(n + 1)));
    rep.formula = "height <= (n+1)(h + log(n+1))";
    return rep;
  }
  if (statement == "n1") {
    long d = in.count_l("d");
    double h = in.real("h");
    set_exact("degree", Int(d - 1));
    set("height", 2.0 * d * (h + d));
    rep.formula = "deg <= d-1 ; height <= 2 d (h + d)";
    return rep;
  }
  if (statement == "bertini") {
    long n = in.count_l("n"), d = in.count_l("d");
    set("height", 2.0 * (n + 1) * dln(d + 1));
    rep.formula = "h(a_i) <= 2 (n+1) log(d+1)";
    return rep;
  }
  if (statement == "radical") {
    long d = in.count_l("d"), l = in.count_l("l");
    set_exact("degree_unit_case", int_pow(Int(d + 1), l));
    set_exact("degree_radical_case", 2 * int_pow(Int(d + 1), 2 * l));
    rep.formula = "deg F <= (d+1)^l (unit case) ; deg F <= 2 (d+1)^{2l} (radical case)";
    return rep;
  }
  if (statement == "noether") {
    Int degv = in.count("degV");
    set_exact("degree_per_group", 2 * degv * degv);
    rep.formula = "deg_{U_k} G <= 2 (deg V)^2";
    return rep;
  }
  if (statement == "bernstein") {
    long n = in.count_l("n"), d = in.count_l("d");
    Int vol = in.count("vol");
    double h = in.real("h");
    set_exact("degree", vol);
    set("height", (n * h + ipow(2, 2 * n + 3) * dln(n + 1) * d) * mpz_get_d(vol.get_mpz_t()));
    rep.formula = "deg V <= Vol(A) ; h(V) <= (n h + 2^{2n+3} log(n+1) d) Vol(A)";
    return rep;
  }
  if (statement == "toric") {
    long r = in.count_l("r"), na = in.count_l("N");
    Int vol = in.count("vol");
    double vold = mpz_get_d(vol.get_mpz_t());
    set("height", ipow(2, 2 * r + 2) * dln(na) * vold);
    rep.formula = "h(X_A) <= 2^{2r+2} log(#A) Vol(A)";
    if (in.has("n") && in.has("d")) {
      long n = in.count_l("n"), d = in.count_l("d");
      set("height_poly_support", ipow(2, 2 * r + 2) * dln(n + 1) * d * vold);
      rep.formula += " ; h(X_A) <= 2^{2r+2} log(n+1) d Vol(A)";
    }
    return rep;
  }
  if (statement == "arith-bezout") {
    long n = in.count_l("n"), dimv = in.count_l("dimV"), dimw = in.count_l("dimW");
    double hv = in.real("hV"), hw = in.real("hW");
    long degv = in.count_l("degV"), degw = in.count_l("degW");
    Rat c(0);
    for (long i = 0; i <= dimv; ++i)
      for (long j = 0; j <= dimw; ++j) c += Rat(1, 2 * (i + j + 1));
    double cc = mpq_get_d(c.get_mpq_t()) + (n - (dimv + dimw) / 2.0) * dln(2);
    set("height", hv * degw + degv * hw + cc * degv * degw);
    rep.formula = "h(V cap W) <= h(V) deg W + deg V h(W) + c deg V deg W";
    return rep;
  }
  if (statement == "afin") {
    long r = in.count_l("r"), n = in.count_l("n"), nn = in.count_l("N"), degv = in.count_l("degV");
    double hv = in.real("hV"), hphi = in.real("hphi");
    set("height", hv + (r + 1.0) * (hphi + 8.0 * dln(n + nn + 1)) * degv);
    rep.formula = "h(phi(V)) <= h(V) + (r+1)(h(phi) + 8 log(n+N+1)) deg V";
    return rep;
  }
  if (statement == "proyeccion") {
    long r = in.count_l("r"), n = in.count_l("n"), m = in.count_l("m"), degv = in.count_l("degV");
    double hv = in.real("hV");
    set("height", hv + 3.0 * (r + 1) * dln(n + m + 1) * degv);
    rep.formula = "h(pi(V)) <= h(V) + 3 (r+1) log(n+m+1) deg V";
    return rep;
  }
  if (statement == "inversible") {
    long r = in.count_l("r"), n = in.count_l("n"), degv = in.count_l("degV");
    double hv = in.real("hV"), hpsi = in.real("hpsi");
    set("height", hv + (r + 1.0) * (hpsi + 5.0 * dln(n + 1)) * degv);
    rep.formula = "h(psi(V)) <= h(V) + (r+1)(h(psi) + 5 log(n+1)) deg V";
    return rep;
  }
  if (statement == "import") {
    long n = in.count_l("n"), degf = in.count_l("degf"), degv = in.count_l("degV");
    double hv = in.real("hV"), hf = in.real("hf");
    set("height_arch", degf * hv + hf * degv + dln(n + 1) * degf * degv);
    set("height_padic", degf * hv + hf * degv);
    rep.formula = "deg f h_v(V) + h_v(f) deg V (+ log(n+1) deg f deg V at infinity)";
    return rep;
  }
  if (statement == "inters") {
    long n = in.count_l("n"), degf = in.count_l("degf"), degv = in.count_l("degV");
    double hv = in.real("hV"), hf = in.real("hf");
    set("height_arch", degf * hv + hf * degv + dln(n + 1) * degf * degv);
    set("height_padic", degf * hv + hf * degv);
    rep.formula =
        "h_v(V cap V(f)) <= deg f h_v(V) + h_v(f) deg V (+ log(n+1) deg f deg V at infinity)";
    return rep;
  }
  if (statement == "bezloc") {
    long n = in.count_l("n"), degv = in.count_l("degV");
    double hv = in.real("hV");
    long s = static_cast<long>(in.degrees.size());
    Rat prod(1);
    double hsum = 0.0;
    for (size_t i = 0; i < in.degrees.size(); ++i) {
      prod *= Rat(in.degrees[i]);
      hsum += in.variety_heights.at(i) / mpz_get_d(in.degrees[i].get_mpz_t());
    }
    double p = mpq_get_d(prod.get_mpq_t());
    set("height", p * (hv + hsum * degv + s * dln(n + 1) * degv));
    rep.formula = "prod d_i (h_v(V) + (sum h_v(f_i)/d_i) deg V + s log(n+1) deg V)";
    return rep;
  }
  if (statement == "bezloc1") {
    long n = in.count_l("n");
    long s = static_cast<long>(in.degrees.size());
    Rat prod(1);
    double hsum = 0.0;
    for (size_t i = 0; i < in.degrees.size(); ++i) {
      prod *= Rat(in.degrees[i]);
      hsum += in.variety_heights.at(i) / mpz_get_d(in.degrees[i].get_mpz_t());
    }
    double p = mpq_get_d(prod.get_mpq_t());
    set("height_arch", p * (hsum + (n + s) * dln(n + 1)));
    set("height_padic", p * hsum);
    rep.formula = "prod d_i (sum h_v(f_i)/d_i + (n+s) log(n+1))";
    return rep;
  }
  if (statement == "inters-global") {
    long n = in.count_l("n"), r = in.count_l("r"), degv = in.count_l("degV");
    double hv = in.real("hV"), h = in.real("h");
    long s = static_cast<long>(in.degrees.size());
    long n0 = std::min(r, s);
    Rat prod(1);
    double invsum = 0.0;
    for (long i = 0; i < n0; ++i) {
      prod *= Rat(in.degrees[i]);
      invsum += 1.0 / mpz_get_d(in.degrees[i].get_mpz_t());
    }
    double p = mpq_get_d(prod.get_mpq_t());
    set("height", p * (hv + invsum * h * degv + n0 * dln(n + 1) * degv));
    rep.formula =
        "prod_{i<=n0} d_i (h(V) + (sum_{i<=n0} 1/d_i) h deg V + n0 log(n+1) deg V), n0 = min(r,s)";
    return rep;
  }
  if (statement == "norma") {
    long n = in.count_l("n"), r = in.count_l("r"), degf = in.count_l("degf"), degv = in.count_l("degV");
    double hv = in.real("hV"), hf = in.real("hf");
    set_exact("degree", Int(degf) * Int(degv));
    set("height_arch", degf * hv + hf * degv + (r + 1.0) * dln(n + 1) * degf * degv);
    set("height_padic", degf * hv + hf * degv);
    rep.formula =
        "deg N_V(f) <= deg f deg V ; h_v <= deg f h_v(V) + h_v(f) deg V (+ (r+1) log(n+1) deg f deg V)";
    return rep;
  }
  if (statement == "traza") {
    long n = in.count_l("n"), r = in.count_l("r"), d = in.count_l("d"), degv = in.count_l("degV");
    double hvv = in.real("hV"), hv = in.real("hv");
    set_exact("degree", Int(d) * Int(degv));
    set("height_arch", d * hvv + (hv + dln(2)) * degv + (r + 1.0) * dln(n + 1) * d * degv);
    set("height_padic", d * hvv + hv * degv);
    rep.formula =
        "deg <= d deg V ; h_v <= d h_v(V) + (h_v + log 2) deg V (+ (r+1) log(n+1) d deg V)";
    return rep;
  }
  if (statement == "division") {
    long n = in.count_l("n"), r = in.count_l("r"), d = in.count_l("d"), degv = in.count_l("degV");
    long degtg = in.count_l("degt_g"), degxg = in.count_l("degx_g");
    double hv = in.real("hv"), hvv = in.real("hV"), hvg = in.real("hg");
    set_exact("degree_x", Int(n) * Int(d));
    long mx1 = std::max((n + 1) * d, degxg);
    long mx2 = std::max(d, degxg);
    set_exact("degree", Int(degtg) + (Int(n) * Int(d) + Int(mx1)) * Int(degv));
    set("height_arch", hvg + (n * d + mx2) * hvv +
                           ((n + 1) * hv + (r + 6.0) * dln(n + r + 1) * (n * d + mx1)) * degv +
                           2.0 * dln(r + 1) * degtg);
    set("height_padic", hvg + (n * d + mx2) * hvv + (n + 1.0) * hv * degv);
    rep.formula =
        "deg_x q <= n d ; deg q <= deg_t g + (n d + max((n+1)d, deg_x g)) deg V ; "
        "h_v(q) <= h_v(g) + (n d + max(d, deg_x g)) h_v(V) + ((n+1) h_v + (r+6) log(n+r+1)(n d + "
        "max((n+1)d, deg_x g))) deg V + 2 log(r+1) deg_t g";
    return rep;
  }
  if (statement == "division-n0") {
    long r = in.count_l("r"), degg = in.count_l("degg");
    double hv = in.real("hv"), hvg = in.real("hg");
    set_exact("degree", Int(degg));
    set("height_arch", hvg + hv + 2.0 * dln(r + 1) * degg);
    set("height_padic", hvg + hv);
    rep.formula = "deg q <= deg g ; h_v(q) <= h_v(g) + h_v (+ 2 log(r+1) deg g at infinity)";
    return rep;
  }
  if (statement == "dn") {
    long n = in.count_l("n"), s = in.count_l("s"), d = in.count_l("d");
    double h = in.real("h");
    long n0 = std::min(n, s), n1 = std::min(n + 1, s);
    Int delta(1);
    for (long j = 0; j < n0 - 1 && j < static_cast<long>(in.degrees.size()); ++j)
      delta *= in.degrees[j];
    Int etaprod(1);
    for (long j = 0; j < n1 - 2 && j < static_cast<long>(in.degrees.size()); ++j)
      etaprod *= in.degrees[j];
    set_exact("delta", delta);
    set("eta", n * mpz_get_d(etaprod.get_mpz_t()) * (h + dln(s) + 3.0 * n * (n + 1) * d));
    rep.formula =
        "delta <= prod_{j<=min(n,s)-1} d_j ; eta <= n prod_{j<=min(n+1,s)-2} d_j (h + log s + 3 n (n+1) d)";
    return rep;
  }
  if (statement == "sparse-params") {
    long n = in.count_l("n"), s = in.count_l("s"), d = in.count_l("d");
    double h = in.real("h");
    Int vol = in.count("vol");
    set_exact("delta", vol);
    set("eta", n * mpz_get_d(vol.get_mpz_t()) * (h + dln(s) + ipow(2, 2 * n + 4) * d));
    rep.formula = "delta <= V ; eta <= n V (h + log s + 2^{2n+4} d)";
    return rep;
  }
  if (statement == "geo-family") {
    long n = in.count_l("n"), d = in.count_l("d");
    double h = in.real("h");
    set_exact("degree", 2 * Int(n) * Int(n) * Int(d));
    set("height", (n + 1.0) * (n + 1.0) * (h + 8.0 * n * dln(n + 1) * d));
    rep.formula = "deg <= 2 n^2 d ; height <= (n+1)^2 (h + 8 n log(n+1) d)";
    return rep;
  }
  if (statement == "ejemplo-sparse") {
    long n = in.count_l("n"), d = in.count_l("d");
    set_exact("volume", Int(n) * Int(d));
    set_exact("degree", 2 * int_pow(Int(n), 4) * Int(d) * Int(d));
    rep.formula =
        "Vol(P_d) = n d ; deg <= 2 n^4 d^2 ; height <= 2 n^2 (n+1)^3 d^2 (h + log s + n 2^{2n+4} d log(n d + 1))";
    if (in.has("h") && in.has("s")) {
      long s = in.count_l("s");
      double h = in.real("h");
      set("height", 2.0 * n * n * (n + 1) * (n + 1) * (n + 1) * d * d *
                        (h + dln(s) + n * ipow(2, 2 * n + 4) * d * dln(n * d + 1)));
    }
    return rep;
  }
  throw std::invalid_argument("bound_calculators: unknown statement id '" + statement + "'");
}

// Bernstein-Kushnirenko bound evaluated on an actual system: the framed
// support volume bounds the degree, and the stated height bound rides along.
inline BoundReport bk_bounds(const std::vector<MultiPoly>& fs, double h) {
  SupportSet a = support(fs, /*include_affine_frame=*/true);
  Int vol = normalized_volume(a);
  int n = fs.at(0).nvars();
  int d = 0;
  for (const auto& f : fs) d = std::max(d, f.degree());
  BoundInputs in;
  in.counts["n"] = n;
  in.counts["d"] = d;
  in.counts["vol"] = vol;
  in.reals["h"] = h;
  return bound_calculators("bernstein", in);
}

// Toric-variety height bound from a support set.
inline BoundReport toric_height_bound(const SupportSet& a) {
  a.validate();
  if (a.points.size() < 2) throw std::invalid_argument("toric_height_bound: cardinality #A >= 2 required");
  LatticeData ld = lattice_data(a);
  BoundInputs in;
  in.counts["r"] = ld.rank;
  in.counts["N"] = static_cast<long>(a.points.size());
  in.counts["vol"] = normalized_volume(a);
  return bound_calculators("toric", in);
}

}  // namespace nsz

#endif
