#ifndef NSZ_SELFTEST_HPP
#define NSZ_SELFTEST_HPP

#include <chrono>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsz/certificate.hpp"
#include "nsz/cematrix.hpp"
#include "nsz/inequalities.hpp"
#include "nsz/json_io.hpp"
#include "nsz/mahler.hpp"
#include "nsz/quotient.hpp"
#include "nsz/variety_height.hpp"

namespace nsz::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline MultiPoly random_poly(Rng& rng, int n, int maxdeg, long cmin, long cmax,
                             bool force_nonzero = true) {
  MultiPoly f(n);
  auto mons = nsz::detail::monomials_up_to(n, maxdeg);
  for (const auto& m : mons) {
    long c = rng.next_int(cmin, cmax);
    if (c != 0 && rng.next_double() < 0.7) f.add_term(m, Rat(c));
  }
  if (force_nonzero && f.is_zero()) f.add_term(Monomial(n, 0), Rat(1));
  return f;
}

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace detail

// 1. Geometric fixture reproduction with the closed-form identity, degree
// and height caps, under one second per case.
inline CriterionResult criterion1() {
  CriterionResult r{1, "geometric fixture reproduction", true, ""};
  for (int n : {1, 2})
    for (int d : {2, 3})
      for (long hh : {3L, 5L}) {
        auto t0 = std::chrono::steady_clock::now();
        Fixture fx = fixture_geometric(n, d, Int(hh));
        const BezoutCertificate& cert = *fx.closed_form;
        VerifyReport vr = certificate_verify(cert, fx.system);
        double h = std::log(static_cast<double>(hh));
        double height_cap = (n + 1.0) * (n + 1.0) * (h + 8.0 * n * std::log(n + 1.0) * d);
        bool deg_ok = vr.max_cofactor_degree <= n * (d - 1);
        bool height_ok = vr.certificate_height <= height_cap;
        bool fast = detail::seconds_since(t0) < 1.0;
        if (!(vr.identity_ok && deg_ok && height_ok && fast)) {
          r.pass = false;
          r.detail += " FAIL(n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                      ",H=" + std::to_string(hh) + ")";
        }
      }
  if (r.pass) r.detail = "8 cases: identity exact, deg <= n(d-1), height under cap, < 1 s each";
  return r;
}

// 2. Lower-bound witnesses: dnh(2,2,3) forces 81 | a, mp(2,2,3) forces 9 | a,
// at the minimal feasible degree.
inline CriterionResult criterion2() {
  CriterionResult r{2, "lower-bound divisibility witnesses", true, ""};
  auto t0 = std::chrono::steady_clock::now();
  {
    Fixture fx = fixture_dnh(2, 2, Int(3));
    SearchResult sr = certificate_search(fx.system);
    if (sr.status != SearchStatus::found) {
      r.pass = false;
      r.detail = "dnh search failed";
      return r;
    }
    DivisibilityWitness w = dnh_witness(*sr.certificate, 2, 2, Int(3));
    if (!(w.identity_ok && w.divisibility_ok && w.modulus == 81)) {
      r.pass = false;
      r.detail += " dnh witness failed (a=" + sr.certificate->a.get_str() + ")";
    }
  }
  {
    Fixture fx = fixture_masser_philippon(2, 2, Int(3));
    SearchResult sr = certificate_search(fx.system);
    if (sr.status != SearchStatus::found) {
      r.pass = false;
      r.detail += " mp search failed";
      return r;
    }
    DivisibilityWitness w = mp_witness(*sr.certificate, 2, 2, Int(3));
    if (!(w.identity_ok && w.divisibility_ok && w.modulus == 9)) {
      r.pass = false;
      r.detail += " mp witness failed (a=" + sr.certificate->a.get_str() + ")";
    }
  }
  bool fast = detail::seconds_since(t0) < 30.0;
  if (!fast) {
    r.pass = false;
    r.detail += " over 30 s";
  }
  if (r.pass) r.detail = "81 | a for dnh(2,2,3) and 9 | a for mp(2,2,3), with exact witnesses";
  return r;
}

// 3. Search-at-cap completeness over the fixture grid.
inline CriterionResult criterion3() {
  CriterionResult r{3, "search completeness at the degree cap", true, ""};
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, Fixture>> grid;
  for (int n : {1, 2})
    for (int d : {1, 2, 3}) {
      grid.emplace_back("geo(" + std::to_string(n) + "," + std::to_string(d) + ")",
                        fixture_geometric(n, d, Int(3)));
      grid.emplace_back("dnh(" + std::to_string(n) + "," + std::to_string(d) + ")",
                        fixture_dnh(n, d, Int(3)));
    }
  for (int d : {2, 3})
    grid.emplace_back("mp(2," + std::to_string(d) + ")", fixture_masser_philippon(2, d, Int(3)));

  for (auto& [name, fx] : grid) {
    SearchResult sr = certificate_search(fx.system);
    bool ok = sr.status == SearchStatus::found;
    if (ok) {
      VerifyReport vr = certificate_verify(*sr.certificate, fx.system);
      bool deg_check = false;
      for (const auto& c : vr.checks)
        if (c.name == "theorem1-degree") deg_check = c.pass;
      ok = vr.identity_ok && deg_check && Int(sr.certificate->degree_bound_used) <= sr.theorem_cap;
    }
    if (!ok) {
      r.pass = false;
      r.detail += " FAIL(" + name + ")";
    }
  }
  double el = detail::seconds_since(t0);
  if (el > 120.0) {
    r.pass = false;
    r.detail += " over 2 min";
  }
  if (r.pass)
    r.detail = std::to_string(grid.size()) + " systems certified within 4 n d^n inside the time cap";
  return r;
}

// 4. Mahler exactness and torus-MC agreement with the Jensen route.
inline CriterionResult criterion4() {
  CriterionResult r{4, "Mahler exactness and MC agreement", true, ""};
  MultiPoly x = MultiPoly::variable(1, 0);
  MultiPoly f1 = x - MultiPoly::constant(1, Rat(2));
  double m1 = mahler_univariate_exact(f1).value;
  if (std::fabs(m1 - std::log(2.0)) > 1e-9) {
    r.pass = false;
    r.detail += " m(x-2) off";
  }
  MultiPoly cyc = parse_poly("(x1^2 + x1 + 1)*(x1^4 + x1^3 + x1^2 + x1 + 1)*(x1^2 + 1)", 1);
  double m2 = mahler_univariate_exact(cyc).value;
  if (std::fabs(m2) > 1e-9) {
    r.pass = false;
    r.detail += " cyclotomic product m != 0";
  }
  Rng rng(424242);
  int agree = 0;
  for (int t = 0; t < 25; ++t) {
    MultiPoly f = detail::random_poly(rng, 1, static_cast<int>(rng.next_int(1, 6)), -9, 9);
    if (f.degree() < 1) f = f + MultiPoly::variable(1, 0);
    MahlerEstimate ex = mahler_univariate_exact(f);
    MahlerEstimate mc = mahler_torus_mc(f, 200000, 0);
    if (std::fabs(mc.value - ex.value) <= 4 * mc.stderr_ + 1e-9) ++agree;
  }
  if (agree != 25) {
    r.pass = false;
    r.detail += " MC/Jensen agreement " + std::to_string(agree) + "/25";
  }
  if (r.pass) r.detail = "m(x-2)=log 2 and cyclotomic m=0 at 1e-9; 25/25 MC within 4*stderr";
  return r;
}

// 5. The randomized inequality suite, zero violations.
inline CriterionResult criterion5() {
  CriterionResult r{5, "inequality suite", true, ""};
  const long mc_samples = 20000;
  Rng rng(777);
  std::vector<Int> primes{Int(2), Int(3), Int(5), Int(7), Int(11)};
  auto rand_rat_poly = [&](int n, int dmax) {
    MultiPoly f = detail::random_poly(rng, n, dmax, -9, 9);
    // sprinkle denominators for the p-adic side
    MultiPoly g(n);
    for (const auto& [m, c] : f.terms()) {
      long den = rng.next_int(1, 8);
      g.add_term(m, c / Rat(den));
    }
    return g.is_zero() ? MultiPoly::constant(n, Rat(1)) : g;
  };

  int fails = 0;
  std::string first_fail;
  auto note = [&](const InequalityCheck& c) {
    if (!c.pass) {
      ++fails;
      if (first_fail.empty()) first_fail = c.name;
    }
  };

  for (int t = 0; t < 100; ++t) {
    int n = static_cast<int>(rng.next_int(1, 3));
    int d = static_cast<int>(rng.next_int(1, 3));
    MultiPoly f = detail::random_poly(rng, n, d, -9, 9);
    note(check_eq1(f, mc_samples, 1000 + t));

    // r-group lemma on a 2-group split of a fresh polynomial.
    int n1 = static_cast<int>(rng.next_int(1, 2)), n2 = static_cast<int>(rng.next_int(1, 2));
    MultiPoly g = detail::random_poly(rng, n1 + n2, d, -9, 9);
    std::vector<std::vector<int>> blocks(2);
    for (int i = 0; i < n1; ++i) blocks[0].push_back(i);
    for (int i = 0; i < n2; ++i) blocks[1].push_back(n1 + i);
    note(check_rgroup(g, blocks, mc_samples, 2000 + t));

    // sphere gap
    int gr = static_cast<int>(rng.next_int(1, 2));
    int gs = static_cast<int>(rng.next_int(1, 2));
    MultiPoly s = detail::random_poly(rng, gr * gs, 2, -9, 9);
    note(check_sphere_gap(s, gr, gs, mc_samples, 3000 + t));
  }

  for (int t = 0; t < 100; ++t) {
    int n = static_cast<int>(rng.next_int(1, 3));
    Int p = primes[rng.next_int(0, static_cast<long>(primes.size()) - 1)];
    std::vector<MultiPoly> fs;
    int s = static_cast<int>(rng.next_int(2, 4));
    for (int i = 0; i < s; ++i) fs.push_back(rand_rat_poly(n, static_cast<int>(rng.next_int(1, 3))));

    note(check_hprod_1a(fs));
    note(check_hprod_1b(fs));
    note(check_hprod_1d(fs));
    MultiPoly outer = detail::random_poly(rng, s, 2, -5, 5);
    note(check_hprod_1c(outer, fs));
    MultiPoly sum = fs[0];
    for (size_t i = 1; i < fs.size(); ++i) sum = sum + fs[i];
    if (!sum.is_zero()) note(check_hprod_2a(fs, p));
    note(check_hprod_2b(fs, p));
    MultiPoly comp = outer.compose(fs);
    if (!comp.is_zero()) note(check_hprod_2c(outer, fs, p));
    note(check_hprod_2d(fs, p));

    // determinant corollary on a small square matrix
    int ms = static_cast<int>(rng.next_int(2, 3));
    std::vector<std::vector<MultiPoly>> mat(ms, std::vector<MultiPoly>(ms, MultiPoly(n)));
    for (int i = 0; i < ms; ++i)
      for (int j = 0; j < ms; ++j) mat[i][j] = rand_rat_poly(n, 2);
    try {
      note(check_det_bound(mat, Place::infinity()));
      note(check_det_bound(mat, Place::prime(p)));
    } catch (const std::invalid_argument&) {
      // vanished determinant: skip this draw (not a violation)
    }
    note(check_product_formula(Rat(rng.next_int(1, 500), rng.next_int(1, 500)) *
                               (rng.next_int(0, 1) ? Rat(1) : Rat(-1))));
  }

  if (fails > 0) {
    r.pass = false;
    r.detail = std::to_string(fails) + " violations; first: " + first_fail;
  } else {
    r.detail = "eq1/rgroup/emes (100 each, 4*stderr) and exact hprod/det/product-formula: 0 violations";
  }
  return r;
}

// 6. Sphere MC height of a random rational point matches the closed form.
inline CriterionResult criterion6() {
  CriterionResult r{6, "sphere/point height consistency", true, ""};
  Rng rng(987);
  for (int t = 0; t < 10; ++t) {
    int n = static_cast<int>(rng.next_int(1, 3));
    PointVariety v;
    std::vector<Rat> pt;
    for (int i = 0; i < n; ++i) {
      Rat c(rng.next_int(-9, 9), rng.next_int(1, 3));
      c.canonicalize();
      if (rat_abs(c) > 3) c = Rat(3);
      pt.push_back(c);
    }
    v.points.push_back(pt);
    MahlerEstimate mc = height_point_variety_mc(v, 200000, 5000 + t);
    double closed = height_point_variety(v, Place::infinity());
    if (std::fabs(mc.value - closed) > 4 * mc.stderr_) {
      r.pass = false;
      r.detail += " FAIL(t=" + std::to_string(t) + ", gap=" + detail::fmt(mc.value - closed) +
                  ", 4se=" + detail::fmt(4 * mc.stderr_) + ")";
    }
  }
  if (r.pass) r.detail = "10/10 points: MC Chow height within 4*stderr of (1/2) log(1+|xi|^2)";
  return r;
}

// 7. Normalized volumes of the simplex-with-diagonal family and the CE
// matrix structure against the Sylvester resultant.
inline CriterionResult criterion7() {
  CriterionResult r{7, "volume and Canny-Emiris structure", true, ""};
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d) {
      std::vector<LatticePoint> pts;
      pts.push_back(LatticePoint(n, Int(0)));
      for (int i = 0; i < n; ++i) {
        LatticePoint e(n, Int(0));
        e[i] = 1;
        pts.push_back(e);
      }
      pts.push_back(LatticePoint(n, Int(d)));
      Int vol = normalized_volume(SupportSet::from_points(n, pts));
      if (vol != Int(n) * Int(d)) {
        r.pass = false;
        r.detail += " vol(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")=" + vol.get_str();
      }
    }

  for (int d = 1; d <= 3; ++d) {
    std::vector<LatticePoint> pts;
    for (int e = 0; e <= d; ++e) pts.push_back(LatticePoint{Int(e)});
    SupportSet a = SupportSet::from_points(1, pts);
    auto eps = ce_default_epsilon(1, Int(d));
    CEMatrixSpec spec = ce_matrix_generic(a, 1, eps, 11);
    Int vol = normalized_volume(a);
    bool order_ok = spec.order == 2 * d;
    bool rows_ok = true;
    for (const auto& row : spec.grid) {
      int cnt = 0;
      for (const auto& e : row)
        if (e) ++cnt;
      if (cnt != d + 1) rows_ok = false;
    }
    bool m_ok = Int(spec.order) <= Int(4) * vol;  // 2^{2r} Vol with r = 1
    // five random integer specializations
    Rng rng(1234 + d);
    std::vector<Rat> ratios;
    bool div_ok = true;
    for (int t = 0; t < 5; ++t) {
      CESpecialization values;
      QVec fc(d + 1), gc(d + 1);
      for (int e = 0; e <= d; ++e) {
        Rat fv(rng.next_int(-9, 9)), gv(rng.next_int(-9, 9));
        while (e == d && fv == 0) fv = Rat(rng.next_int(-9, 9));
        while (e == d && gv == 0) gv = Rat(rng.next_int(-9, 9));
        values[{0, LatticePoint{Int(e)}}] = fv;
        values[{1, LatticePoint{Int(e)}}] = gv;
        fc[e] = fv;
        gc[e] = gv;
      }
      Rat res = sylvester_resultant(fc, d, gc, d);
      if (res == 0) {
        --t;
        continue;
      }
      Rat det = q_det(ce_specialize(spec, values));
      Rat ratio = det / res;
      if (rat_den(ratio) != 1) div_ok = false;
      ratios.push_back(ratio);
    }
    for (const auto& q : ratios)
      if (q != ratios[0]) div_ok = false;
    if (!(order_ok && rows_ok && m_ok && div_ok)) {
      r.pass = false;
      r.detail += " CE(d=" + std::to_string(d) + ") failed";
    }
  }
  if (r.pass) r.detail = "Vol = n d on the family; CE order 2d, d+1 entries/row, det = const * resultant";
  return r;
}

// 8. Quotient/trace suite on the named algebras plus random radical systems.
inline CriterionResult criterion8() {
  CriterionResult r{8, "quotient and trace-formula suite", true, ""};
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(5150);

  std::vector<std::vector<MultiPoly>> systems;
  systems.push_back({parse_poly("x1^2 - 2", 1)});
  systems.push_back({parse_poly("x1^2 - 1", 2), parse_poly("x2^2 - 1", 2)});
  int made = 0;
  while (made < 10) {
    int n = static_cast<int>(rng.next_int(1, 2));
    std::vector<MultiPoly> sys;
    if (n == 1) {
      int dd = static_cast<int>(rng.next_int(2, 6));
      MultiPoly f = MultiPoly::constant(1, Rat(1));
      std::vector<long> roots;
      while (static_cast<int>(roots.size()) < dd) {
        long root = rng.next_int(-6, 6);
        if (std::find(roots.begin(), roots.end(), root) == roots.end()) roots.push_back(root);
      }
      for (long root : roots)
        f = f * (MultiPoly::variable(1, 0) - MultiPoly::constant(1, Rat(root)));
      sys.push_back(f);
    } else {
      long a = rng.next_int(2, 7);
      long b = rng.next_int(1, 3), c = rng.next_int(8, 15);
      sys.push_back(parse_poly("x1^2 - " + std::to_string(a), 2));
      sys.push_back(parse_poly("x2^2 - " + std::to_string(b) + "*x1 - " + std::to_string(c), 2));
    }
    try {
      QuotientAlgebra b = quotient_algebra(sys);
      if (b.dim() > 12 || !radical_certificate(b, 99 + made)) continue;
      systems.push_back(sys);
      ++made;
    } catch (...) {
      continue;
    }
  }

  int idx = 0;
  for (const auto& sys : systems) {
    ++idx;
    QuotientAlgebra b = quotient_algebra(sys);
    int n = b.nvars();
    size_t dim = b.dim();
    bool ok = true;
    // multiplication matrices commute
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        ok = q_mul(b.mult_matrix(i), b.mult_matrix(j)) == q_mul(b.mult_matrix(j), b.mult_matrix(i));
    // Cayley-Hamilton for a random class
    MultiPoly f = detail::random_poly(rng, n, 2, -4, 4);
    QMat mf = b.mult_matrix_of(f);
    QVec cp = charpoly(mf);
    QMat acc(dim, QVec(dim, Rat(0)));
    QMat power = q_identity(dim);
    for (size_t k = 0; k < cp.size(); ++k) {
      for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) acc[i][j] += cp[k] * power[i][j];
      if (k + 1 < cp.size()) power = q_mul(power, mf);
    }
    for (size_t i = 0; i < dim && ok; ++i)
      for (size_t j = 0; j < dim && ok; ++j) ok = acc[i][j] == 0;
    // norm multiplicativity
    MultiPoly g = detail::random_poly(rng, n, 2, -4, 4);
    ok = ok && charpoly_of(b, f * g).norm == charpoly_of(b, f).norm * charpoly_of(b, g).norm;
    // trace formula machinery
    TraceDecomposition td = pseudo_jacobian(sys);
    ok = ok && telescoping_identity_holds(sys, td);
    TateTrace sigma = tate_trace(b, td, 31 + idx);
    // J = sum a_m c_m in B
    MultiPoly jac = jacobian_det(sys);
    MultiPoly jsum(n);
    for (size_t m = 0; m < td.a.size(); ++m) jsum = jsum + td.a[m] * td.c[m];
    ok = ok && b.reduce(jac - jsum).is_zero();
    // reconstruction + standard trace for 20 random g
    for (int t = 0; t < 20 && ok; ++t) {
      MultiPoly gg = detail::random_poly(rng, n, 3, -5, 5);
      QVec ggc = b.coords(gg);
      QVec rec(dim, Rat(0));
      for (size_t m = 0; m < td.a.size(); ++m) {
        Rat s = sigma.apply(b, gg * td.a[m]);
        QVec cm = b.coords(td.c[m]);
        for (size_t i = 0; i < dim; ++i) rec[i] += s * cm[i];
      }
      ok = ok && rec == ggc;
      ok = ok && b.trace_of(gg) == sigma.apply(b, jac * gg);
    }
    // division soundness on a guaranteed-divisible pair
    int dcap = 1;
    for (const auto& gen : sys) dcap = std::max(dcap, gen.degree());
    for (int t = 0; t < 3 && ok; ++t) {
      MultiPoly ff = detail::random_poly(rng, n, 2, -4, 4);
      MultiPoly hh = detail::random_poly(rng, n, 2, -4, 4);
      try {
        DivisionResult dr = divide_trace_formula(b, td, ff, ff * hh);
        ok = ok && dr.identity_ok && dr.degree_x <= n * std::max(dcap, ff.degree());
      } catch (const DivisionError&) {
        --t;  // zero divisor draw: redraw
        continue;
      }
    }
    if (!ok) {
      r.pass = false;
      r.detail += " FAIL(system " + std::to_string(idx) + ")";
    }
  }
  double el = detail::seconds_since(t0);
  if (el > 60.0) {
    r.pass = false;
    r.detail += " over 1 min";
  }
  if (r.pass)
    r.detail = std::to_string(systems.size()) + " algebras: commutation, Cayley-Hamilton, norms, "
               "Tate reconstruction, division all exact, inside the time cap";
  return r;
}

// 9. Bound-calculator regression against the pinned hand-evaluated table.
inline CriterionResult criterion9() {
  CriterionResult r{9, "bound-calculator regression", true, ""};
  struct Row {
    std::string stmt;
    BoundInputs in;
    std::vector<std::pair<std::string, double>> expected;   // 1e-9 relative
    std::vector<std::pair<std::string, Int>> expected_exact;
  };
  std::vector<Row> table;
  auto row = [&table](const std::string& stmt) -> Row& {
    table.push_back(Row{stmt, {}, {}, {}});
    return table.back();
  };
  {
    Row& t = row("theorem1");
    t.in.counts = {{"n", Int(2)}, {"d", Int(3)}, {"s", Int(4)}};
    t.in.reals = {{"h", std::log(5.0)}};
    t.expected_exact = {{"degree", Int(72)}};
    t.expected = {{"height", 7054.185038600078}};
  }
  {
    Row& t = row("theorem2");
    t.in.counts = {{"n", Int(2)}, {"d", Int(2)}, {"s", Int(3)}, {"delta", Int(2)}};
    t.in.reals = {{"h", std::log(3.0)}, {"eta", 5.0}};
    t.expected_exact = {{"degree", Int(32)}};
    t.expected = {{"height", 15209.01610897974}};
  }
  {
    Row& t = row("cor3");
    t.in.counts = {{"n", Int(2)}, {"d", Int(2)}, {"vol", Int(4)}, {"s", Int(3)}};
    t.in.reals = {{"h", std::log(3.0)}};
    t.expected_exact = {{"degree", Int(64)}};
    t.expected = {{"height", 243944.66147417645}};
  }
  {
    Row& t = row("d1");
    t.in.counts = {{"n", Int(3)}};
    t.in.reals = {{"h", std::log(7.0)}};
    t.expected = {{"height", 13.328818040700815}};
  }
  {
    Row& t = row("n1");
    t.in.counts = {{"d", Int(3)}};
    t.in.reals = {{"h", std::log(5.0)}};
    t.expected_exact = {{"degree", Int(2)}};
    t.expected = {{"height", 27.656627474604605}};
  }
  {
    Row& t = row("bertini");
    t.in.counts = {{"n", Int(2)}, {"d", Int(3)}};
    t.expected = {{"height", 8.317766166719343}};
  }
  {
    Row& t = row("radical");
    t.in.counts = {{"d", Int(2)}, {"l", Int(3)}};
    t.expected_exact = {{"degree_unit_case", Int(27)}, {"degree_radical_case", Int(1458)}};
  }
  {
    Row& t = row("noether");
    t.in.counts = {{"degV", Int(5)}};
    t.expected_exact = {{"degree_per_group", Int(50)}};
  }
  {
    Row& t = row("bernstein");
    t.in.counts = {{"n", Int(2)}, {"d", Int(2)}, {"vol", Int(4)}};
    t.in.reals = {{"h", std::log(3.0)}};
    t.expected_exact = {{"degree", Int(4)}};
    t.expected = {{"height", 1133.7678819054893}};
  }
  {
    Row& t = row("afin");
    t.in.counts = {{"r", Int(1)}, {"n", Int(2)}, {"N", Int(3)}, {"degV", Int(2)}};
    t.in.reals = {{"hV", 1.5}, {"hphi", std::log(2.0)}};
    t.expected = {{"height", 61.60889173753754}};
  }
  {
    Row& t = row("proyeccion");
    t.in.counts = {{"r", Int(1)}, {"n", Int(2)}, {"m", Int(2)}, {"degV", Int(3)}};
    t.in.reals = {{"hV", 2.0}};
    t.expected = {{"height", 30.969882423813804}};
  }
  {
    Row& t = row("inversible");
    t.in.counts = {{"r", Int(2)}, {"n", Int(3)}, {"degV", Int(2)}};
    t.in.reals = {{"hV", 1.0}, {"hpsi", std::log(3.0)}};
    t.expected = {{"height", 49.180504565605375}};
  }
  {
    Row& t = row("inters");
    t.in.counts = {{"n", Int(2)}, {"degf", Int(2)}, {"degV", Int(3)}};
    t.in.reals = {{"hV", 1.0}, {"hf", std::log(2.0)}};
    t.expected = {{"height_arch", 10.671115273688494}, {"height_padic", 4.079441541679836}};
  }
  {
    Row& t = row("import");
    t.in.counts = {{"n", Int(2)}, {"degf", Int(3)}, {"degV", Int(2)}};
    t.in.reals = {{"hV", 0.75}, {"hf", std::log(5.0)}};
    t.expected = {{"height_arch", 12.06054955687686}, {"height_padic", 5.468875824868201}};
  }
  {
    Row& t = row("bezloc");
    t.in.counts = {{"n", Int(2)}, {"degV", Int(2)}};
    t.in.reals = {{"hV", 1.0}};
    t.in.degrees = {Int(2), Int(3)};
    t.in.variety_heights = {std::log(2.0), std::log(3.0)};
    t.expected = {{"height", 40.920027166066745}};
  }
  {
    Row& t = row("bezloc1");
    t.in.counts = {{"n", Int(2)}};
    t.in.degrees = {Int(2), Int(2)};
    t.in.variety_heights = {std::log(3.0), std::log(5.0)};
    t.expected = {{"height_arch", 22.993897020894178}, {"height_padic", 5.41610040220442}};
  }
  {
    Row& t = row("inters-global");
    t.in.counts = {{"n", Int(3)}, {"r", Int(2)}, {"degV", Int(2)}};
    t.in.reals = {{"hV", 1.0}, {"h", std::log(4.0)}};
    t.in.degrees = {Int(3), Int(2)};
    t.expected = {{"height", 53.13400827807628}};
  }
  {
    Row& t = row("norma");
    t.in.counts = {{"n", Int(2)}, {"r", Int(1)}, {"degf", Int(2)}, {"degV", Int(3)}};
    t.in.reals = {{"hV", 0.5}, {"hf", std::log(2.0)}};
    t.expected_exact = {{"degree", Int(6)}};
    t.expected = {{"height_arch", 16.26278900569715}, {"height_padic", 3.0794415416798357}};
  }
  {
    Row& t = row("traza");
    t.in.counts = {{"n", Int(2)}, {"r", Int(1)}, {"d", Int(2)}, {"degV", Int(3)}};
    t.in.reals = {{"hV", 0.5}, {"hv", std::log(2.0)}};
    t.expected_exact = {{"degree", Int(6)}};
    t.expected = {{"height_arch", 18.34223054737699}, {"height_padic", 3.0794415416798357}};
  }
  {
    Row& t = row("division");
    t.in.counts = {{"n", Int(2)}, {"r", Int(0)}, {"d", Int(2)}, {"degV", Int(4)},
                   {"degt_g", Int(0)}, {"degx_g", Int(3)}};
    t.in.reals = {{"hv", std::log(3.0)}, {"hV", 1.0}, {"hg", std::log(7.0)}};
    t.expected_exact = {{"degree_x", Int(4)}, {"degree", Int(40)}};
    t.expected = {{"height_arch", 285.7962068934189}, {"height_padic", 22.12925761307263}};
  }

  for (const auto& t : table) {
    BoundReport rep = bound_calculators(t.stmt, t.in);
    for (const auto& [k, v] : t.expected_exact) {
      if (!rep.exact_values.count(k) || rep.exact_values.at(k) != v) {
        r.pass = false;
        r.detail += " " + t.stmt + "." + k;
      }
    }
    for (const auto& [k, v] : t.expected) {
      double got = rep.values.count(k) ? rep.values.at(k) : NAN;
      if (!(std::fabs(got - v) <= 1e-9 * std::max(1.0, std::fabs(v)))) {
        r.pass = false;
        r.detail += " " + t.stmt + "." + k;
      }
    }
  }
  if (r.pass) r.detail = std::to_string(table.size()) + " pinned rows reproduced digit-exactly";
  return r;
}

inline json criteria_json(const std::vector<CriterionResult>& results) {
  json j;
  j["suite"] = "acceptance";
  j["criteria"] = json::array();
  for (const auto& c : results) {
    json cj;
    cj["id"] = c.id;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    j["criteria"].push_back(cj);
  }
  return j;
}

inline std::vector<CriterionResult> run_core_criteria() {
  return {criterion1(), criterion2(), criterion3(), criterion4(), criterion5(),
          criterion6(), criterion7(), criterion8(), criterion9()};
}

// 10. Determinism: two full runs with identical seeds serialize identically.
inline CriterionResult criterion10(const std::vector<CriterionResult>& first_run) {
  CriterionResult r{10, "selftest determinism", true, ""};
  std::string a = criteria_json(first_run).dump();
  std::string b = criteria_json(run_core_criteria()).dump();
  if (a != b) {
    r.pass = false;
    r.detail = "second run differs";
  } else {
    r.detail = "byte-identical JSON across two runs";
  }
  return r;
}

struct SelftestOutcome {
  std::vector<CriterionResult> results;
  bool all_pass = true;
  json summary;
};

inline SelftestOutcome run_selftest(bool with_determinism = true) {
  SelftestOutcome out;
  out.results = run_core_criteria();
  if (with_determinism) out.results.push_back(criterion10(out.results));
  for (const auto& c : out.results) out.all_pass = out.all_pass && c.pass;
  out.summary = criteria_json(out.results);
  out.summary["all_pass"] = out.all_pass;
  return out;
}

}  // namespace nsz::selftest

#endif
