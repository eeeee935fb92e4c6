#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "nsz/certificate.hpp"
#include "nsz/json_io.hpp"
#include "nsz/poly_io.hpp"

using namespace nsz;
using Catch::Approx;

TEST_CASE("degree-zero searches") {
  SearchResult r1 = certificate_search({parse_poly("x1", 1), parse_poly("x1 + 1", 1)});
  REQUIRE(r1.status == SearchStatus::found);
  CHECK(r1.certificate->a == 1);
  CHECK(r1.certificate->g[0] == MultiPoly::constant(1, Rat(-1)));
  CHECK(r1.certificate->g[1] == MultiPoly::constant(1, Rat(1)));
  CHECK(r1.certificate->degree_bound_used == 0);

  SearchResult r2 = certificate_search({parse_poly("x1 - 1", 1), parse_poly("x1 + 1", 1)});
  REQUIRE(r2.status == SearchStatus::found);
  CHECK(r2.certificate->a == 2);
  CHECK(r2.certificate->g[0] == MultiPoly::constant(1, Rat(-1)));
  CHECK(r2.certificate->g[1] == MultiPoly::constant(1, Rat(1)));
}

TEST_CASE("the opening family of the intrinsic chapter certifies within the cap") {
  std::vector<MultiPoly> fs{parse_poly("x1 - 1", 2), parse_poly("x2 - x1^2", 2),
                            parse_poly("3 - x2^2", 2)};
  SearchResult r = certificate_search(fs);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(Int(r.certificate->degree_bound_used) <= r.theorem_cap);
  VerifyReport vr = certificate_verify(*r.certificate, fs);
  CHECK(vr.identity_ok);
}

TEST_CASE("verification soundness rejects any tampering") {
  Fixture fx = fixture_geometric(2, 2, Int(5));
  BezoutCertificate cert = *fx.closed_form;
  CHECK(certificate_verify(cert, fx.system).identity_ok);
  BezoutCertificate bad = cert;
  bad.a += 1;
  CHECK_THROWS_AS(certificate_verify(bad, fx.system), IdentityFailure);
  BezoutCertificate bad2 = cert;
  bad2.g[0].add_term(Monomial{1, 0}, Rat(1));
  CHECK_THROWS_AS(certificate_verify(bad2, fx.system), IdentityFailure);
}

TEST_CASE("degree monotonicity of the search LP") {
  std::vector<MultiPoly> fs{parse_poly("x1^2", 1), parse_poly("x1 - 3", 1)};
  // minimal degree first
  SearchResult r = certificate_search(fs);
  REQUIRE(r.status == SearchStatus::found);
  int dmin = r.certificate->degree_bound_used;
  for (int extra = 1; extra <= 2; ++extra) {
    auto sol = bezout_solve_at_degree(fs, dmin + extra);
    CHECK(sol.has_value());
  }
}

TEST_CASE("infeasibility: common zeros are confirmed by the quotient route") {
  std::vector<MultiPoly> fs{parse_poly("x1 - 1", 1), parse_poly("x1^2 - 1", 1)};
  SearchResult r = certificate_search(fs);
  CHECK(r.status == SearchStatus::infeasible_at_theorem_cap);
  // exact confirmation: the system has a common zero (x = 1)
  QuotientAlgebra b = quotient_algebra(fs);
  CHECK(b.dim() >= 1);
  CHECK(fs[0].eval({Rat(1)}) == 0);
  CHECK(fs[1].eval({Rat(1)}) == 0);

  // a strict caller bound below the cap reports the other status
  std::vector<MultiPoly> ok{parse_poly("x1^2", 1), parse_poly("x1 - 3", 1)};
  SearchResult r2 = certificate_search(ok, 0);
  CHECK(r2.status == SearchStatus::infeasible_at_requested_bound);
}

TEST_CASE("geometric fixture: closed form, degree and height caps") {
  for (int n : {1, 2})
    for (int d : {2, 3}) {
      Fixture fx = fixture_geometric(n, d, Int(5));
      REQUIRE(fx.closed_form.has_value());
      const BezoutCertificate& cert = *fx.closed_form;
      CHECK(cert.a == 4);
      VerifyReport vr = certificate_verify(cert, fx.system);
      CHECK(vr.max_cofactor_degree <= n * (d - 1));
      // cofactors have 0/1 coefficients, so the certificate height is log(H-1)
      CHECK(vr.certificate_height == Approx(std::log(4.0)));
    }
  // n=1, d=2, H=5: 4 = (x+1)(x-1) + (5 - x^2)
  Fixture fx = fixture_geometric(1, 2, Int(5));
  CHECK(fx.closed_form->g[0] == parse_poly("x1 + 1", 1));
  CHECK(fx.closed_form->g[1] == MultiPoly::constant(1, Rat(1)));
}

TEST_CASE("dnh fixture witnesses") {
  for (auto [n, d, H] : {std::tuple<int, int, long>{1, 2, 2}, {2, 2, 2}, {2, 2, 3}}) {
    Fixture fx = fixture_dnh(n, d, Int(H));
    SearchResult r = certificate_search(fx.system);
    REQUIRE(r.status == SearchStatus::found);
    DivisibilityWitness w = dnh_witness(*r.certificate, n, d, Int(H));
    CHECK(w.identity_ok);
    CHECK(w.divisibility_ok);
    CHECK(w.modulus == int_pow(Int(H), int_pow(Int(d), n).get_ui()));
    // height witness: h(a) >= d^n h
    double ha = log_abs(r.certificate->a);
    double dn_h = mpz_get_d(int_pow(Int(d), n).get_mpz_t()) * std::log(static_cast<double>(H));
    CHECK(ha >= dn_h - 1e-9);
  }
}

TEST_CASE("masser-philippon fixture witnesses") {
  Fixture fx = fixture_masser_philippon(2, 2, Int(3));
  REQUIRE(fx.system.size() == 2);
  CHECK(fx.system[0] == parse_poly("x1^2", 2));
  CHECK(fx.system[1] == parse_poly("x1*x2 - 3", 2));
  SearchResult r = certificate_search(fx.system);
  REQUIRE(r.status == SearchStatus::found);
  DivisibilityWitness w = mp_witness(*r.certificate, 2, 2, Int(3));
  CHECK(w.identity_ok);
  CHECK(w.divisibility_ok);
  CHECK(w.modulus == 9);
  // the minimal-degree cofactor of f_1 has degree >= d^n - d = 2
  CHECK(r.certificate->g[0].degree() >= 2);
}

TEST_CASE("system preparation") {
  // already a coordinate regular sequence: identity accepted immediately
  std::vector<MultiPoly> coords{parse_poly("x1", 2), parse_poly("x2", 2), parse_poly("x1 + 1", 2)};
  PreparedSystem p1 = prepare_system(coords, 7);
  bool is_identity = true;
  for (size_t i = 0; i < p1.combination.size(); ++i)
    for (size_t j = 0; j < p1.combination[i].size(); ++j)
      if (p1.combination[i][j] != Int(i == j ? 1 : 0)) is_identity = false;
  CHECK(is_identity);
  CHECK(p1.t <= 3);

  std::vector<MultiPoly> sys{parse_poly("x1^2", 2), parse_poly("x1 + x2", 2),
                             parse_poly("x2 - 1", 2)};
  PreparedSystem p2 = prepare_system(sys, 7);
  CHECK(p2.t <= 3);
  Int cap = int_pow(Int(2 + 1), 2 * (2 + 1));
  for (const auto& row : p2.combination)
    for (const auto& e : row) CHECK(int_abs(e) <= cap);
  for (const auto& row : p2.coord_matrix)
    for (const auto& e : row) CHECK(int_abs(e) <= cap);
}

TEST_CASE("intrinsic parameter surrogates") {
  std::vector<MultiPoly> fs{parse_poly("x1 - 1", 2), parse_poly("x2 - x1^2", 2),
                            parse_poly("3 - x2^2", 2)};
  IntrinsicParams dn = intrinsic_params_dn(fs);
  CHECK(dn.delta == 2);  // d_1 = 2 with n_0 - 1 = 1 factor
  CHECK(dn.source == "lemma_dn");
  IntrinsicParams sp = intrinsic_params_sparse(fs);
  CHECK(sp.source == "lemma_sparse");
  CHECK(sp.delta >= 1);
  IntrinsicParams us = intrinsic_params_user(Int(3), 1.5);
  CHECK(us.delta == 3);
  CHECK(us.eta == 1.5);
}

TEST_CASE("sparse-family parameters and the specialized corollary") {
  // members of the simplex-with-diagonal family: support in P_2 for n = 2
  std::vector<MultiPoly> fs{parse_poly("1 + x1 + x1*x2", 2), parse_poly("2 - x2 + 3*x1*x2", 2),
                            parse_poly("x1 - x2 + x1^2*x2^2", 2)};
  IntrinsicParams sp = intrinsic_params_sparse(fs);
  CHECK(sp.delta <= Int(2) * Int(2));  // V <= Vol(P_d) = n d

  // the displayed specialization: cor3 at degree n d and volume n d
  for (long n : {1L, 2L, 3L})
    for (long d : {1L, 2L, 3L}) {
      BoundInputs es;
      es.counts = {{"n", Int(n)}, {"d", Int(d)}, {"s", Int(4)}};
      es.reals = {{"h", std::log(3.0)}};
      BoundReport a = bound_calculators("ejemplo-sparse", es);
      BoundInputs c3;
      c3.counts = {{"n", Int(n)}, {"d", Int(n * d)}, {"vol", Int(n * d)}, {"s", Int(4)}};
      c3.reals = {{"h", std::log(3.0)}};
      BoundReport b = bound_calculators("cor3", c3);
      CHECK(a.exact_values.at("degree") == b.exact_values.at("degree"));
      CHECK(a.values.at("height") == Approx(b.values.at("height")).epsilon(1e-12));
    }
}

TEST_CASE("bound bundle reports") {
  std::vector<MultiPoly> fs{parse_poly("x1 - 1", 1), parse_poly("x1 + 1", 1)};
  SearchResult r = certificate_search(fs);
  REQUIRE(r.status == SearchStatus::found);
  BoundBundle bundle = report_all_bounds(fs, r.certificate);
  bool has_t1 = false, has_n1 = false;
  for (const auto& rep : bundle.reports) {
    if (rep.statement == "theorem1") has_t1 = true;
    if (rep.statement == "n1") has_n1 = true;
  }
  CHECK(has_t1);
  CHECK(has_n1);
  bool t1_deg_pass = false;
  for (const auto& c : bundle.checks)
    if (c.name == "theorem1-degree" && c.pass) t1_deg_pass = true;
  CHECK(t1_deg_pass);
}

TEST_CASE("certificate JSON round trip") {
  Fixture fx = fixture_geometric(2, 2, Int(3));
  json j = certificate_to_json(*fx.closed_form);
  BezoutCertificate back = certificate_from_json(j);
  CHECK(back.n == fx.closed_form->n);
  CHECK(back.a == fx.closed_form->a);
  CHECK(back.g == fx.closed_form->g);
  CHECK(certificate_identity_holds(back, fx.system));
}

TEST_CASE("completeness across the H grid") {
  for (long H : {3L, 16L}) {
    for (int n : {1, 2})
      for (int d : {2, 3}) {
        Fixture fx = fixture_geometric(n, d, Int(H));
        SearchResult r = certificate_search(fx.system);
        REQUIRE(r.status == SearchStatus::found);
        CHECK(Int(r.certificate->degree_bound_used) <= r.theorem_cap);
      }
    Fixture dnh = fixture_dnh(2, 2, Int(H));
    SearchResult r = certificate_search(dnh.system);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(dnh_witness(*r.certificate, 2, 2, Int(H)).divisibility_ok);
  }
}
