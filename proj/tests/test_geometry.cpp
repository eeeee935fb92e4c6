#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "nsz/bounds.hpp"
#include "nsz/cematrix.hpp"
#include "nsz/poly_io.hpp"
#include "nsz/quotient.hpp"
#include "nsz/support.hpp"
#include "nsz/volume.hpp"

using namespace nsz;
using Catch::Approx;

namespace {
SupportSet pts(int n, std::vector<std::vector<long>> raw) {
  std::vector<LatticePoint> ps;
  for (auto& r : raw) {
    LatticePoint p;
    for (long c : r) p.push_back(Int(c));
    ps.push_back(p);
  }
  return SupportSet::from_points(n, ps);
}
}  // namespace

TEST_CASE("support extraction") {
  SupportSet a = support({parse_poly("x1*x2 + 1", 2)});
  CHECK(a.points.size() == 2);
  CHECK(a.contains_origin());
  SupportSet framed = support({parse_poly("x1", 2)}, true);
  CHECK(framed.points.size() == 3);  // 0, e1, e2
  // the simplex-with-diagonal polytope contains the framed supports of its
  // members: adjoining them does not grow the hull
  SupportSet fam = pts(2, {{0, 0}, {1, 0}, {0, 1}, {2, 2}});
  SupportSet member = support({parse_poly("x1*x2 + x1 + 1", 2)}, true);
  std::vector<LatticePoint> unioned = fam.points;
  unioned.insert(unioned.end(), member.points.begin(), member.points.end());
  CHECK(normalized_volume(SupportSet::from_points(2, unioned)) == normalized_volume(fam));
}

TEST_CASE("normalized volumes") {
  CHECK(normalized_volume(pts(2, {{0, 0}, {1, 0}, {0, 1}})) == 1);
  CHECK(normalized_volume(pts(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
  CHECK(normalized_volume(pts(2, {{0, 0}, {1, 0}, {0, 1}, {2, 2}})) == 4);  // n d with n=d=2
  // sublattice: Z{0,2} = 2Z has one elementary cell between 0 and 2
  CHECK(normalized_volume(pts(1, {{0}, {2}})) == 1);
  CHECK(normalized_volume(pts(1, {{0}})) == 0);
  CHECK(normalized_volume(pts(2, {{0, 0}, {1, 1}, {2, 2}})) == 2);  // rank 1 inside Z^2
}

TEST_CASE("volume invariance under unimodular maps and lattice translations") {
  Rng rng(41);
  SupportSet base = pts(2, {{0, 0}, {2, 0}, {0, 3}, {1, 1}, {3, 2}});
  Int vol = normalized_volume(base);
  for (int t = 0; t < 10; ++t) {
    // random elementary unimodular transform composed a few times
    std::vector<std::vector<long>> u{{1, 0}, {0, 1}};
    for (int k = 0; k < 4; ++k) {
      long c = rng.next_int(-2, 2);
      if (rng.next_int(0, 1)) {
        u[0] = {u[0][0] + c * u[1][0], u[0][1] + c * u[1][1]};
      } else {
        u[1] = {u[1][0] + c * u[0][0], u[1][1] + c * u[0][1]};
      }
    }
    // translate by a lattice vector of Z.A (integer combination of points)
    long s0 = rng.next_int(-2, 2), s1 = rng.next_int(-2, 2);
    std::vector<LatticePoint> moved;
    for (const auto& p : base.points) {
      LatticePoint q(2);
      q[0] = u[0][0] * p[0] + u[0][1] * p[1] + Int(s0) * base.points[1][0] + Int(s1) * base.points[2][0];
      q[1] = u[1][0] * p[0] + u[1][1] * p[1] + Int(s0) * base.points[1][1] + Int(s1) * base.points[2][1];
      moved.push_back(q);
    }
    CHECK(normalized_volume(SupportSet::from_points(2, moved)) == vol);
  }
}

TEST_CASE("volume monotonicity within a fixed lattice") {
  SupportSet small = pts(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  SupportSet big = pts(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}});
  REQUIRE(lattice_rank(small) == lattice_rank(big));
  CHECK(normalized_volume(small) <= normalized_volume(big));
}

TEST_CASE("Bernstein-Kushnirenko bounds on concrete systems") {
  // dense linear system in two variables
  BoundReport lin = bk_bounds({parse_poly("x1 + x2 - 1", 2), parse_poly("x1 - x2", 2)}, 0.0);
  CHECK(lin.exact_values.at("degree") == 1);

  // x1^2 - 1, x2^2 - 1 has exactly four zeros
  std::vector<MultiPoly> sys{parse_poly("x1^2 - 1", 2), parse_poly("x2^2 - 1", 2)};
  QuotientAlgebra b = quotient_algebra(sys);
  REQUIRE(radical_certificate(b));
  Int points(static_cast<long>(b.dim()));
  BoundReport rep = bk_bounds(sys, 0.0);
  CHECK(points == 4);
  CHECK(points <= rep.exact_values.at("degree"));
  // Bezout inequality: #points <= prod deg f_i
  CHECK(points <= Int(sys[0].degree()) * Int(sys[1].degree()));
}

TEST_CASE("degree Bezout sanity on random zero-dimensional systems") {
  Rng rng(43);
  for (int t = 0; t < 8; ++t) {
    long a = rng.next_int(1, 9), c = rng.next_int(10, 20), bb = rng.next_int(1, 3);
    std::vector<MultiPoly> sys{parse_poly("x1^2 - " + std::to_string(a), 2),
                               parse_poly("x2^2 - " + std::to_string(bb) + "*x1 - " + std::to_string(c), 2)};
    QuotientAlgebra b = quotient_algebra(sys);
    Int points(static_cast<long>(b.dim()));
    CHECK(points <= Int(sys[0].degree()) * Int(sys[1].degree()));
    CHECK(points <= bk_bounds(sys, 0.0).exact_values.at("degree"));
  }
}

TEST_CASE("toric height bound") {
  BoundReport rep = toric_height_bound(pts(1, {{0}, {1}}));
  CHECK(rep.values.at("height") == Approx(16.0 * std::log(2.0)));
  CHECK_THROWS_AS(toric_height_bound(pts(1, {{0}})), std::invalid_argument);
  // monotone in the cardinality for a fixed volume contribution shape
  double h3 = toric_height_bound(pts(2, {{0, 0}, {1, 0}, {0, 1}})).values.at("height");
  double h4 = toric_height_bound(pts(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})).values.at("height");
  CHECK(h3 < h4 + 1e-12);
}

TEST_CASE("ce_point_set interval example and size caps") {
  SupportSet a = pts(1, {{0}, {1}});
  auto e = ce_point_set(a, {Rat(1, 3)}, 1);
  REQUIRE(e.size() == 2);
  CHECK(e[0][0] == 1);
  CHECK(e[1][0] == 2);
  // boundary hit is rejected as non-generic
  CHECK_THROWS_AS(ce_point_set(a, {Rat(0)}, 1), std::invalid_argument);
  // M <= 2^{2r} Vol on a few supports
  for (int d = 1; d <= 3; ++d) {
    std::vector<std::vector<long>> raw;
    for (long k = 0; k <= d; ++k) raw.push_back({k});
    SupportSet ad = pts(1, raw);
    auto eps = ce_default_epsilon(1, Int(d));
    CHECK(Int(static_cast<long>(ce_point_set(ad, eps, 1).size())) <=
          Int(4) * normalized_volume(ad));
  }
}

TEST_CASE("ce_matrix structure matches the univariate resultant matrix") {
  for (int d = 1; d <= 3; ++d) {
    std::vector<std::vector<long>> raw;
    for (long k = 0; k <= d; ++k) raw.push_back({k});
    SupportSet a = pts(1, raw);
    auto eps = ce_default_epsilon(1, Int(d));
    CEMatrixSpec spec = ce_matrix_generic(a, 1, eps, 3);
    CHECK(spec.order == 2 * d);
    for (const auto& row : spec.grid) {
      int cnt = 0;
      for (const auto& entry : row)
        if (entry) ++cnt;
      CHECK(cnt == d + 1);  // exactly #A symbolic entries, one group per row
    }
    // each row is a shifted coefficient window: entries in consecutive columns
    for (int i = 0; i < spec.order; ++i) {
      int first = -1, last = -1, group = -1;
      for (int j = 0; j < spec.order; ++j)
        if (spec.grid[i][j]) {
          if (first < 0) first = j;
          last = j;
          if (group < 0) group = spec.grid[i][j]->first;
          CHECK(spec.grid[i][j]->first == group);
        }
      CHECK(last - first == d);
    }
  }
}

TEST_CASE("ce determinant against the Sylvester oracle") {
  SupportSet a = pts(1, {{0}, {1}});
  CESpecialization lin;
  lin[{0, {Int(0)}}] = Rat(-1);  // x - 1
  lin[{0, {Int(1)}}] = Rat(1);
  lin[{1, {Int(0)}}] = Rat(-2);  // x - 2
  lin[{1, {Int(1)}}] = Rat(1);
  ResultantCheck rc = ce_resultant_check(a, lin, 2);
  CHECK(rat_abs(rc.resultant) == 1);
  CHECK(rat_abs(rc.det) == 1);
  CHECK(rc.quotient_ok);

  SupportSet a2 = pts(1, {{0}, {1}, {2}});
  CESpecialization quad;
  quad[{0, {Int(0)}}] = Rat(-1);  // x^2 - 1
  quad[{0, {Int(1)}}] = Rat(0);
  quad[{0, {Int(2)}}] = Rat(1);
  quad[{1, {Int(0)}}] = Rat(-4);  // x^2 - 4
  quad[{1, {Int(1)}}] = Rat(0);
  quad[{1, {Int(2)}}] = Rat(1);
  ResultantCheck rc2 = ce_resultant_check(a2, quad, 2);
  CHECK(rat_abs(rc2.resultant) == 9);
  CHECK(rc2.quotient_ok);

  // identical polynomials share roots: zero resultant signals a retry
  CESpecialization same;
  same[{0, {Int(0)}}] = Rat(-1);
  same[{0, {Int(1)}}] = Rat(1);
  same[{1, {Int(0)}}] = Rat(-1);
  same[{1, {Int(1)}}] = Rat(1);
  CHECK_THROWS_AS(ce_resultant_check(a, same, 2), ZeroResultant);
}

TEST_CASE("bound dispatcher echo examples") {
  BoundInputs t1;
  t1.counts = {{"n", Int(2)}, {"d", Int(3)}};
  CHECK(bound_calculators("theorem1", t1).exact_values.at("degree") == 72);

  BoundInputs t1h;
  t1h.counts = {{"n", Int(2)}, {"d", Int(2)}, {"s", Int(3)}};
  t1h.reals = {{"h", std::log(4.0)}};
  double expect = 4.0 * 2 * 3 * 4 * (std::log(4.0) + std::log(3.0) + 9 * std::log(3.0) * 2);
  CHECK(bound_calculators("theorem1", t1h).values.at("height") == Approx(expect));

  BoundInputs c3;
  c3.counts = {{"n", Int(2)}, {"d", Int(2)}, {"vol", Int(4)}};
  CHECK(bound_calculators("cor3", c3).exact_values.at("degree") == 64);

  CHECK_THROWS_AS(bound_calculators("no-such-statement", t1), std::invalid_argument);
}

TEST_CASE("the simplex-with-diagonal support volume is n d") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d) {
      std::vector<std::vector<long>> raw{std::vector<long>(n, 0)};
      for (int i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        raw.push_back(e);
      }
      raw.push_back(std::vector<long>(n, d));
      CHECK(normalized_volume(pts(n, raw)) == Int(n) * Int(d));
    }
}

namespace {
void check3d(std::vector<std::vector<long>> raw, long expected) {
  CHECK(normalized_volume(pts(3, std::move(raw))) == expected);
}
}  // namespace

TEST_CASE("3D hull volumes against an independent oracle") {
  // expected values frozen from an external convex-hull computation
  check3d({{4,-3,4},{4,1,-2},{-3,3,-2},{1,0,-3},{1,-2,-1},{-2,1,4}}, 346);
  check3d({{-2,4,2},{3,3,-2},{-3,2,-3},{4,0,1},{-2,2,-2},{-3,-2,0},{-1,0,-3},{4,4,0},{-2,3,-3}}, 511);
  check3d({{3,-3,4},{0,0,2},{1,0,3},{4,-3,4},{-1,1,2},{1,-3,1},{-2,-1,4}}, 74);
  check3d({{2,4,2},{3,4,1},{-2,4,-3},{0,2,-2},{2,0,2},{-2,-1,2}}, 176);
  check3d({{2,0,0},{-3,0,-2},{3,4,1},{3,1,3},{1,-1,-3},{3,3,1}}, 102);
  check3d({{4,3,1},{3,2,0},{0,-1,-2},{4,-3,4},{-3,-3,-3},{-1,0,4},{2,0,-3}}, 421);
}

TEST_CASE("a second-rank resultant matrix keeps the structural invariants") {
  // unit simplex support in the plane, three generic trilinear forms
  SupportSet a = pts(2, {{0, 0}, {1, 0}, {0, 1}});
  auto eps = ce_default_epsilon(2, Int(1));
  CEMatrixSpec spec = ce_matrix_generic(a, 2, eps, 21);
  CHECK(Int(spec.order) <= Int(16) * normalized_volume(a));  // 2^{2r} Vol, r = 2
  for (const auto& row : spec.grid) {
    int cnt = 0;
    for (const auto& e : row)
      if (e) ++cnt;
    CHECK(cnt == 3);  // #A entries per row
  }
  // a random specialization is generically nonsingular
  Rng rng(77);
  CESpecialization values;
  for (int i = 0; i <= 2; ++i)
    for (const auto& p : a.points) values[{i, p}] = Rat(rng.next_int(-9, 9));
  CHECK(q_det(ce_specialize(spec, values)) != 0);
}
