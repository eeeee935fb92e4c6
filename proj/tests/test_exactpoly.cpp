#include <catch2/catch_amalgamated.hpp>

#include "nsz/poly.hpp"
#include "nsz/poly_io.hpp"
#include "nsz/rng.hpp"

using namespace nsz;

namespace {

MultiPoly rnd_poly(Rng& rng, int n, int maxdeg) {
  MultiPoly f(n);
  for (int t = 0; t < 8; ++t) {
    Monomial m(n, 0);
    int rest = maxdeg;
    for (int i = 0; i < n; ++i) {
      m[i] = static_cast<int>(rng.next_int(0, rest));
      rest -= m[i];
    }
    long num = rng.next_int(-9, 9);
    long den = rng.next_int(1, 4);
    if (num != 0) f.add_term(m, Rat(num, den));
  }
  return f;
}

}  // namespace

TEST_CASE("addition: cancellation, identity, doubling") {
  MultiPoly x1 = MultiPoly::variable(1, 0);
  MultiPoly one = MultiPoly::constant(1, Rat(1));
  CHECK((x1 + one) + (x1 - one) == Rat(2) * x1);
  MultiPoly f = parse_poly("3*x1^2 - 1/2", 1);
  CHECK(f + MultiPoly(1) == f);
  MultiPoly g = parse_poly("x1^2 + 1/2", 1);
  CHECK(g + g == parse_poly("2*x1^2 + 1", 1));
}

TEST_CASE("multiplication: difference of squares, identity, binomial") {
  CHECK(parse_poly("(x1 - 1)*(x1 + 1)", 1) == parse_poly("x1^2 - 1", 1));
  MultiPoly f = parse_poly("2*x1^3 - x1 + 5/7", 1);
  CHECK(f * MultiPoly::constant(1, Rat(1)) == f);
  CHECK(parse_poly("(x1 + x2)^2", 2) == parse_poly("x1^2 + 2*x1*x2 + x2^2", 2));
}

TEST_CASE("evaluation") {
  CHECK(parse_poly("x1^2 - 2", 1).eval({Rat(3, 2)}) == Rat(1, 4));
  MultiPoly f = parse_poly("4*x1^2*x2 - x2 + 9", 2);
  CHECK(f.eval({Rat(0), Rat(0)}) == Rat(9));
  CHECK(parse_poly("x1*x2 - 1", 2).eval({Rat(2), Rat(1, 2)}) == Rat(0));
}

TEST_CASE("substitute_affine basics") {
  MultiPoly x1 = MultiPoly::variable(1, 0);
  CHECK(substitute_affine(x1, {{Rat(1)}}, {Rat(1)}) == parse_poly("x1 + 1", 1));
  CHECK(substitute_affine(parse_poly("x1^2", 1), {{Rat(2)}}, {Rat(0)}) == parse_poly("4*x1^2", 1));
  CHECK_THROWS_AS(substitute_affine(parse_poly("x1 + x2", 2),
                                    {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, {Rat(0), Rat(0)}),
                  std::invalid_argument);
}

TEST_CASE("substitute_affine preserves total degree for invertible maps") {
  Rng rng(5);
  for (int t = 0; t < 25; ++t) {
    int n = static_cast<int>(rng.next_int(1, 3));
    MultiPoly f = rnd_poly(rng, n, 3);
    if (f.is_zero()) continue;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    std::vector<Rat> b(n);
    bool ok = false;
    while (!ok) {
      for (int i = 0; i < n; ++i) {
        b[i] = Rat(rng.next_int(-3, 3));
        for (int j = 0; j < n; ++j) m[i][j] = Rat(rng.next_int(-3, 3));
      }
      ok = !nsz::detail::is_singular(m);
    }
    CHECK(substitute_affine(f, m, b).degree() == f.degree());
  }
}

TEST_CASE("homogenize") {
  CHECK(homogenize(parse_poly("x1 + 1", 1)) == parse_poly("x1 + x2", 2));
  CHECK(homogenize(MultiPoly::constant(1, Rat(5))) == MultiPoly::constant(2, Rat(5)));
  CHECK(homogenize(parse_poly("x1^2 + x2", 2)) == parse_poly("x1^2 + x2*x3", 3));
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    MultiPoly f = rnd_poly(rng, 2, 4);
    if (f.is_zero()) continue;
    CHECK(dehomogenize(homogenize(f)) == f);
    // every term of the homogenization has total degree deg f
    MultiPoly h = homogenize(f);
    for (const auto& [m, c] : h.terms()) CHECK(total_degree(m) == f.degree());
  }
}

TEST_CASE("content and primitive part") {
  auto [c1, p1] = content_and_primitive(parse_poly("4*x1 + 6", 1));
  CHECK(c1 == Rat(2));
  CHECK(p1 == parse_poly("2*x1 + 3", 1));
  auto [c2, p2] = content_and_primitive(parse_poly("1/3*x1", 1));
  CHECK(c2 == Rat(1, 3));
  CHECK(p2 == parse_poly("x1", 1));
  auto [c3, p3] = content_and_primitive(p2);
  CHECK(c3 == Rat(1));
  CHECK_THROWS_AS(content_and_primitive(MultiPoly(1)), std::domain_error);
}

TEST_CASE("content multiplicativity (Gauss)") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    int n = static_cast<int>(rng.next_int(1, 2));
    MultiPoly f = rnd_poly(rng, n, 3), g = rnd_poly(rng, n, 3);
    if (f.is_zero() || g.is_zero()) continue;
    auto [cf, pf] = content_and_primitive(f);
    auto [cg, pg] = content_and_primitive(g);
    auto [cfg, pfg] = content_and_primitive(f * g);
    CHECK(cfg == cf * cg);
    CHECK(pfg == pf * pg);
  }
}

TEST_CASE("partial degrees") {
  MultiPoly f = parse_poly("x1^2*x2", 2);
  CHECK(f.partial_degree({0}) == 2);
  CHECK(f.partial_degree({1}) == 1);
  CHECK(f.partial_degree({0, 1}) == f.degree());
}

TEST_CASE("zero polynomial degree sentinel") {
  CHECK(MultiPoly(3).degree() == kNegInfDegree);
  CHECK(MultiPoly(3).degree() != 0);
}

TEST_CASE("ring axioms on random inputs") {
  Rng rng(13);
  for (int t = 0; t < 25; ++t) {
    int n = static_cast<int>(rng.next_int(1, 3));
    MultiPoly f = rnd_poly(rng, n, 3), g = rnd_poly(rng, n, 3), h = rnd_poly(rng, n, 3);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("degree additivity of products with leading-term witness") {
  Rng rng(17);
  for (int t = 0; t < 25; ++t) {
    int n = static_cast<int>(rng.next_int(1, 3));
    MultiPoly f = rnd_poly(rng, n, 3), g = rnd_poly(rng, n, 3);
    if (f.is_zero() || g.is_zero()) continue;
    MultiPoly prod = f * g;
    CHECK(prod.degree() == f.degree() + g.degree());
    CHECK(prod.leading_term().first == mon_mul(f.leading_term().first, g.leading_term().first));
    CHECK(prod.leading_term().second == f.leading_term().second * g.leading_term().second);
  }
}

TEST_CASE("parse/render round trip is bit exact") {
  CHECK(render_poly(parse_poly("3*x1^2*x2 - 1/2*x2 + 7", 2)) == "3*x1^2*x2 - 1/2*x2 + 7");
  CHECK(render_poly(MultiPoly(2)) == "0");
  CHECK(render_poly(parse_poly("-x1 - 1", 1)) == "-x1 - 1");
  Rng rng(19);
  for (int t = 0; t < 50; ++t) {
    int n = static_cast<int>(rng.next_int(1, 4));
    MultiPoly f = rnd_poly(rng, n, 4);
    CHECK(parse_poly(render_poly(f), n) == f);
  }
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_poly("x1 +", 1), ParseError);
  CHECK_THROWS_AS(parse_poly("x3", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0", 1), ParseError);
  CHECK_THROWS_AS(parse_poly("(x1", 1), ParseError);
  // variable-count mismatch surfaces as an exception on mixed arithmetic
  CHECK_THROWS_AS(parse_poly("x1", 1) + parse_poly("x1 + x2", 2), std::invalid_argument);
}
