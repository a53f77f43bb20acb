#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tgwa/basering.hpp"
#include "tgwa/error.hpp"
#include "tgwa/expr.hpp"
#include "tgwa/upoly.hpp"

using namespace tgwa;

namespace {

RingPtr ring1(const FieldPtr& f = nullptr) { return make_ring({"h"}, {}, f); }
RingPtr ring2(const FieldPtr& f = nullptr) { return make_ring({"h1", "h2"}, {}, f); }

RingAut aut(const RingPtr& r, std::vector<std::string> imgs) {
  std::vector<BasePoly> ps;
  for (auto& s : imgs) ps.push_back(parse_poly(s, r));
  return RingAut::from_images(r, ps);
}

BasePoly random_poly(std::mt19937& g, const RingPtr& r, int maxdeg, int terms) {
  std::uniform_int_distribution<int> e(0, maxdeg), c(-5, 5);
  BasePoly p(r);
  for (int t = 0; t < terms; ++t) {
    Exponent x(r->nvars());
    for (auto& v : x) v = e(g);
    p += BasePoly::monomial(r, x, Scalar(c(g)));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial printing is graded lex") {
  auto r = ring2();
  BasePoly p = parse_poly("1 + h2 + h1 + h2^2 + h1*h2 + h1^2", r);
  CHECK(p.str() == "h1^2 + h1*h2 + h2^2 + h1 + h2 + 1");
  CHECK(parse_poly("-(h1 - 3/2)*h2", r).str() == "-h1*h2 + 3/2*h2");
  CHECK(parse_poly("0*h1", r).str() == "0");
  std::mt19937 g(1);
  for (int t = 0; t < 20; ++t) {
    BasePoly q = random_poly(g, r, 3, 4);
    CHECK(parse_poly(q.str(), r) == q);
  }
  auto f = CycloField::get(4);
  auto rf = ring1(f);
  BasePoly w = parse_poly("(1 + zeta(4))*h - zeta(4)", rf);
  CHECK(parse_poly(w.str(), rf) == w);
}

TEST_CASE("domain: leading terms multiply") {
  auto r = make_ring({"h1", "h2", "h3"}, {}, nullptr);
  std::mt19937 g(5);
  for (int t = 0; t < 30; ++t) {
    BasePoly a = random_poly(g, r, 3, 3), b = random_poly(g, r, 3, 3);
    if (a.is_zero() || b.is_zero()) continue;
    BasePoly ab = a * b;
    REQUIRE(!ab.is_zero());
    Exponent e = a.leading_exponent();
    for (size_t j = 0; j < e.size(); ++j) e[j] += b.leading_exponent()[j];
    CHECK(ab.leading_exponent() == e);
    CHECK(ab.leading_coefficient() == a.leading_coefficient() * b.leading_coefficient());
  }
}

TEST_CASE("Laurent polynomials") {
  auto r = make_ring({"h1", "h2"}, {true, false}, nullptr);
  BasePoly x = parse_poly("h1^-2*h2 + h1", r);
  CHECK((x * parse_poly("h1^2", r)).str() == "h1^3 + h2");
  CHECK_THROWS_AS(parse_poly("h2^-1", r), Error);
  RingAut s = aut(r, {"3*h1", "h2 + 1"});
  CHECK(s.apply(parse_poly("h1^-1", r)) == parse_poly("1/3*h1^-1", r));
  CHECK_THROWS_AS(aut(r, {"h1 + 1", "h2"}), Error);
}

TEST_CASE("automorphism application") {
  auto r = ring1();
  RingAut s = aut(r, {"h - 1"});
  CHECK(s.apply(parse_poly("h", r)) == parse_poly("h - 1", r));
  CHECK(RingAut::identity(r).apply(parse_poly("h^3 - h", r)) == parse_poly("h^3 - h", r));
  CHECK(compose(s, s).apply(parse_poly("h", r)) == parse_poly("h - 2", r));

  auto f = CycloField::get(12);
  auto r2 = ring2(f);
  Scalar q1 = Scalar::root_of_unity(f, 12, 5);
  RingAut s1 = RingAut::from_images(
      r2, {BasePoly::constant(r2, 1) + BasePoly::variable(r2, 0) * q1, BasePoly::variable(r2, 1) * q1});
  CHECK(s1.apply(BasePoly::variable(r2, 1)) == BasePoly::variable(r2, 1) * q1);

  std::mt19937 g(2);
  RingAut m = aut(r2, {"2*h1 - h2 + 1", "h1 + 3"});
  for (int t = 0; t < 10; ++t) {
    BasePoly a = random_poly(g, r2, 2, 3), b = random_poly(g, r2, 2, 3);
    CHECK(m.apply(a * b) == m.apply(a) * m.apply(b));
    CHECK(m.apply(a + b) == m.apply(a) + m.apply(b));
    CHECK(m.inverse().apply(m.apply(a)) == a);
  }
  auto inv = m.inverse_images();
  for (size_t j = 0; j < 2; ++j)
    CHECK(BasePoly::variable(r2, j).substitute(m.images()).substitute(inv) == BasePoly::variable(r2, j));
  CHECK_THROWS_AS(aut(r2, {"h1 + h2", "2*h1 + 2*h2"}), Error);
  CHECK_THROWS_AS(aut(r2, {"h1^2", "h2"}), Error);
}

TEST_CASE("commutation and powers") {
  auto r = ring1();
  CHECK(commute(aut(r, {"h + 1"}), aut(r, {"h - 1"})));
  CHECK(!commute(aut(r, {"-h"}), aut(r, {"h - 1"})));
  RingAut s = aut(r, {"h - 1"});
  CHECK(s.power(-3) == aut(r, {"h + 3"}));
  CHECK(s.power(0).is_identity());
  CHECK(aut_order(aut(r, {"-h"}), 10) == 2);
  CHECK(!aut_order(s, 10).has_value());
}

TEST_CASE("point action") {
  auto r = ring1();
  Vec c{Scalar(Rational(5, 2))};
  CHECK(aut(r, {"h - 1"}).point_action(c) == Vec{Scalar(Rational(7, 2))});
  CHECK(RingAut::identity(r).point_action(c) == c);
  auto f = CycloField::get(4);
  auto rf = ring1(f);
  Scalar i = Scalar::root_of_unity(f, 4);
  RingAut si = RingAut::from_images(rf, {BasePoly::variable(rf, 0) * i});
  Vec p = si.point_action({Scalar(2)});
  CHECK(p[0] == Scalar(-2) * i);
  CHECK(si.apply(parse_poly("h - 2", rf)).eval(p).is_zero());

  auto r2 = ring2();
  RingAut a = aut(r2, {"2*h1 - h2 + 1", "h1 + 3"}), b = aut(r2, {"h2", "h1 - 1"});
  Vec q{Scalar(1), Scalar(-4)};
  CHECK(compose(a, b).point_action(q) == a.point_action(b.point_action(q)));
  Vec pa = a.point_action(q);
  for (size_t j = 0; j < 2; ++j) {
    BasePoly lin = BasePoly::variable(r2, j) - BasePoly::constant(r2, q[j]);
    CHECK(a.apply(lin).eval(pa).is_zero());
  }
}

TEST_CASE("fixed subrings") {
  auto r = ring1();
  auto id = fixed_subring(RingAut::identity(r), 1);
  CHECK(id.generators.size() == 1);
  CHECK(membership(id, parse_poly("h*(h+1)", r)));

  auto neg = fixed_subring(aut(r, {"-h"}), 2);
  CHECK(neg.kind == FixedKind::UnivariateScaling);
  REQUIRE(neg.generators.size() == 1);
  CHECK(neg.generators[0] == parse_poly("h^2", r));
  CHECK(membership(neg, parse_poly("h^2", r)));
  CHECK(!membership(neg, parse_poly("h^3", r)));

  auto f = CycloField::get(3);
  auto r2 = ring2(f);
  Scalar w = Scalar::root_of_unity(f, 3);
  RingAut phi = RingAut::from_images(r2, {BasePoly::variable(r2, 0) * w, BasePoly::variable(r2, 1) * w * w});
  auto s = fixed_subring(phi, 3);
  CHECK(s.kind == FixedKind::DiagonalScaling);
  std::vector<std::string> gens;
  for (auto& gpoly : s.generators) gens.push_back(gpoly.str());
  std::sort(gens.begin(), gens.end());
  CHECK(gens == std::vector<std::string>{"h1*h2", "h1^3", "h2^3"});

  // Every invariant monomial up to degree 9 is a product of generators.
  for (int a = 0; a <= 9; ++a)
    for (int b = 0; a + b <= 9; ++b) {
      BasePoly mono = BasePoly::monomial(r2, {a, b}, Scalar(1));
      if (!membership(s, mono)) continue;
      bool found = false;
      for (int x = 0; x * 3 <= a && !found; ++x)
        for (int y = 0; y * 3 <= b && !found; ++y) found = (a - 3 * x) == (b - 3 * y);
      CHECK(found);
    }

  // Membership is closed under multiplication by generators and matches the Reynolds average.
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b) {
      BasePoly mono = BasePoly::monomial(r2, {a, b}, Scalar(1));
      for (auto& gpoly : s.generators) CHECK(membership(s, gpoly * mono) == membership(s, mono));
      BasePoly avg(r2);
      for (int k = 0; k < 3; ++k) avg += phi.power(k).apply(mono);
      avg *= Scalar(Rational(1, 3));
      CHECK((avg == mono) == membership(s, mono));
    }

  CHECK_THROWS_AS(fixed_subring(aut(r, {"h + 1"}), 1), Error);
  CHECK_THROWS_AS(fixed_subring(aut(r, {"2*h"}), 2), Error);
  CHECK_THROWS_AS(fixed_subring(aut(make_ring({"h"}, {true}, nullptr), {"-h"}), 2), Error);
}

TEST_CASE("univariate rational functions") {
  UPoly h = UPoly::x();
  RatFunc a(h - UPoly(1), h), b(h, h - UPoly(1));
  CHECK(a * b == RatFunc(1));
  CHECK((a + b).str() == "(2*h^2 - 2*h + 1)/(h^2 - h)");
  CHECK(RatFunc(h * UPoly(2), h * UPoly(4)) == RatFunc(Scalar(Rational(1, 2))));
  CHECK(RatFunc(h).affine(Scalar(1), Scalar(-1)) == RatFunc(h - UPoly(1)));
  CHECK(parse_ratfunc("(h-1)/h", nullptr) == a);
  CHECK_THROWS_AS(RatFunc(h, UPoly()), Error);
  UPoly p = (h - UPoly(1)) * (h + UPoly(2)), q = (h - UPoly(1)) * (h - UPoly(3));
  CHECK(UPoly::gcd(p, q) == h - UPoly(1));
}
