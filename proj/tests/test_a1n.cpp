#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tgwa/a1n.hpp"
#include "tgwa/error.hpp"
#include "tgwa/scenario.hpp"

using namespace tgwa;

namespace {

struct Fixture {
  Scenario s;
  ProfilePtr p;
};

Fixture profile(const std::string& name, const std::map<std::string, std::string>& o = {}) {
  Fixture f{load_builtin(name, o), nullptr};
  f.p = from_datum(*f.s.datum);
  return f;
}

std::vector<Fixture> small_profiles() {
  std::vector<Fixture> out;
  out.push_back(profile("weyl"));
  out.push_back(profile("weyl", {{"n", "2"}}));
  out.push_back(profile("weyl", {{"n", "3"}}));
  out.push_back(profile("quantized-weyl", {{"n", "2"}, {"seed", "3"}}));
  out.push_back(profile("quantized-weyl", {{"n", "3"}, {"seed", "5"}}));
  return out;
}

BasePoly poly(const ProfilePtr& p, const std::string& s) { return parse_poly(s, p->ring()); }

AlgebraElement word(const ProfilePtr& p, const std::string& s) { return normal_form(p, parse_word(p, s)); }

AlgebraElement random_element(std::mt19937& g, const ProfilePtr& p, int terms) {
  std::uniform_int_distribution<int> deg(-3, 3), c(-3, 3), nt(1, terms);
  const RingPtr& R = p->ring();
  AlgebraElement x(p);
  int k = nt(g);
  for (int t = 0; t < k; ++t) {
    Degree d(p->rank());
    for (auto& v : d) v = deg(g);
    BasePoly r = BasePoly::constant(R, Scalar(c(g)));
    r += Scalar(c(g)) * BasePoly::variable(R, static_cast<size_t>(g() % R->nvars()));
    if (r.is_zero()) r = BasePoly::constant(R, Scalar(1));
    x += AlgebraElement::monomial(p, d, r);
  }
  return x;
}

// prod_{k=0}^{m-1} sigma_i^{-k}(t_i)
BasePoly s_poly(const TGWDatum& d, size_t i, int m) {
  BasePoly acc = BasePoly::constant(d.ring, Scalar(1));
  for (int k = 0; k < m; ++k) acc *= d.sigma[i].power(-k).apply(d.t[i]);
  return acc;
}

}  // namespace

TEST_CASE("Weyl algebra products") {
  auto [s, p] = profile("weyl");
  auto x = AlgebraElement::generator(p, 0, 1), y = AlgebraElement::generator(p, 0, -1);
  CHECK(y * x == AlgebraElement::from_ring(p, poly(p, "h")));
  CHECK(x * y == AlgebraElement::from_ring(p, poly(p, "h - 1")));
  CHECK(y.pow(2) * x.pow(2) == AlgebraElement::from_ring(p, poly(p, "h*(h + 1)")));
  CHECK(word(p, "X+ X- X+") == AlgebraElement::monomial(p, {1}, poly(p, "h - 1")));
  CHECK(word(p, "X+ X- X+").str() == "(h - 1)*X+");
  CHECK(word(p, "") == AlgebraElement::from_ring(p, poly(p, "1")));
  CHECK(word(p, "X+ h") == AlgebraElement::monomial(p, {1}, poly(p, "h - 1")));
  CHECK(word(p, "X- h") == AlgebraElement::monomial(p, {-1}, poly(p, "h + 1")));
  CHECK(word(p, "X-^2 X+^2") == y.pow(2) * x.pow(2));
}

TEST_CASE("canonical monomials in rank two") {
  auto [s, p] = profile("weyl", {{"n", "2"}});
  CHECK(word(p, "X1+ X2+") == AlgebraElement::monomial(p, {1, 1}, poly(p, "1")));
  CHECK(word(p, "X2+ X1+") == AlgebraElement::monomial(p, {1, 1}, poly(p, "1")));
  CHECK(word(p, "X1+ X2-").str() == "X2-*X1+");
  CHECK(monomial_word({-2, 1}, 2) == "X1-^2*X2+");
  CHECK_THROWS_AS(parse_word(p, "X3+"), Error);
}

TEST_CASE("profiles require type A1n") {
  CHECK_THROWS_WITH_AS(from_datum(*load_builtin("a2-simple").datum), doctest::Contains("NotTypeA1n"), Error);
  auto [s, p] = profile("quantized-weyl", {{"n", "2"}});
  CHECK(p->gamma()[0][1] == s.params.at("q1"));
  auto [s2, p2] = profile("weyl", {{"n", "3"}});
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(p2->gamma()[i][j] == Scalar(1));
  auto [s3, p3] = profile("weyl");
  CHECK_THROWS_WITH_AS(AlgebraElement::generator(p, 0, 1) * AlgebraElement::generator(p3, 0, 1),
                       doctest::Contains("ProfileMismatch"), Error);
}

TEST_CASE("quantized Weyl relations under the standard generators") {
  auto [s, p] = profile("quantized-weyl", {{"n", "2"}, {"seed", "11"}});
  const Scalar q1 = s.params.at("q1"), l12 = s.params.at("lam12"), l21 = l12.inverse();
  auto x = [&](size_t i) { return AlgebraElement::generator(p, i, 1); };
  auto y = [&](size_t i) { return AlgebraElement::generator(p, i, -1); };
  CHECK(y(0) * y(1) == l12 * (y(1) * y(0)));
  CHECK(x(0) * x(1) == (q1 * l12) * (x(1) * x(0)));
  CHECK(x(0) * y(1) == l21 * (y(1) * x(0)));
  CHECK(x(1) * y(0) == (q1 * l12) * (y(0) * x(1)));
  auto one = AlgebraElement::from_ring(p, poly(p, "1"));
  auto hh = [&](int i) { return AlgebraElement::from_ring(p, BasePoly::variable(p->ring(), i)); };
  // x_1 y_1 - q_1 y_1 x_1 = 1 and x_2 y_2 - q_2 y_2 x_2 = 1 + (q_1 - 1) y_1 x_1.
  CHECK(x(0) * y(0) - q1 * (y(0) * x(0)) == one);
  CHECK(y(0) * x(0) == hh(0));
  const Scalar q2 = s.params.at("q2");
  CHECK(x(1) * y(1) - q2 * (y(1) * x(1)) == one + (q1 - Scalar(1)) * (y(0) * x(0)));
}

TEST_CASE("associativity on random triples") {
  std::mt19937 g(20240);
  auto profiles = small_profiles();
  int count = 0;
  for (int rep = 0; rep < 40; ++rep)
    for (auto& f : profiles) {
      auto a = random_element(g, f.p, 3), b = random_element(g, f.p, 3), c = random_element(g, f.p, 3);
      CHECK((a * b) * c == a * (b * c));
      ++count;
    }
  CHECK(count == 200);
}

TEST_CASE("products are graded") {
  std::mt19937 g(7);
  for (auto& f : small_profiles()) {
    for (int rep = 0; rep < 10; ++rep) {
      Degree d(f.p->rank()), e(f.p->rank());
      for (auto& v : d) v = static_cast<int>(g() % 7) - 3;
      for (auto& v : e) v = static_cast<int>(g() % 7) - 3;
      auto x = AlgebraElement::monomial(f.p, d, poly(f.p, "1")) * AlgebraElement::monomial(f.p, e, poly(f.p, "1"));
      for (const auto& [deg, r] : x.terms()) {
        for (size_t i = 0; i < deg.size(); ++i) CHECK(deg[i] == d[i] + e[i]);
      }
    }
  }
}

TEST_CASE("length-three diamond check") {
  for (auto& f : small_profiles()) {
    CAPTURE(f.s.name);
    CHECK(diamond_check(f.p).empty());
  }
}

TEST_CASE("fixed-power relations") {
  for (auto& f : small_profiles()) {
    const TGWDatum& d = *f.s.datum;
    for (size_t i = 0; i < f.p->rank(); ++i) {
      auto x = AlgebraElement::generator(f.p, i, 1), y = AlgebraElement::generator(f.p, i, -1);
      for (int m = 1; m <= 5; ++m) {
        BasePoly s = s_poly(d, i, m);
        CHECK(y.pow(m) * x.pow(m) == AlgebraElement::from_ring(f.p, s));
        CHECK(x.pow(m) * y.pow(m) == AlgebraElement::from_ring(f.p, d.sigma[i].power(m).apply(s)));
      }
    }
  }
}

TEST_CASE("cross-power relations") {
  for (auto& f : small_profiles()) {
    const TGWDatum& d = *f.s.datum;
    for (size_t i = 0; i < f.p->rank(); ++i)
      for (size_t j = 0; j < f.p->rank(); ++j) {
        if (i == j) continue;
        for (int mi = 1; mi <= 4; ++mi)
          for (int mj = 1; mj <= 4; ++mj) {
            auto xi = AlgebraElement::generator(f.p, i, 1).pow(mi);
            auto yj = AlgebraElement::generator(f.p, j, -1).pow(mj);
            CHECK(xi * yj == d.mu[i][j].pow(mi * mj) * (yj * xi));
          }
      }
  }
}

TEST_CASE("phi acts as an algebra automorphism") {
  std::mt19937 g(99);
  for (auto& f : small_profiles()) {
    REQUIRE(f.s.phi);
    const DiagonalAut& a = *f.s.phi;
    for (int rep = 0; rep < 10; ++rep) {
      auto x = random_element(g, f.p, 2), y = random_element(g, f.p, 2);
      CHECK(phi_action(x * y, a) == phi_action(x, a) * phi_action(y, a));
    }
    for (size_t i = 0; i < f.p->rank(); ++i) {
      auto xp = AlgebraElement::generator(f.p, i, 1);
      CHECK(phi_action(xp, a) == a.alpha[i] * xp);
      CHECK(phi_action(xp.pow(a.orders[i]), a) == xp.pow(a.orders[i]));
      auto t = AlgebraElement::from_ring(f.p, f.s.datum->t[i]);
      CHECK(phi_action(t, a) == t);
      BasePoly r = poly(f.p, f.p->ring()->vars[0] + "^2 + 3");
      auto lhs = phi_action(normal_form(f.p, {letter(i, 1), ring_token(r)}), a);
      auto rhs = a.alpha[i] * normal_form(f.p, {letter(i, 1), ring_token(a.phiR.apply(r))});
      CHECK(lhs == rhs);
    }
  }
  auto [s, p] = profile("weyl", {{"m", "2"}});
  CHECK(phi_action(AlgebraElement::generator(p, 0, 1), *s.phi) == Scalar(-1) * AlgebraElement::generator(p, 0, 1));
}

TEST_CASE("Ore presentation") {
  for (auto& f : small_profiles()) {
    CAPTURE(f.s.name);
    OrePresentation o = ore_presentation(f.p);
    CHECK(o.verified());
    for (const auto& r : o.relations) {
      CAPTURE(r.label);
      CHECK(r.holds());
    }
    CHECK(o.plus_steps.size() == f.p->rank());
    CHECK(o.minus_steps.size() == f.p->rank());
    CHECK(o.quotient_relations.size() == f.p->rank());
  }
  auto [s, p] = profile("weyl");
  OrePresentation o = ore_presentation(p);
  REQUIRE(o.minus_steps[0].extension.size() == 1);
  auto [gen, theta, delta] = o.minus_steps[0].extension[0];
  CHECK(gen == "X+");
  CHECK(theta == "X+");
  CHECK(delta == "1");

  // With a symmetric twist the emitted theta_i(X_j^+) agrees with mu_ij^{-1} X_j^+.
  // lam12 = zeta, q1 = zeta^-2 makes mu symmetric with mu12 = zeta^-1.
  Scenario sym = load_builtin("quantized-weyl", {{"n", "2"}, {"lam12", "zeta(12)"}, {"q1", "zeta(12)^10"}});
  REQUIRE(sym.datum->mu[0][1] == sym.datum->mu[1][0]);
  auto ps = from_datum(*sym.datum);
  OrePresentation os = ore_presentation(ps);
  CHECK(os.verified());
  for (size_t i = 0; i < 2; ++i)
    for (const auto& [g2, th, de] : os.minus_steps[i].extension) {
      if (g2 == (i == 0 ? "X2+" : "X1+")) CHECK(th == sym.datum->mu[i][1 - i].inverse().str() + "*" + g2);
    }
}
