#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tgwa/a2.hpp"
#include "tgwa/error.hpp"
#include "tgwa/scenario.hpp"

using namespace tgwa;

namespace {

Scalar q_(long n, long d = 1) { return Scalar(Rational(n, d)); }

RatFunc rf(const std::string& s) { return parse_ratfunc(s, nullptr); }

FiberPtr profile_of(const std::string& name, const std::map<std::string, std::string>& o = {}) {
  return std::make_shared<const FiberProfile>(*load_builtin(name, o).datum);
}

FiberElement W(const FiberPtr& p, const std::string& s) { return parse_fiber_word(p, s); }

FiberElement gen(const FiberPtr& p, int i, int s) { return FiberElement::generator(p, i, s); }

FiberElement random_fiber(std::mt19937& g, const FiberPtr& p) {
  std::uniform_int_distribution<int> deg(-3, 3), c(-3, 3), nt(1, 2);
  FiberElement x(p);
  int k = nt(g);
  for (int t = 0; t < k; ++t) {
    UPoly num = UPoly::from_coeffs({Scalar(c(g)), Scalar(c(g))});
    UPoly den = UPoly::from_coeffs({Scalar(c(g)), Scalar(1)});
    if (num.is_zero()) num = UPoly(1);
    x += FiberElement::monomial(p, deg(g), deg(g), RatFunc(num, den));
  }
  return x;
}

std::vector<FiberPtr> profiles() {
  return {FiberProfile::standard(), profile_of("a2-simple"), profile_of("kleinian-fiber"),
          profile_of("a2-family", {{"p", "2"}, {"beta", "1"}}), profile_of("a2-family", {{"p", "3"}, {"mu", "5"}})};
}

}  // namespace

TEST_CASE("S polynomials: recurrence, closed form, identity") {
  CHECK(s_poly(0, q_(7), q_(3)) == q_(1));
  CHECK(s_poly(1, q_(7), q_(3)) == q_(7));
  CHECK(s_poly(2, q_(2), q_(1)) == q_(3));
  CHECK(s_poly(3, q_(2), q_(1)) == q_(4));
  CHECK(s_poly(2, q_(3), q_(1)) == q_(8));
  CHECK(s_poly(3, q_(3), q_(1)) == q_(21));
  CHECK_THROWS_AS(s_poly(-1, q_(1), q_(1)), Error);

  CHECK(s_identity_check(1, 2, q_(5, 3), q_(-2)));
  CHECK(s_identity_check(3, 4, q_(2), q_(1)));

  FieldPtr f = CycloField::get(5);
  std::mt19937 g(11);
  std::uniform_int_distribution<int> c(-9, 9), e(0, 4);
  for (int sample = 0; sample < 50; ++sample) {
    Scalar q = q_(c(g), 1 + std::abs(c(g)));
    Scalar beta = q_(c(g), 1 + std::abs(c(g)));
    if (sample % 2) {
      q += Scalar::root_of_unity(f, 5, e(g));
      beta *= Scalar::root_of_unity(f, 5, e(g));
    }
    for (int a = 0; a <= 15; ++a) CHECK(s_poly(a, q, beta) == s_poly_closed(a, q, beta));
    for (int a = 1; a <= 15; ++a)
      for (int cc = 2; cc <= 15; ++cc) CHECK(s_identity_check(a, cc, q, beta));
  }
}

TEST_CASE("S polynomials: Chebyshev squared form") {
  for (long b : {1L, 2L, 3L})
    for (long qn : {-5L, 1L, 4L})
      for (int a = 0; a <= 10; ++a) CHECK(chebyshev_check(a, q_(qn, 3), q_(b * b, 4)));
  for (int a = 0; a <= 10; ++a) CHECK(chebyshev_check(a, q_(3), q_(2)));
  CHECK_THROWS_AS(chebyshev_check(2, q_(1), q_(0)), Error);
}

TEST_CASE("S nonvanishing criteria") {
  for (long p : {2L, 3L, -3L, 5L}) {
    auto r = s_nonvanishing(q_(-(p + 1)), q_(p), 30);
    CHECK(r.kind == SNonvanishing::Kind::ProvenAllNonzero);
  }
  CHECK(s_nonvanishing(q_(-3, 2), q_(1, 2), 30).kind == SNonvanishing::Kind::ProvenAllNonzero);
  auto z = s_nonvanishing(q_(0), q_(-1), 30);
  CHECK(z.kind == SNonvanishing::Kind::ZeroAt);
  CHECK(z.a == 1);
  auto d = s_nonvanishing(q_(-2), q_(1), 30);
  CHECK(d.kind == SNonvanishing::Kind::ProvenAllNonzero);
  for (int a = 0; a <= 30; ++a) CHECK(!s_poly(a, q_(2), q_(1)).is_zero());
  auto six = s_nonvanishing(q_(3), q_(3), 30);
  CHECK(six.kind == SNonvanishing::Kind::ZeroAt);
  CHECK(six.a == 5);
  auto open = s_nonvanishing(q_(1), q_(2), 30);
  CHECK(open.kind == SNonvanishing::Kind::NonzeroUpTo);
  CHECK(open.a == 30);
  FieldPtr f = CycloField::get(3);
  // Roots 1 and zeta(3): S_2 = 1 + zeta(3) + zeta(3)^2 = 0.
  Scalar w = Scalar::root_of_unity(f, 3);
  auto cyc = s_nonvanishing(-(q_(1) + w), w, 40);
  CHECK(cyc.kind == SNonvanishing::Kind::ZeroAt);
  CHECK(cyc.a == 2);
  try {
    s_nonvanishing(q_(1), q_(0), 5);
    FAIL("expected ZeroLambda2");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroLambda2);
  }
}

TEST_CASE("rewriting coefficients") {
  Scalar q = q_(7, 2), beta = q_(-3);
  auto [a1, b1] = rewrite_coeffs(1, 1, q, beta);
  CHECK(a1 == q.inverse());
  CHECK(b1 == beta / q);
  auto [a2, b2] = rewrite_coeffs(2, 1, q, beta);
  CHECK(a2 == s_poly(1, q, beta) / s_poly(2, q, beta));
  CHECK(b2 == beta * beta / s_poly(2, q, beta));
  auto [a3, b3] = rewrite_coeffs(2, 2, q_(3), q_(1));
  CHECK(a3 == q_(3, 21));
  CHECK(b3 == q_(3, 21));
  try {
    rewrite_coeffs(1, 1, q_(0), q_(1));
    FAIL("expected DenominatorVanishes");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DenominatorVanishes);
  }
}

TEST_CASE("A2 profile coefficients") {
  A2Profile p = a2_profile(*load_builtin("a2-family", {{"p", "3"}}).datum);
  CHECK(p.lambda1 == q_(-4));
  CHECK(p.lambda2 == q_(3));
  CHECK(p.eta1 == q_(-4, 3));
  CHECK(p.eta2 == q_(1, 3));
  CHECK_THROWS_AS(a2_profile(*load_builtin("weyl", {{"n", "2"}}).datum), Error);
}

TEST_CASE("exchange laws agree with same-index reductions") {
  for (const auto& p : profiles()) {
    RatFunc t1(p->t(0)), t2(p->t(1));
    auto one = FiberElement::scalar(p, RatFunc(1));
    // X_2^- X_1^- X_1^+ X_2^+ = sigma_2^{-1}(t_1) t_2
    CHECK(W(p, "X2- X1- X1+ X2+") == FiberElement::scalar(p, p->shift(1, -1, t1) * t2));
    // X_2^+ X_1^+ X_1^- X_2^- = sigma_1 sigma_2(t_1) sigma_2(t_2)
    CHECK(W(p, "X2+ X1+ X1- X2-") == FiberElement::scalar(p, p->shift2(1, 1, t1) * p->shift(1, 1, t2)));
    CHECK(W(p, "X1+ X2-") == W(p, "X2- X1+") * RatFunc(p->mu(0, 1)));
    CHECK(W(p, "X2+ X1-") == W(p, "X1- X2+") * RatFunc(p->mu(1, 0)));
    for (int i = 0; i < 2; ++i) {
      RatFunc ti(p->t(i));
      CHECK(gen(p, i, -1) * gen(p, i, 1) == FiberElement::scalar(p, ti));
      CHECK(gen(p, i, 1) * gen(p, i, -1) == FiberElement::scalar(p, p->shift(i, 1, ti)));
      RatFunc r = rf("h^2 + 3");
      auto rr = FiberElement::scalar(p, r);
      CHECK(gen(p, i, 1) * rr == FiberElement::scalar(p, p->shift(i, 1, r)) * gen(p, i, 1));
      CHECK(gen(p, i, -1) * rr == FiberElement::scalar(p, p->shift(i, -1, r)) * gen(p, i, -1));
    }
    CHECK(one * gen(p, 1, 1) == gen(p, 1, 1));
  }
}

TEST_CASE("fiber product examples") {
  FiberPtr p = FiberProfile::standard();
  FiberElement c = c_element(p);
  CHECK(W(p, "X2+ X1+ 1/h") - W(p, "X1+ X2+ 1/(h-1)") == FiberElement(p));
  CHECK(W(p, "X2+ X1+") - W(p, "X1+ X2+") == c);
  CHECK(W(p, "X1+ X2+ 1/(h-1)") == c);
  CHECK(W(p, "X1- X1+") == FiberElement::scalar(p, rf("h")));
  CHECK(W(p, "X1+ X2+") == W(p, "X2+ X1+ (h-1)/h"));
  for (int k = 1; k <= 5; ++k)
    CHECK(W(p, "X1+ X2+^" + std::to_string(k)) ==
          W(p, "X2+^" + std::to_string(k) + " X1+ (h-" + std::to_string(k) + ")/h"));
  CHECK(c.str() == "X2+*X1+*(1/(h))");
  FiberPtr q = profile_of("a2-simple");
  try {
    auto bad = gen(p, 0, 1) * gen(q, 0, 1);
    FAIL("expected ProfileMismatch " << bad.str());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ProfileMismatch);
  }
}

TEST_CASE("fiber multiplication is associative") {
  std::mt19937 g(5);
  for (const auto& p : profiles())
    for (int trial = 0; trial < 40; ++trial) {
      auto x = random_fiber(g, p), y = random_fiber(g, p), z = random_fiber(g, p);
      CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("Serre relations and rewriting in the fiber algebra") {
  for (const auto& p : {FiberProfile::standard(), profile_of("a2-simple")}) {
    for (int s : {1, -1}) {
      auto x1 = gen(p, 0, s), x2 = gen(p, 1, s);
      CHECK((x1 * x1 * x2 - x1 * x2 * x1 * RatFunc(2) + x2 * x1 * x1).is_zero());
      CHECK((x2 * x2 * x1 - x2 * x1 * x2 * RatFunc(2) + x1 * x2 * x2).is_zero());
    }
    auto x = gen(p, 0, 1), y = gen(p, 1, 1);
    for (int a = 1; a <= 5; ++a)
      for (int c = 1; c <= 5; ++c) {
        auto [c1, c2] = rewrite_coeffs(a, c, q_(2), q_(1));
        auto lhs = x.pow(a) * y * x.pow(c);
        auto rhs = x.pow(a + c) * y * RatFunc(c1) + y * x.pow(a + c) * RatFunc(c2);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("down-up substitution identities") {
  for (const auto& p : {profile_of("a2-simple"), FiberProfile::standard()}) {
    auto x1 = gen(p, 0, 1), x2 = gen(p, 1, 1), y1 = gen(p, 0, -1), y2 = gen(p, 1, -1);
    auto z = x1 * x2 - x2 * x1;
    CHECK(x1 * z - z * x1 == x1 * x1 * x2 - x1 * x2 * x1 * RatFunc(2) + x2 * x1 * x1);
    CHECK(x2 * z - z * x2 == -(x2 * x2 * x1 - x2 * x1 * x2 * RatFunc(2) + x1 * x2 * x2));
    CHECK((z * y1 - y1 * z).is_zero());
    CHECK((z * y2 - y2 * z).is_zero());
  }
}

TEST_CASE("centralizing element and its powers") {
  FiberPtr p = FiberProfile::standard();
  FiberElement c = c_element(p);
  for (int i = 0; i < 2; ++i)
    for (int s : {1, -1}) CHECK(c * gen(p, i, s) == gen(p, i, s) * c);
  auto h = FiberElement::scalar(p, rf("h"));
  CHECK(c * h == h * c);
  CHECK(c_closed_form(p, 2) == W(p, "X2+^2 X1+^2 1/(h*(h+1))"));
  for (int k = 1; k <= 5; ++k) {
    CPowerReport r = c_power(p, k);
    CHECK(r.closed_form_ok);
    CHECK(r.power == c.pow(k));
  }
  CHECK(c_power(p, 1).power == c);
  for (int m : {2, 3, 4}) {
    CPowerReport r = c_power(p, m, m);
    REQUIRE(r.c_phi);
    CHECK(r.c_phi_ok);
    CHECK(*r.c_phi == c.pow(m));
  }
  FiberPtr q = profile_of("a2-simple");
  FiberElement cq = c_element(q);
  for (int i = 0; i < 2; ++i)
    for (int s : {1, -1}) CHECK(cq * gen(q, i, s) == gen(q, i, s) * cq);
  CHECK(c_power(q, 4).closed_form_ok);
  CHECK_THROWS_AS(c_element(profile_of("kleinian-fiber")), Error);
}
