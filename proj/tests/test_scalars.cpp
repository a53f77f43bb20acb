#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tgwa/error.hpp"
#include "tgwa/expr.hpp"
#include "tgwa/scalar.hpp"

using namespace tgwa;

namespace {

Scalar z(int n, int k, const FieldPtr& f) { return Scalar::root_of_unity(f, n, k); }

Scalar random_scalar(std::mt19937& g, const FieldPtr& f) {
  std::uniform_int_distribution<int> d(-7, 7), den(1, 5);
  std::vector<Rational> c;
  for (int i = 0; i < f->degree(); ++i) c.emplace_back(d(g), den(g));
  for (auto& v : c) v.canonicalize();
  return Scalar(f, c);
}

}  // namespace

TEST_CASE("cyclotomic moduli") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Rational>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Rational>{1, 0, -1, 0, 1});
  CHECK(CycloField::get(12)->degree() == 4);
  CHECK(CycloField::get(6) == CycloField::get(3));
  CHECK(CycloField::get(10)->conductor() == 5);
}

TEST_CASE("basic field arithmetic") {
  auto f4 = CycloField::get(4);
  Scalar i = z(4, 1, f4);
  Scalar a = Scalar(1) + i;
  Scalar b = (Scalar(1) - i) / Scalar(2);
  CHECK(a * b == Scalar(1));
  CHECK(i * i == Scalar(-1));

  auto f6 = CycloField::get(6);
  CHECK(z(6, 1, f6).pow(3) == Scalar(-1));
  CHECK(z(6, 1, f6).pow(6) == Scalar(1));
  CHECK(Scalar(Rational(2, 3)) + Scalar(Rational(1, 6)) == Scalar(Rational(5, 6)));
  CHECK_THROWS_AS(Scalar(0).inverse(), Error);
  CHECK_THROWS_AS(z(4, 1, f4) + z(3, 1, CycloField::get(3)), Error);
}

TEST_CASE("inverse and binomial expansion on random elements") {
  std::mt19937 g(7);
  for (int n : {3, 4, 5, 8, 12}) {
    auto f = CycloField::get(n);
    for (int t = 0; t < 20; ++t) {
      Scalar a = random_scalar(g, f), b = random_scalar(g, f);
      if (a.is_zero()) continue;
      CHECK(a * a.inverse() == Scalar(1));
      CHECK(a * b == b * a);
      for (int k = 0; k <= 5; ++k) {
        Scalar expand(0);
        long binom = 1;
        for (int j = 0; j <= k; ++j) {
          expand += Scalar(binom) * a.pow(j) * b.pow(k - j);
          binom = binom * (k - j) / (j + 1);
        }
        CHECK(expand == (a + b).pow(k));
      }
    }
  }
}

TEST_CASE("multiplicative order") {
  auto f12 = CycloField::get(12);
  CHECK(multiplicative_order(z(12, 3, f12)) == 4);
  CHECK(multiplicative_order(Scalar(-1)) == 2);
  CHECK(!multiplicative_order(Scalar(2)).has_value());
  CHECK(!multiplicative_order(Scalar(1) + z(12, 1, f12)).has_value());
  CHECK_THROWS_AS(multiplicative_order(Scalar(0)), Error);
  for (int n : {5, 7, 8, 9, 12, 15}) {
    auto f = CycloField::get(n);
    for (int k = 1; k <= n; ++k)
      CHECK(multiplicative_order(z(n, k, f)) == n / std::gcd(n, k));
  }
  auto f3 = CycloField::get(3);
  CHECK(multiplicative_order(z(6, 1, f3)) == 6);
  CHECK(multiplicative_order(-z(3, 1, f3)) == 6);
}

TEST_CASE("scalar literals round-trip") {
  auto f12 = CycloField::get(12);
  CHECK(parse_scalar("3/4", f12) == Scalar(Rational(3, 4)));
  Scalar w = parse_scalar("zeta(6)^2", f12);
  CHECK(multiplicative_order(w) == 3);
  CHECK(w == parse_scalar("zeta(3)", f12));
  CHECK(parse_scalar("zeta(12)^3", f12) == parse_scalar("zeta(4)", f12));
  std::mt19937 g(3);
  for (int t = 0; t < 30; ++t) {
    Scalar a = random_scalar(g, f12);
    CHECK(parse_scalar(a.str(), f12) == a);
  }
  CHECK(parse_scalar("-1/2*zeta(12)^2 + 3", f12).str() == "3 - 1/2*zeta(12)^2");
  CHECK_THROWS_AS(parse_scalar("zeta(5)", f12), Error);
  CHECK_THROWS_AS(parse_scalar("3/(1-1)", f12), Error);
  CHECK_THROWS_AS(parse_scalar("3 +", f12), Error);
  auto f3 = CycloField::get(3);
  CHECK(parse_scalar("zeta(6)^3", f3) == Scalar(-1));
}
