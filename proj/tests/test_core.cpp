#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tgwa/datum.hpp"
#include "tgwa/error.hpp"
#include "tgwa/scenario.hpp"

using namespace tgwa;

namespace {

TGWDatum builtin(const std::string& name, const std::map<std::string, std::string>& o = {}) {
  return *load_builtin(name, o).datum;
}

std::vector<std::vector<int>> ints(const CartanReport& c) {
  std::vector<std::vector<int>> out;
  for (const auto& row : c.cartan) {
    std::vector<int> r;
    for (const auto& x : row) {
      REQUIRE(x.has_value());
      r.push_back(*x);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<Scalar> poly_coeffs(const Scenario& s, std::vector<std::string> c) {
  std::vector<Scalar> out;
  for (auto& x : c) out.push_back(parse_scalar(x, s.field, s.params));
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("builtin library parses and round-trips") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    Scenario s = load_builtin(name);
    REQUIRE(s.datum);
    json j = datum_to_json(*s.datum);
    TGWDatum back = parse_datum(j, s.field, {});
    CHECK(same_datum(back, *s.datum));
    if (s.phi) {
      DiagonalAut a = parse_phi(phi_to_json(*s.phi), back, s.field, {});
      CHECK(a.alpha == s.phi->alpha);
      CHECK(a.phiR == s.phi->phiR);
    }
  }
  CHECK(kind_of([] { builtin_scenario("nope"); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { builtin_scenario("weyl", {{"bogus", "1"}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("weyl scenario and literal syntax") {
  TGWDatum d = builtin("weyl");
  REQUIRE(d.rank() == 1);
  CHECK(d.sigma[0].apply(BasePoly::variable(d.ring, 0)).str() == "h - 1");
  Scalar w = parse_scalar("zeta(6)^2", CycloField::get(6));
  CHECK(multiplicative_order(w) == 3);
  CHECK(w * w + w + 1 == Scalar(0));
}

TEST_CASE("scenario diagnostics") {
  CHECK(kind_of([] { parse_scenario("{\"datum\": {\"vars\": [\"h\"], \n \"sigma\": [[\"h-1\"]], }"); }) ==
        ErrorKind::SyntaxError);
  try {
    parse_scenario("{\n  \"name\": 3,,\n}");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  json j = builtin_scenario("weyl", {{"n", "2"}});
  j["datum"]["mu"] = json(std::vector<std::vector<std::string>>{{"1", "1"}, {"1"}});
  CHECK(kind_of([&] { scenario_from_json(j); }) == ErrorKind::SchemaError);
  j = builtin_scenario("weyl");
  j["datum"]["sigma"] = {{"h^2"}};
  CHECK(kind_of([&] { scenario_from_json(j); }) == ErrorKind::UnsupportedFeature);
  j = builtin_scenario("weyl");
  j["field"] = {{"characteristic", 3}};
  CHECK(kind_of([&] { scenario_from_json(j); }) == ErrorKind::UnsupportedFeature);
  j = builtin_scenario("weyl");
  j["datum"]["t"] = {"h +* 2"};
  try {
    scenario_from_json(j);
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(std::string(e.what()).find("datum.t[0]") != std::string::npos);
    CHECK(std::string(e.what()).find("column 4") != std::string::npos);
  }
  j = builtin_scenario("weyl");
  j["datum"]["t"] = {"0"};
  CHECK(kind_of([&] { scenario_from_json(j); }) == ErrorKind::ZeroT);
  j = builtin_scenario("weyl", {{"n", "2"}});
  j["datum"]["mu"][0][1] = "0";
  CHECK(kind_of([&] { scenario_from_json(j); }) == ErrorKind::ZeroMu);
  j = builtin_scenario("weyl", {{"n", "2"}});
  j["datum"]["sigma"][1] = {"-h1", "h2"};
  CHECK(kind_of([&] { scenario_from_json(j); }) == ErrorKind::NonCommutingSigmas);
}

TEST_CASE("quantized Weyl data are consistent for random roots of unity") {
  for (int n : {2, 3}) {
    for (int seed = 1; seed <= 20; ++seed) {
      CAPTURE(n);
      CAPTURE(seed);
      TGWDatum d = builtin("quantized-weyl", {{"n", std::to_string(n)}, {"seed", std::to_string(seed)}});
      ValidityReport v = validate_datum(d);
      CHECK(v.overall());
      CHECK(v.cons2.size() == static_cast<size_t>(n == 3 ? 6 : 0));
      TGWDatum bad = d;
      bad.mu[0][1] = bad.mu[0][1] * Scalar(2);
      ValidityReport vb = validate_datum(bad);
      CHECK_FALSE(vb.cons1.at({0, 1}));
      CHECK(vb.cons1_ok() == false);
    }
  }
}

TEST_CASE("quantized Weyl sigma table") {
  Scenario s = load_builtin("quantized-weyl", {{"n", "3"}, {"seed", "7"}});
  const TGWDatum& d = *s.datum;
  auto h = [&](size_t j) { return BasePoly::variable(d.ring, j); };
  const Scalar q1 = s.params.at("q1"), q2 = s.params.at("q2");
  CHECK(d.sigma[0].apply(h(1)) == q1 * h(1));
  CHECK(d.sigma[1].apply(h(0)) == h(0));
  CHECK(d.sigma[1].apply(h(1)) == BasePoly::constant(d.ring, Scalar(1)) + q2 * h(1) + (q1 - Scalar(1)) * h(0));
  CartanReport c = cartan_type(d);
  REQUIRE(c.tag == TypeTag::A1n);
  CHECK(c.gamma[0][1] == q1);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(d.sigma[i].apply(d.t[j]) == c.gamma[i][j] * d.t[j]);
}

TEST_CASE("consistency failure and vacuous rank one") {
  TGWDatum d = builtin("weyl", {{"n", "2"}});
  CHECK(validate_datum(d).overall());
  d.mu[0][1] = Scalar(2);
  ValidityReport v = validate_datum(d);
  CHECK_FALSE(v.cons1.at({0, 1}));
  TGWDatum one = builtin("weyl");
  ValidityReport v1 = validate_datum(one);
  CHECK(v1.cons1.empty());
  CHECK(v1.overall());
}

TEST_CASE("cartan data of the rank-two examples") {
  CHECK(ints(cartan_type(builtin("a2-simple"))) == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(cartan_type(builtin("a2-simple")).tag == TypeTag::A2);

  Scenario fam = load_builtin("a2-family");
  CartanReport cf = cartan_type(*fam.datum);
  CHECK(cf.minpolys.at({0, 1}) == poly_coeffs(fam, {"2", "-3", "1"}));
  CHECK(cf.minpolys.at({1, 0}) == poly_coeffs(fam, {"1/2", "-3/2", "1"}));
  CHECK(minpoly_str(cf.minpolys.at({0, 1})) == "x^2 - 3*x + 2");
  CHECK(cf.lambda1 == Scalar(-3));
  CHECK(cf.lambda2 == Scalar(2));

  Scenario fam2 = load_builtin("a2-family", {{"p", "-1"}, {"beta", "3"}, {"mu", "5"}});
  CartanReport cf2 = cartan_type(*fam2.datum);
  CHECK(cf2.lambda1 == Scalar(0));
  CHECK(cf2.lambda2 == Scalar(-1));
  CHECK(validate_datum(*fam2.datum).overall());

  for (const char* name : {"sergeev", "mazorchuk-turowska"}) {
    Scenario s = load_builtin(name);
    CartanReport c = cartan_type(*s.datum);
    CHECK(c.tag == TypeTag::A2);
    CHECK(minpoly_str(c.minpolys.at({0, 1})) == "x^2 - 2*x + 1");
    CHECK(minpoly_str(c.minpolys.at({1, 0})) == "x^2 - 2*x + 1");
    CHECK(validate_datum(*s.datum).overall());
  }

  for (const char* mu : {"1", "zeta(4)", "3", "zeta(5)"}) {
    Scenario s = load_builtin("mu-q-family", {{"mu", mu}, {"q", "2/7"}});
    CAPTURE(mu);
    CHECK(validate_datum(*s.datum).overall());
    CartanReport c = cartan_type(*s.datum);
    Scalar m = s.params.at("mu"), q = s.params.at("q");
    std::vector<Scalar> expect = {m * m, Scalar(0) - m * (q + q.inverse()), Scalar(1)};
    CHECK(c.minpolys.at({0, 1}) == expect);
    CHECK(c.minpolys.at({1, 0}) == expect);
    if (m.pow(4) == Scalar(1)) CHECK(m * m == m.pow(-2));
  }

  CHECK(ints(cartan_type(builtin("kleinian-fiber"))) == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
}

TEST_CASE("minimal polynomials also kill backward iterates") {
  for (const char* name : {"a2-family", "sergeev", "mazorchuk-turowska", "kleinian-fiber", "mu-q-family"}) {
    TGWDatum d = builtin(name, std::string(name) == "mu-q-family" ? std::map<std::string, std::string>{{"mu", "3"}}
                                                                     : std::map<std::string, std::string>{});
    CartanReport c = cartan_type(d);
    for (const auto& [ij, p] : c.minpolys) {
      auto [i, j] = ij;
      for (int k = -3; k <= 3; ++k) {
        BasePoly acc(d.ring);
        RingAut base = d.sigma[i].power(k);
        for (size_t e = 0; e < p.size(); ++e) acc += p[e] * d.sigma[i].power(static_cast<long>(e)).apply(base.apply(d.t[j]));
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("cartan type is invariant under reindexing") {
  TGWDatum d = builtin("kleinian-fiber");
  TGWDatum s = d;
  std::swap(s.sigma[0], s.sigma[1]);
  std::swap(s.t[0], s.t[1]);
  std::swap(s.mu[0][1], s.mu[1][0]);
  CHECK(ints(cartan_type(s)) == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
}

TEST_CASE("tensor products of data") {
  TGWDatum w = builtin("weyl");
  TGWDatum ww = tensor_data(w, w);
  REQUIRE(ww.rank() == 2);
  CHECK(ww.ring->vars == std::vector<std::string>{"h1", "h2"});
  TGWDatum w2 = builtin("weyl", {{"n", "2"}});
  CHECK(same_datum(lift_datum(ww, w2.ring->field), w2));
  CartanReport c = cartan_type(ww);
  CHECK(ints(c) == std::vector<std::vector<int>>{{2, 0}, {0, 2}});
  CHECK(c.tag == TypeTag::A1n);
  CHECK(c.gamma[0][1] == Scalar(1));
  CHECK(c.gamma[1][0] == Scalar(1));

  TGWDatum a2w = tensor_data(builtin("a2-simple"), w);
  CHECK(ints(cartan_type(a2w)) == std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}});
  CHECK(validate_datum(a2w).overall());
  TGWDatum k = builtin("kleinian-fiber"), q = builtin("quantized-weyl", {{"n", "2"}});
  CHECK(kind_of([&] { tensor_data(k, q); }) == ErrorKind::FieldMismatch);
  FieldPtr f = field_join(k.ring->field, q.ring->field);
  CHECK(f->conductor() == 12);
  TGWDatum kq = tensor_data(lift_datum(k, f), lift_datum(q, f));
  CHECK(ints(cartan_type(kq)) ==
        std::vector<std::vector<int>>{{2, -1, 0, 0}, {-2, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
  CHECK(validate_datum(kq).overall());

  TGWDatum bad = builtin("weyl", {{"n", "2"}});
  bad.mu[0][1] = Scalar(2);
  CHECK_FALSE(validate_datum(tensor_data(bad, w)).overall());
  CHECK_FALSE(validate_datum(tensor_data(w, bad)).overall());

  TGWDatum zero = make_datum(make_ring({}, {}, nullptr), {}, {}, Mat{});
  CHECK(same_datum(tensor_data(w, zero), w));
  CHECK(same_datum(tensor_data(zero, w), w));

  TGWDatum q4 = builtin("finite-orbit");
  CHECK(kind_of([&] { lift_datum(q, q4.ring->field); }) == ErrorKind::FieldMismatch);
  TGWDatum lifted = lift_datum(q4, q.ring->field);
  CHECK(lifted.sigma[0].apply(BasePoly::variable(lifted.ring, 0)) ==
        Scalar::root_of_unity(q.ring->field, 4) * BasePoly::variable(lifted.ring, 0));
}
