#include "tgwa/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "tgwa/a1n.hpp"
#include "tgwa/a2.hpp"
#include "tgwa/error.hpp"
#include "tgwa/fixedring.hpp"
#include "tgwa/scenario.hpp"
#include "tgwa/weightmod.hpp"

namespace tgwa {

namespace {

using Overrides = std::map<std::string, std::string>;

struct Tally {
  int checks = 0;
  std::vector<std::string> failures;
  int hidden = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures.size() < 5) failures.push_back(what);
    else ++hidden;
  }
};

Scalar q_(long n, long d = 1) { return Scalar(Rational(n, d)); }

TGWDatum builtin(const std::string& name, const Overrides& o = {}) { return *load_builtin(name, o).datum; }

std::vector<std::vector<int>> ints(const CartanReport& c) {
  std::vector<std::vector<int>> out;
  for (const auto& row : c.cartan) {
    std::vector<int> r;
    for (const auto& v : row) r.push_back(v ? *v : -99);
    out.push_back(r);
  }
  return out;
}

bool block_diagonal(const CartanReport& joint, const CartanReport& a, const CartanReport& b) {
  auto j = ints(joint), x = ints(a), y = ints(b);
  size_t n = x.size(), m = y.size();
  if (j.size() != n + m) return false;
  for (size_t r = 0; r < n + m; ++r)
    for (size_t c = 0; c < n + m; ++c) {
      int want = r < n && c < n ? x[r][c] : r >= n && c >= n ? y[r - n][c - n] : 0;
      if (j[r][c] != want) return false;
    }
  return true;
}

// ---- 1 -------------------------------------------------------------------

void consistency(Tally& t) {
  for (int n : {2, 3})
    for (int seed = 1; seed <= 6; ++seed) {
      std::string tag = "quantized-weyl n=" + std::to_string(n) + " seed=" + std::to_string(seed);
      TGWDatum d = builtin("quantized-weyl", {{"n", std::to_string(n)}, {"seed", std::to_string(seed)}});
      ValidityReport v = validate_datum(d);
      t.expect(v.regular, tag + " regular");
      t.expect(v.cons1_ok(), tag + " cons1");
      t.expect(v.cons2_ok(), tag + " cons2");
      TGWDatum bad = d;
      bad.mu[0][1] = bad.mu[0][1] * q_(2);
      t.expect(!validate_datum(bad).cons1_ok(), tag + " corrupted mu still passes cons1");
    }
}

// ---- 2 -------------------------------------------------------------------

void cartan(Tally& t) {
  CartanReport s = cartan_type(builtin("a2-simple"));
  t.expect(ints(s) == std::vector<std::vector<int>>{{2, -1}, {-1, 2}}, "a2-simple Cartan matrix");
  t.expect(s.tag == TypeTag::A2, "a2-simple tagged A2");

  for (const char* p : {"2", "3", "1/2", "-2", "5"}) {
    Scenario sc = load_builtin("a2-family", {{"p", p}});
    Scalar pv = sc.params.at("p"), pi = pv.inverse();
    CartanReport c = cartan_type(*sc.datum);
    t.expect(c.minpolys.at({0, 1}) == std::vector<Scalar>{pv, -(pv + q_(1)), q_(1)},
             std::string("a2-family p=") + p + " p12 = (x-p)(x-1)");
    t.expect(c.minpolys.at({1, 0}) == std::vector<Scalar>{pi, -(pi + q_(1)), q_(1)},
             std::string("a2-family p=") + p + " p21 = (x-1/p)(x-1)");
  }

  for (const char* name : {"sergeev", "mazorchuk-turowska"}) {
    CartanReport c = cartan_type(builtin(name));
    t.expect(minpoly_str(c.minpolys.at({0, 1})) == "x^2 - 2*x + 1", std::string(name) + " p12");
    t.expect(minpoly_str(c.minpolys.at({1, 0})) == "x^2 - 2*x + 1", std::string(name) + " p21");
  }

  for (const char* mu : {"1", "zeta(4)", "3", "zeta(5)"})
    for (const char* q : {"2", "2/7"}) {
      Scenario sc = load_builtin("mu-q-family", {{"mu", mu}, {"q", q}});
      Scalar m = sc.params.at("mu"), qv = sc.params.at("q");
      CartanReport c = cartan_type(*sc.datum);
      std::string tag = std::string("mu-q-family mu=") + mu + " q=" + q;
      Scalar lin = -(m * (qv + qv.inverse()));
      std::vector<Scalar> corrected{m * m, lin, q_(1)};
      t.expect(c.minpolys.at({0, 1}) == corrected && c.minpolys.at({1, 0}) == corrected, tag + " p12 = p21");
      if (m.pow(4) == q_(1))
        t.expect(c.minpolys.at({0, 1}) == std::vector<Scalar>{m.pow(-2), lin, q_(1)}, tag + " stated constant term");
    }

  TGWDatum a = builtin("a2-simple"), w = builtin("weyl");
  t.expect(block_diagonal(cartan_type(tensor_data(a, w)), cartan_type(a), cartan_type(w)), "a2-simple (x) weyl block");
  TGWDatum k = builtin("kleinian-fiber"), qw = builtin("quantized-weyl", {{"n", "2"}});
  FieldPtr f = field_join(k.ring->field, qw.ring->field);
  t.expect(block_diagonal(cartan_type(tensor_data(lift_datum(k, f), lift_datum(qw, f))), cartan_type(k), cartan_type(qw)),
           "kleinian-fiber (x) quantized-weyl block");
  TGWDatum ser = builtin("sergeev");
  t.expect(block_diagonal(cartan_type(tensor_data(ser, a)), cartan_type(ser), cartan_type(a)), "sergeev (x) a2-simple block");
}

// ---- 3 -------------------------------------------------------------------

void s_polys(Tally& t) {
  std::mt19937 g(31337);
  std::uniform_int_distribution<int> c(-5, 5), den(1, 4);
  FieldPtr f5 = CycloField::get(5);
  auto random_scalar = [&](bool cyclo) {
    if (!cyclo) return Scalar(Rational(c(g), den(g)));
    std::vector<Rational> v;
    for (int i = 0; i < 4; ++i) v.push_back(Rational(c(g), den(g)));
    return Scalar(f5, v);
  };
  for (int k = 0; k < 25; ++k) {
    bool cyclo = k % 2 == 1;
    Scalar q = random_scalar(cyclo), beta = random_scalar(cyclo);
    if (beta.is_zero()) beta = q_(1);
    std::string tag = "sample " + std::to_string(k);
    for (int a = 0; a <= 30; ++a) t.expect(s_poly(a, q, beta) == s_poly_closed(a, q, beta), tag + " closed form a=" + std::to_string(a));
    for (int a = 1; a <= 15; ++a)
      for (int cc = 2; cc <= 15; ++cc)
        t.expect(s_identity_check(a, cc, q, beta), tag + " identity a=" + std::to_string(a) + " c=" + std::to_string(cc));
  }

  std::vector<std::pair<Scalar, Scalar>> profiles;
  for (auto p : {q_(2), q_(3), q_(1, 2), q_(-2), q_(-1), q_(-3), q_(5), q_(1, 3), q_(-1, 2), q_(4)})
    profiles.push_back({-(p + q_(1)), p});
  for (auto [l1, l2] : std::vector<std::pair<Scalar, Scalar>>{{q_(3), q_(3)},
                                                            {q_(1), q_(2)},
                                                            {q_(1), q_(1)},
                                                            {q_(-1), q_(1)},
                                                            {q_(0), q_(5)},
                                                            {q_(-2), q_(1)},
                                                            {q_(1), q_(-6)},
                                                            {q_(2), q_(2)},
                                                            {q_(0), q_(-1, 4)},
                                                            {q_(3, 2), q_(9, 4)}})
    profiles.push_back({l1, l2});
  bool saw_p_minus_one = false;
  for (const auto& [l1, l2] : profiles) {
    std::string tag = "profile (" + l1.str() + ", " + l2.str() + ")";
    SNonvanishing r = s_nonvanishing(l1, l2, 50);
    int first = -1;
    for (int a = 0; a <= 50 && first < 0; ++a)
      if (s_poly(a, -l1, l2).is_zero()) first = a;
    if (r.kind == SNonvanishing::Kind::ZeroAt) t.expect(first == r.a, tag + " first zero");
    else t.expect(first < 0, tag + " claims no zero, direct evaluation finds " + std::to_string(first));
    if (l1.is_zero() && l2 == q_(-1)) {
      saw_p_minus_one = true;
      t.expect(r.kind == SNonvanishing::Kind::ZeroAt && r.a % 2 == 1, "p=-1 zero at odd a");
    }
  }
  t.expect(saw_p_minus_one, "p=-1 profile present");
  t.expect(profiles.size() == 20, "20 profiles");
}

// ---- 4 -------------------------------------------------------------------

AlgebraElement random_element(std::mt19937& g, const ProfilePtr& p, int terms) {
  std::uniform_int_distribution<int> deg(-3, 3), c(-3, 3), nt(1, terms);
  const RingPtr& R = p->ring();
  AlgebraElement x(p);
  int k = nt(g);
  for (int i = 0; i < k; ++i) {
    Degree d(p->rank());
    for (auto& v : d) v = deg(g);
    BasePoly r = BasePoly::constant(R, Scalar(c(g)));
    r += Scalar(c(g)) * BasePoly::variable(R, static_cast<size_t>(g() % R->nvars()));
    if (r.is_zero()) r = BasePoly::constant(R, Scalar(1));
    x += AlgebraElement::monomial(p, d, r);
  }
  return x;
}

void a1n_suite(Tally& t) {
  {
    ProfilePtr p = from_datum(builtin("weyl"));
    auto w = [&](const std::string& s) { return normal_form(p, parse_word(p, s)); };
    t.expect(w("X- X+") == AlgebraElement::from_ring(p, parse_poly("h", p->ring())), "Weyl yx = h");
    t.expect(w("X+ X-") == AlgebraElement::from_ring(p, parse_poly("h - 1", p->ring())), "Weyl xy = h - 1");
  }
  std::vector<std::pair<std::string, ProfilePtr>> profiles;
  for (auto [name, o] : std::vector<std::pair<std::string, Overrides>>{{"weyl", {}},
                                                                       {"weyl", {{"n", "2"}}},
                                                                       {"weyl", {{"n", "3"}}},
                                                                       {"quantized-weyl", {{"n", "2"}, {"seed", "3"}}},
                                                                       {"quantized-weyl", {{"n", "3"}, {"seed", "5"}}}})
    profiles.push_back({name + (o.count("n") ? " n=" + o.at("n") : ""), from_datum(builtin(name, o))});

  std::mt19937 g(20240);
  for (int rep = 0; rep < 40; ++rep)
    for (auto& [name, p] : profiles) {
      auto a = random_element(g, p, 3), b = random_element(g, p, 3), c = random_element(g, p, 3);
      t.expect((a * b) * c == a * (b * c), name + " associativity");
    }
  for (auto& [name, p] : profiles) {
    t.expect(diamond_check(p).empty(), name + " diamond confluence");
    t.expect(ore_presentation(p).verified(), name + " Ore presentation relations");
    const TGWDatum& d = p->datum();
    for (size_t i = 0; i < p->rank(); ++i) {
      auto x = AlgebraElement::generator(p, i, 1), y = AlgebraElement::generator(p, i, -1);
      BasePoly s = BasePoly::constant(d.ring, q_(1));
      for (int m = 1; m <= 5; ++m) {
        s *= d.sigma[i].power(-(m - 1)).apply(d.t[i]);
        t.expect(y.pow(m) * x.pow(m) == AlgebraElement::from_ring(p, s),
                 name + " (X-)^m (X+)^m = s, m=" + std::to_string(m));
      }
      for (size_t j = 0; j < p->rank(); ++j) {
        if (i == j) continue;
        for (int mi = 1; mi <= 5; ++mi)
          for (int mj = 1; mj <= 5; ++mj) {
            auto xi = x.pow(mi), yj = AlgebraElement::generator(p, j, -1).pow(mj);
            t.expect(xi * yj == d.mu[i][j].pow(mi * mj) * (yj * xi), name + " cross power relation");
          }
      }
    }
  }
  // s_i of the fixed datum agrees with the power relation.
  for (int m = 1; m <= 5; ++m) {
    Scenario w = load_builtin("weyl", {{"m", std::to_string(m)}});
    FixedRingResult fr = fixed_datum(*w.datum, *w.phi);
    ProfilePtr p = from_datum(*w.datum);
    auto x = AlgebraElement::generator(p, 0, 1), y = AlgebraElement::generator(p, 0, -1);
    t.expect(y.pow(m) * x.pow(m) == AlgebraElement::from_ring(p, fr.datum.t[0]), "weyl fixed s for m=" + std::to_string(m));
  }
}

// ---- 5 -------------------------------------------------------------------

void fixed_suite(Tally& t) {
  std::mt19937 g(2024);
  const std::vector<std::string> m2 = {"1,1", "2,1", "1,2", "2,3", "3,2", "3,1", "1,3", "3,4", "4,3", "2,5"};
  const std::vector<std::string> m3 = {"1,1,1", "2,3,1", "3,1,2", "1,2,3", "2,1,3"};
  const std::vector<std::string> ps = {"2", "3", "-2", "1/3", "5/2", "-3"};
  int count = 0;
  auto inherit = [&](const Scenario& s, const std::string& tag) {
    ValidityReport in = validate_datum(*s.datum);
    t.expect(in.regular && in.cons1_ok(), tag + " input valid");
    FixedRingResult f = fixed_datum(*s.datum, *s.phi);
    t.expect(f.validity.regular, tag + " fixed datum regular");
    t.expect(f.validity.cons1_ok(), tag + " fixed datum cons1");
    t.expect(verify_fixed_type(*s.datum, *s.phi, f).ok(), tag + " type statement");
    ++count;
  };
  for (int k = 0; k < 20; ++k) {
    std::string seed = std::to_string(g() % 100000), m = m2[g() % m2.size()];
    inherit(load_builtin("quantized-weyl", {{"n", "2"}, {"seed", seed}, {"m", m}}), "quantized-weyl n=2 m=" + m);
  }
  for (int k = 0; k < 10; ++k) {
    std::string seed = std::to_string(g() % 100000), m = m3[g() % m3.size()];
    inherit(load_builtin("quantized-weyl", {{"n", "3"}, {"seed", seed}, {"m", m}}), "quantized-weyl n=3 m=" + m);
  }
  for (int k = 0; k < 20; ++k) {
    std::uniform_int_distribution<int> c(1, 7);
    std::string p = ps[g() % ps.size()];
    inherit(load_builtin("a2-family", {{"p", p},
                                       {"beta", std::to_string(c(g)) + "/" + std::to_string(c(g))},
                                       {"mu", std::to_string(c(g))}}),
            "a2-family p=" + p);
  }
  t.expect(count == 50, "50 randomized data");

  for (const char* m : {"3,1", "2,3", "1,5"}) {
    Scenario s = load_builtin("quantized-weyl", {{"n", "2"}, {"m", m}});
    FixedRingResult f = fixed_datum(*s.datum, *s.phi);
    FixedTypeReport rep = verify_fixed_type(*s.datum, *s.phi, f);
    CartanReport in = cartan_type(*s.datum);
    t.expect(rep.ok() && rep.output_tag == TypeTag::A1n, std::string("quantized-weyl m=") + m + " stays A1n");
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j)
        if (i != j)
          t.expect(f.cartan.gamma[i][j] == in.gamma[i][j].pow(f.m[i] * f.m[j]),
                   std::string("quantized-weyl m=") + m + " gamma' = gamma^(m_i m_j)");
  }

  Scenario a = load_builtin("weyl", {{"m", "2"}}), b = load_builtin("weyl", {{"m", "3"}});
  TensorInvariantsReport tr = tensor_invariants({{*a.datum, *a.phi}, {*b.datum, *b.phi}});
  t.expect(tr.equal, "Weyl(2) (x) Weyl(3) invariants equal tensor of invariants");

  for (const char* p : {"2", "3", "1/2", "-2", "-1"}) {
    Scenario s = load_builtin("a2-family", {{"p", p}});
    FixedRingResult f = fixed_datum(*s.datum, *s.phi);
    t.expect(f.validity.regular && f.validity.cons1_ok(), std::string("a2-family p=") + p + " fixed datum regular, cons1");
  }
}

// ---- 6 -------------------------------------------------------------------

void fiber_suite(Tally& t) {
  FiberPtr p = FiberProfile::standard();
  auto W = [&](const std::string& s) { return parse_fiber_word(p, s); };
  auto gen = [&](int i, int s) { return FiberElement::generator(p, i, s); };
  FiberElement c = c_element(p);
  t.expect(W("X2+ X1+ 1/h") == c, "C = X2+ X1+ / h");
  t.expect(W("X1+ X2+ 1/(h-1)") == c, "C = X1+ X2+ / (h - 1)");
  t.expect(W("X2+ X1+") - W("X1+ X2+") == c, "C = X2+ X1+ - X1+ X2+");
  for (int i = 0; i < 2; ++i)
    for (int s : {1, -1}) t.expect(c * gen(i, s) == gen(i, s) * c, "C centralizes a generator");
  auto h = FiberElement::scalar(p, parse_ratfunc("h", nullptr));
  t.expect(c * h == h * c, "C commutes with h");
  for (int k = 1; k <= 5; ++k) {
    CPowerReport r = c_power(p, k);
    t.expect(r.closed_form_ok && r.power == c.pow(k), "C^k closed form k=" + std::to_string(k));
  }
  for (int m : {2, 3, 4}) {
    CPowerReport r = c_power(p, m, m);
    t.expect(r.c_phi && r.c_phi_ok && *r.c_phi == c.pow(m), "C^phi = C^m, m=" + std::to_string(m));
    t.expect(restrict_fiber(Scalar::root_of_unity(CycloField::get(m), m), m) == q_(1), "xi^m for a root of unity");
  }
  for (const auto& prof : {p, std::make_shared<const FiberProfile>(builtin("a2-simple"))}) {
    for (int s : {1, -1}) {
      auto x1 = FiberElement::generator(prof, 0, s), x2 = FiberElement::generator(prof, 1, s);
      t.expect((x1 * x1 * x2 - x1 * x2 * x1 * RatFunc(2) + x2 * x1 * x1).is_zero(), "Serre relation 1");
      t.expect((x2 * x2 * x1 - x2 * x1 * x2 * RatFunc(2) + x1 * x2 * x2).is_zero(), "Serre relation 2");
    }
    auto x = FiberElement::generator(prof, 0, 1), y = FiberElement::generator(prof, 1, 1);
    for (int a = 1; a <= 5; ++a)
      for (int cc = 1; cc <= 5; ++cc) {
        auto [c1, c2] = rewrite_coeffs(a, cc, q_(2), q_(1));
        auto lhs = x.pow(a) * y * x.pow(cc);
        auto rhs = x.pow(a + cc) * y * RatFunc(c1) + y * x.pow(a + cc) * RatFunc(c2);
        t.expect(lhs == rhs, "rewriting a=" + std::to_string(a) + " c=" + std::to_string(cc));
      }
  }
}

// ---- 7 -------------------------------------------------------------------

void weight_suite(Tally& t) {
  Scenario s = load_builtin("infinite-orbit-breaks");
  const TGWDatum& d = *s.datum;
  const int W = 64;
  Orbit o = orbit_of(d, {q_(0)}, W);
  t.expect(!o.finite(), "shift orbit infinite");
  auto sup = simple_supports(d, o, W);
  t.expect(sup.size() == 3, "three simples");
  if (sup.size() != 3) return;
  auto names = [&](const SimpleSupport& sp, long lo, long hi) {
    std::vector<std::string> v;
    for (long k = lo; k <= hi; ++k)
      if (sp.contains(k)) v.push_back(ideal_str(d.ring, o.point(k)));
    return v;
  };
  std::vector<std::string> m1, m3;
  for (long k = -W; k <= 0; ++k) m1.push_back(ideal_str(d.ring, Vec{Scalar(k)}));
  for (long k = 3; k <= W; ++k) m3.push_back(ideal_str(d.ring, Vec{Scalar(k)}));
  t.expect(names(sup[0], -W, W) == m1, "Supp M1 = {(h-k) : k <= 0}");
  t.expect(names(sup[1], -W, W) == std::vector<std::string>{"(h - 1)", "(h - 2)"}, "Supp M2 = {(h-1), (h-2)}");
  t.expect(names(sup[2], -W, W) == m3, "Supp M3 = {(h-k) : k >= 3}");
  for (const auto& sp : sup) t.expect(support_relations_hold(d, o, sp, W), "X-X+ = t and X+X- = sigma(t) on " + sp.str());

  for (size_t p = 0; p < 3; ++p) {
    Rank1Restriction r = restrict_rank1(d, *s.phi, o, sup[p], W);
    std::string tag = "Res M" + std::to_string(p + 1);
    t.expect(r.ok(), tag + " intervals between s-breaks, injective, accounting");
    t.expect(r.s_breaks == std::vector<long>{-2, -1, 0, 1, 2}, tag + " s-breaks (h+2) .. (h-2)");
    for (int i = 0; i < 3; ++i) {
      const auto& c = r.components[i];
      // Supp(M_p^{O_i}) = Supp(M_p) cap O_i.
      std::vector<long> want, got;
      for (long k = -W; k <= W; ++k) {
        if (sup[p].contains(k) && ((k % 3) + 3) % 3 == i) want.push_back(k);
        if (!c.empty && ((k % 3) + 3) % 3 == i && (!c.first || k >= *c.first) && (!c.last || k <= *c.last))
          got.push_back(k);
      }
      t.expect(want == got, tag + " component on O_" + std::to_string(i));
    }
    if (p == 1) t.expect(r.components[0].empty, "M2^{O_0} = 0");
    if (p == 0)
      t.expect(r.components[2].s_upper && ideal_str(d.ring, o.point(*r.components[2].s_upper)) == "(h + 1)" &&
                   !r.components[2].first,
               "Supp M1^{O_2} = (-inf, (h+1)]");
  }

  Scenario f = load_builtin("finite-orbit");
  ScenarioModules mods = explicit_modules(f);
  const ExplicitModule& m = mods.modules.at("M");
  const ExplicitModule& mp = mods.modules.at("M+");
  const ExplicitModule& mm = mods.modules.at("M-");
  FixedRingResult fr = fixed_datum(*f.datum, *f.phi);
  t.expect(fr.presentation.has_value(), "fixed subring is k[u]");
  if (!fr.presentation) return;
  t.expect(verify_module_relations(m, *f.datum).ok(), "4-dim module relations");
  t.expect(verify_module_relations(mp, *fr.presentation).ok(), "M+ relations");
  t.expect(verify_module_relations(mm, *fr.presentation).ok(), "M- relations");
  t.expect(is_simple(m), "4-dim module simple");
  t.expect(is_simple(mp) && is_simple(mm), "M+ and M- simple");
  t.expect(hom_dimension(mp, mm, *fr.presentation) == 0, "Hom(M+, M-) = 0");
  t.expect(hom_dimension(mp, mp, *fr.presentation) == 1, "End(M+) = k");
  ExplicitRestriction res = verify_explicit_restriction(m, *f.datum, *f.phi, mods.restrictions.at(0).second);
  t.expect(res.basis_invertible, "restriction bases span M");
  t.expect(res.ok(), "Res M = M+ (+) M- with the stated bases");
  t.expect(res.fiber_lemma_ok, "fiber lemma on the finite orbit");
  t.expect(res.accounting_ok, "weight-space accounting on the finite orbit");
}

// ---- 8 -------------------------------------------------------------------

// A for m = 1, otherwise the fixed datum of phi = (zeta(m), 1).
TGWDatum fiber_level(int m) {
  if (m == 1) return builtin("fiber-6-2");
  Scenario s = load_builtin("fiber-6-2", {{"m", std::to_string(m)}});
  return fixed_datum(*s.datum, *s.phi).datum;
}

void diagram_suite(Tally& t, const AcceptanceOptions& opt) {
  for (int m = 1; m <= 4; ++m) {
    TGWDatum d = fiber_level(m);
    CylinderDiagram c = cylinder(d, q_(0), 8);
    std::string tag = m == 1 ? "cylinder of A" : "cylinder of the fixed ring m=" + std::to_string(m);
    t.expect(c.components.size() == 2 && c.unbounded_count() == 2, tag + ": two unbounded components");
    t.expect(static_cast<int>(c.vertical.size()) == m, tag + ": m vertical break edges");
  }
  auto goldens = cylinder_goldens();
  auto again = cylinder_goldens();
  t.expect(goldens == again, "ASCII rendering deterministic");
  if (opt.golden_dir.empty()) return;
  for (const auto& [name, text] : goldens) {
    std::ifstream in(opt.golden_dir + "/" + name);
    t.expect(in.is_open(), "golden " + name + " readable");
    std::stringstream ss;
    ss << in.rdbuf();
    t.expect(ss.str() == text, "golden " + name + " matches");
  }
}

struct Criterion {
  const char* title;
  double limit;
  std::function<void(Tally&, const AcceptanceOptions&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> s = {
      {"consistency suite", 1, [](Tally& t, const AcceptanceOptions&) { consistency(t); }},
      {"Cartan reproduction", 1, [](Tally& t, const AcceptanceOptions&) { cartan(t); }},
      {"S-polynomial suite", 2, [](Tally& t, const AcceptanceOptions&) { s_polys(t); }},
      {"(A1)^n algebra suite", 30, [](Tally& t, const AcceptanceOptions&) { a1n_suite(t); }},
      {"fixed-ring suite", 10, [](Tally& t, const AcceptanceOptions&) { fixed_suite(t); }},
      {"fiber-product suite", 10, [](Tally& t, const AcceptanceOptions&) { fiber_suite(t); }},
      {"weight-module suite", 5, [](Tally& t, const AcceptanceOptions&) { weight_suite(t); }},
      {"diagram suite", 1, diagram_suite},
  };
  return s;
}

}  // namespace

std::string CriterionResult::line(bool timing) const {
  std::ostringstream out;
  out << (passed ? "PASS" : "FAIL") << " criterion " << id << " " << title << ": " << checks << " checks";
  if (timing) {
    char buf[64];
    std::snprintf(buf, sizeof buf, ", %.3f s (bound %.0f s)", seconds, limit);
    out << buf;
  }
  for (const auto& f : failures) out << "; " << f;
  return out.str();
}

std::vector<std::pair<std::string, std::string>> cylinder_goldens() {
  std::vector<std::pair<std::string, std::string>> out;
  for (int m = 1; m <= 4; ++m) {
    TGWDatum d = fiber_level(m);
    out.push_back({"cylinder_m" + std::to_string(m) + ".txt", render_cylinder_ascii(cylinder(d, Scalar(0), 8))});
  }
  return out;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  if (id < 1 || id > kCriterionCount) throw Error(ErrorKind::InvalidArgument, "no criterion " + std::to_string(id));
  const Criterion& s = criteria()[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = s.title;
  r.limit = s.limit;
  Tally t;
  auto start = std::chrono::steady_clock::now();
  try {
    s.run(t, opt);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.checks = t.checks;
  r.failures = t.failures;
  if (t.hidden) r.failures.push_back("and " + std::to_string(t.hidden) + " more");
  if (r.seconds >= r.limit) r.failures.push_back("runtime bound exceeded");
  r.passed = r.failures.empty() && t.checks > 0;
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opt));
  return out;
}

}  // namespace tgwa
