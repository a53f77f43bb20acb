#include "tgwa/a2.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "tgwa/error.hpp"
#include "tgwa/expr.hpp"
#include "tgwa/fixedring.hpp"

namespace tgwa {

A2Profile a2_profile(const TGWDatum& d, int bound) {
  CartanReport c = cartan_type(d, bound);
  if (c.tag != TypeTag::A2)
    throw Error(ErrorKind::ProfileMismatch, std::string("datum has type ") + type_tag_name(c.tag) + ", not A2");
  return A2Profile{d, c.lambda1, c.lambda2, c.eta1, c.eta2};
}

std::vector<Scalar> s_sequence(int a_max, const Scalar& q, const Scalar& beta) {
  if (a_max < 0) throw Error(ErrorKind::InvalidArgument, "S_a needs a >= 0");
  std::vector<Scalar> s{Scalar(1)};
  if (a_max >= 1) s.push_back(q);
  for (int k = 1; k < a_max; ++k) s.push_back(q * s[k] - beta * s[k - 1]);
  return s;
}

Scalar s_poly(int a, const Scalar& q, const Scalar& beta) { return s_sequence(a, q, beta).back(); }

Scalar s_poly_closed(int a, const Scalar& q, const Scalar& beta) {
  if (a < 0) throw Error(ErrorKind::InvalidArgument, "S_a needs a >= 0");
  Scalar sum(0);
  std::vector<Scalar> qp{Scalar(1)};
  for (int k = 1; k <= a; ++k) qp.push_back(qp.back() * q);
  Scalar bp(1);
  for (int i = 0; 2 * i <= a; ++i, bp *= beta) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(a - i), static_cast<unsigned long>(i));
    Scalar term = Scalar(Rational(b)) * bp * qp[a - 2 * i];
    if (i % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

bool s_identity_check(int a, int c, const Scalar& q, const Scalar& beta) {
  if (a < 1 || c < 2) throw Error(ErrorKind::InvalidArgument, "identity needs a >= 1 and c >= 2");
  // The last (q, beta) sequence is reused across calls.
  thread_local Scalar last_q, last_beta;
  thread_local std::vector<Scalar> s;
  if (s.empty() || !(last_q == q) || !(last_beta == beta) || static_cast<int>(s.size()) < a + c) {
    s = s_sequence(std::max<int>(a + c - 1, 32), q, beta);
    last_q = q;
    last_beta = beta;
  }
  return beta * s[c - 2] * s[a - 1] + s[a + c - 1] == s[a] * s[c - 1];
}

bool chebyshev_check(int a, const Scalar& q, const Scalar& beta) {
  if (a < 0) throw Error(ErrorKind::InvalidArgument, "S_a needs a >= 0");
  if (beta.is_zero()) throw Error(ErrorKind::InvalidArgument, "Chebyshev form needs beta != 0");
  UPoly two_x = UPoly::x() * UPoly(2);
  UPoly prev(1), cur = two_x;
  UPoly u = a == 0 ? prev : cur;
  for (int k = 1; k < a; ++k) {
    UPoly next = two_x * cur - prev;
    prev = cur;
    cur = next;
    u = cur;
  }
  UPoly sq = u * u;
  Scalar w = q * q / (Scalar(4) * beta);
  Scalar val(0), wk(1);
  for (int k = 0; 2 * k <= sq.degree(); ++k) {
    val += sq.coeff(2 * k) * wk;
    wk *= w;
  }
  Scalar s = s_poly(a, q, beta);
  return s * s == beta.pow(a) * val;
}

std::string SNonvanishing::str() const {
  switch (kind) {
    case Kind::ProvenAllNonzero:
      return "nonzero for all a >= 0";
    case Kind::NonzeroUpTo:
      return "nonzero for 0 <= a <= " + std::to_string(a);
    case Kind::ZeroAt:
      return "zero at a = " + std::to_string(a);
  }
  return "";
}

SNonvanishing s_nonvanishing(const Scalar& lambda1, const Scalar& lambda2, int a_max) {
  if (lambda2.is_zero()) throw Error(ErrorKind::ZeroLambda2, "lambda2 = 0");
  SNonvanishing r;
  if (lambda1.is_rational() && lambda2.is_rational()) {
    Rational l1 = lambda1.to_rational(), l2 = lambda2.to_rational();
    // Real roots z1, z2 with z1 + z2 = -lambda1 != 0.
    if (l1 * l1 - 4 * l2 >= 0 && l1 != 0) {
      r.kind = SNonvanishing::Kind::ProvenAllNonzero;
      return r;
    }
  }
  Scalar q = -lambda1, prev(1), cur = q;
  for (int a = 1; a <= a_max; ++a) {
    if (cur.is_zero()) {
      r.kind = SNonvanishing::Kind::ZeroAt;
      r.a = a;
      return r;
    }
    Scalar next = q * cur - lambda2 * prev;
    prev = cur;
    cur = next;
  }
  r.kind = SNonvanishing::Kind::NonzeroUpTo;
  r.a = a_max;
  return r;
}

std::pair<Scalar, Scalar> rewrite_coeffs(int a, int c, const Scalar& q, const Scalar& beta) {
  if (a < 1 || c < 1) throw Error(ErrorKind::InvalidArgument, "rewriting needs a >= 1 and c >= 1");
  Scalar den = s_poly(a + c - 1, q, beta);
  if (den.is_zero())
    throw Error(ErrorKind::DenominatorVanishes, "S_" + std::to_string(a + c - 1) + "(" + q.str() + ", " +
                                                    beta.str() + ") = 0");
  return {s_poly(a - 1, q, beta) / den, beta.pow(a) * s_poly(c - 1, q, beta) / den};
}

FiberProfile::FiberProfile(const TGWDatum& d) : d_(d) {
  check_structure(d);
  if (d.rank() != 2) throw Error(ErrorKind::ProfileMismatch, "fiber profile needs rank 2");
  if (d.ring->nvars() != 1 || d.ring->laurent[0])
    throw Error(ErrorKind::ProfileMismatch, "fiber profile needs a polynomial ring in one variable");
  if (!validate_datum(d).cons1_ok()) throw Error(ErrorKind::ProfileMismatch, "fiber profile violates cons1");
  for (int i = 0; i < 2; ++i) {
    a_[i] = d.sigma[i].matrix()[0][0];
    b_[i] = d.sigma[i].offset()[0];
    t_[i] = UPoly::from_base(d.t[i]);
  }
  RatFunc t1(t_[0]);
  rho_[1][1] = RatFunc(mu(1, 0)) * shift(1, -1, t1) / t1;
  rho_[1][0] = RatFunc(mu(0, 1));
  rho_[0][1] = RatFunc(mu(1, 0).inverse());
  rho_[0][0] = shift(0, 1, shift(1, 1, t1)) / (RatFunc(mu(0, 1)) * shift(0, 1, t1));
}

std::shared_ptr<const FiberProfile> FiberProfile::standard() {
  static const auto p = [] {
    RingPtr r = univariate_ring(nullptr);
    BasePoly h = BasePoly::variable(r, 0);
    BasePoly one = BasePoly::constant(r, Scalar(1));
    std::vector<RingAut> sigma{RingAut::from_images(r, {h - one}), RingAut::from_images(r, {h + one})};
    Mat mu(2, Vec(2, Scalar(1)));
    return std::make_shared<const FiberProfile>(make_datum(r, sigma, {h, h - one}, mu));
  }();
  return p;
}

RatFunc FiberProfile::shift(int i, int k, const RatFunc& f) const {
  if (k == 0) return f;
  std::pair<Scalar, Scalar> ab;
  {
    std::lock_guard<std::mutex> lock(m_);
    auto it = pow_cache_.find({i, k});
    if (it != pow_cache_.end()) ab = it->second;
  }
  if (ab.first.is_zero()) {
    // sigma_i^k(h) = a^k h + b (a^k - 1)/(a - 1), or h + k b when a = 1.
    Scalar ak = a_[i].pow(k);
    Scalar bk = a_[i].is_one() ? Scalar(k) * b_[i] : b_[i] * (ak - Scalar(1)) / (a_[i] - Scalar(1));
    ab = {ak, bk};
    std::lock_guard<std::mutex> lock(m_);
    pow_cache_.emplace(std::make_pair(i, k), ab);
  }
  return f.affine(ab.first, ab.second);
}

RatFunc FiberProfile::shift2(int d1, int d2, const RatFunc& f) const { return shift(0, d1, shift(1, d2, f)); }

bool FiberProfile::sigmas_inverse() const { return compose(d_.sigma[0], d_.sigma[1]).is_identity(); }

RatFunc FiberProfile::rho(int s1, int s2) const { return rho_[s1 > 0][s2 > 0]; }

RatFunc FiberProfile::exchange(int k, int s) const {
  int e = k > 0 ? 1 : -1;
  RatFunc c(1);
  for (int j = 0; j < std::abs(k); ++j) c = shift(0, -e, c) * rho(e, s);
  return c;
}

std::pair<std::pair<int, int>, RatFunc> FiberProfile::right_letter(std::pair<int, int> d, int i, int s) const {
  auto [d1, d2] = d;
  if (i == 0) {
    if (d1 == 0 || (d1 > 0) == (s > 0)) return {{d1 + s, d2}, RatFunc(1)};
    if (d1 > 0) return {{d1 - 1, d2}, shift(0, 1, RatFunc(t_[0]))};
    return {{d1 + 1, d2}, RatFunc(t_[0])};
  }
  RatFunc k = d1 == 0 ? RatFunc(1) : exchange(d1, s);
  if (d2 == 0 || (d2 > 0) == (s > 0)) return {{d1, d2 + s}, k};
  if (d2 > 0) return {{d1, d2 - 1}, shift(0, -d1, shift(1, 1, RatFunc(t_[1]))) * k};
  return {{d1, d2 + 1}, shift(0, -d1, RatFunc(t_[1])) * k};
}

RatFunc FiberProfile::monomial_product(std::pair<int, int> d, std::pair<int, int> e) const {
  {
    std::lock_guard<std::mutex> lock(m_);
    auto it = prod_cache_.find({d, e});
    if (it != prod_cache_.end()) return it->second;
  }
  std::pair<int, int> cur = d;
  RatFunc coef(1);
  auto step = [&](int i, int s) {
    auto [next, c] = right_letter(cur, i, s);
    coef = c * shift(i, -s, coef);
    cur = next;
  };
  for (int j = 0; j < std::abs(e.second); ++j) step(1, e.second > 0 ? 1 : -1);
  for (int j = 0; j < std::abs(e.first); ++j) step(0, e.first > 0 ? 1 : -1);
  std::lock_guard<std::mutex> lock(m_);
  prod_cache_.emplace(std::make_pair(d, e), coef);
  return coef;
}

FiberElement FiberElement::monomial(FiberPtr p, int d1, int d2, const RatFunc& f) {
  FiberElement x(std::move(p));
  x.add({d1, d2}, f);
  return x;
}

FiberElement FiberElement::generator(FiberPtr p, int i, int sign) {
  if (i < 0 || i > 1) throw Error(ErrorKind::InvalidArgument, "fiber generators are X1 and X2");
  return i == 0 ? monomial(std::move(p), sign, 0) : monomial(std::move(p), 0, sign);
}

FiberElement FiberElement::scalar(FiberPtr p, const RatFunc& f) { return monomial(std::move(p), 0, 0, f); }

void FiberElement::add(const Key& d, const RatFunc& f) {
  if (f.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

static void require_same_profile(const FiberElement& a, const FiberElement& b) {
  if (a.profile() != b.profile()) throw Error(ErrorKind::ProfileMismatch, "fiber elements over different profiles");
}

FiberElement FiberElement::operator-() const {
  FiberElement out(p_);
  for (const auto& [d, f] : terms_) out.terms_.emplace(d, -f);
  return out;
}

FiberElement& FiberElement::operator+=(const FiberElement& o) {
  require_same_profile(*this, o);
  for (const auto& [d, f] : o.terms_) add(d, f);
  return *this;
}

FiberElement& FiberElement::operator-=(const FiberElement& o) {
  require_same_profile(*this, o);
  for (const auto& [d, f] : o.terms_) add(d, -f);
  return *this;
}

FiberElement operator*(const FiberElement& a, const FiberElement& b) { return fiber_multiply(a, b); }

FiberElement operator*(const FiberElement& a, const RatFunc& f) {
  FiberElement out(a.p_);
  for (const auto& [d, g] : a.terms_) out.add(d, g * f);
  return out;
}

bool FiberElement::operator==(const FiberElement& o) const {
  require_same_profile(*this, o);
  return terms_ == o.terms_;
}

FiberElement FiberElement::pow(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative power of a fiber element");
  FiberElement out = scalar(p_, RatFunc(1));
  for (int j = 0; j < k; ++j) out = out * *this;
  return out;
}

static std::string fiber_word(const FiberElement::Key& d) {
  std::string s;
  auto put = [&](int i, int k) {
    if (!k) return;
    if (!s.empty()) s += "*";
    s += "X" + std::to_string(i) + (k > 0 ? "+" : "-");
    if (std::abs(k) > 1) s += "^" + std::to_string(std::abs(k));
  };
  put(2, d.second);
  put(1, d.first);
  return s;
}

std::string FiberElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, f] : terms_) {
    std::string w = fiber_word(d);
    std::string c = f.str();
    bool constant = f.den().degree() == 0 && f.num().degree() == 0;
    std::string term;
    if (w.empty()) term = c;
    else if (c == "1") term = w;
    else if (c == "-1") term = "-" + w;
    else if (constant) term = w + "*" + c;
    else term = w + "*(" + c + ")";
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

FiberElement fiber_multiply(const FiberElement& x, const FiberElement& y) {
  require_same_profile(x, y);
  const FiberPtr& p = x.profile();
  FiberElement out(p);
  for (const auto& [d, f] : x.terms())
    for (const auto& [e, g] : y.terms()) {
      RatFunc c = p->monomial_product(d, e) * p->shift2(-e.first, -e.second, f) * g;
      out += FiberElement::monomial(p, d.first + e.first, d.second + e.second, c);
    }
  return out;
}

FiberElement parse_fiber_word(const FiberPtr& p, const std::string& text) {
  static const std::regex letter_re(R"(X([12])([+-])(?:\^(\d+))?)");
  FiberElement acc = FiberElement::scalar(p, RatFunc(1));
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::smatch m;
    if (std::regex_match(tok, m, letter_re)) {
      int i = std::stoi(m[1].str()) - 1;
      int sign = m[2].str() == "+" ? 1 : -1;
      int k = m[3].matched ? std::stoi(m[3].str()) : 1;
      acc = acc * FiberElement::generator(p, i, sign).pow(k);
    } else {
      acc = acc * FiberElement::scalar(p, parse_ratfunc(tok, p->datum().ring->field));
    }
  }
  return acc;
}

FiberElement c_element(const FiberPtr& p) {
  if (!p->sigmas_inverse()) throw Error(ErrorKind::ProfileMismatch, "C needs sigma_1 sigma_2 = id");
  return FiberElement::monomial(p, 1, 1, RatFunc(UPoly(1), p->t(0)));
}

FiberElement c_closed_form(const FiberPtr& p, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "C^k needs k >= 1");
  if (!p->sigmas_inverse()) throw Error(ErrorKind::ProfileMismatch, "C needs sigma_1 sigma_2 = id");
  RatFunc den(1);
  for (int j = 0; j < k; ++j) den *= p->shift(0, -j, RatFunc(p->t(0)));
  return FiberElement::monomial(p, k, k, RatFunc(1) / den);
}

CPowerReport c_power(const FiberPtr& p, int k, std::optional<int> m) {
  FiberElement c = c_element(p);
  CPowerReport r{c.pow(k), c_closed_form(p, k), false, std::nullopt, true};
  r.closed_form_ok = r.power == r.closed_form;
  if (m) {
    if (*m < 1) throw Error(ErrorKind::InvalidArgument, "m must be positive");
    const TGWDatum& d = p->datum();
    FieldPtr f = field_join(d.ring->field, CycloField::get(*m));
    if (f && f->conductor() == 1) f = nullptr;
    Vec alpha{Scalar::root_of_unity(f, *m), Scalar(1)};
    TGWDatum lifted = lift_datum(d, f);
    FixedRingResult fr = fixed_datum(lifted, make_diagonal_aut(alpha, RingAut::identity(lifted.ring)));
    UPoly s1 = UPoly::from_base(fr.datum.t[0]);
    r.c_phi = FiberElement::monomial(p, *m, *m, RatFunc(UPoly(1), s1));
    r.c_phi_ok = *r.c_phi == (*m == k ? r.power : c.pow(*m));
  }
  return r;
}

}  // namespace tgwa
